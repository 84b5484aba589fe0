//! Oracles and fixtures shared by the integration targets. Nothing here
//! calls the series or closed-formula code it is used to check.

#![allow(dead_code)]

use std::process::{Command, Output};

use hodge_triples::laurent::{floor_int, int, ExactRational, LaurentPoly};
use hodge_triples::triples::{generating_coefficient, RankPair, TripleSpec};
use hodge_triples::Genus;
use num_bigint::BigInt;

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Hodge polynomial of the k-th symmetric product of a genus-g curve,
/// summed term by term: `x^a` and `x^b` from the two binomials, `x^j` from
/// `1/(1-uvx)`, and the remaining `x^(k-a-b-j)` from `1/(1-x)`.
pub fn sym_oracle(g: u64, k: u64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for a in 0..=g.min(k) {
        for b in 0..=g.min(k - a) {
            for j in 0..=(k - a - b) {
                let c = binomial(g, a) * binomial(g, b);
                p += &LaurentPoly::monomial(c, (a + j) as i64, (b + j) as i64);
            }
        }
    }
    p
}

/// `(1+u)^g (1+v)^g` expanded with binomial coefficients.
pub fn jacobian_oracle(g: u64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for a in 0..=g {
        for b in 0..=g {
            p += &LaurentPoly::monomial(binomial(g, a) * binomial(g, b), a as i64, b as i64);
        }
    }
    p
}

/// The rank-(1,2) closed formula evaluated directly in its own chamber
/// index, without passing through the dual (2,1) family.
pub fn one_two_direct(g: Genus, d1: i64, d2: i64, sigma: &ExactRational) -> LaurentPoly {
    let d0: i64 = (floor_int(&((sigma - int(d1 + d2)) / int(3))) + 1u32)
        .try_into()
        .unwrap();
    let pole = d1 - d2 - d0;
    let jac = jacobian_oracle(g.get() as u64);
    generating_coefficient(g, &(&jac * &jac), pole, pole, d2 + g.as_i64() - 1 + 2 * d0).unwrap()
}

pub fn spec(g: i64, rank: RankPair, d1: i64, d2: i64) -> TripleSpec {
    TripleSpec::new(g, rank, d1, d2).unwrap()
}

/// `(d1, d2)` pairs of the standard verification grid.
pub fn grid_points() -> Vec<(i64, i64, i64)> {
    let mut v = Vec::new();
    for g in [2, 3] {
        for d2 in [-2, -1, 0] {
            for d1 in (2 * d2 + 1)..=(2 * d2 + 8) {
                v.push((g, d1, d2));
            }
        }
    }
    v
}

pub fn hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(args)
        .env_remove("HODGE_CACHE")
        .output()
        .unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}
