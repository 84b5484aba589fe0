//! Hodge polynomials of the basic building blocks: projective spaces,
//! Jacobians, symmetric products of the curve, rank-(1,1) triples, and the
//! Euler characteristic of the extension complex between two triples.

use std::fmt;

use thiserror::Error;

use crate::laurent::{series_binomial, series_geometric, LaurentPoly, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("genus {0} is out of range; curves of genus at least 2 are required")]
    GenusOutOfRange(i64),
    #[error("invalid triple type {0:?}: {1}")]
    InvalidType((u32, u32, i64, i64), &'static str),
}

/// Genus of the base curve, always at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: i64) -> Result<Self, BlockError> {
        match u32::try_from(g) {
            Ok(g) if g >= 2 => Ok(Genus(g)),
            _ => Err(BlockError::GenusOutOfRange(g)),
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }
}

impl TryFrom<i64> for Genus {
    type Error = BlockError;
    fn try_from(g: i64) -> Result<Self, BlockError> {
        Genus::new(g)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `e_n = 1 + uv + … + (uv)^(n-1)`, the Hodge polynomial of `P^(n-1)`.
/// `e_0 = 0` stands for the empty space.
pub fn proj_space(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|i| (i, i, 1)))
}

/// `(1+u)^g (1+v)^g`, for the Jacobian in any degree.
pub fn jacobian(g: Genus) -> LaurentPoly {
    let one = LaurentPoly::one();
    let a = (&one + &LaurentPoly::u()).pow(g.get());
    let b = (&one + &LaurentPoly::v()).pow(g.get());
    &a * &b
}

/// `(1+ux)^g (1+vx)^g / ((1-x)(1-uvx))` truncated at `order`; the x^k
/// coefficient is the Hodge polynomial of the k-th symmetric product.
pub fn sym_generating_series(g: Genus, order: usize) -> TruncatedSeries {
    let g = g.get();
    let factors = [
        series_binomial(&LaurentPoly::u(), g, order),
        series_binomial(&LaurentPoly::v(), g, order),
        series_geometric(&LaurentPoly::one(), order),
        series_geometric(&LaurentPoly::uv_pow(1), order),
    ];
    factors
        .into_iter()
        .map(|s| s.expect("monomial ratios"))
        .fold(TruncatedSeries::one(order), |acc, s| &acc * &s)
}

/// Hodge polynomial of `Sym^k X`.
pub fn sym_power(g: Genus, k: u32) -> LaurentPoly {
    let order = k as usize;
    sym_generating_series(g, order)
        .coeff(order)
        .unwrap()
        .clone()
}

/// Which moduli space of rank-(1,1) triples [`moduli_11`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Moduli11Side {
    /// Any σ strictly above `σ_m = d1 - d2`: `Jac × Sym^(d1-d2)`.
    AboveSigmaM,
    /// The polystable locus at `σ = σ_m`: `Jac × Jac`.
    AtSigmaM,
}

/// Hodge polynomial of the moduli of triples of type `(1, 1, d1, d2)`.
pub fn moduli_11(g: Genus, d1: i64, d2: i64, side: Moduli11Side) -> LaurentPoly {
    if d1 < d2 {
        return LaurentPoly::zero();
    }
    let jac = jacobian(g);
    match side {
        Moduli11Side::AboveSigmaM => {
            let k = u32::try_from(d1 - d2).expect("symmetric power exponent fits u32");
            &jac * &sym_power(g, k)
        }
        Moduli11Side::AtSigmaM => &jac * &jac,
    }
}

/// Rank and degree type `(n1, n2, d1, d2)` of a holomorphic triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeVector {
    pub n1: u32,
    pub n2: u32,
    pub d1: i64,
    pub d2: i64,
}

impl TypeVector {
    pub fn new(n1: u32, n2: u32, d1: i64, d2: i64) -> Result<Self, BlockError> {
        let t = (n1, n2, d1, d2);
        if n1 == 0 && n2 == 0 {
            return Err(BlockError::InvalidType(t, "both ranks are zero"));
        }
        if (n1 == 0 && d1 != 0) || (n2 == 0 && d2 != 0) {
            return Err(BlockError::InvalidType(
                t,
                "a zero bundle must have degree zero",
            ));
        }
        Ok(TypeVector { n1, n2, d1, d2 })
    }
}

/// `χ(T'', T')` for a quotient of type `quotient` and a subtriple of type `sub`.
pub fn chi_triples(quotient: &TypeVector, sub: &TypeVector, g: Genus) -> i64 {
    let (n1q, n2q, d1q, d2q) = (
        quotient.n1 as i64,
        quotient.n2 as i64,
        quotient.d1,
        quotient.d2,
    );
    let (n1s, n2s, d1s, d2s) = (sub.n1 as i64, sub.n2 as i64, sub.d1, sub.d2);
    (1 - g.as_i64()) * (n1q * n1s + n2q * n2s - n2q * n1s) + n1q * d1s - n1s * d1q + n2q * d2s
        - n2s * d2q
        - n2q * d1s
        + n1s * d2q
}
