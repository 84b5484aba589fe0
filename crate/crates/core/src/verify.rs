//! Batch invariant checking over parameter grids.
//!
//! Every check runs at every applicable grid point (and every chamber of
//! that point) and yields one [`CheckReport`]. Failures are data: the
//! report carries the parameters needed to reproduce them. Randomized
//! checks draw from a ChaCha stream seeded by the grid seed and the check
//! name, so output does not depend on scheduling.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{chi_triples, jacobian, proj_space, sym_power, Genus, TypeVector};
use crate::laurent::{frac, int, rational_string, ExactRational, LaurentPoly, TruncatedSeries};
use crate::triples::{
    self, chamber_d0, chamber_representatives, critical_values, flip_difference,
    flip_difference_series, hodge_bundles_odd, hodge_bundles_via_triples, hodge_pairs,
    hodge_triples_closed, hodge_triples_sum, pair_chamber_representatives,
    poincare_pairs_fixed_det_thaddeus, residue_extract_check, HodgeResult, RankPair,
    StabilityValue, TripleSpec,
};

/// All named checks, in report order.
pub const CHECKS: &[&str] = &[
    "ring-laws",
    "geometric-series",
    "exact-division",
    "palindrome-involution",
    "specialize-morphism",
    "proj-space",
    "sym-generating",
    "sym-structure",
    "chi-bilinear",
    "cross-pipeline",
    "flip-paths",
    "chamber-constancy",
    "hodge-symmetry",
    "palindrome",
    "nonnegativity",
    "emptiness",
    "duality",
    "pairs-factorization",
    "fixed-det-factorization",
    "poincare-univariate",
    "bundles",
    "residue",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub parameters: Vec<(String, String)>,
    pub status: Status,
    pub detail: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn parameter_string(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{tag} {} {}", self.check_name, self.parameter_string())?;
        if !self.detail.is_empty() {
            write!(f, " :: {}", self.detail)?;
        }
        Ok(())
    }
}

/// How the `d1` values of a grid are chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum D1Range {
    /// The same `d1` values for every `d2`.
    Absolute(Vec<i64>),
    /// `d1 = 2 d2 + k` for each offset `k`.
    Offset(Vec<i64>),
}

#[derive(Clone, Debug)]
pub struct Grid {
    pub genera: Vec<i64>,
    pub d1: D1Range,
    pub d2: Vec<i64>,
    /// Subset of [`CHECKS`]; `None` runs all of them.
    pub checks: Option<Vec<String>>,
    pub seed: u64,
    /// Cases per randomized check.
    pub random_cases: usize,
    /// Perturbs the named check's computed value, to exercise the failure path.
    pub inject_fault: Option<String>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            genera: vec![2, 3],
            d1: D1Range::Offset((1..=8).collect()),
            d2: vec![-2, -1, 0],
            checks: None,
            seed: 0x5eed,
            random_cases: 100,
            inject_fault: None,
        }
    }
}

impl Grid {
    fn triple_points(&self) -> Vec<(Genus, i64, i64)> {
        let mut pts = Vec::new();
        for &g in &self.genera {
            let Ok(g) = Genus::new(g) else { continue };
            for &d2 in &self.d2 {
                let d1s: Vec<i64> = match &self.d1 {
                    D1Range::Absolute(v) => v.clone(),
                    D1Range::Offset(v) => v.iter().map(|k| 2 * d2 + k).collect(),
                };
                for d1 in d1s {
                    pts.push((g, d1, d2));
                }
            }
        }
        pts
    }

    fn genera(&self) -> Vec<Genus> {
        self.genera
            .iter()
            .filter_map(|g| Genus::new(*g).ok())
            .collect()
    }

    /// Pair degrees `d = d1 - 2 d2` occurring in the grid, ascending.
    fn pair_points(&self) -> Vec<(Genus, i64)> {
        let mut pts: Vec<(Genus, i64)> = self
            .triple_points()
            .into_iter()
            .map(|(g, d1, d2)| (g, d1 - 2 * d2))
            .filter(|(_, d)| *d > 0)
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    fn selected(&self) -> Vec<&'static str> {
        CHECKS
            .iter()
            .copied()
            .filter(|c| match &self.checks {
                None => true,
                Some(list) => list.iter().any(|s| s == c),
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

/// Runs every selected check over the grid.
pub fn run_suite(grid: &Grid) -> SuiteReport {
    let reports: Vec<CheckReport> = grid
        .selected()
        .par_iter()
        .map(|name| {
            let mut ctx = Ctx {
                grid,
                name,
                out: Vec::new(),
            };
            ctx.run();
            ctx.out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let passed = reports.iter().filter(|r| r.passed()).count();
    let summary = Summary {
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
    };
    SuiteReport {
        seed: grid.seed,
        reports,
        summary,
    }
}

type Params = Vec<(String, String)>;

macro_rules! params {
    ($($k:ident = $v:expr),* $(,)?) => {
        vec![$((stringify!($k).to_string(), $v.to_string())),*]
    };
}

struct Ctx<'a> {
    grid: &'a Grid,
    name: &'static str,
    out: Vec<CheckReport>,
}

impl Ctx<'_> {
    fn rng(&self) -> ChaCha8Rng {
        let salt = self.name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
        });
        ChaCha8Rng::seed_from_u64(self.grid.seed ^ salt)
    }

    fn faulty(&self) -> bool {
        self.grid.inject_fault.as_deref() == Some(self.name)
    }

    fn record(&mut self, parameters: Params, outcome: Result<(), String>) {
        let (status, detail) = match outcome {
            Ok(()) if !self.faulty() => (Status::Pass, String::new()),
            Ok(()) => (Status::Fail, "injected fault".to_string()),
            Err(detail) => (Status::Fail, detail),
        };
        self.out.push(CheckReport {
            check_name: self.name.to_string(),
            parameters,
            status,
            detail,
        });
    }

    fn run(&mut self) {
        match self.name {
            "ring-laws" => self.ring_laws(),
            "geometric-series" => self.geometric_series(),
            "exact-division" => self.exact_division(),
            "palindrome-involution" => self.palindrome_involution(),
            "specialize-morphism" => self.specialize_morphism(),
            "proj-space" => self.proj_space(),
            "sym-generating" => self.sym_generating(),
            "sym-structure" => self.sym_structure(),
            "chi-bilinear" => self.chi_bilinear(),
            "cross-pipeline" => self.per_chamber(|s, sigma| {
                let closed = hodge_triples_closed(s, sigma).map_err(err)?;
                let sum = hodge_triples_sum(s, sigma).map_err(err)?;
                same("closed", &closed, "sum", &sum)
            }),
            "flip-paths" => self.flip_paths(),
            "chamber-constancy" => self.chamber_constancy(),
            "hodge-symmetry" => self.per_chamber(|s, sigma| {
                let r = hodge_triples_closed(s, sigma).map_err(err)?;
                same("e(u,v)", &r.poly, "e(v,u)", &r.poly.swap_uv())
            }),
            "palindrome" => self
                .per_chamber(|s, sigma| palindromic(&hodge_triples_closed(s, sigma).map_err(err)?)),
            "nonnegativity" => self.per_chamber(|s, sigma| {
                let r = hodge_triples_closed(s, sigma).map_err(err)?;
                check(r.poly.has_nonnegative_coeffs(), || {
                    format!("negative coefficient in {}", r.poly)
                })
            }),
            "emptiness" => self.emptiness(),
            "duality" => self.duality(),
            "pairs-factorization" => self.pairs_factorization(),
            "fixed-det-factorization" => self.per_pair_chamber(|g, d, tau| {
                let full = hodge_pairs(g, d, tau, false).map_err(err)?;
                let fixed = hodge_pairs(g, d, tau, true).map_err(err)?;
                same(
                    "e(M(2,d))",
                    &full.poly,
                    "e(Jac) e(M(2,L))",
                    &(&jacobian(g) * &fixed.poly),
                )
            }),
            "poincare-univariate" => self.per_pair_chamber(|g, d, tau| {
                let fixed = hodge_pairs(g, d, tau, true).map_err(err)?;
                let p = poincare_pairs_fixed_det_thaddeus(g, d, tau).map_err(err)?;
                same(
                    "diagonal",
                    &fixed.poly.diagonal(),
                    "one-variable formula",
                    &p,
                )
            }),
            "bundles" => self.bundles(),
            "residue" => self.residue(),
            other => unreachable!("unknown check {other}"),
        }
    }

    fn ring_laws(&mut self) {
        let mut rng = self.rng();
        for case in 0..self.grid.random_cases {
            let (p, q, r) = (
                random_poly(&mut rng),
                random_poly(&mut rng),
                random_poly(&mut rng),
            );
            let outcome = same(
                "(p+q)r",
                &(&(&p + &q) * &r),
                "pr+qr",
                &(&(&p * &r) + &(&q * &r)),
            )
            .and_then(|_| same("(pq)r", &(&(&p * &q) * &r), "p(qr)", &(&p * &(&q * &r))))
            .and_then(|_| same("pq", &(&p * &q), "qp", &(&q * &p)));
            self.record(params!(seed = self.grid.seed, case = case), outcome);
        }
    }

    fn geometric_series(&mut self) {
        let mut rng = self.rng();
        for case in 0..self.grid.random_cases {
            let m = LaurentPoly::monomial(
                rng.gen_range(-3..=3i64).max(1),
                rng.gen_range(-5..=5),
                rng.gen_range(-5..=5),
            );
            let order = rng.gen_range(0..=10usize);
            let mut one_minus = vec![LaurentPoly::zero(); order + 1];
            one_minus[0] = LaurentPoly::one();
            if order >= 1 {
                one_minus[1] = -&m;
            }
            let outcome = crate::laurent::series_geometric(&m, order)
                .map_err(err)
                .and_then(|geo| {
                    let prod = &TruncatedSeries::from_coeffs(one_minus) * &geo;
                    let one = TruncatedSeries::<LaurentPoly>::one(order);
                    check(prod == one, || {
                        format!("(1 - m x) * geometric != 1 for m = {m}")
                    })
                });
            self.record(
                params!(seed = self.grid.seed, case = case, order = order),
                outcome,
            );
        }
    }

    fn exact_division(&mut self) {
        let mut rng = self.rng();
        for case in 0..self.grid.random_cases {
            let q = loop {
                let q = random_poly(&mut rng);
                if q.len() >= 2 {
                    break q;
                }
            };
            let r = random_poly(&mut rng);
            let p = &q * &r;
            let mut outcome = match p.exact_div(&q) {
                Ok(found) => same("q * (p/q)", &(&found * &q), "p", &p),
                Err(e) => Err(format!("q*r not divisible by q: {e}")),
            };
            // Adding a unit (monomial) to a multiple of a non-monomial q
            // leaves a non-multiple.
            if outcome.is_ok() {
                let unit = LaurentPoly::monomial(1, rng.gen_range(-5..=5), rng.gen_range(-5..=5));
                let p2 = &p + &unit;
                outcome = match p2.exact_div(&q) {
                    Ok(found) => Err(format!("claimed quotient {found} for a non-multiple")),
                    Err(_) => Ok(()),
                };
            }
            self.record(params!(seed = self.grid.seed, case = case), outcome);
        }
    }

    fn palindrome_involution(&mut self) {
        let mut rng = self.rng();
        for case in 0..self.grid.random_cases {
            let n = rng.gen_range(0..=6i64);
            let p = LaurentPoly::from_terms((0..rng.gen_range(0..=8)).map(|_| {
                (
                    rng.gen_range(0..=n),
                    rng.gen_range(0..=n),
                    rng.gen_range(-9..=9i64),
                )
            }));
            let outcome = same(
                "dual(dual(p))",
                &p.palindrome_dual(n).palindrome_dual(n),
                "p",
                &p,
            );
            self.record(params!(seed = self.grid.seed, case = case, n = n), outcome);
        }
    }

    fn specialize_morphism(&mut self) {
        let mut rng = self.rng();
        for case in 0..self.grid.random_cases {
            let (p, q) = (random_poly(&mut rng), random_poly(&mut rng));
            let pq = &p * &q;
            let mut outcome = same(
                "(pq)(t,t)",
                &pq.diagonal(),
                "p(t,t)q(t,t)",
                &(&p.diagonal() * &q.diagonal()),
            );
            if outcome.is_ok() {
                let u0 = random_nonzero_rational(&mut rng);
                let v0 = random_nonzero_rational(&mut rng);
                outcome = (|| {
                    let lhs = pq.eval(&u0, &v0).map_err(err)?;
                    let rhs = p.eval(&u0, &v0).map_err(err)? * q.eval(&u0, &v0).map_err(err)?;
                    check(lhs == rhs, || {
                        format!("point evaluation at ({u0}, {v0}) is not multiplicative")
                    })
                })();
            }
            self.record(params!(seed = self.grid.seed, case = case), outcome);
        }
    }

    fn proj_space(&mut self) {
        let one_minus_uv = &LaurentPoly::one() - &LaurentPoly::uv_pow(1);
        for n in 0..=50u32 {
            let expected = &LaurentPoly::one() - &LaurentPoly::uv_pow(n as i64);
            let outcome = same(
                "e_n (1-uv)",
                &(&proj_space(n) * &one_minus_uv),
                "1-(uv)^n",
                &expected,
            );
            self.record(params!(n = n), outcome);
        }
    }

    fn sym_generating(&mut self) {
        for g in self.grid.genera() {
            let oracle = sym_convolution_oracle(g, 8);
            for (k, expected) in oracle.iter().enumerate() {
                let outcome = same(
                    "sym_power",
                    &sym_power(g, k as u32),
                    "convolution",
                    expected,
                );
                self.record(params!(g = g, k = k), outcome);
            }
        }
    }

    fn sym_structure(&mut self) {
        for g in self.grid.genera() {
            for k in 0..=(2 * g.get() - 2) {
                let p = sym_power(g, k);
                let top = p.terms().map(|(m, _)| m.degree()).max();
                let outcome = same("Sym", &p, "Sym with u,v swapped", &p.swap_uv())
                    .and_then(|_| {
                        check(p.has_nonnegative_coeffs(), || "negative coefficient".into())
                    })
                    .and_then(|_| {
                        check(top == Some(2 * k as i64), || {
                            format!("top degree {top:?}, expected {}", 2 * k)
                        })
                    });
                self.record(params!(g = g, k = k), outcome);
            }
        }
    }

    fn chi_bilinear(&mut self) {
        let mut rng = self.rng();
        for g in self.grid.genera() {
            for case in 0..self.grid.random_cases / 4 + 1 {
                let quot = random_type(&mut rng);
                let sub = random_type(&mut rng);
                if sub.n1 == 0 {
                    continue;
                }
                let bumped = TypeVector {
                    d1: sub.d1 + 1,
                    ..sub
                };
                let delta = chi_triples(&quot, &bumped, g) - chi_triples(&quot, &sub, g);
                let expected = quot.n1 as i64 - quot.n2 as i64;
                let outcome = check(delta == expected, || {
                    format!("delta {delta}, expected {expected}")
                });
                self.record(
                    params!(
                        g = g,
                        case = case,
                        quotient = format!("{:?}", quot),
                        sub = format!("{:?}", sub)
                    ),
                    outcome,
                );
            }
        }
    }

    fn per_chamber<F>(&mut self, f: F)
    where
        F: Fn(&TripleSpec, &StabilityValue) -> Result<(), String>,
    {
        for (g, d1, d2) in self.grid.triple_points() {
            let spec = TripleSpec::two_one(g, d1, d2);
            let Ok(reps) = chamber_representatives(&spec) else {
                continue;
            };
            for sigma in reps {
                let sv = StabilityValue::exact(sigma.clone());
                let outcome = f(&spec, &sv);
                self.record(
                    params!(g = g, d1 = d1, d2 = d2, sigma = rational_string(&sigma)),
                    outcome,
                );
            }
        }
    }

    fn per_pair_chamber<F>(&mut self, f: F)
    where
        F: Fn(Genus, i64, &StabilityValue) -> Result<(), String>,
    {
        for (g, d) in self.grid.pair_points() {
            for tau in pair_chamber_representatives(d) {
                let outcome = f(g, d, &StabilityValue::exact(tau.clone()));
                self.record(params!(g = g, d = d, tau = rational_string(&tau)), outcome);
            }
        }
    }

    fn flip_paths(&mut self) {
        for (g, d1, d2) in self.grid.triple_points() {
            let spec = TripleSpec::two_one(g, d1, d2);
            let Ok(walls) = critical_values(&spec) else {
                continue;
            };
            for w in walls.into_iter().filter(|w| w.sigma != spec.sigma_m()) {
                let outcome = (|| {
                    let blocks = flip_difference(&spec, w.d_m).map_err(err)?;
                    let series = flip_difference_series(&spec, w.d_m).map_err(err)?;
                    same("block product", &blocks, "coefficient extraction", &series)
                })();
                self.record(params!(g = g, d1 = d1, d2 = d2, d_m = w.d_m), outcome);
            }
        }
    }

    fn chamber_constancy(&mut self) {
        for (g, d1, d2) in self.grid.triple_points() {
            let spec = TripleSpec::two_one(g, d1, d2);
            let Ok(walls) = critical_values(&spec) else {
                continue;
            };
            let mut lower = spec.sigma_m();
            for w in walls {
                if w.sigma <= lower {
                    continue;
                }
                let near_lower = &lower + (&w.sigma - &lower) / int(5);
                let near_upper = &w.sigma - (&w.sigma - &lower) / int(7);
                let outcome = (|| {
                    let a = StabilityValue::exact(near_lower.clone());
                    let b = StabilityValue::exact(near_upper.clone());
                    let (ia, ib) = (
                        chamber_d0(&spec, &a).map_err(err)?,
                        chamber_d0(&spec, &b).map_err(err)?,
                    );
                    check(ia == ib, || format!("d0 {} vs {}", ia.d0, ib.d0))?;
                    let ra = hodge_triples_closed(&spec, &a).map_err(err)?;
                    let rb = hodge_triples_closed(&spec, &b).map_err(err)?;
                    same("near lower wall", &ra, "near upper wall", &rb)
                })();
                self.record(
                    params!(
                        g = g,
                        d1 = d1,
                        d2 = d2,
                        sigma_a = rational_string(&near_lower),
                        sigma_b = rational_string(&near_upper)
                    ),
                    outcome,
                );
                lower = w.sigma;
            }
        }
    }

    fn emptiness(&mut self) {
        for (g, d1, d2) in self.grid.triple_points() {
            let spec = TripleSpec::two_one(g, d1, d2);
            let probes = match triples::sigma_interval(&spec) {
                Some((lo, hi)) => vec![lo - int(1), hi + int(1)],
                None => vec![int(0), frac(1, 2), int(7)],
            };
            for sigma in probes {
                let sv = StabilityValue::exact(sigma.clone());
                let outcome = (|| {
                    let a = hodge_triples_closed(&spec, &sv).map_err(err)?;
                    let b = hodge_triples_sum(&spec, &sv).map_err(err)?;
                    check(a.is_empty() && a.poly.is_zero(), || {
                        format!("closed formula gave {}", a.poly)
                    })?;
                    check(b.is_empty() && b.poly.is_zero(), || {
                        format!("flip sum gave {}", b.poly)
                    })
                })();
                self.record(
                    params!(g = g, d1 = d1, d2 = d2, sigma = rational_string(&sigma)),
                    outcome,
                );
            }
        }
    }

    /// Rank (1,2) family `(-d2, -d1)` against the grid point, chamber by
    /// chamber, and against the direct rank-(1,2) closed formula.
    fn duality(&mut self) {
        for (g, d1, d2) in self.grid.triple_points() {
            let dual = TripleSpec {
                g,
                rank: RankPair::OneTwo,
                d1: -d2,
                d2: -d1,
            };
            let base = TripleSpec::two_one(g, d1, d2);
            let Ok(reps) = chamber_representatives(&dual) else {
                continue;
            };
            for sigma in reps {
                let sv = StabilityValue::exact(sigma.clone());
                let outcome = (|| {
                    let a = hodge_triples_closed(&dual, &sv).map_err(err)?;
                    let b = hodge_triples_closed(&base, &sv).map_err(err)?;
                    same("e(N(1,2,-d2,-d1))", &a.poly, "e(N(2,1,d1,d2))", &b.poly)?;
                    let direct = rank_one_two_direct(&dual, &sigma).map_err(err)?;
                    same("via duality", &a.poly, "rank (1,2) formula", &direct)
                })();
                self.record(
                    params!(g = g, d1 = -d2, d2 = -d1, sigma = rational_string(&sigma)),
                    outcome,
                );
            }
        }
    }

    fn pairs_factorization(&mut self) {
        self.per_chamber(|s, sigma| {
            let d = s.d1 - 2 * s.d2;
            let tau = StabilityValue::exact((&sigma.value + int(d)) / int(3));
            let triple = hodge_triples_closed(s, sigma).map_err(err)?;
            let pair = hodge_pairs(s.g, d, &tau, false).map_err(err)?;
            same(
                "e(Jac) e(M_tau(2,d))",
                &(&jacobian(s.g) * &pair.poly),
                "e(N_sigma)",
                &triple.poly,
            )
        })
    }

    fn bundles(&mut self) {
        for g in self.grid.genera() {
            for d in [1i64, 3] {
                let outcome = (|| {
                    let closed = hodge_bundles_odd(g, d, false).map_err(err)?;
                    let via = hodge_bundles_via_triples(g, d).map_err(err)?;
                    same("closed form", &closed.poly, "triples route", &via)?;
                    palindromic(&closed)?;
                    palindromic(&hodge_bundles_odd(g, d, true).map_err(err)?)
                })();
                self.record(params!(g = g, d = d), outcome);
            }
        }
    }

    fn residue(&mut self) {
        let mut rng = self.rng();
        for g in self.grid.genera() {
            let mut case = 0;
            while case < self.grid.random_cases.max(20) / 4 + 5 {
                let a = random_nonzero_rational(&mut rng);
                let b = random_nonzero_rational(&mut rng);
                let c = random_nonzero_rational(&mut rng);
                if a == b || b == c || a == c {
                    continue;
                }
                let u0 = random_rational(&mut rng);
                let v0 = random_nonzero_rational(&mut rng);
                let outcome = residue_extract_check(g, &a, &b, &c, &u0, &v0)
                    .map_err(err)
                    .and_then(|(s, r)| check(s == r, || format!("series {s} != residues {r}")));
                self.record(
                    params!(
                        g = g,
                        seed = self.grid.seed,
                        case = case,
                        a = a,
                        b = b,
                        c = c,
                        u = u0,
                        v = v0
                    ),
                    outcome,
                );
                case += 1;
            }
        }
    }
}

/// Rank (1,2) evaluated with its own chamber index and exponent, not by
/// rewriting the family.
fn rank_one_two_direct(spec: &TripleSpec, sigma: &ExactRational) -> triples::Result<LaurentPoly> {
    let g = spec.g;
    let d0 = crate::laurent::floor_int(&((sigma - int(spec.d1 + spec.d2)) / int(3)));
    let d0: i64 = i64::try_from(d0).expect("small chamber index") + 1;
    let pole = spec.d1 - spec.d2 - d0;
    let jac = jacobian(g);
    triples::generating_coefficient(
        g,
        &(&jac * &jac),
        pole,
        pole,
        spec.d2 + g.as_i64() - 1 + 2 * d0,
    )
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn same<T: PartialEq + fmt::Debug>(
    left_name: &str,
    left: &T,
    right_name: &str,
    right: &T,
) -> Result<(), String> {
    check(left == right, || {
        format!("{left_name} = {left:?} but {right_name} = {right:?}")
    })
}

fn palindromic(r: &HodgeResult) -> Result<(), String> {
    let Some(n) = r.dim else {
        return check(r.poly.is_zero(), || {
            "empty marker with nonzero polynomial".into()
        });
    };
    let n = n as i64;
    same(
        "e",
        &r.poly,
        "(uv)^n e(1/u,1/v)",
        &r.poly.palindrome_dual(n),
    )?;
    let (top, c) = r
        .poly
        .leading_term()
        .ok_or("zero polynomial on a nonempty space")?;
    check(top.u == n && top.v == n && c.is_one(), || {
        format!("top term {c} u^{} v^{}, expected (uv)^{n}", top.u, top.v)
    })?;
    check(r.poly.is_polynomial(), || "negative exponent".into())
}

/// `Σ_k e(Sym^k X) x^k` by explicit convolution of the four factor
/// sequences `C(g,i) u^i`, `C(g,j) v^j`, `1`, `(uv)^l`.
pub(crate) fn sym_convolution_oracle(g: Genus, order: usize) -> Vec<LaurentPoly> {
    let g = g.get() as usize;
    let mut binom = vec![BigInt::one()];
    for j in 1..=g {
        let next = &binom[j - 1] * BigInt::from(g + 1 - j) / BigInt::from(j);
        binom.push(next);
    }
    let mut out = vec![LaurentPoly::zero(); order + 1];
    for i in 0..=g.min(order) {
        for j in 0..=g.min(order - i) {
            for l in 0..=(order - i - j) {
                let c = &binom[i] * &binom[j];
                // The 1/(1-x) factor fills every remaining power of x.
                for slot in &mut out[(i + j + l)..] {
                    *slot += &LaurentPoly::monomial(c.clone(), (i + l) as i64, (j + l) as i64);
                }
            }
        }
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n = rng.gen_range(0..=8);
    LaurentPoly::from_terms((0..n).map(|_| {
        (
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-9..=9i64),
        )
    }))
}

fn random_rational(rng: &mut ChaCha8Rng) -> ExactRational {
    frac(rng.gen_range(-12..=12), rng.gen_range(1..=7))
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> ExactRational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_type(rng: &mut ChaCha8Rng) -> TypeVector {
    loop {
        let n1 = rng.gen_range(0..=3);
        let n2 = rng.gen_range(0..=3);
        let d1 = if n1 == 0 { 0 } else { rng.gen_range(-10..=10) };
        let d2 = if n2 == 0 { 0 } else { rng.gen_range(-10..=10) };
        if let Ok(t) = TypeVector::new(n1, n2, d1, d2) {
            return t;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Grid {
        Grid {
            genera: vec![2],
            d1: D1Range::Absolute((1..=5).collect()),
            d2: vec![0],
            random_cases: 10,
            ..Grid::default()
        }
    }

    #[test]
    fn small_grid_passes() {
        let report = run_suite(&small());
        let fails: Vec<String> = report.failures().map(|r| r.to_string()).collect();
        assert!(fails.is_empty(), "{fails:#?}");
        for name in CHECKS {
            assert!(
                report.reports.iter().any(|r| r.check_name == *name),
                "no report for {name}"
            );
        }
    }

    #[test]
    fn deterministic() {
        let a = run_suite(&small());
        let b = run_suite(&small());
        assert_eq!(a.reports, b.reports);
    }

    #[test]
    fn empty_family_points() {
        let grid = Grid {
            genera: vec![2],
            d1: D1Range::Absolute(vec![-3, -1]),
            d2: vec![0, 1],
            checks: Some(vec!["emptiness".into(), "cross-pipeline".into()]),
            ..Grid::default()
        };
        let report = run_suite(&grid);
        assert!(report.all_passed());
        assert!(report.reports.iter().all(|r| r.check_name == "emptiness"));
        assert_eq!(report.summary.total, 4 * 3);
    }

    #[test]
    fn injected_fault_is_reported() {
        let grid = Grid {
            checks: Some(vec!["cross-pipeline".into()]),
            inject_fault: Some("cross-pipeline".into()),
            ..small()
        };
        let report = run_suite(&grid);
        assert!(!report.all_passed());
        assert!(report.failures().all(|r| r.check_name == "cross-pipeline"));
    }

    #[test]
    fn oracle_matches_known_values() {
        let g = Genus::new(2).unwrap();
        let oracle = sym_convolution_oracle(g, 2);
        assert_eq!(
            oracle[1],
            LaurentPoly::from_terms([(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)])
        );
        assert_eq!(
            oracle[2].diagonal(),
            crate::laurent::UniPoly::from_coeffs([1, 4, 7, 4, 1])
        );
    }
}
