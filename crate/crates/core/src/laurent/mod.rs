//! Exact arithmetic: Laurent polynomials in `u`, `v` over the integers,
//! univariate Laurent polynomials in `t`, and truncated power series in `x`.

mod poly;
mod rational;
mod series;
mod univariate;

pub use poly::{specialize, LaurentPoly, Monomial, Specialization, Specialized};
pub use rational::{
    ceil_int, floor_int, frac, int, parse_rational, rational_string, ExactRational,
};
pub use series::{series_binomial, series_coeff, series_geometric, Coefficient, TruncatedSeries};
pub use univariate::UniPoly;

pub(crate) use rational::is_negative;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("expected a single monomial, found {terms} terms")]
    NotMonomial { terms: usize },
    #[error("coefficient x^{requested} requested from a series truncated at order {order}")]
    OrderExceeded { requested: usize, order: usize },
    #[error("negative exponent evaluated at a zero coordinate")]
    ZeroAtPole,
    #[error("exponent does not fit the evaluation range")]
    ExponentOverflow,
    #[error("cannot parse {0:?} as an exact rational")]
    BadRational(String),
}

/// `(uv)^n · p(1/u, 1/v)`.
pub fn poly_palindrome_dual(p: &LaurentPoly, n: u32) -> LaurentPoly {
    p.palindrome_dual(n as i64)
}

pub fn poly_exact_div(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    p.exact_div(q)
}
