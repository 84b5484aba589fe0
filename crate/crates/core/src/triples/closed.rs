//! Closed generating-function evaluation of `e(N_σ)` and the telescoped
//! sum of flip contributions it must agree with.

use super::chamber::{chamber_d0, sigma_interval};
use super::flip::flip_difference;
use super::stability::StabilityValue;
use super::{HodgeResult, Result, TripleSpec, TriplesError};
use crate::blocks::{jacobian, sym_generating_series, Genus};
use crate::laurent::{series_geometric, LaurentPoly, TruncatedSeries};

/// Coefficient of `x^pole` in
///
/// ```text
/// prefactor · (1+ux)^g (1+vx)^g / ((1-uv)(1-x)(1-uvx))
///           · ( (uv)^first / (1 - (uv)^-1 x) - (uv)^second / (1 - (uv)^2 x) )
/// ```
///
/// which is the common shape of every closed formula for triples and pairs.
/// The bracket is expanded as two separate series products; the `1-uv`
/// denominator is removed by exact division at the end.
pub fn generating_coefficient(
    g: Genus,
    prefactor: &LaurentPoly,
    pole: i64,
    first: i64,
    second: i64,
) -> Result<LaurentPoly> {
    if pole < 0 {
        return Ok(LaurentPoly::zero());
    }
    let order = pole as usize;
    let base = sym_generating_series(g, order);
    let tail = |ratio: i64, exp: i64| -> Result<LaurentPoly> {
        let geo = series_geometric(&LaurentPoly::uv_pow(ratio), order)?;
        let product: TruncatedSeries = &base * &geo;
        Ok(product.coeff(order)?.shift_uv(exp))
    };
    let bracket = &tail(-1, first)? - &tail(2, second)?;
    let numerator = prefactor * &bracket;
    Ok(numerator.exact_div(&one_minus_uv())?)
}

pub(crate) fn one_minus_uv() -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::uv_pow(1)
}

/// The chamber index of σ if σ lies in a nonempty chamber, `None` if the
/// moduli space is empty there.
pub(crate) fn live_chamber(spec: &TripleSpec, sigma: &StabilityValue) -> Result<Option<i64>> {
    let d0 = chamber_d0(spec, sigma)?.d0;
    let Some((lo, hi)) = sigma_interval(spec) else {
        return Ok(None);
    };
    if !sigma.is_above(&lo) || !sigma.is_below(&hi) {
        return Ok(None);
    }
    let base = spec.as_two_one();
    if d0 > base.d1 - base.d2 {
        return Ok(None);
    }
    Ok(Some(d0))
}

/// `e(N_σ)` from the closed formula; rank (1,2) goes through the dual
/// rank-(2,1) family.
pub fn hodge_triples_closed(spec: &TripleSpec, sigma: &StabilityValue) -> Result<HodgeResult> {
    let Some(d0) = live_chamber(spec, sigma)? else {
        return Ok(HodgeResult::empty());
    };
    let base = spec.as_two_one();
    let g = base.g;
    let jac = jacobian(g);
    let pole = base.d1 - base.d2 - d0;
    let poly = generating_coefficient(
        g,
        &(&jac * &jac),
        pole,
        pole,
        -base.d1 + g.as_i64() - 1 + 2 * d0,
    )?;
    HodgeResult::of_space(poly, spec.complex_dim())
}

/// `e(N_σ)` as the sum of the flip contributions of every wall above σ.
pub fn hodge_triples_sum(spec: &TripleSpec, sigma: &StabilityValue) -> Result<HodgeResult> {
    let Some(d0) = live_chamber(spec, sigma)? else {
        return Ok(HodgeResult::empty());
    };
    let base = spec.as_two_one();
    let mut total = LaurentPoly::zero();
    for d_m in d0..=base.d1 - base.d2 {
        total += &flip_difference(&base, d_m)?;
    }
    HodgeResult::of_space(total, spec.complex_dim())
        .map_err(|e| TriplesError::Inconsistent(format!("flip sum: {e}")))
}
