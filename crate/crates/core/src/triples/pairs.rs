//! Rank-2 holomorphic pairs, with and without fixed determinant.

use num_traits::ToPrimitive;

use super::closed::generating_coefficient;
use super::stability::{Side, StabilityValue};
use super::{HodgeResult, Result, TriplesError};
use crate::blocks::{jacobian, Genus};
use crate::laurent::{frac, int, ExactRational, LaurentPoly, TruncatedSeries, UniPoly};

/// Critical values of `τ`: the integers in `J = [d/2, d]`.
pub fn pair_critical_values(d: i64) -> Vec<i64> {
    let first = d.div_euclid(2) + d.rem_euclid(2);
    (first..=d).collect()
}

/// One rational `τ` strictly inside each chamber of `(d/2, d)`.
pub fn pair_chamber_representatives(d: i64) -> Vec<ExactRational> {
    let mut lower = frac(d, 2);
    let mut reps = Vec::new();
    for c in pair_critical_values(d) {
        let c = int(c);
        if c > lower {
            reps.push((&lower + &c) / int(2));
            lower = c;
        }
    }
    reps
}

/// `⌊τ⌋` if τ lies in a nonempty chamber of `(d/2, d)`, `None` if the
/// moduli space is empty there; `OnWall` for an exact integer of `J`.
pub fn tau_floor(d: i64, tau: &StabilityValue) -> Result<Option<i64>> {
    if tau.side == Side::Exact
        && tau.value.is_integer()
        && pair_critical_values(d).iter().any(|c| int(*c) == tau.value)
    {
        return Err(TriplesError::OnWall {
            parameter: "tau",
            value: tau.value.clone(),
        });
    }
    if !tau.is_above(&frac(d, 2)) || !tau.is_below(&int(d)) {
        return Ok(None);
    }
    Ok(Some(tau.floor().to_i64().expect("tau floor fits i64")))
}

/// `e(M_τ(2,d))`, or `e(M_τ(2,Λ))` when `fixed_det` is set.
pub fn hodge_pairs(g: Genus, d: i64, tau: &StabilityValue, fixed_det: bool) -> Result<HodgeResult> {
    let Some(fl) = tau_floor(d, tau)? else {
        return Ok(HodgeResult::empty());
    };
    let gi = g.as_i64();
    let pole = d - 1 - fl;
    let prefactor = if fixed_det {
        LaurentPoly::one()
    } else {
        jacobian(g)
    };
    let poly = generating_coefficient(g, &prefactor, pole, pole, gi + 1 - d + 2 * fl)?;
    let dim = if fixed_det {
        gi - 2 + d
    } else {
        2 * gi - 2 + d
    };
    HodgeResult::of_space(poly, dim)
}

/// Poincaré polynomial of `M_τ(2,Λ)` from its own one-variable generating
/// function, without passing through the two-variable Hodge polynomial.
/// Zero when the space is empty.
pub fn poincare_pairs_fixed_det_thaddeus(
    g: Genus,
    d: i64,
    tau: &StabilityValue,
) -> Result<UniPoly> {
    let Some(fl) = tau_floor(d, tau)? else {
        return Ok(UniPoly::zero());
    };
    let gi = g.as_i64();
    let i = d - 1 - fl;
    if i < 0 {
        return Ok(UniPoly::zero());
    }
    let order = i as usize;
    let t = UniPoly::t();
    let t2 = UniPoly::monomial(1, 2);
    let base = [
        TruncatedSeries::binomial(&t, 2 * g.get(), order),
        TruncatedSeries::geometric(&UniPoly::one(), order),
        TruncatedSeries::geometric(&t2, order),
    ]
    .iter()
    .fold(TruncatedSeries::one(order), |acc, s| &acc * s);
    let tail = |ratio: UniPoly, exp: i64| -> Result<UniPoly> {
        let s = &base * &TruncatedSeries::geometric(&ratio, order);
        Ok(s.coeff(order)? * &UniPoly::monomial(1, exp))
    };
    let bracket = tail(UniPoly::monomial(1, -2), 2 * i)?
        - tail(UniPoly::monomial(1, 4), 2 * gi + 2 - 2 * d + 4 * fl)?;
    Ok(bracket.exact_div(&(&UniPoly::one() - &t2))?)
}
