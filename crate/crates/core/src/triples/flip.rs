//! The change `e(S_{σc-}) - e(S_{σc+})` across a single wall.

use super::closed::one_minus_uv;
use super::{RankPair, Result, TripleSpec, TriplesError};
use crate::blocks::{jacobian, proj_space, sym_generating_series, sym_power};
use crate::laurent::{LaurentPoly, TruncatedSeries};

/// Returns `(d1 - d2 - d_M, 2 d_M - d1 + g - 1)`: the projective-bundle
/// ranks of the two flip loci at the wall of `d_M`.
fn flip_ranks(spec: &TripleSpec, d_m: i64) -> Result<(i64, i64)> {
    if spec.rank != RankPair::TwoOne {
        return Err(TriplesError::RankMismatch(spec.rank));
    }
    if 2 * d_m <= spec.d1 {
        return Err(TriplesError::WallAtSigmaM { d_m });
    }
    let k = spec.d1 - spec.d2 - d_m;
    if k < 0 {
        return Err(TriplesError::NotCritical { d_m });
    }
    Ok((k, 2 * d_m - spec.d1 + spec.g.as_i64() - 1))
}

/// Block product `(e_{2d_M-d1+g-1} - e_{d1-d2-d_M}) · e(Jac)^2 · e(Sym^{d1-d2-d_M} X)`.
pub fn flip_difference(spec: &TripleSpec, d_m: i64) -> Result<LaurentPoly> {
    let (k, r) = flip_ranks(spec, d_m)?;
    let e = &proj_space(r as u32) - &proj_space(k as u32);
    let jac = jacobian(spec.g);
    Ok(&(&e * &(&jac * &jac)) * &sym_power(spec.g, k as u32))
}

/// The same contribution read off as the x^{d1-d2-d_M} coefficient of
/// `((uv)^{d1-d2-d_M} - (uv)^{2d_M-d1+g-1}) (1+u)^{2g} (1+v)^{2g}
/// (1+ux)^g (1+vx)^g / ((1-uv)(1-x)(1-uvx))`.
pub fn flip_difference_series(spec: &TripleSpec, d_m: i64) -> Result<LaurentPoly> {
    let (k, r) = flip_ranks(spec, d_m)?;
    let order = k as usize;
    let jac = jacobian(spec.g);
    let scalar = &(&LaurentPoly::uv_pow(k) - &LaurentPoly::uv_pow(r)) * &(&jac * &jac);
    let series: TruncatedSeries = sym_generating_series(spec.g, order).scale(&scalar);
    Ok(series.coeff(order)?.exact_div(&one_minus_uv())?)
}
