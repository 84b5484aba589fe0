//! Moduli of stable rank-2 bundles of odd degree.

use super::closed::{hodge_triples_closed, one_minus_uv};
use super::stability::StabilityValue;
use super::{HodgeResult, Result, TripleSpec, TriplesError};
use crate::blocks::{jacobian, proj_space, Genus};
use crate::laurent::LaurentPoly;

fn check_odd(d: i64) -> Result<()> {
    if d.rem_euclid(2) == 0 {
        return Err(TriplesError::EvenDegree(d));
    }
    Ok(())
}

/// `e(M(2,d))` (or `e(M(2,Λ))` with `fixed_det`) for odd `d`, by exact
/// division of the closed numerator by `(1-uv)(1-(uv)^2)`.
pub fn hodge_bundles_odd(g: Genus, d: i64, fixed_det: bool) -> Result<HodgeResult> {
    check_odd(d)?;
    let gi = g.get();
    let one = LaurentPoly::one();
    let mixed = &(&one + &LaurentPoly::monomial(1, 2, 1)).pow(gi)
        * &(&one + &LaurentPoly::monomial(1, 1, 2)).pow(gi);
    let jac = jacobian(g);
    let numerator = if fixed_det {
        &mixed - &(&LaurentPoly::uv_pow(g.as_i64()) * &jac)
    } else {
        &(&jac * &mixed) - &(&LaurentPoly::uv_pow(g.as_i64()) * &(&jac * &jac))
    };
    let denominator = &one_minus_uv() * &(&one - &LaurentPoly::uv_pow(2));
    let poly = numerator.exact_div(&denominator)?;
    let dim = if fixed_det {
        3 * g.as_i64() - 3
    } else {
        4 * g.as_i64() - 3
    };
    HodgeResult::of_space(poly, dim)
}

/// `e(M(2,d))` recovered from the first chamber of the triple family with
/// `d1 = d`, `d - 2 d2 = 4g - 3`, where `N_{σ_m+}` is a `P^{2g-2}`-bundle
/// over `M(2,d) × Jac`.
pub fn hodge_bundles_via_triples(g: Genus, d: i64) -> Result<LaurentPoly> {
    check_odd(d)?;
    let d2 = (d - (4 * g.as_i64() - 3)) / 2;
    let spec = TripleSpec::two_one(g, d, d2);
    let sigma = StabilityValue::plus(spec.sigma_m());
    let triples = hodge_triples_closed(&spec, &sigma)?;
    let divisor = &jacobian(g) * &proj_space(2 * g.get() - 1);
    Ok(triples.poly.exact_div(&divisor)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::UniPoly;

    fn g(n: i64) -> Genus {
        Genus::new(n).unwrap()
    }

    fn fixed_g2() -> LaurentPoly {
        LaurentPoly::from_terms([
            (0, 0, 1),
            (1, 1, 1),
            (2, 1, 2),
            (1, 2, 2),
            (2, 2, 1),
            (3, 3, 1),
        ])
    }

    #[test]
    fn genus_two() {
        let r = hodge_bundles_odd(g(2), 1, true).unwrap();
        assert_eq!(r.poly, fixed_g2());
        assert_eq!(r.dim, Some(3));
        assert_eq!(
            r.poly.diagonal(),
            UniPoly::from_coeffs([1, 0, 1, 4, 1, 0, 1])
        );
        let r = hodge_bundles_odd(g(2), 3, false).unwrap();
        assert_eq!(r.poly, &jacobian(g(2)) * &fixed_g2());
        assert_eq!(r.dim, Some(5));
    }

    #[test]
    fn even_degree_rejected() {
        assert_eq!(
            hodge_bundles_odd(g(2), 2, true),
            Err(TriplesError::EvenDegree(2))
        );
        assert_eq!(
            hodge_bundles_via_triples(g(2), -4),
            Err(TriplesError::EvenDegree(-4))
        );
    }

    #[test]
    fn triples_route() {
        for (gen, d) in [(2, 1), (2, 3), (3, 1)] {
            assert_eq!(
                hodge_bundles_via_triples(g(gen), d).unwrap(),
                hodge_bundles_odd(g(gen), d, false).unwrap().poly
            );
        }
    }
}
