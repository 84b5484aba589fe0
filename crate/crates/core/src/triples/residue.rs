//! Two evaluations of
//! `F(a,b,c) = coeff_{x^0} x f(x) / ((1-ax)(1-bx)(1-cx))` with
//! `f(x) = (1+ux)^g (1+vx)^g x^(1-2g)`, at a rational point `(u, v)`:
//! by series expansion, and by summing the residues at `1/a`, `1/b`, `1/c`.

use num_traits::Zero;

use super::{Result, TriplesError};
use crate::blocks::Genus;
use crate::laurent::{ExactRational, TruncatedSeries};

/// The x^{2g-2} coefficient of `(1+ux)^g (1+vx)^g / ((1-ax)(1-bx)(1-cx))`.
pub fn series_side(
    g: Genus,
    poles: [&ExactRational; 3],
    u0: &ExactRational,
    v0: &ExactRational,
) -> ExactRational {
    let order = 2 * g.get() as usize - 2;
    let mut s = &TruncatedSeries::binomial(u0, g.get(), order)
        * &TruncatedSeries::binomial(v0, g.get(), order);
    for p in poles {
        s = &s * &TruncatedSeries::geometric(p, order);
    }
    s.coeff(order).unwrap().clone()
}

/// `Σ_t (t+u)^g (t+v)^g / Π_{s≠t}(t-s)` over `t ∈ {a, b, c}`.
pub fn residue_side(
    g: Genus,
    poles: [&ExactRational; 3],
    u0: &ExactRational,
    v0: &ExactRational,
) -> ExactRational {
    let e = g.get() as i32;
    let mut total = ExactRational::zero();
    for (i, t) in poles.iter().enumerate() {
        let mut den = ExactRational::from_integer(1.into());
        for (j, s) in poles.iter().enumerate() {
            if i != j {
                den *= *t - *s;
            }
        }
        total += (*t + u0).pow(e) * (*t + v0).pow(e) / den;
    }
    total
}

/// `(series value, residue value)` of `F(a,b,c)` at `(u0, v0)`.
pub fn residue_extract_check(
    g: Genus,
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
    u0: &ExactRational,
    v0: &ExactRational,
) -> Result<(ExactRational, ExactRational)> {
    let poles = [a, b, c];
    if poles.iter().any(|p| p.is_zero()) || a == b || b == c || a == c {
        return Err(TriplesError::DegeneratePoles);
    }
    Ok((
        series_side(g, poles, u0, v0),
        residue_side(g, poles, u0, v0),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{frac, int};

    #[test]
    fn complete_homogeneous_fixture() {
        let g = Genus::new(2).unwrap();
        let (s, r) = residue_extract_check(g, &int(1), &int(2), &int(3), &int(0), &int(0)).unwrap();
        assert_eq!(s, int(25));
        assert_eq!(r, int(25));
    }

    #[test]
    fn rational_point() {
        let g = Genus::new(3).unwrap();
        let (s, r) = residue_extract_check(
            g,
            &frac(1, 2),
            &frac(-3, 5),
            &int(4),
            &frac(2, 7),
            &frac(-1, 3),
        )
        .unwrap();
        assert_eq!(s, r);
    }

    #[test]
    fn degenerate() {
        let g = Genus::new(2).unwrap();
        let zero = int(0);
        assert_eq!(
            residue_extract_check(g, &int(1), &int(1), &int(2), &zero, &zero),
            Err(TriplesError::DegeneratePoles)
        );
        assert_eq!(
            residue_extract_check(g, &int(0), &int(1), &int(2), &zero, &zero),
            Err(TriplesError::DegeneratePoles)
        );
    }
}
