//! The σ-interval, its walls, and the chamber index `d0`.

use num_traits::ToPrimitive;

use super::stability::{Side, StabilityValue};
use super::{RankPair, Result, TripleSpec, TriplesError};
use crate::laurent::{ceil_int, frac, is_negative, ExactRational};

/// `[σ_m, σ_M]`, or `None` when `μ1 < μ2` and every moduli space is empty.
pub fn sigma_interval(spec: &TripleSpec) -> Option<(ExactRational, ExactRational)> {
    let lo = spec.sigma_m();
    if is_negative(&lo) {
        return None;
    }
    Some((lo, spec.sigma_big_m()))
}

/// A wall `σ_c` together with the degree `d_M` of the line subbundle that
/// destabilizes there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalValue {
    pub sigma: ExactRational,
    pub d_m: i64,
}

/// Walls in ascending order. For rank (1,2) the `d_M` reported is the one
/// of the dual rank-(2,1) family, which satisfies `σ_c = 3 d_M + d1 + d2`.
pub fn critical_values(spec: &TripleSpec) -> Result<Vec<CriticalValue>> {
    if sigma_interval(spec).is_none() {
        return Err(TriplesError::EmptyFamily);
    }
    let base = spec.as_two_one();
    let first = ceil_int(&base.mu1()).to_i64().expect("degree fits i64");
    let last = base.d1 - base.d2;
    Ok((first..=last)
        .map(|d_m| CriticalValue {
            sigma: frac(3 * d_m - base.d1 - base.d2, 1),
            d_m,
        })
        .collect())
}

fn is_critical(spec: &TripleSpec, sigma: &ExactRational) -> bool {
    sigma.is_integer()
        && critical_values(spec)
            .map(|walls| walls.iter().any(|w| w.sigma == *sigma))
            .unwrap_or(false)
}

/// Index of the chamber containing a non-critical σ: walls with
/// `d0 <= d_M` lie above σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberIndex {
    pub d0: i64,
}

pub fn chamber_d0(spec: &TripleSpec, sigma: &StabilityValue) -> Result<ChamberIndex> {
    if sigma.side == Side::Exact && is_critical(spec, &sigma.value) {
        return Err(TriplesError::OnWall {
            parameter: "sigma",
            value: sigma.value.clone(),
        });
    }
    let shift = match spec.rank {
        RankPair::TwoOne => spec.d1 + spec.d2,
        RankPair::OneTwo => -spec.d1 - spec.d2,
    };
    let d0 = sigma
        .floor_third(shift)
        .to_i64()
        .expect("chamber index fits i64")
        + 1;
    Ok(ChamberIndex { d0 })
}

/// One rational point strictly inside each chamber of `(σ_m, σ_M)`, in
/// ascending order: the midpoint between consecutive walls (taking `σ_m`
/// as the lower end of the first chamber).
pub fn chamber_representatives(spec: &TripleSpec) -> Result<Vec<ExactRational>> {
    let walls = critical_values(spec)?;
    let mut lower = spec.sigma_m();
    let mut reps = Vec::new();
    for w in walls {
        if w.sigma > lower {
            reps.push((&lower + &w.sigma) / frac(2, 1));
            lower = w.sigma;
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::int;

    fn spec(rank: RankPair, d1: i64, d2: i64) -> TripleSpec {
        TripleSpec::new(2, rank, d1, d2).unwrap()
    }

    fn walls(s: &TripleSpec) -> Vec<(i64, i64)> {
        critical_values(s)
            .unwrap()
            .into_iter()
            .map(|w| (w.sigma.to_integer().try_into().unwrap(), w.d_m))
            .collect()
    }

    #[test]
    fn intervals() {
        assert_eq!(
            sigma_interval(&spec(RankPair::TwoOne, 5, 0)),
            Some((frac(5, 2), int(10)))
        );
        assert_eq!(sigma_interval(&spec(RankPair::TwoOne, 0, 1)), None);
        assert_eq!(
            sigma_interval(&spec(RankPair::OneTwo, 3, 2)),
            Some((int(2), int(8)))
        );
    }

    #[test]
    fn walls_rank_two_one() {
        assert_eq!(
            walls(&spec(RankPair::TwoOne, 5, 0)),
            vec![(4, 3), (7, 4), (10, 5)]
        );
        let even = spec(RankPair::TwoOne, 4, 0);
        assert_eq!(walls(&even), vec![(2, 2), (5, 3), (8, 4)]);
        assert_eq!(critical_values(&even).unwrap()[0].sigma, even.sigma_m());
        assert_eq!(walls(&spec(RankPair::TwoOne, 1, 0)), vec![(2, 1)]);
        assert_eq!(
            critical_values(&spec(RankPair::TwoOne, 0, 1)),
            Err(TriplesError::EmptyFamily)
        );
    }

    #[test]
    fn walls_rank_one_two() {
        // σ_c = 3 d_M + d1 + d2 with -μ2 <= d_M <= d1 - d2.
        let s = spec(RankPair::OneTwo, 3, 2);
        assert_eq!(walls(&s), vec![(2, -1), (5, 0), (8, 1)]);
        let s = spec(RankPair::OneTwo, 2, 1);
        assert_eq!(walls(&s), vec![(3, 0), (6, 1)]);
    }

    #[test]
    fn chamber_indices() {
        let s = spec(RankPair::TwoOne, 5, 0);
        assert_eq!(
            chamber_d0(&s, &StabilityValue::exact(int(5))).unwrap().d0,
            4
        );
        assert_eq!(chamber_d0(&s, &StabilityValue::plus(int(7))).unwrap().d0, 5);
        assert_eq!(
            chamber_d0(&s, &StabilityValue::minus(int(7))).unwrap().d0,
            4
        );
        assert!(matches!(
            chamber_d0(&s, &StabilityValue::exact(int(7))),
            Err(TriplesError::OnWall {
                parameter: "sigma",
                ..
            })
        ));
        // 1 = 3·2 - 5 is outside the interval, hence not a wall.
        assert_eq!(
            chamber_d0(&s, &StabilityValue::exact(int(1))).unwrap().d0,
            3
        );
    }

    #[test]
    fn representatives() {
        let s = spec(RankPair::TwoOne, 5, 0);
        assert_eq!(
            chamber_representatives(&s).unwrap(),
            vec![frac(13, 4), frac(11, 2), frac(17, 2)]
        );
        let s = spec(RankPair::TwoOne, 4, 0);
        assert_eq!(
            chamber_representatives(&s).unwrap(),
            vec![frac(7, 2), frac(13, 2)]
        );
        let s = spec(RankPair::TwoOne, 2, 1);
        assert!(chamber_representatives(&s).unwrap().is_empty());
    }
}
