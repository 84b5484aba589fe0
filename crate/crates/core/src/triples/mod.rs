//! Moduli of σ-stable triples of rank (2,1) and (1,2), pairs, and rank-2
//! bundles of odd degree.
//!
//! Each Hodge polynomial is computed from a closed generating-function
//! formula, and where possible also by an independent route (summing the
//! wall-crossing contributions, restricting triples to pairs, dividing
//! out the small-σ projective bundle) so the routes can be compared.

mod bundles;
mod chamber;
mod closed;
mod flip;
mod pairs;
mod residue;
mod stability;

pub use bundles::{hodge_bundles_odd, hodge_bundles_via_triples};
pub use chamber::{
    chamber_d0, chamber_representatives, critical_values, sigma_interval, ChamberIndex,
    CriticalValue,
};
pub use closed::{generating_coefficient, hodge_triples_closed, hodge_triples_sum};
pub use flip::{flip_difference, flip_difference_series};
pub use pairs::{
    hodge_pairs, pair_chamber_representatives, pair_critical_values,
    poincare_pairs_fixed_det_thaddeus, tau_floor,
};
pub use residue::{residue_extract_check, residue_side, series_side};
pub use stability::{Side, StabilityValue};

use std::fmt;

use thiserror::Error;

use crate::blocks::{BlockError, Genus};
use crate::laurent::{frac, rational_string, ExactRational, LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriplesError {
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("{parameter}={value} is a critical value; use {value}+ or {value}-", value = rational_string(.value))]
    OnWall {
        parameter: &'static str,
        value: ExactRational,
    },
    #[error("moduli empty: mu1 < mu2")]
    EmptyFamily,
    #[error("d_M={d_m} gives the wall at sigma_m, which has no flip formula")]
    WallAtSigmaM { d_m: i64 },
    #[error("d_M={d_m} is beyond the last critical value")]
    NotCritical { d_m: i64 },
    #[error("operation needs rank (2,1) triples, got {0}")]
    RankMismatch(RankPair),
    #[error("degree {0} is even; only odd degree is supported")]
    EvenDegree(i64),
    #[error("poles a, b, c must be pairwise distinct and nonzero")]
    DegeneratePoles,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl TriplesError {
    /// True for failures that indicate a defect rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            TriplesError::Inconsistent(_)
                | TriplesError::Laurent(LaurentError::NotDivisible)
                | TriplesError::Laurent(LaurentError::DivisionByZero)
                | TriplesError::Laurent(LaurentError::OrderExceeded { .. })
        )
    }
}

pub type Result<T, E = TriplesError> = std::result::Result<T, E>;

/// Ranks `(n1, n2)` of a triple `E2 -> E1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankPair {
    TwoOne,
    OneTwo,
}

impl RankPair {
    pub fn ranks(self) -> (u32, u32) {
        match self {
            RankPair::TwoOne => (2, 1),
            RankPair::OneTwo => (1, 2),
        }
    }
}

impl fmt::Display for RankPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.ranks();
        write!(f, "({a},{b})")
    }
}

impl std::str::FromStr for RankPair {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().trim_start_matches('(').trim_end_matches(')') {
            "2,1" | "21" => Ok(RankPair::TwoOne),
            "1,2" | "12" => Ok(RankPair::OneTwo),
            other => Err(format!("unknown rank pair {other:?}; expected 2,1 or 1,2")),
        }
    }
}

/// Discrete invariants of a family of triple moduli spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleSpec {
    pub g: Genus,
    pub rank: RankPair,
    pub d1: i64,
    pub d2: i64,
}

impl TripleSpec {
    pub fn new(g: i64, rank: RankPair, d1: i64, d2: i64) -> Result<Self> {
        Ok(TripleSpec {
            g: Genus::new(g)?,
            rank,
            d1,
            d2,
        })
    }

    pub fn two_one(g: Genus, d1: i64, d2: i64) -> Self {
        TripleSpec {
            g,
            rank: RankPair::TwoOne,
            d1,
            d2,
        }
    }

    pub fn mu1(&self) -> ExactRational {
        frac(self.d1, self.rank.ranks().0 as i64)
    }

    pub fn mu2(&self) -> ExactRational {
        frac(self.d2, self.rank.ranks().1 as i64)
    }

    pub fn sigma_m(&self) -> ExactRational {
        self.mu1() - self.mu2()
    }

    pub fn sigma_big_m(&self) -> ExactRational {
        self.sigma_m() * frac(4, 1)
    }

    /// The rank-(2,1) family isomorphic to this one: identity for (2,1),
    /// `(d1, d2) -> (-d2, -d1)` for (1,2).
    pub fn as_two_one(&self) -> TripleSpec {
        match self.rank {
            RankPair::TwoOne => *self,
            RankPair::OneTwo => TripleSpec::two_one(self.g, -self.d2, -self.d1),
        }
    }

    /// Complex dimension of the stable locus.
    pub fn complex_dim(&self) -> i64 {
        let g = self.g.as_i64();
        match self.rank {
            RankPair::TwoOne => 3 * g - 2 + self.d1 - 2 * self.d2,
            RankPair::OneTwo => 3 * g - 2 + 2 * self.d1 - self.d2,
        }
    }
}

/// A Hodge polynomial together with the complex dimension of its space;
/// `dim` is `None` for the empty space, whose polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeResult {
    pub poly: LaurentPoly,
    pub dim: Option<u32>,
}

impl HodgeResult {
    pub fn empty() -> Self {
        HodgeResult {
            poly: LaurentPoly::zero(),
            dim: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim.is_none()
    }

    /// Wraps the value of a nonempty space, rejecting negative exponents.
    pub(crate) fn of_space(poly: LaurentPoly, dim: i64) -> Result<Self> {
        if poly.is_zero() {
            return Err(TriplesError::Inconsistent(
                "closed formula vanished on a nonempty chamber".into(),
            ));
        }
        if !poly.is_polynomial() {
            return Err(TriplesError::Inconsistent(format!(
                "Hodge polynomial has negative exponents: {poly}"
            )));
        }
        let dim = u32::try_from(dim)
            .map_err(|_| TriplesError::Inconsistent(format!("negative dimension {dim}")))?;
        Ok(HodgeResult {
            poly,
            dim: Some(dim),
        })
    }
}
