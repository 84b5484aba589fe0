//! Exact Hodge polynomials of moduli spaces of rank-2 holomorphic pairs,
//! rank-(2,1) and (1,2) holomorphic triples, and rank-2 odd-degree bundles
//! over a smooth projective curve of genus `g >= 2`.
//!
//! Values are bivariate Laurent polynomials in `u`, `v` with big-integer
//! coefficients ([`laurent::LaurentPoly`]); generating functions in an
//! auxiliary variable `x` are expanded as truncated series and read off
//! by coefficient extraction.

pub mod blocks;
pub mod cli;
pub mod laurent;
pub mod triples;
pub mod verify;

pub use blocks::Genus;
pub use laurent::{ExactRational, LaurentPoly, TruncatedSeries, UniPoly};
pub use triples::{HodgeResult, RankPair, Side, StabilityValue, TripleSpec};
