//! Weighted Grassmannians `wGr(2,5)` and weighted orthogonal Grassmannians
//! `wOGr(5,10)` as ambient spaces for graded-ring constructions.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! no floating point is used anywhere.

pub mod error;
pub mod matcher;
pub mod oracle;
pub mod orbifold_rr;
pub mod poly;
pub mod sections;
pub mod series;
pub mod wgrass25;
pub mod wogr510;

pub use error::{Error, Result};
pub use series::{HilbertSeries, LaurentPoly, Rat};
pub use matcher::{match_pipeline, search, MatchInput, MatchOptions, MatchQuery, MatchReport};
pub use orbifold_rr::{CY3Data, Canonical3Data, RrData};
pub use sections::{AmbientModel, Family, QuotientSingularity, SectionSpec};
pub use wgrass25::GrWeights;
pub use wogr510::OGrWeights;
