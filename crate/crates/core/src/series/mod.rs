//! Exact rational, Laurent-polynomial and rational Hilbert-series arithmetic.

mod hilbert;
mod laurent;
mod rat;

pub use hilbert::{denominator_poly, fmt_multiset, HilbertSeries};
pub use laurent::{LaurentPoly, PolyTerm};
pub use rat::{binom3, fmt_rat, int, is_nonneg_integer, parse_rat, rat, serde_rat, serde_rat_vec, to_i64, Rat};
