//! Recognising ambient models from target Hilbert data: generator inference,
//! exhaustive weight search over both families, and a divisibility filter
//! for required quotient singularities.

mod pipeline;
mod search;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbifold_rr::{PeriodicTable, RrData};
use crate::sections::{AmbientModel, QuotientSingularity};
use crate::series::{to_i64, HilbertSeries};

pub use pipeline::{match_pipeline, Candidate, GeneratorSet, MatchInput, MatchOptions, MatchReport, Status, REPORT_SCHEMA};
pub use search::{search, search_numerator, Hit, HitKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Wgr25,
    Wogr510,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 2] = [FamilyKind::Wgr25, FamilyKind::Wogr510];
}

/// Box searched for weight data: `|2 w_i| <= max_doubled_weight`, `|u| <= max_u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightBounds {
    pub max_doubled_weight: i64,
    pub max_u: i64,
}

impl Default for WeightBounds {
    fn default() -> Self {
        Self {
            max_doubled_weight: 8,
            max_u: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchQuery {
    pub target: HilbertSeries,
    /// Generator degrees to use as given; inferred when absent.
    #[serde(default)]
    pub generator_degrees: Option<Vec<i64>>,
    #[serde(default = "all_families")]
    pub families: Vec<FamilyKind>,
    #[serde(default)]
    pub bounds: WeightBounds,
    #[serde(default)]
    pub required_basket: Vec<QuotientSingularity>,
    #[serde(default)]
    pub canonical_degree: Option<i64>,
    /// Largest degree tried when adding one generator and one relation.
    #[serde(default = "default_augment")]
    pub max_augment: i64,
    #[serde(default = "default_depth")]
    pub depth: usize,
}

fn all_families() -> Vec<FamilyKind> {
    FamilyKind::ALL.to_vec()
}

fn default_augment() -> i64 {
    6
}

fn default_depth() -> usize {
    crate::sections::DEFAULT_DEPTH
}

impl MatchQuery {
    pub fn new(target: HilbertSeries) -> Self {
        Self {
            target,
            generator_degrees: None,
            families: all_families(),
            bounds: WeightBounds::default(),
            required_basket: Vec::new(),
            canonical_degree: None,
            max_augment: default_augment(),
            depth: default_depth(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let b = self.bounds;
        if b.max_doubled_weight < 1 || b.max_u < 0 || b.max_doubled_weight > 64 || b.max_u > 64 {
            return Err(Error::Input(format!("weight bounds {b:?} out of range")));
        }
        if self.depth == 0 {
            return Err(Error::Input("depth must be at least 1".into()));
        }
        if let Some(g) = &self.generator_degrees {
            if g.is_empty() || g.iter().any(|&a| a <= 0) {
                return Err(Error::Input("generator degrees must be positive".into()));
            }
        }
        Ok(())
    }
}

/// Greedy generator inference: at the least degree `k` with a positive
/// coefficient `c`, multiply by `(1 - t^k)^c`; stop at the first negative
/// coefficient or at `depth`.
pub fn infer_generators(h: &HilbertSeries, depth: usize) -> Result<Vec<i64>> {
    let mut c = h.expand(depth)?;
    let mut gens = Vec::new();
    for k in 1..=depth {
        if c[k] < crate::Rat::zero() {
            break;
        }
        if c[k].is_zero() {
            continue;
        }
        let count = to_i64(&c[k])
            .filter(|_| c[k].is_integer())
            .ok_or_else(|| Error::Input(format!("coefficient of t^{k} is not an integer")))?;
        for _ in 0..count {
            for n in (k..=depth).rev() {
                let prev = c[n - k].clone();
                c[n] -= prev;
            }
            gens.push(k as i64);
        }
    }
    Ok(gens)
}

/// Adds generators of degree divisible by `r`, one per required point of
/// index `r`.
pub fn force_divisibility(gens: &[i64], basket: &[QuotientSingularity]) -> Vec<i64> {
    let mut out = gens.to_vec();
    for (r, points) in basket_orders(basket).into_iter().rev() {
        let have = out.iter().filter(|&&a| a % r == 0).count();
        out.extend(std::iter::repeat_n(r, points.saturating_sub(have)));
    }
    out.sort_unstable();
    out
}

/// Divisibility forcing, then for each point `1/r(a_1..a_k)` enough
/// generators in each residue class `a_i mod r`. A missing class is filled by
/// its least degree `>= 2`: degree 1 is fixed by `p_1`, while a higher degree
/// may carry a new generator together with a new relation.
pub fn force_residues(gens: &[i64], basket: &[QuotientSingularity]) -> Vec<i64> {
    let mut out = force_divisibility(gens, basket);
    let mut sorted = basket.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted.dedup();
    for p in &sorted {
        let r = p.r;
        let mut need: BTreeMap<i64, usize> = BTreeMap::new();
        for &a in &p.weights {
            *need.entry(a).or_default() += 1;
        }
        for (a, n) in need {
            let have = out.iter().filter(|&&d| d % r == a).count();
            let fill = (2..).find(|d| d % r == a).expect("residue class is nonempty");
            out.extend(std::iter::repeat_n(fill, n.saturating_sub(have)));
        }
    }
    out.sort_unstable();
    out
}

/// Number of required points of each index.
fn basket_orders(basket: &[QuotientSingularity]) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for p in basket {
        *m.entry(p.r).or_default() += 1;
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterVerdict {
    pub passed: bool,
    pub reason: Option<String>,
}

/// Necessary condition for a chart of order divisible by `r`: some ambient
/// coordinate weight is divisible by `r`.
pub fn singularity_filter(model: &AmbientModel, required: &[QuotientSingularity]) -> FilterVerdict {
    let mut weights = model.coordinate_weights();
    weights.sort_unstable();
    for &r in basket_orders(required).keys() {
        if !weights.iter().any(|&a| a % r == 0) {
            return FilterVerdict {
                passed: false,
                reason: Some(format!(
                    "no coordinate weight divisible by {r} in {{{}}}",
                    superscript_multiset(&weights)
                )),
            };
        }
    }
    FilterVerdict {
        passed: true,
        reason: None,
    }
}

/// `1,2³,3⁶,4`.
pub fn superscript_multiset(weights: &[i64]) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &a in weights {
        *counts.entry(a).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(a, n)| {
            if n == 1 {
                a.to_string()
            } else {
                let exp: String = n.to_string().bytes().map(|b| SUP[(b - b'0') as usize]).collect();
                format!("{a}{exp}")
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Singularities implied by Riemann-Roch input, where they can be named:
/// `1/2(1,1,1)` points of a canonical 3-fold and the built-in CY tables.
pub fn basket_from_rr(data: &RrData) -> Vec<QuotientSingularity> {
    let q = |s: &str| s.parse::<QuotientSingularity>().expect("valid literal");
    match data {
        RrData::Canonical3(d) => vec![q("1/2(1,1,1)"); d.half_points as usize],
        RrData::CalabiYau3(d) => {
            let mut out = Vec::new();
            for t in &d.points {
                if *t == PeriodicTable::quotient_5_334() {
                    out.push(q("1/5(3,3,4)"));
                } else if *t == PeriodicTable::pair_3_111_222() {
                    out.push(q("1/3(1,1,1)"));
                    out.push(q("1/3(2,2,2)"));
                }
            }
            out.sort();
            out
        }
    }
}

/// `K_V` of a target polarised by `K` (canonical 3-folds) or trivial (CY).
pub fn canonical_from_rr(data: &RrData) -> i64 {
    match data {
        RrData::Canonical3(_) => 1,
        RrData::CalabiYau3(_) => 0,
    }
}

/// Numerator of `h` over the given generator degrees, if it is a polynomial
/// with integer coefficients and constant term 1.
pub fn numerator_over(h: &HilbertSeries, gens: &[i64]) -> Option<crate::LaurentPoly> {
    let n = h.hilbert_numerator(gens).ok()?;
    let integral = n.terms().all(|(_, c)| c.is_integer());
    (integral && n.min_exp() == Some(0) && n.coeff(0) == crate::Rat::one()).then_some(n)
}
