//! Ambient models (possibly coned), sections of given degrees, and the
//! invariants read off from their Hilbert series.

mod rr;
mod singular;

pub use rr::{rr_roundtrip, RrKind, RrReport};
pub use singular::{singularity_analysis, BasketEntry, QuotientSingularity, SingularityReport, StratumReport, VertexReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::GradedRing;
use crate::poly::MPoly;
use crate::series::{fmt_multiset, HilbertSeries, LaurentPoly, Rat};
use crate::wgrass25::{Chart, GrWeights, WeightsJson, PAIRS};
use crate::wogr510::{self, OGrWeights};

/// Default expansion depth for the regularity scan.
pub const DEFAULT_DEPTH: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gr(GrWeights),
    OGr(OGrWeights),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gr(_) => "wgr25",
            Family::OGr(_) => "wogr510",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Family::Gr(_) => 6,
            Family::OGr(_) => 10,
        }
    }

    pub fn coordinate_weights(&self) -> Vec<i64> {
        match self {
            Family::Gr(w) => w.plucker_weights(),
            Family::OGr(w) => w.coordinate_weights(),
        }
    }

    pub fn coordinate_names(&self) -> Vec<String> {
        match self {
            Family::Gr(_) => PAIRS.iter().map(|&(i, j)| crate::wgrass25::pair_label(i, j)).collect(),
            Family::OGr(_) => (0..16).map(wogr510::vertex_name).collect(),
        }
    }

    pub fn numerator(&self) -> Result<LaurentPoly> {
        match self {
            Family::Gr(w) => Ok(w.numerator()),
            Family::OGr(w) => w.numerator(),
        }
    }

    pub fn adjunction(&self) -> i64 {
        match self {
            Family::Gr(w) => w.numerology().adjunction,
            Family::OGr(w) => w.adjunction(),
        }
    }

    pub fn equations(&self) -> Vec<MPoly> {
        match self {
            Family::Gr(_) => crate::wgrass25::pfaffian_equations().to_vec(),
            Family::OGr(_) => wogr510::equations(),
        }
    }

    /// Torus multidegrees of the coordinates, for the oracle.
    pub fn multidegrees(&self) -> Vec<Vec<i64>> {
        match self {
            Family::Gr(_) => PAIRS
                .iter()
                .map(|&(i, j)| (0..5).map(|k| (k == i || k == j) as i64).collect())
                .collect(),
            Family::OGr(_) => (0..16)
                .map(|v| {
                    let e = wogr510::vertex_subset(v);
                    std::iter::once(1).chain((0..5).map(|k| ((e >> k) & 1) as i64)).collect()
                })
                .collect(),
        }
    }

    pub fn charts(&self) -> Vec<Chart> {
        match self {
            Family::Gr(w) => w.charts(),
            Family::OGr(w) => w.charts(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::Gr(w) => w.label(),
            Family::OGr(w) => w.label(),
        }
    }
}

/// A base family, optionally coned by free variables that enter no equation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ModelJson", into = "ModelJson")]
pub struct AmbientModel {
    pub base: Family,
    pub cone: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ModelJson {
    family: String,
    #[serde(flatten)]
    weights: WeightsJson,
    #[serde(default)]
    cone: Vec<i64>,
}

impl TryFrom<ModelJson> for AmbientModel {
    type Error = Error;
    fn try_from(j: ModelJson) -> Result<Self> {
        let base = match j.family.as_str() {
            "wgr25" => Family::Gr(GrWeights::try_from(j.weights)?),
            "wogr510" => Family::OGr(OGrWeights::try_from(j.weights)?),
            other => return Err(Error::Input(format!("unknown family {other:?}"))),
        };
        AmbientModel::new(base, j.cone)
    }
}

impl From<AmbientModel> for ModelJson {
    fn from(m: AmbientModel) -> Self {
        let weights = match m.base {
            Family::Gr(w) => WeightsJson::from(w),
            Family::OGr(w) => WeightsJson::from(w),
        };
        ModelJson {
            family: m.base.name().to_string(),
            weights,
            cone: m.cone,
        }
    }
}

impl AmbientModel {
    pub fn new(base: Family, mut cone: Vec<i64>) -> Result<Self> {
        if cone.iter().any(|&c| c <= 0) {
            return Err(Error::InvalidWeights("cone weights must be positive".into()));
        }
        cone.sort_unstable();
        Ok(Self { base, cone })
    }

    pub fn gr(w: GrWeights) -> Self {
        Self { base: Family::Gr(w), cone: vec![] }
    }

    pub fn ogr(w: OGrWeights) -> Self {
        Self { base: Family::OGr(w), cone: vec![] }
    }

    pub fn coned(mut self, weights: &[i64]) -> Self {
        self.cone.extend_from_slice(weights);
        self.cone.sort_unstable();
        self
    }

    pub fn dim(&self) -> usize {
        self.base.dim() + self.cone.len()
    }

    pub fn base_len(&self) -> usize {
        self.base.coordinate_weights().len()
    }

    /// Base coordinate weights followed by the cone weights.
    pub fn coordinate_weights(&self) -> Vec<i64> {
        let mut w = self.base.coordinate_weights();
        w.extend_from_slice(&self.cone);
        w
    }

    pub fn coordinate_names(&self) -> Vec<String> {
        let mut n = self.base.coordinate_names();
        n.extend((1..=self.cone.len()).map(|k| format!("y{k}")));
        n
    }

    pub fn ambient_series(&self) -> Result<HilbertSeries> {
        HilbertSeries::new(self.base.numerator()?, self.coordinate_weights())
    }

    /// Degree of the numerator; `K = O(adjunction - sum of weights)`.
    pub fn adjunction(&self) -> i64 {
        self.base.adjunction()
    }

    pub fn canonical(&self) -> i64 {
        self.adjunction() - self.coordinate_weights().iter().sum::<i64>()
    }

    pub fn graded_ring(&self) -> GradedRing {
        let base = GradedRing::new(self.base.coordinate_weights(), self.base.multidegrees(), self.base.equations())
            .expect("family equations are multihomogeneous");
        base.cone(&self.cone)
    }

    /// Base charts with the cone directions appended as extra local coordinates.
    pub fn charts(&self) -> Vec<Chart> {
        let nb = self.base_len();
        self.base
            .charts()
            .into_iter()
            .map(|mut c| {
                c.local_weights.extend_from_slice(&self.cone);
                c.local_coords.extend(nb..nb + self.cone.len());
                c
            })
            .collect()
    }

    pub fn label(&self) -> String {
        if self.cone.is_empty() {
            self.base.label()
        } else {
            format!("C[{}]{}", fmt_multiset(&self.cone), self.base.label())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SpecJson")]
pub struct SectionSpec {
    #[serde(rename = "sections")]
    pub degrees: Vec<i64>,
}

#[derive(Deserialize)]
struct SpecJson {
    sections: Vec<i64>,
}

impl TryFrom<SpecJson> for SectionSpec {
    type Error = Error;
    fn try_from(j: SpecJson) -> Result<Self> {
        SectionSpec::new(j.sections)
    }
}

impl SectionSpec {
    pub fn new(mut degrees: Vec<i64>) -> Result<Self> {
        if degrees.iter().any(|&d| d <= 0) {
            return Err(Error::Input("section degrees must be positive".into()));
        }
        degrees.sort_unstable();
        Ok(Self { degrees })
    }

    pub fn label(&self) -> String {
        self.degrees.iter().map(|d| format!("({d})")).collect()
    }
}

/// Dimension of the section, or an error if too many sections are asked for.
pub fn section_dim(model: &AmbientModel, spec: &SectionSpec) -> Result<usize> {
    let n = model.dim();
    if spec.degrees.len() >= n {
        return Err(Error::Input(format!(
            "{} sections leave no positive-dimensional variety in dimension {n}",
            spec.degrees.len()
        )));
    }
    Ok(n - spec.degrees.len())
}

/// Ambient series times `prod (1 - t^delta)`, checked non-negative up to `depth`.
pub fn section_series(model: &AmbientModel, spec: &SectionSpec, depth: usize) -> Result<HilbertSeries> {
    section_dim(model, spec)?;
    let h = model.ambient_series()?.cut(&spec.degrees);
    if let Some((n, c)) = h.first_invalid_coefficient(depth)? {
        return Err(Error::NotRegular {
            degree: n,
            value: crate::series::fmt_rat(&c),
        });
    }
    Ok(h)
}

/// Canonical degree of the section by adjunction.
pub fn section_canonical(model: &AmbientModel, spec: &SectionSpec) -> i64 {
    model.canonical() + spec.degrees.iter().sum::<i64>()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasilinearEmbedding {
    pub weights: Vec<i64>,
    pub quasilinear: bool,
    pub leftovers: Vec<i64>,
}

/// Uses each section to eliminate one coordinate of the same weight, if any.
pub fn quasilinear_embed(model: &AmbientModel, spec: &SectionSpec) -> QuasilinearEmbedding {
    let mut weights = model.coordinate_weights();
    weights.sort_unstable();
    let mut leftovers = Vec::new();
    for &d in &spec.degrees {
        match weights.iter().position(|&w| w == d) {
            Some(i) => {
                weights.remove(i);
            }
            None => leftovers.push(d),
        }
    }
    QuasilinearEmbedding {
        weights,
        quasilinear: leftovers.is_empty(),
        leftovers,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    #[serde(with = "crate::series::serde_rat")]
    pub a_top: Rat,
    #[serde(with = "crate::series::serde_rat")]
    pub h0_a: Rat,
}

/// `A^dim` and `h^0(A)` of a polarised variety with Hilbert series `H`.
pub fn invariants(h: &HilbertSeries, dim: usize) -> Result<Invariants> {
    Ok(Invariants {
        a_top: h.intersection_number(dim as i64)?,
        h0_a: h.coefficient(1)?,
    })
}

/// `dim` in degree `m` of the model's coordinate ring, by linear algebra.
pub fn graded_dimension_oracle(model: &AmbientModel, m: i64) -> Result<u64> {
    model.graded_ring().dimension(m)
}

#[cfg(test)]
mod tests;
