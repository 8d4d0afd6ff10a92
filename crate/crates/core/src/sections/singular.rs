//! Orbifold points of a general section, located on the fixed strata of the
//! ambient weighted projective space.
//!
//! For each `r > 1` the stratum is the locus where only coordinates of weight
//! divisible by `r` are nonzero. Its components are found from the restricted
//! equations, their Hilbert series from the graded-dimension oracle, and the
//! number of section points on a component of dimension `m` from
//! `N = r * deg(component) * prod(active degrees)`. The transverse type comes
//! from the chart at a coordinate point of the component.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{AmbientModel, SectionSpec};
use crate::error::{Error, Result};
use crate::oracle::GradedRing;
use crate::series::{int, is_nonneg_integer, rat, HilbertSeries, LaurentPoly, Rat};
use crate::wgrass25::Chart;

/// `1/r(a_1, ..., a_n)` with the `a_i` reduced mod `r` and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientSingularity {
    pub r: i64,
    pub weights: Vec<i64>,
}

impl QuotientSingularity {
    pub fn new(r: i64, weights: &[i64]) -> Result<Self> {
        if r < 2 {
            return Err(Error::Input(format!("quotient order {r} must be at least 2")));
        }
        let mut w: Vec<i64> = weights.iter().map(|a| a.rem_euclid(r)).collect();
        w.sort_unstable();
        if w.iter().fold(r, |g, a| g.gcd(a)) != 1 {
            return Err(Error::Input(format!("1/{r}{w:?} is not an isolated effective action")));
        }
        Ok(Self { r, weights: w })
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|a| a.to_string()).collect();
        write!(f, "1/{}({})", self.r, w.join(","))
    }
}

impl FromStr for QuotientSingularity {
    type Err = Error;
    /// Parses `1/5(3,3,4)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected 1/r(a,b,...), got {s:?}"));
        let rest = s.trim().strip_prefix("1/").ok_or_else(bad)?;
        let (r, ws) = rest.split_once('(').ok_or_else(bad)?;
        let ws = ws.strip_suffix(')').ok_or_else(bad)?;
        let r: i64 = r.trim().parse().map_err(|_| bad())?;
        let ws: Vec<i64> = ws
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        Self::new(r, &ws)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasketEntry {
    #[serde(flatten)]
    pub singularity: QuotientSingularity,
    pub count: u64,
}

/// One component of one fixed stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub r: i64,
    pub coordinates: Vec<String>,
    pub dim: i64,
    pub active_sections: Vec<i64>,
    pub points: u64,
    pub singularity: Option<QuotientSingularity>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexReport {
    pub vertex: String,
    pub r: i64,
    pub missed: bool,
    /// Residual local weights mod `r` when the section passes through the point.
    pub residual: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub basket: Vec<BasketEntry>,
    pub strata: Vec<StratumReport>,
    pub vertices: Vec<VertexReport>,
    pub diagnostics: Vec<String>,
}

impl SingularityReport {
    pub fn basket_map(&self) -> BTreeMap<QuotientSingularity, u64> {
        self.basket.iter().map(|b| (b.singularity.clone(), b.count)).collect()
    }
}

/// Removes one local weight per section: active sections take a weight
/// divisible by `r`, the others a weight congruent to their degree, smallest
/// raw weight first. Returns the residues left over, sorted.
fn eliminate(local: &[i64], r: i64, active: &[i64], others: &[i64]) -> std::result::Result<Vec<i64>, i64> {
    let mut pool: Vec<i64> = local.to_vec();
    pool.sort_unstable();
    for &d in active.iter().chain(others) {
        let target = d.rem_euclid(r);
        match pool.iter().position(|a| a.rem_euclid(r) == target) {
            Some(i) => {
                pool.remove(i);
            }
            None => return Err(d),
        }
    }
    let mut rest: Vec<i64> = pool.iter().map(|a| a.rem_euclid(r)).collect();
    rest.sort_unstable();
    Ok(rest)
}

fn divisors_above_one(weights: &[i64]) -> Vec<i64> {
    let mut rs: Vec<i64> = weights
        .iter()
        .flat_map(|&w| (2..=w).filter(move |r| w % r == 0))
        .collect();
    rs.sort_unstable();
    rs.dedup();
    rs.reverse();
    rs
}

/// Maximal subsets of `0..n` containing the support of no generator.
fn monomial_components(n: usize, generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let gens: Vec<u32> = generators.iter().map(|g| g.iter().fold(0, |m, &i| m | (1 << i))).collect();
    let free: Vec<u32> = (0..1u32 << n).filter(|&s| gens.iter().all(|&g| s & g != g)).collect();
    let mut out: Vec<Vec<usize>> = free
        .iter()
        .filter(|&&s| !free.iter().any(|&t| t != s && t & s == s))
        .map(|&s| (0..n).filter(|i| s & (1 << i) != 0).collect())
        .collect();
    out.sort();
    out
}

/// Hilbert series of a graded ring from its Hilbert function, by clearing the
/// denominator and checking the numerator has stabilised.
pub fn oracle_series(ring: &GradedRing) -> Result<HilbertSeries> {
    let total: i64 = ring.weights.iter().sum();
    let margin = ring.weights.iter().copied().max().unwrap_or(1);
    let top = total + margin;
    let hf = ring.hilbert_function(top)?;
    let h = LaurentPoly::from_ints(hf.iter().enumerate().map(|(k, &v)| (k as i64, v as i64)));
    let num = (&crate::series::denominator_poly(&ring.weights) * &h).truncate(top);
    if num.max_exp().is_some_and(|e| e > total) {
        return Err(Error::Verification(format!(
            "stratum series did not stabilise by degree {total}"
        )));
    }
    Ok(HilbertSeries::new(num, ring.weights.clone())?.canonical())
}

pub fn singularity_analysis(model: &AmbientModel, spec: &SectionSpec) -> Result<SingularityReport> {
    super::section_dim(model, spec)?;
    let weights = model.coordinate_weights();
    let names = model.coordinate_names();
    let nb = model.base_len();
    let ring = model.graded_ring();
    let charts: Vec<Chart> = model.charts();
    let mut report = SingularityReport::default();
    // (r, coordinate set, count) of points already found on deeper strata.
    let mut found: Vec<(i64, Vec<usize>, u64)> = Vec::new();
    let mut basket: BTreeMap<QuotientSingularity, u64> = BTreeMap::new();

    for r in divisors_above_one(&weights) {
        let idx: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] % r == 0).collect();
        let keep: Vec<bool> = (0..weights.len()).map(|i| weights[i] % r == 0).collect();
        let sub = ring.restrict(&keep);
        let comps: Vec<(Vec<usize>, HilbertSeries)> = if sub.is_squarefree_monomial() {
            let gens: Vec<Vec<usize>> = sub
                .equations
                .iter()
                .map(|e| {
                    let (m, _) = e.terms().next().unwrap();
                    (0..m.len()).filter(|&i| m[i] > 0).collect()
                })
                .collect();
            monomial_components(idx.len(), &gens)
                .into_iter()
                .map(|c| {
                    let ws: Vec<i64> = c.iter().map(|&i| sub.weights[i]).collect();
                    (c.iter().map(|&i| idx[i]).collect(), HilbertSeries::free(&ws).unwrap())
                })
                .collect()
        } else {
            vec![(idx.clone(), oracle_series(&sub)?)]
        };

        for (comp, h) in comps {
            let dim = h.pole_order() - 1;
            if dim < 0 {
                continue;
            }
            let coords: Vec<String> = comp.iter().map(|&i| names[i].clone()).collect();
            let mut active = Vec::new();
            let mut others = Vec::new();
            for &d in &spec.degrees {
                if h.coefficient(d as usize)? > Rat::zero() {
                    active.push(d);
                } else {
                    others.push(d);
                }
            }
            let m = active.len() as i64;
            let mut entry = StratumReport {
                r,
                coordinates: coords.clone(),
                dim,
                active_sections: active.clone(),
                points: 0,
                singularity: None,
                note: String::new(),
            };
            if m > dim {
                entry.note = "section misses this stratum".into();
                report.strata.push(entry);
                continue;
            }
            if m < dim {
                entry.note = format!("section meets the stratum in dimension {}", dim - m);
                report.diagnostics.push(format!(
                    "non-isolated singular locus: 1/{r} stratum {{{}}} cut in dimension {}",
                    coords.join(","),
                    dim - m
                ));
                report.strata.push(entry);
                continue;
            }
            let mut deg = h.intersection_number(dim)? * active.iter().fold(Rat::one(), |acc, &d| acc * int(d));
            for (r2, c2, n2) in &found {
                if r2 % r == 0 && c2.iter().all(|i| comp.contains(i)) {
                    deg -= rat(*n2 as i64, *r2);
                }
            }
            let n = deg * int(r);
            if !is_nonneg_integer(&n) {
                report.diagnostics.push(format!(
                    "1/{r} stratum {{{}}}: point count {} is not a non-negative integer",
                    coords.join(","),
                    crate::series::fmt_rat(&n)
                ));
                report.strata.push(entry);
                continue;
            }
            let count = crate::series::to_i64(&n).unwrap() as u64;
            entry.points = count;
            if count == 0 {
                entry.note = "no points".into();
                report.strata.push(entry);
                continue;
            }
            let Some(&v) = comp.iter().find(|&&i| i < nb) else {
                report
                    .diagnostics
                    .push(format!("1/{r} stratum {{{}}} meets only the cone vertex", coords.join(",")));
                report.strata.push(entry);
                continue;
            };
            let chart = &charts[v];
            match eliminate(&chart.local_weights, r, &active, &others) {
                Ok(rest) if rest.iter().all(|&a| a != 0) => match QuotientSingularity::new(r, &rest) {
                    Ok(q) => {
                        entry.note = format!("transverse type from chart {}", chart.label);
                        *basket.entry(q.clone()).or_default() += count;
                        entry.singularity = Some(q);
                        found.push((r, comp.clone(), count));
                    }
                    Err(e) => report.diagnostics.push(format!("1/{r} stratum {{{}}}: {e}", coords.join(","))),
                },
                Ok(rest) => report.diagnostics.push(format!(
                    "1/{r} stratum {{{}}}: residual weights {rest:?} at chart {} are not isolated",
                    coords.join(","),
                    chart.label
                )),
                Err(d) => report.diagnostics.push(format!(
                    "non-quasismooth: section of degree {d} cannot eliminate a local coordinate at chart {} (1/{r} stratum)",
                    chart.label
                )),
            }
            report.strata.push(entry);
        }
    }

    for c in charts.iter().filter(|c| c.order > 1) {
        let r = c.order;
        let missed = spec.degrees.iter().any(|d| d % r == 0);
        let residual = if missed {
            None
        } else {
            match eliminate(&c.local_weights, r, &[], &spec.degrees) {
                Ok(rest) => Some(rest),
                Err(d) => {
                    report.diagnostics.push(format!(
                        "non-quasismooth: section of degree {d} neither misses nor eliminates a coordinate at chart {}",
                        c.label
                    ));
                    None
                }
            }
        };
        report.vertices.push(VertexReport {
            vertex: c.label.clone(),
            r,
            missed,
            residual,
        });
    }
    for (j, &c) in model.cone.iter().enumerate() {
        if !spec.degrees.iter().any(|d| d % c == 0) {
            report
                .diagnostics
                .push(format!("section passes through the cone vertex {}", names[nb + j]));
        }
    }

    report.basket = basket
        .into_iter()
        .map(|(singularity, count)| BasketEntry { singularity, count })
        .collect();
    Ok(report)
}
