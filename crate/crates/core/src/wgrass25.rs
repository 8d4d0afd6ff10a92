//! The weighted Grassmannian `wGr(2,5)` in its Plücker embedding.
//!
//! Weights are stored doubled and in the normal form with the overall weight
//! absorbed, so `wt x_ij = w_i + w_j` with half-integral `w_i`.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::series::{binom3, int, rat, HilbertSeries, LaurentPoly, Rat};

/// Index pairs `(i, j)`, `i < j`, in the coordinate order `x12, x13, ..., x45`.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Position of `x_ij` in [`PAIRS`]; indices are 0-based and unordered.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == (a, b)).expect("distinct indices below 5")
}

pub fn pair_label(i: usize, j: usize) -> String {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    format!("x{}{}", a + 1, b + 1)
}

/// Wire form of doubled weight data: `{"w2": [...], "u2": ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsJson {
    pub w2: Vec<i64>,
    #[serde(default)]
    pub u2: i64,
}

impl WeightsJson {
    pub fn w2_array(&self) -> Result<[i64; 5]> {
        self.w2
            .clone()
            .try_into()
            .map_err(|v: Vec<i64>| Error::InvalidWeights(format!("expected 5 weights, got {}", v.len())))
    }
}

/// Weights of a `wGr(2,5)`: five half-integers stored as `2 w_i`, overall weight absorbed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightsJson", into = "WeightsJson")]
pub struct GrWeights {
    w2: [i64; 5],
}

impl GrWeights {
    /// Accepts doubled weights `2 w_i` and a doubled overall weight `2u`,
    /// normalising to `u = 0` and sorting.
    pub fn from_doubled(w2: [i64; 5], u2: i64) -> Result<Self> {
        if u2.is_odd() {
            return Err(Error::InvalidWeights(format!(
                "doubled overall weight {u2} must be even (u is an integer)"
            )));
        }
        let mut w = w2.map(|x| x + u2 / 2);
        w.sort_unstable();
        let parity = w[0].rem_euclid(2);
        if w.iter().any(|x| x.rem_euclid(2) != parity) {
            return Err(Error::InvalidWeights(format!(
                "doubled weights {w:?} must share one parity"
            )));
        }
        for &(i, j) in &PAIRS {
            if w[i] + w[j] <= 0 {
                return Err(Error::InvalidWeights(format!(
                    "wt x{}{} = {} is not positive",
                    i + 1,
                    j + 1,
                    rat(w[i] + w[j], 2)
                )));
            }
        }
        Ok(Self { w2: w })
    }

    /// From rational weights `w_i` and an integer overall weight `u`.
    pub fn new(w: &[Rat; 5], u: i64) -> Result<Self> {
        let mut w2 = [0; 5];
        for (slot, q) in w2.iter_mut().zip(w) {
            let d = q * int(2);
            if !d.is_integer() {
                return Err(Error::InvalidWeights(format!("weight {q} is not a half-integer")));
            }
            *slot = crate::series::to_i64(&d).ok_or_else(|| Error::InvalidWeights("weight too large".into()))?;
        }
        Self::from_doubled(w2, 2 * u)
    }

    pub fn doubled(&self) -> [i64; 5] {
        self.w2
    }

    pub fn weights(&self) -> [Rat; 5] {
        self.w2.map(|x| rat(x, 2))
    }

    /// `wt x_ij` in [`PAIRS`] order.
    pub fn plucker_weights(&self) -> Vec<i64> {
        PAIRS.iter().map(|&(i, j)| (self.w2[i] + self.w2[j]) / 2).collect()
    }

    /// `2d` where `d = sum w_i` in normal form.
    fn d2(&self) -> i64 {
        self.w2.iter().sum()
    }

    pub fn numerology(&self) -> GrNumerology {
        let d2 = self.d2();
        let pfaffian_degrees = self.w2.map(|w| (d2 - w) / 2);
        let syzygy_degrees = self.w2.map(|w| (d2 + w) / 2);
        GrNumerology {
            d: rat(d2, 2),
            pfaffian_degrees,
            syzygy_degrees,
            adjunction: d2,
            canonical: -d2,
        }
    }

    /// `1 - sum t^{d-w_i} + sum t^{d+w_i} - t^{2d}`.
    pub fn numerator(&self) -> LaurentPoly {
        let n = self.numerology();
        let mut p = LaurentPoly::one();
        for k in 0..5 {
            p = &p - &LaurentPoly::t(n.pfaffian_degrees[k]);
            p = &p + &LaurentPoly::t(n.syzygy_degrees[k]);
        }
        &p - &LaurentPoly::t(n.adjunction)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.numerator(), self.plucker_weights()).expect("weights are positive")
    }

    pub fn degree(&self) -> Rat {
        let n = self.numerology();
        let mut top = binom3(n.adjunction);
        for k in 0..5 {
            top += binom3(n.pfaffian_degrees[k]) - binom3(n.syzygy_degrees[k]);
        }
        let prod: i64 = self.plucker_weights().iter().product();
        rat(top, prod)
    }

    /// The 10 standard charts `x_ij != 0`, each `C^6 / (Z / wt x_ij)`.
    pub fn charts(&self) -> Vec<Chart> {
        let wt = self.plucker_weights();
        PAIRS
            .iter()
            .enumerate()
            .map(|(v, &(i, j))| {
                let others: Vec<usize> = (0..5).filter(|&k| k != i && k != j).collect();
                let local_coords: Vec<usize> = others
                    .iter()
                    .map(|&k| pair_index(i, k))
                    .chain(others.iter().map(|&k| pair_index(j, k)))
                    .collect();
                Chart {
                    label: pair_label(i, j),
                    vertex: v,
                    order: wt[v],
                    local_weights: local_coords.iter().map(|&c| wt[c]).collect(),
                    local_coords,
                }
            })
            .collect()
    }

    pub fn is_well_formed(&self) -> WellFormedness {
        charts_well_formed(&self.charts())
    }

    /// The symmetric 5x5 matrix of entry degrees `w_i + w_j` (diagonal zero).
    pub fn degree_matrix(&self) -> [[i64; 5]; 5] {
        let mut d = [[0; 5]; 5];
        for &(i, j) in &PAIRS {
            let v = (self.w2[i] + self.w2[j]) / 2;
            d[i][j] = v;
            d[j][i] = v;
        }
        d
    }

    pub fn label(&self) -> String {
        let ws: Vec<String> = self.weights().iter().map(crate::series::fmt_rat).collect();
        format!("wGr({})", ws.join(","))
    }
}

impl TryFrom<WeightsJson> for GrWeights {
    type Error = Error;
    fn try_from(j: WeightsJson) -> Result<Self> {
        Self::from_doubled(j.w2_array()?, j.u2)
    }
}

impl From<GrWeights> for WeightsJson {
    fn from(w: GrWeights) -> Self {
        WeightsJson { w2: w.w2.to_vec(), u2: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrNumerology {
    #[serde(with = "crate::series::serde_rat")]
    pub d: Rat,
    pub pfaffian_degrees: [i64; 5],
    pub syzygy_degrees: [i64; 5],
    pub adjunction: i64,
    pub canonical: i64,
}

/// A standard affine chart: a cyclic quotient `C^n / mu_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chart {
    pub label: String,
    /// Index of the coordinate that is inverted on this chart.
    pub vertex: usize,
    pub order: i64,
    /// Raw integer weights of the local coordinates; reduce mod `order` when analysing.
    pub local_weights: Vec<i64>,
    /// Ambient coordinate each local coordinate comes from.
    pub local_coords: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellFormedness {
    pub well_formed: bool,
    pub witness: Option<String>,
}

fn gcd_all(r: i64, ws: impl Iterator<Item = i64>) -> i64 {
    ws.fold(r, |g, w| g.gcd(&w))
}

/// Effective action and no quasi-reflections on every chart.
pub fn charts_well_formed(charts: &[Chart]) -> WellFormedness {
    for c in charts {
        if c.order == 1 {
            continue;
        }
        let g = gcd_all(c.order, c.local_weights.iter().copied());
        if g != 1 {
            return WellFormedness {
                well_formed: false,
                witness: Some(format!(
                    "chart {}: gcd(order {}, all local weights) = {g}",
                    c.label, c.order
                )),
            };
        }
        for skip in 0..c.local_weights.len() {
            let rest = c
                .local_weights
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &w)| w);
            let g = gcd_all(c.order, rest);
            if g != 1 {
                return WellFormedness {
                    well_formed: false,
                    witness: Some(format!(
                        "chart {}: gcd(order {}, local weights without slot {}) = {g}",
                        c.label,
                        c.order,
                        skip + 1
                    )),
                };
            }
        }
    }
    WellFormedness {
        well_formed: true,
        witness: None,
    }
}

/// Solves `d_ij = w_i + w_j` over the half-integers; returns doubled weights
/// in matrix order. The diagonal is ignored.
pub fn fit_pfaffian_weights(d: &[[i64; 5]; 5]) -> Option<[i64; 5]> {
    let mut w2 = [0; 5];
    w2[0] = d[0][1] + d[0][2] - d[1][2];
    for i in 1..5 {
        w2[i] = 2 * d[0][i] - w2[0];
    }
    PAIRS
        .iter()
        .all(|&(i, j)| w2[i] + w2[j] == 2 * d[i][j] && d[i][j] == d[j][i])
        .then_some(w2)
}

// Generic skew-matrix algebra, shared by symbolic and numeric checks.

/// The five 4x4 Pfaffians of the skew matrix with upper entries `x` (in [`PAIRS`] order).
///
/// `Pf_k` omits index `k` and carries the sign `(-1)^k` (0-based), fixing
/// `Pf_5 = x12 x34 - x13 x24 + x14 x23`.
pub fn pfaffian_vector<T>(x: &[T]) -> [T; 5]
where
    T: Clone,
    for<'a> &'a T: Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    std::array::from_fn(|k| {
        let rest: Vec<usize> = (0..5).filter(|&i| i != k).collect();
        let e = |a: usize, b: usize| &x[pair_index(rest[a], rest[b])];
        let p = &(&(e(0, 1) * e(2, 3)) - &(e(0, 2) * e(1, 3))) + &(e(0, 3) * e(1, 2));
        if k % 2 == 0 {
            p
        } else {
            -&p
        }
    })
}

/// `M v` for the skew matrix with upper entries `x`; `zero` is the additive identity.
pub fn skew_mul_vec<T>(x: &[T], v: &[T], zero: &T) -> [T; 5]
where
    T: Clone,
    for<'a> &'a T: Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    std::array::from_fn(|i| {
        let mut acc = zero.clone();
        for j in 0..5 {
            if j == i {
                continue;
            }
            let term = &x[pair_index(i, j)] * &v[j];
            acc = if i < j { &acc + &term } else { &acc - &term };
        }
        acc
    })
}

/// The generic skew matrix in the 10 Plücker variables.
pub fn plucker_vars() -> Vec<MPoly> {
    (0..10).map(|i| MPoly::var(10, i)).collect()
}

/// `Pf_1, ..., Pf_5` of the generic skew matrix `(x_ij)`.
pub fn pfaffian_equations() -> [MPoly; 5] {
    pfaffian_vector(&plucker_vars())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<CheckResult>,
}

impl IdentityReport {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
    }

    pub fn into_result(self) -> Result<Self> {
        if let Some(f) = self.failures().next() {
            return Err(Error::Verification(format!("{}: {}", f.name, f.detail)));
        }
        Ok(self)
    }
}

pub fn random_rat(rng: &mut impl Rng) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Checks `M Pf(M) = 0`, the tautological relations, and a numeric spot check.
pub fn verify_gr_identities() -> IdentityReport {
    verify_gr_identities_with(&pfaffian_equations())
}

/// As [`verify_gr_identities`], with a caller-supplied Pfaffian vector.
pub fn verify_gr_identities_with(pf: &[MPoly; 5]) -> IdentityReport {
    let mut report = IdentityReport::default();
    let x = plucker_vars();
    let zero = MPoly::zero(10);

    // (a) the syzygy identity, one cubic per component.
    let mpf = skew_mul_vec(&x, pf, &zero);
    for (i, c) in mpf.iter().enumerate() {
        report.push(
            format!("(a) M*Pf(M) component {}", i + 1),
            c.is_zero(),
            if c.is_zero() { "identically zero".to_string() } else { format!("{} surviving terms", c.len()) },
        );
    }

    // (b) x_ij s_k - x_ik s_j + x_jk s_i = 0 with s_i = (a_i, b_i), x_ij = a_i b_j - a_j b_i.
    let ab: Vec<MPoly> = (0..10).map(|i| MPoly::var(10, i)).collect();
    let a = &ab[..5];
    let b = &ab[5..];
    let minor = |i: usize, j: usize| &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
    let images: Vec<MPoly> = PAIRS.iter().map(|&(i, j)| minor(i, j)).collect();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                let xs: Vec<MPoly> = [(i, j), (i, k), (j, k)]
                    .iter()
                    .map(|&(p, q)| x[pair_index(p, q)].substitute(&images))
                    .collect();
                let comp = |s: &[MPoly]| &(&(&xs[0] * &s[k]) - &(&xs[1] * &s[j])) + &(&xs[2] * &s[i]);
                let ok = comp(a).is_zero() && comp(b).is_zero();
                report.push(
                    format!("(b) relation ({},{},{})", i + 1, j + 1, k + 1),
                    ok,
                    if ok { "vanishes identically" } else { "nonzero" },
                );
            }
        }
    }

    // Numeric spot check at a random rational skew matrix.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0025);
    let pt: Vec<Rat> = (0..10).map(|_| random_rat(&mut rng)).collect();
    let pf_num: Vec<Rat> = pf.iter().map(|p| p.eval(&pt)).collect();
    let v = skew_mul_vec(&pt, &pf_num, &int(0));
    let ok = v.iter().all(|c| *c == int(0));
    report.push("(a) numeric spot check", ok, format!("at {} entries", pt.len()));
    report
}
