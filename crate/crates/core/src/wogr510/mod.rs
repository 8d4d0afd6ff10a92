//! The weighted orthogonal Grassmannian `wOGr(5,10)` in its spinor embedding.
//!
//! Coordinates are indexed by the 16 vertices of the spinor graph in the order
//! `x, x1..x5, x12..x45`. Weights `w_i` are half-integers stored doubled, and
//! `u` is the integral overall weight on the spinor space.

mod graph;
mod group;
mod syzygy;

pub use graph::{
    edge_direction, neighbours, pair_shift, parse_vertex, spinor_graph, vertex_name, vertex_of_subset,
    vertex_subset, Edge, SpinorGraph, SpinorVertex, VERTEX_COUNT,
};
pub use group::{coxeter_generators, coxeter_matrix, d5_coxeter_matrix, generated_group, wd5_elements, SignedPerm};
pub use syzygy::{
    first_syzygies, first_syzygy_column, second_syzygy_fixtures, verify_ogr_syzygies, verify_ogr_syzygies_with,
    verify_second_syzygy_fixtures, SecondSyzygy,
};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::series::{int, rat, HilbertSeries, LaurentPoly, Rat};
use crate::wgrass25::{pfaffian_vector, skew_mul_vec, Chart, IdentityReport, WeightsJson, PAIRS};

/// Index of the coordinate `x_i` (0-based `i`).
pub fn var_xi(i: usize) -> usize {
    1 + i
}

/// Index of the coordinate `x_ij` (0-based).
pub fn var_xij(i: usize, j: usize) -> usize {
    6 + crate::wgrass25::pair_index(i, j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightsJson", into = "WeightsJson")]
pub struct OGrWeights {
    w2: [i64; 5],
    u: i64,
}

impl OGrWeights {
    /// Doubled weights `2 w_i` and doubled overall weight `2u`.
    pub fn from_doubled(w2: [i64; 5], u2: i64) -> Result<Self> {
        if u2.is_odd() {
            return Err(Error::InvalidWeights(format!(
                "doubled overall weight {u2} must be even (u is an integer)"
            )));
        }
        let parity = w2[0].rem_euclid(2);
        if w2.iter().any(|x| x.rem_euclid(2) != parity) {
            return Err(Error::InvalidWeights(format!(
                "doubled weights {w2:?} must share one parity"
            )));
        }
        let w = Self { w2, u: u2 / 2 };
        if let Some(v) = (0..VERTEX_COUNT).find(|&v| w.weight2(v) <= 0) {
            return Err(Error::InvalidWeights(format!(
                "wt {} = {} is not positive",
                vertex_name(v),
                rat(w.weight2(v), 2)
            )));
        }
        Ok(w)
    }

    /// Integral weights `w_i` and overall weight `u`.
    pub fn from_ints(w: [i64; 5], u: i64) -> Result<Self> {
        Self::from_doubled(w.map(|x| 2 * x), 2 * u)
    }

    pub fn doubled(&self) -> [i64; 5] {
        self.w2
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn weights(&self) -> [Rat; 5] {
        self.w2.map(|x| rat(x, 2))
    }

    fn s2(&self) -> i64 {
        self.w2.iter().sum()
    }

    /// `2d` with `d = s + 2u`.
    fn d2(&self) -> i64 {
        self.s2() + 4 * self.u
    }

    pub fn s(&self) -> Rat {
        rat(self.s2(), 2)
    }

    pub fn d(&self) -> Rat {
        rat(self.d2(), 2)
    }

    /// Twice the weight of vertex `v`: `2u + sum_{i in E} 2w_i`.
    fn weight2(&self, v: usize) -> i64 {
        let e = vertex_subset(v);
        2 * self.u + (0..5).filter(|i| e & (1 << i) != 0).map(|i| self.w2[i]).sum::<i64>()
    }

    pub fn vertex_weight(&self, v: usize) -> i64 {
        self.weight2(v) / 2
    }

    /// The 16 coordinate weights in vertex order.
    pub fn coordinate_weights(&self) -> Vec<i64> {
        (0..VERTEX_COUNT).map(|v| self.vertex_weight(v)).collect()
    }

    /// `g . (w, u)`: weights acted on by `g`, with `u + s/2` held fixed so that
    /// coordinate weights are carried along the vertex action.
    pub fn act(&self, g: &SignedPerm) -> Self {
        let w2 = g.act_weights(self.w2);
        let s2: i64 = w2.iter().sum();
        Self {
            w2,
            u: self.u + (self.s2() - s2) / 4,
        }
    }

    /// Representative of the `W(D5)` orbit with least `u`, then least weights.
    pub fn canonical_form(&self) -> Self {
        wd5_elements()
            .iter()
            .map(|g| self.act(g))
            .min_by_key(|w| (w.u, w.w2))
            .expect("group is nonempty")
    }

    pub fn equation_degrees(&self) -> [i64; 10] {
        let d2 = self.d2();
        std::array::from_fn(|k| if k < 5 { (d2 - self.w2[k]) / 2 } else { (d2 + self.w2[k - 5]) / 2 })
    }

    pub fn characters(&self) -> WeightCharacters {
        let mut q_v = LaurentPoly::zero();
        let mut q_splus = LaurentPoly::one();
        let mut q_sminus = LaurentPoly::one();
        for i in 0..5 {
            q_v = &(&q_v + &LaurentPoly::t(self.w2[i])) + &LaurentPoly::t(-self.w2[i]);
            q_splus = &q_splus + &LaurentPoly::t(self.s2() - self.w2[i]);
            q_sminus = &q_sminus + &LaurentPoly::t(self.w2[i] - self.s2());
        }
        for &(i, j) in &PAIRS {
            q_splus = &q_splus + &LaurentPoly::t(self.w2[i] + self.w2[j]);
            q_sminus = &q_sminus + &LaurentPoly::t(-self.w2[i] - self.w2[j]);
        }
        WeightCharacters {
            q_v,
            q_splus,
            q_sminus,
        }
    }

    /// `1 - t^d Q_V + t^{2d-u} Q_S- - t^{2d+u} Q_S+ + t^{3d} Q_V - t^{4d}`.
    pub fn numerator(&self) -> Result<LaurentPoly> {
        let q = self.characters();
        let d2 = self.d2();
        let u2 = 2 * self.u;
        let doubled = &(&(&(&(&LaurentPoly::one() - &q.q_v.shift(d2)) + &q.q_sminus.shift(2 * d2 - u2))
            - &q.q_splus.shift(2 * d2 + u2))
            + &q.q_v.shift(3 * d2))
            - &LaurentPoly::t(4 * d2);
        let mut p = LaurentPoly::zero();
        for (e, c) in doubled.terms() {
            if e.is_odd() {
                return Err(Error::InvalidWeights(format!("numerator has fractional exponent {}", rat(e, 2))));
            }
            p.add_term(e / 2, c.clone());
        }
        if let Some(lo) = p.min_exp() {
            if lo < 0 {
                return Err(Error::InvalidWeights(format!("numerator has negative exponent {lo}")));
            }
        }
        Ok(p)
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        HilbertSeries::new(self.numerator()?, self.coordinate_weights())
    }

    /// Degree of the 10-fold `wOGr(5,10)` under `O(1)`.
    pub fn degree(&self) -> Result<Rat> {
        self.hilbert_series()?.intersection_number(10)
    }

    pub fn resolution_degrees(&self) -> ResolutionDegrees {
        let d2 = self.d2();
        let eq = self.equation_degrees();
        let wts = self.coordinate_weights();
        ResolutionDegrees {
            relations: eq.to_vec(),
            first_syzygies: wts.iter().map(|&w| d2 - w).collect(),
            second_syzygies: wts.iter().map(|&w| d2 + w).collect(),
            third_syzygies: eq.iter().map(|&e| e + d2).collect(),
            last: 2 * d2,
        }
    }

    /// `K = O(-4d)`.
    pub fn canonical(&self) -> i64 {
        -2 * self.d2()
    }

    pub fn adjunction(&self) -> i64 {
        2 * self.d2()
    }

    /// The 16 charts. At vertex `E` the group is `mu_r` with `r = wt x_E`, and the
    /// local coordinate `x_{E xor {i,j}} / x_E` has weight `w'_i + w'_j`, where
    /// `w'` is `w` with signs changed on `E`.
    pub fn charts(&self) -> Vec<Chart> {
        (0..VERTEX_COUNT)
            .map(|v| {
                let local_coords: Vec<usize> = PAIRS.iter().map(|&(i, j)| pair_shift(v, i, j)).collect();
                let r = self.vertex_weight(v);
                Chart {
                    label: vertex_name(v),
                    vertex: v,
                    order: r,
                    local_weights: local_coords.iter().map(|&c| self.vertex_weight(c) - r).collect(),
                    local_coords,
                }
            })
            .collect()
    }

    pub fn label(&self) -> String {
        let ws: Vec<String> = self.weights().iter().map(crate::series::fmt_rat).collect();
        format!("wOGr({}; u={})", ws.join(","), self.u)
    }
}

impl TryFrom<WeightsJson> for OGrWeights {
    type Error = Error;
    fn try_from(j: WeightsJson) -> Result<Self> {
        Self::from_doubled(j.w2_array()?, j.u2)
    }
}

impl From<OGrWeights> for WeightsJson {
    fn from(w: OGrWeights) -> Self {
        WeightsJson {
            w2: w.w2.to_vec(),
            u2: 2 * w.u,
        }
    }
}

/// Weight characters of `V`, `S+`, `S-`. Exponents are doubled, i.e. these are
/// polynomials in `t^(1/2)`; each character's value at 1 is its dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCharacters {
    pub q_v: LaurentPoly,
    pub q_splus: LaurentPoly,
    pub q_sminus: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionDegrees {
    /// `N_1..N_5, N_-1..N_-5`.
    pub relations: Vec<i64>,
    /// `T(v)` in vertex order.
    pub first_syzygies: Vec<i64>,
    /// `S(v)` in vertex order.
    pub second_syzygies: Vec<i64>,
    pub third_syzygies: Vec<i64>,
    pub last: i64,
}

impl ResolutionDegrees {
    /// Betti numerator `sum (-1)^i sum t^{deg}`; must equal the Hilbert numerator.
    pub fn alternating_sum(&self) -> LaurentPoly {
        let bank = |v: &[i64]| LaurentPoly::from_exponents(v.iter().copied());
        &(&(&(&(&LaurentPoly::one() - &bank(&self.relations)) + &bank(&self.first_syzygies))
            - &bank(&self.second_syzygies))
            + &bank(&self.third_syzygies))
            - &LaurentPoly::t(self.last)
    }
}

/// The generic spinor coordinates `x, x_i, x_ij` as polynomials in 16 variables.
fn spinor_vars() -> (MPoly, Vec<MPoly>, Vec<MPoly>) {
    let x = MPoly::var(16, 0);
    let v = (0..5).map(|i| MPoly::var(16, var_xi(i))).collect();
    let m = (0..10).map(|k| MPoly::var(16, 6 + k)).collect();
    (x, v, m)
}

/// `N_1..N_5 = x v - Pf M` and `N_-1..N_-5 = M v`.
pub fn equations() -> Vec<MPoly> {
    let (x, v, m) = spinor_vars();
    let pf = pfaffian_vector(&m);
    let mv = skew_mul_vec(&m, &v, &MPoly::zero(16));
    (0..5)
        .map(|i| &(&x * &v[i]) - &pf[i])
        .chain(mv)
        .collect()
}

pub fn equation_name(k: usize) -> String {
    if k < 5 {
        format!("N{}", k + 1)
    } else {
        format!("N-{}", k - 4)
    }
}

/// `e P = Pf M` and `M P = 0`, with `M` given by its upper entries in pair order.
pub fn membership(e: &Rat, m: &[Rat; 10], p: &[Rat; 5]) -> bool {
    let pf = pfaffian_vector(m.as_slice());
    let mp = skew_mul_vec(m.as_slice(), p.as_slice(), &int(0));
    (0..5).all(|i| e * &p[i] == pf[i]) && mp.iter().all(|c| *c == int(0))
}

/// `e (1, M, Pf M)` as coordinates in vertex order.
pub fn parametrize(e: &Rat, m: &[Rat; 10]) -> Vec<Rat> {
    let pf = pfaffian_vector(m.as_slice());
    std::iter::once(e.clone())
        .chain(pf.iter().map(|p| e * p))
        .chain(m.iter().map(|x| e * x))
        .collect()
}

/// Substitutes `e (1, M, Pf M)` with generic `e` and `M` into each of the
/// 10 equations and checks that the result vanishes identically.
pub fn verify_spinor_parametrization() -> IdentityReport {
    let e = MPoly::var(11, 0);
    let m: Vec<MPoly> = (0..10).map(|k| MPoly::var(11, 1 + k)).collect();
    let pf = pfaffian_vector(&m);
    let images: Vec<MPoly> = std::iter::once(e.clone())
        .chain(pf.iter().map(|p| &e * p))
        .chain(m.iter().map(|x| &e * x))
        .collect();
    let mut report = IdentityReport::default();
    for (k, eq) in equations().iter().enumerate() {
        let r = eq.substitute(&images);
        report.push(
            format!("e(1,M,Pf M) satisfies {}", equation_name(k)),
            r.is_zero(),
            if r.is_zero() { "identically zero".to_string() } else { format!("{} surviving terms", r.len()) },
        );
    }
    report
}

/// Splits a spinor point in vertex order into `(x, M, v)`.
pub fn split_point(pt: &[Rat]) -> (Rat, [Rat; 10], [Rat; 5]) {
    (
        pt[0].clone(),
        std::array::from_fn(|k| pt[6 + k].clone()),
        std::array::from_fn(|i| pt[1 + i].clone()),
    )
}

#[cfg(test)]
mod tests;
