//! Orbifold Riemann-Roch for 3-folds: plurigenera of canonical 3-folds with
//! `1/2(1,1,1)` points, and Hilbert functions of polarised Calabi-Yau 3-folds
//! with periodic local contributions.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{int, is_nonneg_integer, rat, serde_rat, serde_rat_vec, HilbertSeries, LaurentPoly, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Canonical3Data {
    pub pg: i64,
    #[serde(rename = "K3", with = "serde_rat")]
    pub k_cubed: Rat,
    pub half_points: u32,
}

/// A local contribution `c(n)` depending only on `n mod r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PeriodicTableJson")]
pub struct PeriodicTable {
    pub r: u32,
    #[serde(with = "serde_rat_vec")]
    pub c: Vec<Rat>,
}

#[derive(Deserialize)]
struct PeriodicTableJson {
    r: Option<u32>,
    #[serde(default, with = "serde_rat_vec")]
    c: Vec<Rat>,
    name: Option<String>,
}

impl TryFrom<PeriodicTableJson> for PeriodicTable {
    type Error = Error;
    fn try_from(j: PeriodicTableJson) -> Result<Self> {
        match (j.name, j.r) {
            (Some(name), None) => PeriodicTable::builtin(&name)
                .ok_or_else(|| Error::Input(format!("unknown built-in table {name:?}"))),
            (None, Some(r)) => PeriodicTable::new(r, j.c),
            _ => Err(Error::Input("periodic table needs either \"name\" or \"r\" and \"c\"".into())),
        }
    }
}

impl PeriodicTable {
    pub fn new(r: u32, c: Vec<Rat>) -> Result<Self> {
        if r == 0 || c.len() != r as usize {
            return Err(Error::Input(format!("table of period {r} needs {r} values, got {}", c.len())));
        }
        if !c[0].is_zero() {
            return Err(Error::Input("c(0) must vanish".into()));
        }
        Ok(Self { r, c })
    }

    /// Contribution of a `1/5(3,3,4)` point polarised by `A = O(1)`.
    pub fn quotient_5_334() -> Self {
        Self::new(5, vec![int(0), int(0), rat(-1, 5), rat(1, 5), int(0)]).unwrap()
    }

    /// Combined contribution of `1/3(1,1,1)` and `1/3(2,2,2)`, which cancel.
    pub fn pair_3_111_222() -> Self {
        Self::new(3, vec![int(0); 3]).unwrap()
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "1/5(3,3,4)" => Some(Self::quotient_5_334()),
            "1/3(1,1,1)+1/3(2,2,2)" => Some(Self::pair_3_111_222()),
            _ => None,
        }
    }

    pub fn at(&self, n: u64) -> &Rat {
        &self.c[(n % self.r as u64) as usize]
    }

    /// `(sum_k c(k) t^k) / (1 - t^r)`.
    pub fn series(&self) -> HilbertSeries {
        let num = self
            .c
            .iter()
            .enumerate()
            .fold(LaurentPoly::zero(), |acc, (k, v)| &acc + &LaurentPoly::monomial(k as i64, v.clone()));
        HilbertSeries::new(num, vec![self.r as i64]).unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CY3Data {
    #[serde(rename = "A3", with = "serde_rat")]
    pub a_cubed: Rat,
    #[serde(rename = "Ac2", with = "serde_rat")]
    pub a_c2: Rat,
    #[serde(default)]
    pub points: Vec<PeriodicTable>,
}

/// Either kind of Riemann-Roch input, told apart by its fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RrData {
    Canonical3(Canonical3Data),
    CalabiYau3(CY3Data),
}

impl RrData {
    pub fn hilbert_series(&self) -> HilbertSeries {
        match self {
            RrData::Canonical3(d) => hilbert_can3(d),
            RrData::CalabiYau3(d) => hilbert_cy3(d),
        }
    }

    pub fn plurigenus(&self, n: u64) -> Rat {
        match self {
            RrData::Canonical3(d) => plurigenus_can3(d, n),
            RrData::CalabiYau3(d) => plurigenus_cy3(d, n),
        }
    }

    /// Polarisation degree: `K^3` or `A^3`.
    pub fn degree(&self) -> &Rat {
        match self {
            RrData::Canonical3(d) => &d.k_cubed,
            RrData::CalabiYau3(d) => &d.a_cubed,
        }
    }
}

pub fn plurigenus_can3(data: &Canonical3Data, n: u64) -> Rat {
    match n {
        0 => int(1),
        1 => int(data.pg),
        _ => {
            let n = n as i64;
            rat(n * (n - 1) * (2 * n - 1), 12) * &data.k_cubed
                + int((2 * n - 1) * (data.pg - 1))
                + rat(data.half_points as i64 * (n / 2), 4)
        }
    }
}

fn series(num: LaurentPoly, den: Vec<i64>) -> HilbertSeries {
    HilbertSeries::new(num, den).expect("positive denominator")
}

/// `1 + t + (p_g - 1)(t + t^2)/(1-t)^2 + (K^3/2)(t^2 + t^3)/(1-t)^4
///  + (n/4) t^2/((1-t)(1-t^2))` for `n` half points.
pub fn hilbert_can3(data: &Canonical3Data) -> HilbertSeries {
    let head = series(LaurentPoly::from_ints([(0, 1), (1, 1)]), vec![]);
    let lin = series(LaurentPoly::from_ints([(1, 1), (2, 1)]).scale(&int(data.pg - 1)), vec![1, 1]);
    let cub = series(
        LaurentPoly::from_ints([(2, 1), (3, 1)]).scale(&(&data.k_cubed * rat(1, 2))),
        vec![1, 1, 1, 1],
    );
    let half = series(LaurentPoly::monomial(2, rat(data.half_points as i64, 4)), vec![1, 2]);
    head.add(&lin).add(&cub).add(&half)
}

pub fn plurigenus_cy3(data: &CY3Data, n: u64) -> Rat {
    if n == 0 {
        return int(1);
    }
    let m = n as i64;
    let mut p = &data.a_cubed * rat(m * m * m, 6) + &data.a_c2 * rat(m, 12);
    for t in &data.points {
        p += t.at(n);
    }
    p
}

/// `1 + (A^3/6)(1+4t+t^2)t/(1-t)^4 + (A.c2/12) t/(1-t)^2 + sum_P (sum_k c_P(k) t^k)/(1-t^r)`.
pub fn hilbert_cy3(data: &CY3Data) -> HilbertSeries {
    let mut h = series(LaurentPoly::one(), vec![]);
    h = h.add(&series(
        LaurentPoly::from_ints([(1, 1), (2, 4), (3, 1)]).scale(&(&data.a_cubed * rat(1, 6))),
        vec![1, 1, 1, 1],
    ));
    h = h.add(&series(LaurentPoly::monomial(1, &data.a_c2 * rat(1, 12)), vec![1, 1]));
    for t in &data.points {
        h = h.add(&t.series());
    }
    h
}

/// First `n <= max_n` whose plurigenus is not a non-negative integer.
pub fn first_invalid_plurigenus(data: &RrData, max_n: u64) -> Option<(u64, Rat)> {
    (0..=max_n)
        .map(|n| (n, data.plurigenus(n)))
        .find(|(_, p)| !is_nonneg_integer(p))
}
