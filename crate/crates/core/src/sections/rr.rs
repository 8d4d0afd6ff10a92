//! Fits orbifold Riemann-Roch data to a section and compares the closed forms.

use serde::{Deserialize, Serialize};

use super::{section_canonical, section_dim, section_series, singularity_analysis, AmbientModel, SectionSpec};
use crate::error::{Error, Result};
use crate::orbifold_rr::{hilbert_can3, hilbert_cy3, Canonical3Data, CY3Data, PeriodicTable, RrData};
use crate::series::{fmt_rat, int, rat, to_i64, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RrKind {
    Canonical3,
    Cy3,
}

impl std::str::FromStr for RrKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical3" => Ok(RrKind::Canonical3),
            "cy3" => Ok(RrKind::Cy3),
            _ => Err(Error::Input(format!("unknown RR kind {s:?} (canonical3 or cy3)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub degree: usize,
    pub section: String,
    pub rr: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RrReport {
    pub kind: RrKind,
    pub data: RrData,
    pub canonical_degree: i64,
    pub matches: bool,
    pub first_difference: Option<Difference>,
}

/// Local contribution tables for the points of a basket, where known.
fn tables_for(basket: &[super::BasketEntry]) -> Result<Vec<PeriodicTable>> {
    let mut tables = Vec::new();
    let mut thirds = [0u64; 2];
    for b in basket {
        let name = b.singularity.to_string();
        match name.as_str() {
            "1/3(1,1,1)" => thirds[0] += b.count,
            "1/3(2,2,2)" => thirds[1] += b.count,
            _ => {
                let t = PeriodicTable::builtin(&name)
                    .ok_or_else(|| Error::Input(format!("no local contribution table for {name}")))?;
                tables.extend(std::iter::repeat_n(t, b.count as usize));
            }
        }
    }
    if thirds[0] != thirds[1] {
        return Err(Error::Input(
            "1/3(1,1,1) and 1/3(2,2,2) points are only tabulated in pairs".into(),
        ));
    }
    let pair = PeriodicTable::builtin("1/3(1,1,1)+1/3(2,2,2)").unwrap();
    tables.extend(std::iter::repeat_n(pair, thirds[0] as usize));
    Ok(tables)
}

/// Reads `K^3` or `A^3`, `p_g` or `A.c2`, and the basket off the section, then
/// checks the Riemann-Roch closed form equals the section series exactly.
pub fn rr_roundtrip(model: &AmbientModel, spec: &SectionSpec, kind: RrKind, depth: usize) -> Result<RrReport> {
    if section_dim(model, spec)? != 3 {
        return Err(Error::Input("Riemann-Roch round trip needs a 3-fold section".into()));
    }
    let h = section_series(model, spec, depth)?;
    let top = h.intersection_number(3)?;
    let p1 = h.coefficient(1)?;
    let sing = singularity_analysis(model, spec)?;
    let data = match kind {
        RrKind::Canonical3 => {
            let mut half = 0;
            for b in &sing.basket {
                if b.singularity.to_string() != "1/2(1,1,1)" {
                    return Err(Error::Input(format!(
                        "canonical 3-fold formula covers only 1/2(1,1,1) points, found {}",
                        b.singularity
                    )));
                }
                half += b.count as u32;
            }
            let pg = to_i64(&p1).ok_or_else(|| Error::Mismatch(format!("h^0 = {} is not an integer", fmt_rat(&p1))))?;
            RrData::Canonical3(Canonical3Data {
                pg,
                k_cubed: top,
                half_points: half,
            })
        }
        RrKind::Cy3 => {
            let points = tables_for(&sing.basket)?;
            let local: Rat = points.iter().map(|t| t.at(1).clone()).sum();
            let a_c2 = (&p1 - &top * rat(1, 6) - local) * int(12);
            RrData::CalabiYau3(CY3Data {
                a_cubed: top,
                a_c2,
                points,
            })
        }
    };
    let rr = match &data {
        RrData::Canonical3(d) => hilbert_can3(d),
        RrData::CalabiYau3(d) => hilbert_cy3(d),
    };
    let matches = rr.same_function(&h);
    let first_difference = if matches {
        None
    } else {
        let a = h.expand(depth)?;
        let b = rr.expand(depth)?;
        let k = (0..=depth).find(|&k| a[k] != b[k]).unwrap_or(depth);
        Some(Difference {
            degree: k,
            section: fmt_rat(&a[k]),
            rr: fmt_rat(&b[k]),
        })
    };
    Ok(RrReport {
        kind,
        data,
        canonical_degree: section_canonical(model, spec),
        matches,
        first_difference,
    })
}
