//! The embedded fixture suite: every expected value carries a source marker
//! naming how it was obtained.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;
use wgk_core::sections::{
    invariants, rr_roundtrip, section_canonical, section_dim, section_series, singularity_analysis, Family, RrKind,
};
use wgk_core::series::{fmt_multiset, fmt_rat, int, parse_rat};
use wgk_core::wgrass25::IdentityReport;
use wgk_core::{AmbientModel, Error, Result, SectionSpec};

pub const FIXTURES_JSON: &str = include_str!("../fixtures.json");

#[derive(Debug, Deserialize)]
pub struct FixtureFile {
    pub schema: String,
    pub sources: BTreeMap<String, String>,
    pub fixtures: Vec<FixtureRecord>,
}

#[derive(Debug, Deserialize)]
pub struct FixtureRecord {
    pub name: String,
    #[serde(default)]
    pub label: Option<String>,
    pub model: AmbientModel,
    pub sections: Vec<i64>,
    pub expect: BTreeMap<String, Expected>,
}

#[derive(Debug, Deserialize)]
pub struct Expected {
    pub value: Value,
    pub source: String,
}

pub fn load() -> Result<FixtureFile> {
    let file: FixtureFile = serde_json::from_str(FIXTURES_JSON)?;
    if file.schema != "wgk.fixtures/1" {
        return Err(Error::Input(format!("unsupported fixture schema {:?}", file.schema)));
    }
    for f in &file.fixtures {
        for (key, e) in &f.expect {
            if !file.sources.contains_key(&e.source) {
                return Err(Error::Input(format!("fixture {} {key}: unknown source {:?}", f.name, e.source)));
            }
        }
    }
    Ok(file)
}

/// One check per expected value.
pub fn check_all(file: &FixtureFile, depth: usize) -> IdentityReport {
    let mut report = IdentityReport::default();
    for f in &file.fixtures {
        for (key, e) in &f.expect {
            let name = match &f.label {
                Some(l) => format!("fixture {} [{l}] {key}", f.name),
                None => format!("fixture {} {key}", f.name),
            };
            match check(f, key, &e.value, depth) {
                Ok((ok, got)) => report.push(name, ok, format!("[{}] got {got}", e.source)),
                Err(err) => report.push(name, false, format!("[{}] error: {err}", e.source)),
            }
        }
    }
    report
}

fn bad(key: &str) -> Error {
    Error::Input(format!("malformed expectation {key}"))
}

fn as_i64(v: &Value, key: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad(key))
}

fn as_ints(v: &Value, key: &str) -> Result<Vec<i64>> {
    v.as_array().ok_or_else(|| bad(key))?.iter().map(|x| as_i64(x, key)).collect()
}

fn as_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(key))
}

fn ints_label(v: &[i64]) -> String {
    format!("{v:?}")
}

fn check(f: &FixtureRecord, key: &str, want: &Value, depth: usize) -> Result<(bool, String)> {
    let model = &f.model;
    let spec = SectionSpec::new(f.sections.clone())?;
    let series = || section_series(model, &spec, depth);
    match key {
        "ambient" => {
            let got = format!("P({})", fmt_multiset(&model.coordinate_weights()));
            Ok((got == as_str(want, key)?, got))
        }
        "pfaffian_degrees" => {
            let Family::Gr(w) = model.base else {
                return Err(Error::Input("pfaffian degrees need a wGr model".into()));
            };
            let mut got = w.numerology().pfaffian_degrees.to_vec();
            got.sort_unstable();
            Ok((got == as_ints(want, key)?, ints_label(&got)))
        }
        "ambient_degree_times" => {
            let factor = as_i64(&want["factor"], key)?;
            let equals = parse_rat(as_str(&want["equals"], key)?)?;
            let degree = match model.base {
                Family::Gr(w) => w.degree(),
                Family::OGr(w) => w.degree()?,
            };
            let got = degree * int(factor);
            Ok((got == equals, fmt_rat(&got)))
        }
        "top" => {
            let inv = invariants(&series()?, section_dim(model, &spec)?)?;
            Ok((inv.a_top == parse_rat(as_str(want, key)?)?, fmt_rat(&inv.a_top)))
        }
        "h0" => {
            let inv = invariants(&series()?, section_dim(model, &spec)?)?;
            Ok((inv.h0_a == int(as_i64(want, key)?), fmt_rat(&inv.h0_a)))
        }
        "canonical" => {
            let got = section_canonical(model, &spec);
            Ok((got == as_i64(want, key)?, got.to_string()))
        }
        "series_prefix" => {
            let want = as_ints(want, key)?;
            let got = series()?.expand(want.len() - 1)?;
            let ok = got.iter().zip(&want).all(|(g, &w)| *g == int(w));
            Ok((ok, got.iter().map(fmt_rat).collect::<Vec<_>>().join(" ")))
        }
        "numerator" => {
            let over = as_ints(&want["over"], key)?;
            let through = as_i64(&want["through"], key)?;
            let terms: BTreeMap<i64, i64> = want["terms"]
                .as_array()
                .ok_or_else(|| bad(key))?
                .iter()
                .map(|t| Ok((as_i64(&t[0], key)?, as_i64(&t[1], key)?)))
                .collect::<Result<_>>()?;
            let num = series()?.hilbert_numerator(&over)?;
            let ok = (0..=through).all(|e| num.coeff(e) == int(terms.get(&e).copied().unwrap_or(0)))
                && num.min_exp().is_none_or(|lo| lo >= 0);
            Ok((ok, num.truncate(through).to_string()))
        }
        "basket" => {
            let want: BTreeMap<String, u64> = serde_json::from_value(want.clone())?;
            let r = singularity_analysis(model, &spec)?;
            let got: BTreeMap<String, u64> = r.basket_map().into_iter().map(|(q, n)| (q.to_string(), n)).collect();
            let ok = got == want && r.diagnostics.is_empty();
            Ok((ok, format!("{got:?} {:?}", r.diagnostics)))
        }
        "rr" => {
            let kind: RrKind = as_str(want, key)?.parse()?;
            let r = rr_roundtrip(model, &spec, kind, depth)?;
            let got = match &r.first_difference {
                None => "match".to_string(),
                Some(d) => format!("differs at t^{}: section {} vs RR {}", d.degree, d.section, d.rr),
            };
            Ok((r.matches, got))
        }
        _ => Err(Error::Input(format!("unknown expectation {key:?}"))),
    }
}
