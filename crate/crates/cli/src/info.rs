use serde::Serialize;
use wgk_core::series::{fmt_multiset, fmt_rat};
use wgk_core::wgrass25::{charts_well_formed, Chart, WellFormedness};
use wgk_core::{GrWeights, OGrWeights};

use crate::{parse_doubled_weights, print_json, CmdResult, FamilyArg};

#[derive(Serialize)]
struct InfoReport {
    schema: &'static str,
    family: &'static str,
    label: String,
    w2: [i64; 5],
    u: i64,
    coordinate_weights: Vec<i64>,
    ambient: String,
    d: String,
    equation_degrees: Vec<i64>,
    syzygy_degrees: Vec<i64>,
    numerator: String,
    hilbert_series: String,
    degree: String,
    adjunction: i64,
    canonical: i64,
    charts: Vec<Chart>,
    well_formedness: WellFormedness,
}

pub fn run(family: FamilyArg, raw: &[String], u: i64, doubled: bool, json: bool) -> CmdResult {
    let w2 = parse_doubled_weights(raw, doubled)?;
    let report = match family {
        FamilyArg::Wgr => gr_report(GrWeights::from_doubled(w2, 2 * u)?),
        FamilyArg::Wogr => ogr_report(OGrWeights::from_doubled(w2, 2 * u)?)?,
    };
    if json {
        return print_json(&report);
    }
    println!("{}", report.label);
    println!("ambient: {}", report.ambient);
    println!("d = {}", report.d);
    println!("equation degrees: {}", join(&report.equation_degrees));
    println!("first syzygy degrees: {}", join(&report.syzygy_degrees));
    println!("numerator: {}", report.numerator);
    println!("H = {}", report.hilbert_series);
    println!("degree: {}", report.degree);
    println!("adjunction number: {}", report.adjunction);
    println!("K = O({})", report.canonical);
    println!("charts:");
    for c in &report.charts {
        println!("  {:<6} order {:<3} local weights {}", c.label, c.order, join(&c.local_weights));
    }
    match (&report.well_formedness.well_formed, &report.well_formedness.witness) {
        (true, _) => println!("well formed: yes"),
        (false, Some(w)) => println!("well formed: no ({w})"),
        (false, None) => println!("well formed: no"),
    }
    Ok(())
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn gr_report(w: GrWeights) -> InfoReport {
    let n = w.numerology();
    let weights = w.plucker_weights();
    let charts = w.charts();
    InfoReport {
        schema: "wgk.info/1",
        family: "wgr25",
        label: w.label(),
        w2: w.doubled(),
        u: 0,
        ambient: format!("P({})", fmt_multiset(&weights)),
        coordinate_weights: weights,
        d: fmt_rat(&n.d),
        equation_degrees: sorted(n.pfaffian_degrees.to_vec()),
        syzygy_degrees: sorted(n.syzygy_degrees.to_vec()),
        numerator: w.numerator().to_string(),
        hilbert_series: w.hilbert_series().to_string(),
        degree: fmt_rat(&w.degree()),
        adjunction: n.adjunction,
        canonical: n.canonical,
        well_formedness: w.is_well_formed(),
        charts,
    }
}

fn ogr_report(w: OGrWeights) -> wgk_core::Result<InfoReport> {
    let weights = w.coordinate_weights();
    let charts = w.charts();
    let res = w.resolution_degrees();
    Ok(InfoReport {
        schema: "wgk.info/1",
        family: "wogr510",
        label: w.label(),
        w2: w.doubled(),
        u: w.u(),
        ambient: format!("P({})", fmt_multiset(&weights)),
        coordinate_weights: weights,
        d: fmt_rat(&w.d()),
        equation_degrees: sorted(w.equation_degrees().to_vec()),
        syzygy_degrees: sorted(res.first_syzygies.to_vec()),
        numerator: w.numerator()?.to_string(),
        hilbert_series: w.hilbert_series()?.to_string(),
        degree: fmt_rat(&w.degree()?),
        adjunction: w.adjunction(),
        canonical: w.canonical(),
        well_formedness: charts_well_formed(&charts),
        charts,
    })
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}
