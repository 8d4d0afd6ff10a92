use serde::Serialize;
use wgk_core::matcher::{match_pipeline, Candidate, MatchInput, MatchOptions, Status, WeightBounds};
use wgk_core::orbifold_rr::{first_invalid_plurigenus, PeriodicTable};
use wgk_core::sections::{
    graded_dimension_oracle, invariants, quasilinear_embed, rr_roundtrip, section_canonical, section_dim,
    section_series, singularity_analysis, Invariants, RrReport, SingularityReport,
};
use wgk_core::series::{fmt_rat, parse_rat};
use wgk_core::{CY3Data, Canonical3Data, HilbertSeries, QuotientSingularity, RrData, SectionSpec};

use crate::{parse_ints, parse_model, print_json, read_json_arg, CmdResult, Failure, RrInput};

fn expansion(h: &HilbertSeries, n: usize) -> Result<Vec<String>, Failure> {
    Ok(h.expand(n)?.iter().map(fmt_rat).collect())
}

#[derive(Serialize)]
struct RrOut {
    schema: &'static str,
    data: RrData,
    expansion: Vec<String>,
    series: String,
    numerator_over: Option<(Vec<i64>, String)>,
    first_invalid: Option<(u64, String)>,
}

pub fn rr(input: RrInput, expand: usize, over: Option<Vec<i64>>, json: bool) -> CmdResult {
    let data = match input {
        RrInput::Can3 { pg, k3, half } => RrData::Canonical3(Canonical3Data {
            pg,
            k_cubed: parse_rat(&k3)?,
            half_points: half,
        }),
        RrInput::Cy3 { a3, ac2, points } => {
            let points = points
                .iter()
                .map(|p| PeriodicTable::builtin(p).ok_or_else(|| Failure::input(format!("unknown built-in point {p:?}"))))
                .collect::<Result<_, _>>()?;
            RrData::CalabiYau3(CY3Data {
                a_cubed: parse_rat(&a3)?,
                a_c2: parse_rat(&ac2)?,
                points,
            })
        }
        RrInput::File { path } => serde_json::from_str(&read_json_arg(&path)?)?,
    };
    let h = data.hilbert_series().canonical();
    let numerator_over = match over {
        Some(d) => {
            let n = h.hilbert_numerator(&d)?;
            Some((d, n.to_string()))
        }
        None => None,
    };
    let out = RrOut {
        schema: "wgk.rr/1",
        expansion: expansion(&h, expand)?,
        series: h.to_string(),
        numerator_over,
        first_invalid: first_invalid_plurigenus(&data, 60).map(|(n, v)| (n, fmt_rat(&v))),
        data,
    };
    if json {
        return print_json(&out);
    }
    println!("{}", out.expansion.join(" "));
    println!("H = {}", out.series);
    if let Some((d, n)) = &out.numerator_over {
        println!("numerator over {d:?}: {n}");
    }
    if let Some((n, v)) = &out.first_invalid {
        println!("warning: p_{n} = {v} is not a non-negative integer");
    }
    Ok(())
}

#[derive(Serialize)]
struct SectionOut {
    schema: &'static str,
    model: String,
    sections: String,
    dim: usize,
    canonical: i64,
    series: String,
    expansion: Vec<String>,
    quasilinear: bool,
    embedding_weights: Vec<i64>,
    nonlinear_degrees: Vec<i64>,
    invariants: Option<Invariants>,
    basket: Option<SingularityReport>,
    rr: Option<RrReport>,
}

pub fn section(
    model: &str,
    cut: &[String],
    want_invariants: bool,
    want_basket: bool,
    rr: Option<&str>,
    depth: usize,
    json: bool,
) -> CmdResult {
    let model = parse_model(model)?;
    let spec = SectionSpec::new(parse_ints(cut)?)?;
    let dim = section_dim(&model, &spec)?;
    let h = section_series(&model, &spec, depth)?;
    let q = quasilinear_embed(&model, &spec);
    let inv = if want_invariants { Some(invariants(&h, dim)?) } else { None };
    let basket = if want_basket { Some(singularity_analysis(&model, &spec)?) } else { None };
    let rr = match rr {
        Some(kind) => Some(rr_roundtrip(&model, &spec, kind.parse()?, depth)?),
        None => None,
    };
    let out = SectionOut {
        schema: "wgk.section/1",
        model: model.label(),
        sections: spec.label(),
        dim,
        canonical: section_canonical(&model, &spec),
        series: h.to_string(),
        expansion: expansion(&h, 10)?,
        quasilinear: q.quasilinear,
        embedding_weights: q.weights,
        nonlinear_degrees: q.leftovers,
        invariants: inv,
        basket,
        rr,
    };
    let mismatch = out.rr.as_ref().filter(|r| !r.matches).map(|r| match &r.first_difference {
        Some(d) => format!("section series differs from Riemann-Roch at t^{}: {} vs {}", d.degree, d.section, d.rr),
        None => "section series differs from Riemann-Roch".to_string(),
    });
    if json {
        print_json(&out)?;
    } else {
        print_section(&out);
    }
    match mismatch {
        Some(m) => Err(Failure::inconsistent(m)),
        None => Ok(()),
    }
}

fn print_section(out: &SectionOut) {
    println!("{} ∩ {}", out.model, out.sections);
    println!("dim = {}", out.dim);
    println!("K = O({})", out.canonical);
    println!("H = {}", out.series);
    println!("expansion: {}", out.expansion.join(" "));
    let w = wgk_core::series::fmt_multiset(&out.embedding_weights);
    if out.quasilinear {
        println!("quasilinear: in P({w})");
    } else {
        println!("not quasilinear: in P({w}) with equations of degrees {:?}", out.nonlinear_degrees);
    }
    if let Some(inv) = &out.invariants {
        println!("A^{} = {}", out.dim, fmt_rat(&inv.a_top));
        println!("h0(A) = {}", fmt_rat(&inv.h0_a));
    }
    if let Some(b) = &out.basket {
        if b.basket.is_empty() {
            println!("basket: empty");
        }
        for e in &b.basket {
            println!("basket: {} x{}", e.singularity, e.count);
        }
        for d in &b.diagnostics {
            println!("diagnostic: {d}");
        }
    }
    if let Some(r) = &out.rr {
        println!("Riemann-Roch ({:?}): {}", r.kind, if r.matches { "match" } else { "MISMATCH" });
    }
}

pub struct MatchArgs {
    pub rr: Option<String>,
    pub series: Option<String>,
    pub gens: Vec<String>,
    pub points: Vec<String>,
    pub max_doubled: i64,
    pub max_u: i64,
    pub augment: i64,
}

pub fn matching(args: MatchArgs, depth: usize, json: bool) -> CmdResult {
    let input = match (&args.rr, &args.series) {
        (Some(p), _) => MatchInput::Rr(serde_json::from_str(&read_json_arg(p)?)?),
        (None, Some(p)) => MatchInput::Series(serde_json::from_str(&read_json_arg(p)?)?),
        (None, None) => return Err(Failure::input("need --rr or --series")),
    };
    let generator_sets = args
        .gens
        .iter()
        .map(|g| parse_ints(&g.split(',').map(str::to_string).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>, _>>()?;
    let required_basket = if args.points.is_empty() {
        None
    } else {
        Some(args.points.iter().map(|p| p.parse::<QuotientSingularity>()).collect::<Result<Vec<_>, _>>()?)
    };
    let options = MatchOptions {
        generator_sets,
        bounds: WeightBounds {
            max_doubled_weight: args.max_doubled,
            max_u: args.max_u,
        },
        required_basket,
        max_augment: args.augment,
        depth,
        ..MatchOptions::default()
    };
    if args.max_doubled < 1 || args.max_u < 0 || args.max_doubled > 64 || args.max_u > 64 {
        return Err(Failure::input("weight bounds out of range"));
    }
    let report = match_pipeline(&input, &options)?;
    if json {
        return print_json(&report);
    }
    println!("target: H = {}", report.series);
    println!("expansion: {}", report.expansion.join(" "));
    if !report.basket.is_empty() {
        println!("basket: {}", report.basket.join(", "));
    }
    if let Some(k) = report.canonical_degree {
        println!("K = O({k})");
    }
    println!("generator sets:");
    for (i, s) in report.generator_sets.iter().enumerate() {
        let degrees = wgk_core::matcher::superscript_multiset(&s.degrees);
        let status = match (&s.numerator, &s.note) {
            (_, Some(n)) => n.clone(),
            (Some(n), None) => format!("{} hit(s); numerator {n}", s.hits),
            (None, None) => String::new(),
        };
        println!("  [{i}] {{{degrees}}} ({}): {status}", s.sources.join(", "));
    }
    println!("candidates:");
    if report.candidates.is_empty() {
        println!("  none");
    }
    for c in &report.candidates {
        println!("  {}", candidate_line(c));
    }
    Ok(())
}

fn candidate_line(c: &Candidate) -> String {
    let status = match c.status {
        Status::Accepted => "accepted",
        Status::Rejected => "rejected",
    };
    let kind = format!("{:?}", c.kind).to_lowercase();
    let mut line = format!("{status} {} [{kind}, set {}]", c.label, c.generator_set);
    if !c.reasons.is_empty() {
        line.push_str(": ");
        line.push_str(&c.reasons.join("; "));
    }
    line
}

#[derive(Serialize)]
struct OracleRow {
    degree: i64,
    oracle: u64,
    series: String,
    agrees: bool,
}

pub fn oracle(model: &str, max_degree: i64, json: bool) -> CmdResult {
    if max_degree < 0 {
        return Err(Failure::input("max degree must be non-negative"));
    }
    let model = parse_model(model)?;
    let series = model.ambient_series()?.expand(max_degree as usize)?;
    let mut rows = Vec::new();
    for m in 0..=max_degree {
        let dim = graded_dimension_oracle(&model, m)?;
        let s = &series[m as usize];
        rows.push(OracleRow {
            degree: m,
            oracle: dim,
            series: fmt_rat(s),
            agrees: wgk_core::series::int(dim as i64) == *s,
        });
    }
    if json {
        print_json(&serde_json::json!({ "schema": "wgk.oracle/1", "model": model.label(), "rows": rows }))?;
    } else {
        println!("{}", model.label());
        for r in &rows {
            println!("  m={:<3} oracle {:<10} series {:<10} {}", r.degree, r.oracle, r.series, if r.agrees { "ok" } else { "MISMATCH" });
        }
    }
    if rows.iter().any(|r| !r.agrees) {
        return Err(Failure::inconsistent("oracle disagrees with the closed-form series"));
    }
    Ok(())
}
