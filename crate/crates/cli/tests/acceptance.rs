//! Acceptance criteria 1-9. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits non-zero if any fails.

use std::collections::BTreeMap;
use std::panic;
use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use wgk_core::orbifold_rr::PeriodicTable;
use wgk_core::sections::{
    invariants, rr_roundtrip, section_canonical, section_dim, section_series, singularity_analysis, RrKind,
};
use wgk_core::series::{int, rat, LaurentPoly};
use wgk_core::{AmbientModel, CY3Data, Canonical3Data, GrWeights, HilbertSeries, OGrWeights, RrData, SectionSpec};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const DEPTH: usize = 40;

fn wgk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wgk"))
        .args(args)
        .output()
        .expect("spawn wgk")
}

fn wgk_json(args: &[&str]) -> Result<Value, String> {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = wgk(&all);
    ensure!(
        out.status.success(),
        "wgk {} exited {:?}: {}",
        args.join(" "),
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).map_err(|e| format!("wgk {}: bad JSON: {e}", args.join(" ")))
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string)).collect())
        .unwrap_or_default()
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_i64).collect()).unwrap_or_default()
}

fn gr(w2: [i64; 5]) -> AmbientModel {
    AmbientModel::gr(GrWeights::from_doubled(w2, 0).unwrap())
}

fn ogr(w: [i64; 5], u: i64) -> AmbientModel {
    AmbientModel::ogr(OGrWeights::from_ints(w, u).unwrap())
}

fn cut(d: &[i64]) -> SectionSpec {
    SectionSpec::new(d.to_vec()).unwrap()
}

/// The five worked sections: name, model, section degrees.
fn worked_sections() -> Vec<(&'static str, AmbientModel, SectionSpec)> {
    vec![
        ("Fano (2)^3", gr([1, 1, 1, 1, 3]), cut(&[2, 2, 2])),
        ("coned K3 (2)^5", gr([1, 1, 1, 3, 3]).coned(&[1]), cut(&[2; 5])),
        ("K3 (2)^3(3)", gr([1, 1, 1, 3, 3]), cut(&[2, 2, 2, 3])),
        ("canonical 3-fold", ogr([1, 0, 0, 0, 0], 1), cut(&[1, 2, 2, 2, 2, 2, 2])),
        ("Calabi-Yau 3-fold", ogr([0, 0, 1, 1, 2], 1), cut(&[2, 2, 3, 4, 4, 4, 5])),
    ]
}

fn criterion1() -> Check {
    let r = wgk_json(&["verify"])?;
    ensure!(r["passed"] == true, "verify reported {} failures", r["failed"]);
    let checks = r["checks"].as_array().ok_or("no checks")?;
    let count = |prefix: &str| {
        checks
            .iter()
            .filter(|c| c["name"].as_str().is_some_and(|n| n.starts_with(prefix)))
            .count()
    };
    ensure!(count("(a) M*Pf(M)") == 5, "expected 5 cubic components, found {}", count("(a) M*Pf(M)"));
    ensure!(count("(b) relation") == 10, "expected 10 tautological relations");
    ensure!(count("e(1,M,Pf M)") == 10, "expected 10 spinor checks");
    ensure!(r["syzygy_columns_passed"] == 16, "syzygy columns: {}", r["syzygy_columns_passed"]);

    let bad = wgk(&["verify", "--inject-fault", "pfaffian-sign"]);
    ensure!(bad.status.code() == Some(1), "pfaffian fault exited {:?}", bad.status.code());
    ensure!(String::from_utf8_lossy(&bad.stderr).contains("(a)"), "pfaffian fault not named");
    let bad = wgk(&["--json", "verify", "--inject-fault", "syzygy-entry"]);
    ensure!(bad.status.code() == Some(1), "syzygy fault exited {:?}", bad.status.code());
    let r: Value = serde_json::from_slice(&bad.stdout).map_err(|e| e.to_string())?;
    ensure!(r["syzygy_columns_passed"] == 15, "syzygy fault left {} columns", r["syzygy_columns_passed"]);
    Ok(())
}

fn criterion2() -> Check {
    for (w, ambient, pf) in [
        ("1/2,1/2,1/2,1/2,3/2", "P(1^6,2^4)", [2, 3, 3, 3, 3]),
        ("1/2,1/2,1/2,3/2,3/2", "P(1^3,2^6,3)", [3, 3, 4, 4, 4]),
    ] {
        let r = wgk_json(&["info", "wgr", "--w", w])?;
        ensure!(r["ambient"] == ambient, "{w}: ambient {}", r["ambient"]);
        ensure!(ints(&r["equation_degrees"]) == pf, "{w}: Pfaffian degrees {}", r["equation_degrees"]);
    }
    Ok(())
}

fn criterion3() -> Check {
    let fano = GrWeights::from_doubled([1, 1, 1, 1, 3], 0).unwrap();
    ensure!(fano.degree() * int(8) == rat(13, 2), "degree x 8 = {}", fano.degree() * int(8));
    let k3w = GrWeights::from_doubled([1, 1, 1, 3, 3], 0).unwrap();
    let cases = [
        (AmbientModel::gr(fano), cut(&[2, 2, 2]), rat(13, 2), 6),
        (AmbientModel::gr(k3w).coned(&[1]), cut(&[2; 5]), rat(14, 3), 4),
        (AmbientModel::gr(k3w), cut(&[2, 2, 2, 3]), rat(7, 2), 3),
    ];
    for (model, spec, top, h0) in cases {
        let h = section_series(&model, &spec, DEPTH).map_err(|e| e.to_string())?;
        let inv = invariants(&h, section_dim(&model, &spec).unwrap()).map_err(|e| e.to_string())?;
        let name = format!("{} ∩ {}", model.label(), spec.label());
        ensure!(inv.a_top == top, "{name}: top intersection {}", inv.a_top);
        ensure!(inv.h0_a == int(h0), "{name}: h0 {}", inv.h0_a);
    }
    Ok(())
}

fn criterion4() -> Check {
    let r = wgk_json(&["rr", "--over", "1,1,1,2", "can3", "--pg", "7", "--k3", "21", "--half", "2"])?;
    let want: Vec<String> = [1, 7, 29, 83, 190, 370, 645, 1035, 1562].iter().map(i64::to_string).collect();
    ensure!(strings(&r["expansion"]) == want, "canonical expansion {:?}", strings(&r["expansion"]));
    let num = &r["numerator_over"][1];
    ensure!(num == "1 + 4t + 10t^2 + 12t^3 + 10t^4 + 4t^5 + t^6", "canonical numerator {num}");

    let r = wgk_json(&["rr", "cy3", "--a3", "6/5", "--ac2", "108/5", "--point", "1/5(3,3,4)"])?;
    let want: Vec<String> = [1, 2, 5, 11, 20, 34, 54, 81, 117].iter().map(i64::to_string).collect();
    ensure!(strings(&r["expansion"]) == want, "CY expansion {:?}", strings(&r["expansion"]));

    let data = RrData::CalabiYau3(CY3Data {
        a_cubed: rat(6, 5),
        a_c2: rat(108, 5),
        points: vec![PeriodicTable::builtin("1/5(3,3,4)").unwrap()],
    });
    let printed = HilbertSeries::new(
        LaurentPoly::from_ints([(0, 1), (1, -2), (2, 3), (3, -1), (4, -1), (5, 1), (6, 1), (7, -3), (8, 2), (9, -1)]),
        vec![1, 1, 1, 1, 5],
    )
    .unwrap();
    ensure!(data.hilbert_series().same_function(&printed), "CY series differs from the closed form");
    let can = RrData::Canonical3(Canonical3Data { pg: 7, k_cubed: int(21), half_points: 2 });
    let num = can.hilbert_series().hilbert_numerator(&[1, 1, 1, 2]).map_err(|e| e.to_string())?;
    ensure!(
        num == LaurentPoly::from_ints([(0, 1), (1, 4), (2, 10), (3, 12), (4, 10), (5, 4), (6, 1)]),
        "library numerator {num}"
    );
    Ok(())
}

fn accepted(report: &Value) -> Vec<&Value> {
    report["candidates"]
        .as_array()
        .map(|a| a.iter().filter(|c| c["status"] == "accepted").collect())
        .unwrap_or_default()
}

fn ogr_of(model: &Value) -> Result<OGrWeights, String> {
    let m: AmbientModel = serde_json::from_value(model.clone()).map_err(|e| e.to_string())?;
    ensure!(m.cone.is_empty(), "accepted model is coned: {}", m.label());
    match m.base {
        wgk_core::Family::OGr(w) => Ok(w),
        wgk_core::Family::Gr(w) => Err(format!("accepted model is {}", w.label())),
    }
}

fn criterion5() -> Check {
    let dir = std::env::temp_dir().join(format!("wgk-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let can3 = dir.join("can3.json");
    let cy3 = dir.join("cy3.json");
    std::fs::write(&can3, r#"{"pg":7,"K3":"21/1","half_points":2}"#).map_err(|e| e.to_string())?;
    std::fs::write(
        &cy3,
        r#"{"A3":"6/5","Ac2":"108/5","points":[{"r":5,"c":["0","0","-1/5","1/5","0"]}]}"#,
    )
    .map_err(|e| e.to_string())?;

    let r = wgk_json(&["match", "--rr", can3.to_str().unwrap()])?;
    let acc = accepted(&r);
    ensure!(acc.len() == 1, "example 1: {} accepted candidates", acc.len());
    let w = ogr_of(&acc[0]["model"])?;
    let want = OGrWeights::from_ints([1, 0, 0, 0, 0], 1).unwrap();
    ensure!(w.canonical_form() == want.canonical_form(), "example 1 accepted {}", w.label());
    let num = acc[0]["numerator"].as_str().unwrap_or_default();
    ensure!(num.starts_with("1 - t^2 - 8t^3 + 7t^4 + 8t^5 - 8t^7"), "example 1 numerator {num}");

    let r = wgk_json(&["match", "--rr", cy3.to_str().unwrap()])?;
    let acc = accepted(&r);
    ensure!(acc.len() == 1, "example 2: {} accepted candidates", acc.len());
    let w = ogr_of(&acc[0]["model"])?;
    let want = OGrWeights::from_ints([0, 0, 1, 1, 2], 1).unwrap();
    ensure!(w.canonical_form() == want.canonical_form(), "example 2 accepted {}", w.label());
    let mirage = r["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["label"] == "C[1]wGr(1,1,1,2,2) ∩ (6)")
        .ok_or("mirage not listed")?;
    ensure!(mirage["status"] == "rejected", "mirage status {}", mirage["status"]);
    let reason = mirage["filter"]["reason"].as_str().unwrap_or_default();
    ensure!(reason.contains("divisible by 5"), "mirage reason {reason:?}");
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

fn criterion6() -> Check {
    let w = worked_sections();
    for (i, want) in [(0, -1), (3, 1), (4, 0)] {
        let (name, model, spec) = &w[i];
        let k = section_canonical(model, spec);
        ensure!(k == want, "{name}: K = O({k}), expected O({want})");
    }
    Ok(())
}

fn criterion7() -> Check {
    let want: [&[(&str, u64)]; 5] = [
        &[("1/2(1,1,1)", 1)],
        &[("1/3(1,2)", 1)],
        &[("1/2(1,1)", 3)],
        &[("1/2(1,1,1)", 2)],
        &[("1/3(1,1,1)", 1), ("1/3(2,2,2)", 1), ("1/5(3,3,4)", 1)],
    ];
    for ((name, model, spec), want) in worked_sections().iter().zip(want) {
        let r = singularity_analysis(model, spec).map_err(|e| e.to_string())?;
        let got: BTreeMap<String, u64> = r.basket_map().into_iter().map(|(q, n)| (q.to_string(), n)).collect();
        let want: BTreeMap<String, u64> = want.iter().map(|&(q, n)| (q.to_string(), n)).collect();
        ensure!(got == want, "{name}: basket {got:?}");
        ensure!(r.diagnostics.is_empty(), "{name}: diagnostics {:?}", r.diagnostics);
    }
    let w = worked_sections();
    for (i, kind) in [(3, RrKind::Canonical3), (4, RrKind::Cy3)] {
        let (name, model, spec) = &w[i];
        let r = rr_roundtrip(model, spec, kind, DEPTH).map_err(|e| e.to_string())?;
        ensure!(r.matches, "{name}: Riemann-Roch round trip differs at {:?}", r.first_difference);
    }
    Ok(())
}

fn oracle_rows(model: &str, max: i64) -> Result<Vec<i64>, String> {
    let r = wgk_json(&["oracle", "--model", model, "--max-degree", &max.to_string()])?;
    let rows = r["rows"].as_array().ok_or("no rows")?;
    for row in rows {
        ensure!(row["agrees"] == true, "{model} degree {}: {row}", row["degree"]);
    }
    Ok(rows.iter().filter_map(|row| row["oracle"].as_i64()).collect())
}

fn criterion8() -> Check {
    let straight = oracle_rows(r#"{"family":"wgr25","w2":[1,1,1,1,1]}"#, 6)?;
    ensure!(straight == [1, 10, 50, 175, 490, 1176, 2520], "straight wGr {straight:?}");
    let straight = oracle_rows(r#"{"family":"wogr510","w2":[0,0,0,0,0],"u2":2}"#, 2)?;
    ensure!(straight == [1, 16, 126], "straight wOGr {straight:?}");
    for model in [
        r#"{"family":"wgr25","w2":[1,1,1,1,3]}"#,
        r#"{"family":"wgr25","w2":[1,1,1,3,3]}"#,
        r#"{"family":"wogr510","w2":[2,0,0,0,0],"u2":2}"#,
        r#"{"family":"wogr510","w2":[0,0,2,2,4],"u2":2}"#,
    ] {
        oracle_rows(model, 5)?;
    }
    Ok(())
}

/// `-t^deg p(1/t) == p`.
fn twisted_palindrome(p: &LaurentPoly, deg: i64) -> bool {
    p.min_exp() == Some(0) && p.max_exp() == Some(deg) && p.invert_variable().shift(deg).scale(&int(-1)) == *p
}

fn criterion9() -> Check {
    const SAMPLES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2510);
    let mut n = 0;
    while n < SAMPLES {
        let parity = rng.gen_range(0..2);
        let w2: [i64; 5] = std::array::from_fn(|_| 2 * rng.gen_range(-5..=6) + parity);
        let u2 = 2 * rng.gen_range(-3..=3);
        let Ok(w) = GrWeights::from_doubled(w2, u2) else { continue };
        n += 1;
        let num = w.numerology();
        ensure!(int(num.adjunction) == &num.d * int(2), "{}: adjunction {} vs 2d", w.label(), num.adjunction);
        ensure!(twisted_palindrome(&w.numerator(), num.adjunction), "{}: numerator not symmetric", w.label());
    }
    let mut n = 0;
    while n < SAMPLES {
        let parity = rng.gen_range(0..2);
        let w2: [i64; 5] = std::array::from_fn(|_| 2 * rng.gen_range(-4..=4) + parity);
        let u2 = 2 * rng.gen_range(-4..=6);
        let Ok(w) = OGrWeights::from_doubled(w2, u2) else { continue };
        n += 1;
        let deg = &w.d() * int(4);
        ensure!(deg == int(w.adjunction()), "{}: adjunction {} vs 4d", w.label(), w.adjunction());
        let p = w.numerator().map_err(|e| e.to_string())?;
        ensure!(twisted_palindrome(&p, w.adjunction()), "{}: numerator not symmetric", w.label());
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("symbolic identities", criterion1),
        ("wGr numerology", criterion2),
        ("degree and section cross-checks", criterion3),
        ("orbifold Riemann-Roch", criterion4),
        ("recognition end-to-end", criterion5),
        ("adjunction", criterion6),
        ("singularity baskets", criterion7),
        ("oracle equivalence", criterion8),
        ("Gorenstein symmetry", criterion9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {} ({name}): PASS [{secs:.2}s]", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.2}s]: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
