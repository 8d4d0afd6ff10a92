use clap::ValueEnum;
use serde::Serialize;
use wgk_core::sections::graded_dimension_oracle;
use wgk_core::series::int;
use wgk_core::wgrass25::{pfaffian_equations, verify_gr_identities_with, CheckResult, IdentityReport};
use wgk_core::wogr510::{
    first_syzygies, verify_ogr_syzygies_with, verify_second_syzygy_fixtures, verify_spinor_parametrization,
    VERTEX_COUNT,
};
use wgk_core::{AmbientModel, GrWeights, OGrWeights};

use crate::{fixtures, print_json, CmdResult, Failure};

/// Deliberate corruptions used to check that failures are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Negate the first Pfaffian.
    PfaffianSign,
    /// Negate one entry of the first-syzygy table.
    SyzygyEntry,
}

#[derive(Serialize)]
struct VerifyReport {
    schema: &'static str,
    passed: bool,
    total: usize,
    failed: usize,
    syzygy_columns_passed: usize,
    checks: Vec<CheckResult>,
}

pub fn run(fault: Option<Fault>, depth: usize, json: bool) -> CmdResult {
    let mut pf = pfaffian_equations();
    if fault == Some(Fault::PfaffianSign) {
        pf[0] = -&pf[0];
    }
    let mut table = first_syzygies();
    if fault == Some(Fault::SyzygyEntry) {
        table[3][2] = -&table[3][2];
    }

    let mut report = IdentityReport::default();
    report.extend(verify_gr_identities_with(&pf));
    report.extend(verify_spinor_parametrization());
    let syz = verify_ogr_syzygies_with(&table);
    let columns = (0..VERTEX_COUNT)
        .filter(|&v| {
            let prefix = format!("T({}) ", wgk_core::wogr510::vertex_name(v));
            syz.checks.iter().filter(|c| c.name.starts_with(&prefix)).all(|c| c.passed)
        })
        .count();
    report.extend(syz);
    let ogr = OGrWeights::from_ints([0, 0, 1, 1, 2], 1).map_err(Failure::from)?;
    report.extend(verify_second_syzygy_fixtures(&ogr));
    report.extend(oracle_checks()?);
    let file = fixtures::load()?;
    report.extend(fixtures::check_all(&file, depth));

    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let out = VerifyReport {
        schema: "wgk.verify/1",
        passed: failed == 0,
        total: report.checks.len(),
        failed,
        syzygy_columns_passed: columns,
        checks: report.checks,
    };
    if json {
        print_json(&out)?;
    } else {
        for c in &out.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            println!("{tag} {}: {}", c.name, c.detail);
        }
        println!("{columns}/{VERTEX_COUNT} syzygy columns pass");
        println!("{}/{} checks pass", out.total - failed, out.total);
    }
    if failed > 0 {
        let names: Vec<&str> = out.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        return Err(Failure {
            code: 1,
            message: format!("{failed} check(s) failed: {}", names.join("; ")),
        });
    }
    Ok(())
}

/// Graded dimensions of small models by linear algebra against the series.
fn oracle_checks() -> Result<IdentityReport, Failure> {
    let cases = [
        (AmbientModel::gr(GrWeights::from_doubled([1; 5], 0)?), 3),
        (AmbientModel::gr(GrWeights::from_doubled([1, 1, 1, 1, 3], 0)?), 4),
        (AmbientModel::ogr(OGrWeights::from_ints([0; 5], 1)?), 2),
        (AmbientModel::ogr(OGrWeights::from_ints([1, 0, 0, 0, 0], 1)?), 3),
    ];
    let mut report = IdentityReport::default();
    for (model, max) in cases {
        let series = model.ambient_series()?.expand(max as usize)?;
        for m in 0..=max {
            let dim = graded_dimension_oracle(&model, m)?;
            report.push(
                format!("oracle {} degree {m}", model.label()),
                int(dim as i64) == series[m as usize],
                format!("oracle {dim}, series {}", series[m as usize]),
            );
        }
    }
    Ok(report)
}
