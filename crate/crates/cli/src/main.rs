//! `wgk`: inspect weighted Grassmannian models, run the identity and fixture
//! suites, compute Riemann-Roch series, analyse sections and match targets.

mod fixtures;
mod info;
mod run;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wgk_core::series::parse_rat;
use wgk_core::{AmbientModel, Error};

#[derive(Parser)]
#[command(name = "wgk", version, about = "Weighted Grassmannian toolkit")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Series expansion depth.
    #[arg(long, global = true, env = "WGK_DEPTH", default_value_t = wgk_core::sections::DEFAULT_DEPTH)]
    depth: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Wgr,
    Wogr,
}

#[derive(Subcommand)]
enum Command {
    /// Coordinate weights, numerology, series, degree, canonical class and charts.
    Info {
        family: FamilyArg,
        /// Five weights: fractions with denominator at most 2, or doubled integers with --doubled.
        #[arg(long = "w", value_delimiter = ',', allow_hyphen_values = true, required = true)]
        w: Vec<String>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        u: i64,
        /// Read --w as doubled integers.
        #[arg(long)]
        doubled: bool,
    },
    /// Symbolic identities, syzygy tables, oracle comparisons and the fixture suite.
    Verify {
        #[arg(long, hide = true)]
        inject_fault: Option<verify::Fault>,
    },
    /// Hilbert series from Riemann-Roch data.
    Rr {
        #[command(subcommand)]
        input: RrInput,
        /// Number of plurigenera to print after p_0.
        #[arg(long, default_value_t = 8, global = true)]
        expand: usize,
        /// Also print the numerator over these denominator degrees.
        #[arg(long, value_delimiter = ',', global = true)]
        over: Option<Vec<i64>>,
    },
    /// Quasilinear or general sections of an ambient model.
    Section {
        /// Model JSON, inline or as a file path.
        #[arg(long)]
        model: String,
        /// Section degrees.
        #[arg(long, value_delimiter = ',', default_value = "")]
        cut: Vec<String>,
        /// Top self-intersection and h^0 of the polarisation.
        #[arg(long)]
        invariants: bool,
        /// Singularity basket of the section.
        #[arg(long)]
        basket: bool,
        /// Compare with the Riemann-Roch series of the given kind.
        #[arg(long)]
        rr: Option<String>,
    },
    /// Rank ambient models that explain a target.
    Match {
        /// Riemann-Roch data file.
        #[arg(long, conflicts_with = "series", required_unless_present = "series")]
        rr: Option<String>,
        /// Hilbert series file.
        #[arg(long)]
        series: Option<String>,
        /// Extra generator multiset to try, comma separated (repeatable).
        #[arg(long)]
        gens: Vec<String>,
        /// Required singularity such as 1/5(3,3,4) (repeatable; replaces the basket read from the input).
        #[arg(long = "point")]
        points: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_doubled: i64,
        #[arg(long, default_value_t = 4)]
        max_u: i64,
        #[arg(long, default_value_t = 6)]
        augment: i64,
    },
    /// Graded dimensions by linear algebra against the closed-form series.
    Oracle {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 4)]
        max_degree: i64,
    },
}

#[derive(Subcommand)]
enum RrInput {
    /// Canonical 3-fold with 1/2(1,1,1) points.
    Can3 {
        #[arg(long)]
        pg: i64,
        #[arg(long)]
        k3: String,
        #[arg(long, default_value_t = 0)]
        half: u32,
    },
    /// Polarised Calabi-Yau 3-fold.
    Cy3 {
        #[arg(long)]
        a3: String,
        #[arg(long)]
        ac2: String,
        /// Built-in local contribution by name (repeatable).
        #[arg(long = "point")]
        points: Vec<String>,
    },
    /// Riemann-Roch data as JSON.
    File { path: String },
}

/// A failed command: exit status 1 (verification), 2 (bad input) or
/// 3 (internal inconsistency).
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn inconsistent(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Mismatch(_) | Error::Verification(_) => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Self::input(format!("invalid JSON: {e}"))
    }
}

pub type CmdResult = Result<(), Failure>;

/// Weights as fractions with denominator at most 2, or doubled integers.
pub fn parse_doubled_weights(raw: &[String], doubled: bool) -> Result<[i64; 5], Failure> {
    if raw.len() != 5 {
        return Err(Failure::input(format!("expected 5 weights, got {}", raw.len())));
    }
    let mut out = [0; 5];
    for (slot, s) in out.iter_mut().zip(raw) {
        if doubled {
            *slot = s.trim().parse().map_err(|_| Failure::input(format!("not an integer: {s:?}")))?;
        } else {
            let q = parse_rat(s)? * wgk_core::series::int(2);
            if !q.is_integer() {
                return Err(Failure::input(format!("weight {s} is not a half-integer")));
            }
            *slot = wgk_core::series::to_i64(&q).ok_or_else(|| Failure::input("weight too large"))?;
        }
    }
    Ok(out)
}

pub fn parse_ints(raw: &[String]) -> Result<Vec<i64>, Failure> {
    raw.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Failure::input(format!("not an integer: {s:?}"))))
        .collect()
}

/// Inline JSON if it starts with `{`, otherwise a file path.
pub fn read_json_arg(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::input(format!("cannot read {arg}: {e}")))
    }
}

pub fn parse_model(arg: &str) -> Result<AmbientModel, Failure> {
    Ok(serde_json::from_str(&read_json_arg(arg)?)?)
}

pub fn print_json<T: serde::Serialize>(value: &T) -> CmdResult {
    println!("{}", serde_json::to_string_pretty(value).map_err(|e| Failure::inconsistent(e.to_string()))?);
    Ok(())
}

fn dispatch(cli: Cli) -> CmdResult {
    let json = cli.json;
    let depth = cli.depth;
    if depth == 0 {
        return Err(Failure::input("depth must be positive"));
    }
    match cli.command {
        Command::Info { family, w, u, doubled } => info::run(family, &w, u, doubled, json),
        Command::Verify { inject_fault } => verify::run(inject_fault, depth, json),
        Command::Rr { input, expand, over } => run::rr(input, expand, over, json),
        Command::Section { model, cut, invariants, basket, rr } => {
            run::section(&model, &cut, invariants, basket, rr.as_deref(), depth, json)
        }
        Command::Match { rr, series, gens, points, max_doubled, max_u, augment } => run::matching(
            run::MatchArgs {
                rr,
                series,
                gens,
                points,
                max_doubled,
                max_u,
                augment,
            },
            depth,
            json,
        ),
        Command::Oracle { model, max_degree } => run::oracle(&model, max_degree, json),
    }
}

fn main() -> ExitCode {
    // Exit quietly when piped into `head` and friends.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("wgk: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
