use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use burniat::pipeline::{
    compute_pi1_from_arrangement, compute_pi1_variant, fixed_point_report, moduli_dimension_report, render_json,
    section_one_report, verify_theorem_table, TheoremRow,
};
use burniat::plane::{parse_arrangement, BurniatArrangement, BurniatClass, TriplePoint, ValidationReport};
use burniat::report::Report;
use burniat::Error;

#[derive(Parser)]
#[command(name = "burniat", version, about = "Fundamental groups of Burniat surfaces, verified exactly")]
struct Cli {
    /// Emit machine-readable JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The full table for K^2 = 6..2 and the two discrepancy checks.
    VerifyTheorem,
    /// Fundamental group for one value of K^2.
    Pi1 {
        #[arg(long = "k", value_parser = clap::value_parser!(i64).range(2..=6))]
        k: i64,
        /// Read the relations off this arrangement instead of the stated vectors.
        #[arg(long)]
        arrangement: Option<PathBuf>,
        /// Use the nodal representative for K^2 = 4.
        #[arg(long)]
        nodal: bool,
    },
    /// First homology for one value of K^2.
    H1 {
        #[arg(long = "k", value_parser = clap::value_parser!(i64).range(2..=6))]
        k: i64,
        #[arg(long)]
        nodal: bool,
    },
    /// Validate and classify a nine-line arrangement.
    ClassifyConfig {
        #[arg(long)]
        arrangement: PathBuf,
    },
    /// The 64 fixed points of gamma1 gamma2 gamma3 and their lambda-hat.
    FixedPoints,
    /// Sign table, splitting and K^2 = 2 constant on the elliptic curves.
    VerifySection1,
    /// Dimension of the primary family and its numerology.
    ModuliReport,
}

fn load(path: &Path) -> Result<BurniatArrangement, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_arrangement(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit<T: Serialize>(json: bool, command: &str, passed: bool, value: &T, text: impl FnOnce() -> String) -> ExitCode {
    let body = if json { render_json(command, passed, value) + "\n" } else { text() };
    // A closed pipe on stdout is not an error for a report.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn row_text(r: &TheoremRow) -> String {
    let variant = if r.nodal { " (nodal)" } else { "" };
    let mut s = format!("K^2 = {}{variant}: pi1 = {}, H1 = {}", r.k_squared, r.pi1, r.h1);
    if r.conditional {
        s += " (conditional on the topological input)";
    }
    if !r.matches_expected {
        s += &format!(" [expected pi1 = {}, H1 = {}]", r.expected_pi1, r.expected_h1);
    }
    if let Some(w) = &r.witness {
        s += &format!("\n  gamma -> {}", w.gamma_images.join(", "));
    }
    s + "\n"
}

#[derive(Serialize)]
struct Classification {
    validation: ValidationReport,
    class: Option<BurniatClass>,
    triple_points: Vec<TriplePoint>,
    lambda_hat_differences: Vec<[u8; 3]>,
    error: Option<String>,
}

fn classify_config(arr: &BurniatArrangement) -> Classification {
    let validation = arr.validate();
    let mut out =
        Classification { validation, class: None, triple_points: vec![], lambda_hat_differences: vec![], error: None };
    if !out.validation.is_valid() {
        return out;
    }
    match (arr.classify(), arr.triple_points()) {
        (Ok(c), Ok(t)) => {
            out.class = Some(c);
            out.triple_points = t;
            out.lambda_hat_differences = arr.lambda_hat_differences().unwrap_or_default();
        }
        (Err(e), _) | (_, Err(e)) => out.error = Some(e.to_string()),
    }
    out
}

fn classification_text(c: &Classification) -> String {
    let mut s = String::new();
    for v in &c.validation.violations {
        s += &format!("violation: {v}\n");
    }
    if let Some(e) = &c.error {
        s += &format!("error: {e}\n");
    }
    if let Some(class) = &c.class {
        s += &format!("K^2 = {}, {:?}, nodal = {}\n", class.k_squared, class.kind, class.nodal);
        for t in &c.triple_points {
            let labels: Vec<String> = t.incident_lines.iter().map(|l| l.to_string()).collect();
            s += &format!("  triple point {} on {}\n", t.location, labels.join(" "));
        }
    }
    s
}

fn report_cmd(json: bool, name: &str, r: &Report) -> ExitCode {
    emit(json, name, r.all_pass(), r, || r.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let json = cli.json;
    let err = |e: Error| e.to_string();
    Ok(match cli.command {
        Command::VerifyTheorem => {
            let t = verify_theorem_table().map_err(err)?;
            emit(json, "verify-theorem", t.report.all_pass(), &t, || {
                t.rows.iter().map(row_text).collect::<String>() + &t.report.to_string()
            })
        }
        Command::Pi1 { k, arrangement, nodal } => {
            let row = match arrangement {
                Some(p) => compute_pi1_from_arrangement(k, &load(&p)?).map_err(err)?,
                None => compute_pi1_variant(k, nodal).map_err(err)?,
            };
            emit(json, "pi1", row.matches_expected, &row, || row_text(&row))
        }
        Command::H1 { k, nodal } => {
            let row = compute_pi1_variant(k, nodal).map_err(err)?;
            #[derive(Serialize)]
            struct H1 {
                k_squared: i64,
                h1: String,
                expected_h1: String,
            }
            let out = H1 { k_squared: k, h1: row.h1.clone(), expected_h1: row.expected_h1.clone() };
            emit(json, "h1", row.h1 == row.expected_h1, &out, || format!("K^2 = {k}: H1 = {}\n", row.h1))
        }
        Command::ClassifyConfig { arrangement } => {
            let arr = load(&arrangement)?;
            let c = classify_config(&arr);
            let passed = c.validation.is_valid() && c.error.is_none();
            emit(json, "classify-config", passed, &c, || classification_text(&c))
        }
        Command::FixedPoints => report_cmd(json, "fixed-points", &fixed_point_report()),
        Command::VerifySection1 => report_cmd(json, "verify-section1", &section_one_report()),
        Command::ModuliReport => {
            let m = moduli_dimension_report();
            emit(json, "moduli-report", m.report.all_pass(), &m, || {
                format!("dimension = {}\n{}", m.dimension, m.report)
            })
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
