use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use sendov_lab::bounds::{bound_b, threshold_a, ThresholdTable};
use sendov_lab::harness::write_stdout;
use sendov_lab::harness::{
    emit_report, read_polynomial, run_lemma_grid, run_search, Format, Mode, RunConfig,
    DEFAULT_MIN_SEP, VERIFIED_DEGREE,
};
use sendov_lab::sendov::{rotate_to_positive_real, structural_checks, Verdict};
use sendov_lab::theorem::{
    constant_term, proof_audit, remark2_audit, theorem1_verdict, Overall, ZERO_CONSTANT_TOL,
};
use sendov_lab::Result;

#[derive(Parser)]
#[command(
    name = "sendov-lab",
    version,
    about = "Sendov conjecture checks for simple-zero polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sendov distances, threshold verdict and structural checks for one polynomial
    Check {
        /// JSON file with "roots" or "coeffs"
        file: PathBuf,
    },
    /// a_n, alpha_j, their product and, given r, the threshold A_n
    Thresholds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<f64>,
    },
    /// Replay the contradiction argument at one root
    Audit {
        file: PathBuf,
        /// 1-based index into the canonically ordered roots
        #[arg(long)]
        root: usize,
    },
    /// Random simple-zero polynomials: verdicts and audits in bulk
    Search {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MIN_SEP)]
        min_sep: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Grid sweeps of the frame closed forms and the scalar inequalities
    LemmaGrid {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    write_stdout(text.as_bytes())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { file } => {
            let p = read_polynomial(&file)?;
            let verdict = theorem1_verdict(&p)?;
            let structural = structural_checks(&p)?;
            let bad = verdict.critical_finding
                || verdict.report.verdict_per_root.contains(&Verdict::Fails)
                || !structural.all_passed();
            print_json(&json!({ "verdict": verdict, "structural": structural }))?;
            Ok(u8::from(bad))
        }
        Command::Thresholds { n, r } => {
            let table = ThresholdTable::new(n)?;
            let at_r = match r {
                Some(r) => Some(json!({
                    "r": r,
                    "A_n": threshold_a(n, r)?,
                    "B_n_at_r2_over_24": bound_b(n, r * r / 24.0)?,
                })),
                None => None,
            };
            print_json(&json!({ "table": table, "at_r": at_r }))?;
            Ok(0)
        }
        Command::Audit { file, root } => {
            let p = read_polynomial(&file)?;
            let j = root
                .checked_sub(1)
                .ok_or_else(|| sendov_lab::Error::IndexOutOfRange {
                    index: 0,
                    degree: p.degree(),
                })?;
            let rot = rotate_to_positive_real(&p, j)?;
            let trace = proof_audit(&rot.form, rot.index)?;
            let zero_constant = if constant_term(&p).norm() <= ZERO_CONSTANT_TOL {
                Some(remark2_audit(&rot.form, rot.index)?)
            } else {
                None
            };
            let bad = trace.overall == Overall::ContradictionFound
                || zero_constant
                    .as_ref()
                    .is_some_and(|t| t.overall == Overall::ContradictionFound);
            print_json(
                &json!({ "phase": rot.phase, "audit": trace, "zero_constant": zero_constant }),
            )?;
            Ok(u8::from(bad))
        }
        Command::Search {
            n_min,
            n_max,
            samples,
            seed,
            min_sep,
            out,
            format,
        } => {
            let config = RunConfig {
                mode: Mode::Search,
                n_min,
                n_max,
                samples,
                seed,
                min_sep,
                threads: 0,
                out: out.clone(),
                format,
            }
            .with_env_threads();
            let output = run_search(&config)?;
            for rec in output
                .records
                .iter()
                .filter(|r| r.has_failure() || r.is_contradiction())
            {
                let tag = if rec.degree <= VERIFIED_DEGREE {
                    "defect"
                } else {
                    "violation"
                };
                eprintln!(
                    "{tag}: degree={} sample={} seed={} roots={}",
                    rec.degree,
                    rec.sample_index,
                    rec.seed,
                    serde_json::to_string(&json!({ "roots": rec.roots }))?
                );
            }
            emit_report(&output, format, out.as_deref())?;
            eprintln!("{}", serde_json::to_string(&output.summary)?);
            Ok(output.summary.exit_code() as u8)
        }
        Command::LemmaGrid { n_min, n_max, seed } => {
            let report = run_lemma_grid(n_min, n_max, seed)?;
            print_json(&report)?;
            Ok(u8::from(report.violations > 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
