use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stableform_cli::report::{self, load_json};
use stableform_cli::verify::{self, print_outcomes, write_csv, Tolerances, VerifyConfig};
use stableform_cli::CliError;

#[derive(Parser)]
#[command(
    name = "stableform",
    version,
    about = "Stable 3-forms, almost complex structures, and curvature on S3 x S3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a 3-form file by its orbit invariant
    Classify {
        /// JSON file: {"degree": 3, "coeffs": [20 numbers]}
        file: PathBuf,
    },
    /// Induce, project, and reinduce an almost complex structure
    Pipeline {
        /// JSON file: {"A": [a1,a2,a3], "B": [[..];3], "C": [c1,c2,c3]}
        file: PathBuf,
    },
    /// Ricci curvature of the induced Hermitian metric, oracle vs. closed form
    Curvature {
        /// JSON file with an orthogonal structure (as for pipeline)
        file: Option<PathBuf>,
        /// Family parameter t in (1/2, 1] instead of a file
        #[arg(long, conflicts_with = "file")]
        t: Option<f64>,
    },
    /// Run the seeded verification sweep over every identity
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Override for the canonical-point residual bound
        #[arg(long)]
        tol_anchors: Option<f64>,
        /// Override for the tau-formula sweep bound
        #[arg(long)]
        tol_tau_formula: Option<f64>,
        /// Override for the K block-formula bound
        #[arg(long)]
        tol_k_block: Option<f64>,
        /// Override for the det B sign margin
        #[arg(long)]
        tol_orbit_boundary: Option<f64>,
        /// Override for the projected-form residual bound
        #[arg(long)]
        tol_omega_projection: Option<f64>,
        /// Override for the metric formula/spectrum bound
        #[arg(long)]
        tol_hermitian_metric: Option<f64>,
        /// Override for the Ricci discrepancy bound
        #[arg(long)]
        tol_ricci: Option<f64>,
        /// Override for the nearly Kähler defect bound
        #[arg(long)]
        tol_nk_system: Option<f64>,
        /// Override for the exterior-algebra property bound
        #[arg(long)]
        tol_foundations: Option<f64>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// csv: per-sample residual rows; json: check summary
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn print_report<T: Serialize>(report: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Verification(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify { file } => {
            let psi = load_json(&file)?;
            print_report(&report::classify(&psi)?)
        }
        Command::Pipeline { file } => {
            let acs = load_json(&file)?;
            print_report(&report::pipeline(&acs)?)
        }
        Command::Curvature { file, t } => {
            let report = match (file, t) {
                (Some(path), None) => report::curvature(&load_json(&path)?)?,
                (None, Some(t)) => report::curvature_at(t)?,
                (None, None) => {
                    return Err(CliError::Input(
                        "provide a structure file or --t <value>".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
            };
            print_report(&report)
        }
        Command::Verify {
            seed,
            samples,
            tol_anchors,
            tol_tau_formula,
            tol_k_block,
            tol_orbit_boundary,
            tol_omega_projection,
            tol_hermitian_metric,
            tol_ricci,
            tol_nk_system,
            tol_foundations,
            out,
            format,
        } => {
            let mut tolerances = Tolerances::default();
            if let Some(v) = tol_anchors {
                tolerances.anchors = v;
            }
            if let Some(v) = tol_tau_formula {
                tolerances.tau_formula = v;
            }
            if let Some(v) = tol_k_block {
                tolerances.k_block = v;
            }
            if let Some(v) = tol_orbit_boundary {
                tolerances.orbit_boundary = v;
            }
            if let Some(v) = tol_omega_projection {
                tolerances.omega_projection = v;
            }
            if let Some(v) = tol_hermitian_metric {
                tolerances.hermitian_metric = v;
            }
            if let Some(v) = tol_ricci {
                tolerances.ricci = v;
            }
            if let Some(v) = tol_nk_system {
                tolerances.nk_system = v;
            }
            if let Some(v) = tol_foundations {
                tolerances.foundations = v;
            }
            let config = VerifyConfig { seed, samples, tolerances };
            let summary = verify::run(&config)?;
            // With --format json and no --out the payload owns stdout, so the
            // human-readable lines move to stderr to keep the payload pipeable.
            let payload_on_stdout = out.is_none() && format == Format::Json;
            if payload_on_stdout {
                print_outcomes(&summary, &mut io::stderr())
            } else {
                print_outcomes(&summary, &mut io::stdout())
            }
            .map_err(|e| CliError::Verification(format!("cannot write summary: {e}")))?;
            match (&out, format) {
                (Some(path), Format::Csv) => {
                    let mut buf = Vec::new();
                    write_csv(&summary, &mut buf)
                        .map_err(|e| CliError::Verification(format!("csv build failed: {e}")))?;
                    fs::write(path, buf).map_err(|e| {
                        CliError::Input(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                (Some(path), Format::Json) => {
                    let text = serde_json::to_string_pretty(&summary.report())
                        .map_err(|e| CliError::Verification(e.to_string()))?;
                    fs::write(path, text).map_err(|e| {
                        CliError::Input(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                (None, Format::Json) => {
                    let text = serde_json::to_string_pretty(&summary.report())
                        .map_err(|e| CliError::Verification(e.to_string()))?;
                    println!("{text}");
                }
                (None, Format::Csv) => {}
            }
            if let Some(check) = summary.first_failure() {
                return Err(CliError::Verification(format!(
                    "check failed: {} (worst {:e} > tol {:e})",
                    check.name, check.worst, check.tolerance
                )));
            }
            let done = format!(
                "all {} checks passed ({} samples, seed {})",
                summary.checks.len(),
                summary.config.samples,
                summary.config.seed
            );
            if payload_on_stdout {
                let _ = writeln!(io::stderr(), "{done}");
            } else {
                let _ = writeln!(io::stdout(), "{done}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
