//! `acvar`: seeded, reproducible experiment sweeps over `acvar-core`.
//!
//! Exit codes: 0 every check passed, 1 a property failed (witnesses are in the
//! report), 2 usage or input error, 3 the input is beyond the exact tooling
//! (non-rational spectrum or an enumeration cap).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use acvar_core::Error;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use commands::{acv, cherednik, freeness, quiver, Outcome};
use report::{Format, Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "acvar",
    version,
    about = "Exact experiments on the almost-commuting variety"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed of every random draw in the run.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Classify conjugated normal forms and compare with their construction labels.
    Classify(acv::ClassifyArgs),
    /// Build one normal form and check its moment map and cyclic dimensions.
    NormalForm(acv::NormalFormArgs),
    /// Count moment-map components of framed affine quivers.
    QuiverComponents(quiver::QuiverArgs),
    /// Check the Dunkl relations on random polynomials.
    DunklCheck(cherednik::DunklArgs),
    /// Certify freeness of a power of the alternating ideal up to a bidegree.
    Freeness(freeness::FreenessArgs),
    /// Compare relevance with nilpotency of the conormal fibre over all Jordan types.
    StrataScan(acv::StrataScanArgs),
    /// Rank of the PBW filtration pieces against the expected dimensions.
    PbwCount(cherednik::PbwArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::NormalForm(_) => "normal-form",
            Command::QuiverComponents(_) => "quiver-components",
            Command::DunklCheck(_) => "dunkl-check",
            Command::Freeness(_) => "freeness",
            Command::StrataScan(_) => "strata-scan",
            Command::PbwCount(_) => "pbw-count",
        }
    }

    fn run(&self, seed: u64) -> acvar_core::Result<Outcome> {
        match self {
            Command::Classify(a) => a.run(seed),
            Command::NormalForm(a) => a.run(seed),
            Command::QuiverComponents(a) => a.run(),
            Command::DunklCheck(a) => a.run(seed),
            Command::Freeness(a) => a.run(),
            Command::StrataScan(a) => a.run(seed),
            Command::PbwCount(a) => a.run(),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_capability() {
        3
    } else if matches!(e, Error::InternalInconsistency(_)) {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command.run(cli.seed) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("acvar {}: {e}", cli.command.name());
            return ExitCode::from(exit_code(&e));
        }
    };
    // The output path is not part of the configuration: moving a report must
    // not change its hash.
    let config = json!({ "seed": cli.seed, "format": cli.format, "args": cli.command });
    let report = Report::new(
        cli.command.name(),
        config,
        outcome.rows,
        outcome.failures,
        outcome.summary,
    );
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("acvar: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    eprintln!("{}: {}", cli.command.name(), report.summary);
    for f in &report.failures {
        eprintln!("  FAIL {}; rerun: {}", f.detail, f.rerun);
    }
    match report.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
    }
}
