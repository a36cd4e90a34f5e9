//! `weylfix`: seeded, exact verification runs emitting a JSON report.
//!
//! Exit codes: 0 when every record passes, 1 when some check fails, 2 on an
//! input or configuration error.

mod report;
mod suite;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use weylfix::GaussRational;

use report::VerificationReport;
use suite::{Group, Inputs, Suite};

#[derive(Parser)]
#[command(
    name = "weylfix",
    version,
    about = "Exact verification runs for the G2 involution toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest degree of the Hilbert function tables.
    #[arg(long, global = true, default_value_t = 4)]
    kmax: usize,
    /// Initial number of sampled points on the adjoint variety.
    #[arg(long, global = true, default_value_t = 160)]
    samples: usize,
    /// Report destination; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Comma-separated check groups for `all`.
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    only: Vec<Group>,

    /// Curve file for `nb` and `project`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Projection center, comma-separated coordinates.
    #[arg(long, global = true)]
    center: Option<String>,
    /// Point of P^n tested against the secant variety of C_n.
    #[arg(long, global = true)]
    point: Option<String>,
    #[arg(long, global = true, requires = "ambient")]
    degree: Option<usize>,
    #[arg(long, global = true, requires = "degree")]
    ambient: Option<usize>,
    /// Regular Cartan element as "a,b"; repeatable.
    #[arg(long = "h", global = true)]
    h: Vec<String>,
    /// Two curve files in a common ambient space.
    #[arg(long, global = true, num_args = 2)]
    curves: Vec<PathBuf>,
    /// Curve configuration file for `genus`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Cohomology trace file for `lefschetz`.
    #[arg(long, global = true)]
    traces: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Every check group, or those listed in --only.
    All,
    /// Cartan data, involutions and quadrics through the adjoint variety.
    G2,
    /// Hilbert functions of the fixed curves for regular Cartan elements.
    FixedCurves,
    /// Normal bundle splitting types.
    Nb,
    /// Projection of a curve from a point.
    Project,
    /// Catalecticant and secant analysis.
    Secant,
    /// Generic and admissible splitting types.
    Types,
    /// Degrees of join scrolls.
    Joindeg,
    Sigma,
    Scroll {
        /// Accepted for compatibility; the demo is the only mode.
        #[arg(long)]
        demo: bool,
    },
    Genus,
    Lefschetz,
    Gl2check,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_coords(s: &str) -> Result<Vec<GaussRational>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<GaussRational>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_h(s: &str) -> Result<[i64; 2], String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("--h {s}: {e}")))
        .collect::<Result<_, _>>()?;
    <[i64; 2]>::try_from(parts).map_err(|_| format!("--h {s}: expected two integers"))
}

fn inputs(cli: &Cli) -> Result<Inputs, String> {
    Ok(Inputs {
        curve: cli.input.as_deref().map(read_json).transpose()?,
        center: cli.center.as_deref().map(parse_coords).transpose()?,
        point: cli.point.as_deref().map(parse_coords).transpose()?,
        types: cli.degree.zip(cli.ambient),
        hs: cli.h.iter().map(|s| parse_h(s)).collect::<Result<_, _>>()?,
        join: match cli.curves.as_slice() {
            [a, b] => Some((read_json(a)?, read_json(b)?)),
            _ => None,
        },
        genus: cli.config.as_deref().map(read_json).transpose()?,
        traces: cli.traces.as_deref().map(read_json).transpose()?,
    })
}

fn groups(cli: &Cli) -> Vec<Group> {
    let single = match &cli.command {
        None | Some(Command::All) => None,
        Some(Command::G2) => Some(Group::G2),
        Some(Command::FixedCurves) => Some(Group::FixedCurves),
        Some(Command::Nb) => Some(Group::Nb),
        Some(Command::Project) => Some(Group::Project),
        Some(Command::Secant) => Some(Group::Secant),
        Some(Command::Types) => Some(Group::Types),
        Some(Command::Joindeg) => Some(Group::Joindeg),
        Some(Command::Sigma) => Some(Group::Sigma),
        Some(Command::Scroll { .. }) => Some(Group::Scroll),
        Some(Command::Genus) => Some(Group::Genus),
        Some(Command::Lefschetz) => Some(Group::Lefschetz),
        Some(Command::Gl2check) => Some(Group::Gl2check),
    };
    let mut gs = match single {
        Some(g) => vec![g],
        None if cli.only.is_empty() => Group::all(),
        None => cli.only.clone(),
    };
    gs.sort();
    gs.dedup();
    gs
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let inputs = match inputs(&cli) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let suite = Suite::new(cli.seed, cli.kmax, cli.samples, inputs);
    let report = VerificationReport::new(cli.seed, suite.run(&groups(&cli)));
    let rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(if report.overall { 0 } else { 1 })
}
