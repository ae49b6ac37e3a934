//! Command-line front end.
//!
//! Exit codes: 0 success, 1 the joint-information bound was violated (a
//! numerics bug), 2 invalid arguments, 3 a modeling precondition failed
//! (state does not fit the grid), 4 the grid cross-check of a measurement
//! disagreed with the closed form.

mod commands;
mod fractions;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::format;
use crate::thermo::ThermoError;
use crate::wavegrid::WavegridError;

pub use fractions::{parse_fraction_list, FractionListError, MAX_FRACTIONS};

/// Environment variable that overrides the number of significant digits.
pub const DIGITS_ENV: &str = "LANDAUER_DIGITS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_BOUND_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_CROSS_CHECK: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "landauer",
    version,
    about = "Joint position/momentum information and thermodynamic ledgers for erasure, measurement and Maxwell's demon"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Position, momentum and joint entropies of a grid state (natural units, h = 1).
    Entropy(EntropyArgs),
    /// Work/heat/entropy ledger of resetting a one-molecule memory (SI).
    Erase(EraseArgs),
    /// Ledger of a position measurement that narrows a Gaussian (SI).
    Measure(MeasureArgs),
    /// Door width versus post-measurement spread for a sorting demon (SI).
    Demon(DemonArgs),
    /// Checks the entropic bound on a batch of seeded random states.
    UncertaintyCheck(UncertaintyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Gaussian,
    Uniform,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EraseMode {
    Ontic,
    EpistemicLeft,
    EpistemicRight,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Number of grid samples (power of two, at least 16).
    #[arg(long, default_value_t = 4096)]
    pub n: usize,
    /// Grid spacing; the grid is centred on x = 0.
    #[arg(long, default_value_t = 0.01)]
    pub dx: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EntropyArgs {
    #[arg(long, value_enum)]
    pub state: StateKind,
    /// Standard deviation of |ψ|² (gaussian).
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Support length (uniform).
    #[arg(long)]
    pub length: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub center: f64,
    /// Momentum boost (gaussian).
    #[arg(long, default_value_t = 0.0)]
    pub momentum_shift: f64,
    /// Raised-cosine edge width (uniform).
    #[arg(long, default_value_t = 0.0)]
    pub smoothing: f64,
    /// Seed (random).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Minimum packet width (random); defaults to a grid-dependent value.
    #[arg(long)]
    pub smoothness: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Slack below ln(e/2) still treated as satisfying the bound.
    #[arg(long, default_value_t = crate::entropy::BOUND_TOLERANCE)]
    pub bound_tolerance: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EraseArgs {
    #[arg(long, value_enum)]
    pub mode: EraseMode,
    /// Bath temperature (K).
    #[arg(long)]
    pub temperature: f64,
    /// Box length (m).
    #[arg(long, default_value_t = 1.0)]
    pub box_length: f64,
    /// Compression ratio V_i/V_f for the ontic mode.
    #[arg(long, default_value_t = 2.0)]
    pub ratio: f64,
    /// Piston force (N) pushing an R molecule; only enters translation_energy.
    #[arg(long, default_value_t = 0.0)]
    pub piston_force: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MeasureArgs {
    #[arg(long)]
    pub sigma_before: f64,
    #[arg(long)]
    pub sigma_after: f64,
    /// Temperature (K).
    #[arg(long, default_value_t = 300.0)]
    pub temperature: f64,
    /// Also halve a grid Gaussian and compare its entropy changes with the closed form.
    #[arg(long)]
    pub verify_numerically: bool,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct DemonArgs {
    /// Molecule mass (kg).
    #[arg(long)]
    pub mass: f64,
    /// Temperature (K).
    #[arg(long)]
    pub temperature: f64,
    /// Photon energy hν (J).
    #[arg(long, conflicts_with_all = ["photon_fraction", "sweep"])]
    pub photon_energy: Option<f64>,
    /// Photon energy as a fraction of k_B·T.
    #[arg(long, conflicts_with = "sweep")]
    pub photon_fraction: Option<f64>,
    /// Comma-separated photon fractions, one report each.
    #[arg(long)]
    pub sweep: Option<String>,
    /// Output format; a sweep defaults to CSV, everything else to JSON.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct UncertaintyArgs {
    #[arg(long)]
    pub trials: u64,
    /// First seed; trial i uses seed + i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub smoothness: Option<f64>,
    #[arg(long, default_value_t = crate::entropy::BOUND_TOLERANCE)]
    pub bound_tolerance: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Units {
    #[serde(rename = "natural-h1")]
    NaturalH1,
    #[serde(rename = "SI")]
    Si,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputEnvelope<R: Serialize> {
    pub command: &'static str,
    pub inputs: Value,
    pub results: R,
    pub units: Units,
}

/// A failed command: exit code plus a diagnostic for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self { code: EXIT_PRECONDITION, message: message.into() }
    }
}

impl From<WavegridError> for CliError {
    fn from(e: WavegridError) -> Self {
        match e {
            WavegridError::GridTooSmall(_)
            | WavegridError::GenerationFailed(_)
            | WavegridError::VanishingOverlap(_)
            | WavegridError::NotNormalized(_) => CliError::precondition(e.to_string()),
            _ => CliError::usage(e.to_string()),
        }
    }
}

impl From<ThermoError> for CliError {
    fn from(e: ThermoError) -> Self {
        match e {
            ThermoError::Wavegrid(w) => w.into(),
            ThermoError::MismatchBeyondTolerance(_) => CliError { code: EXIT_CROSS_CHECK, message: e.to_string() },
            ThermoError::Entropy(_) => CliError::precondition(e.to_string()),
            _ => CliError::usage(e.to_string()),
        }
    }
}

/// Rendered output of a command that ran to completion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    /// Non-zero when the command completed but its result signals a failure.
    pub code: i32,
    pub diagnostic: Option<String>,
}

pub(crate) fn render<R: Serialize>(
    envelope: &OutputEnvelope<R>,
    format: OutputFormat,
    digits: usize,
) -> Result<String, CliError> {
    let internal = |e: &dyn std::fmt::Display| CliError {
        code: EXIT_BOUND_VIOLATED,
        message: format!("failed to render output: {e}"),
    };
    match format {
        OutputFormat::Json => format::to_json(envelope, digits).map_err(|e| internal(&e)),
        OutputFormat::Csv => format::to_csv(&envelope.results, digits).map_err(|e| internal(&e)),
        OutputFormat::Table => format::to_table(envelope, digits).map_err(|e| internal(&e)),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, digits: usize, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Entropy(a) => commands::entropy(a, digits),
        Command::Erase(a) => commands::erase(a, digits),
        Command::Measure(a) => commands::measure(a, digits),
        Command::Demon(a) => commands::demon(a, digits),
        Command::UncertaintyCheck(a) => commands::uncertainty_check(a, digits),
    };
    match result {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            if let Some(d) = outcome.diagnostic {
                let _ = writeln!(stderr, "landauer: {d}");
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "landauer: {}", e.message);
            e.code
        }
    }
}

/// Reads the digit override from the environment value, if any.
pub fn digits_from_env(value: Option<&str>) -> Result<usize, CliError> {
    match value {
        None => Ok(format::DEFAULT_DIGITS),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(d) if (1..=format::MAX_DIGITS).contains(&d) => Ok(d),
            _ => Err(CliError::usage(format!(
                "{DIGITS_ENV} must be an integer in 1..={}, got `{s}`",
                format::MAX_DIGITS
            ))),
        },
    }
}
