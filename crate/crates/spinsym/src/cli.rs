// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Argument parsing and the process entry point.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use spinsym_core::{ChainModel, CoefficientTable, Transcription, DEFAULT_TOL};

use crate::commands;
use crate::config::{CommandConfig, OutputFormat, RunConfig, StateSpec, ThetaSpec};
use crate::error::CliError;
use crate::format::{write_csv, write_json};

/// Exact spin-chain evolution and exchange-symmetry diagnostics.
///
/// Times are the dimensionless θ = χt in decimal radians; the Hamiltonian is
/// A = H/(ħχ).
#[derive(Debug, Parser)]
#[command(name = "spinsym", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Commands,
}

#[derive(Debug, Subcommand)]
pub enum Commands {
    /// Tabulated symmetric-subspace coefficients against the numeric engine.
    Tables(TablesArgs),
    /// Leakage of every Dicke state out of the symmetric subspace.
    Leakage(LeakageArgs),
    /// Largest evolution-invariant subspace of the symmetric subspace.
    Invariant(InvariantArgs),
    /// Frobenius norms of [A, Jx], [A, Jy], [A, Jz] and [A, J²].
    Commutators(CommutatorsArgs),
    /// Spin-squeezing parameter ξ² of an evolved state.
    Squeeze(SqueezeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Ising,
    Xyz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TranscriptionArg {
    Corrected,
    Printed,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Ising)]
    pub model: ModelArg,
    /// XX coupling of the xyz chain [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub cx: Option<f64>,
    /// YY coupling of the xyz chain [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub cy: Option<f64>,
    /// ZZ coupling of the xyz chain [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub cz: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    /// A single θ = χt.
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["theta_min", "theta_max", "steps"])]
    pub theta: Option<f64>,
    /// Start of the grid [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub theta_min: Option<f64>,
    /// End of the grid, excluded [default: 2π]
    #[arg(long, allow_negative_numbers = true)]
    pub theta_max: Option<f64>,
    /// Number of grid points [default: 64]
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub which: WhichArg,
    /// Which reading of the printed closed forms to evaluate.
    #[arg(long, value_enum, default_value_t = TranscriptionArg::Corrected)]
    pub transcription: TranscriptionArg,
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LeakageArgs {
    /// Number of sites.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    /// Number of sites.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CommutatorsArgs {
    /// Number of sites.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SqueezeArgs {
    /// Number of sites.
    #[arg(long)]
    pub n: usize,
    /// `dicke:<m>` (m like 3/2, -1 or 0) or `basis:<bits>`.
    #[arg(long)]
    pub state: StateSpec,
    #[command(flatten)]
    pub model: ModelArgs,
    /// θ = χt [default: 0]
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["theta_min", "theta_max", "steps"])]
    pub theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta_max: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl ModelArgs {
    fn model(&self) -> Result<ChainModel, CliError> {
        match self.model {
            ModelArg::Ising => {
                if self.cx.or(self.cy).or(self.cz).is_some() {
                    return Err(CliError::Usage("--cx/--cy/--cz require --model xyz".into()));
                }
                Ok(ChainModel::IsingX)
            }
            ModelArg::Xyz => Ok(ChainModel::xyz(
                self.cx.unwrap_or(1.0),
                self.cy.unwrap_or(1.0),
                self.cz.unwrap_or(1.0),
            )),
        }
    }
}

fn theta_spec(
    theta: Option<f64>,
    min: Option<f64>,
    max: Option<f64>,
    steps: Option<usize>,
) -> Option<ThetaSpec> {
    if let Some(t) = theta {
        return Some(ThetaSpec::Single(t));
    }
    if min.is_none() && max.is_none() && steps.is_none() {
        return None;
    }
    let ThetaSpec::Grid {
        min: min0,
        max: max0,
        steps: steps0,
    } = ThetaSpec::default()
    else {
        unreachable!("default is a grid")
    };
    Some(ThetaSpec::Grid {
        min: min.unwrap_or(min0),
        max: max.unwrap_or(max0),
        steps: steps.unwrap_or(steps0),
    })
}

impl ThetaArgs {
    fn spec(&self) -> ThetaSpec {
        theta_spec(self.theta, self.theta_min, self.theta_max, self.steps).unwrap_or_default()
    }
}

impl OutputArgs {
    fn apply(&self, command: CommandConfig) -> RunConfig {
        RunConfig {
            command,
            format: match self.format {
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Json => OutputFormat::Json,
            },
            out: self.out.clone(),
        }
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let config = match cli.command {
            Commands::Tables(a) => a.output.apply(CommandConfig::Tables {
                table: match a.which {
                    WhichArg::I => CoefficientTable::I,
                    WhichArg::II => CoefficientTable::II,
                },
                transcription: match a.transcription {
                    TranscriptionArg::Corrected => Transcription::Corrected,
                    TranscriptionArg::Printed => Transcription::Printed,
                },
                theta: a.theta.spec(),
            }),
            Commands::Leakage(a) => a.output.apply(CommandConfig::Leakage {
                n_qubits: a.n,
                model: a.model.model()?,
                theta: a.theta.spec(),
                tol: a.tol,
            }),
            Commands::Invariant(a) => a.output.apply(CommandConfig::Invariant {
                n_qubits: a.n,
                model: a.model.model()?,
                tol: a.tol,
            }),
            Commands::Commutators(a) => a.output.apply(CommandConfig::Commutators {
                n_qubits: a.n,
                model: a.model.model()?,
            }),
            Commands::Squeeze(a) => a.output.apply(CommandConfig::Squeeze {
                n_qubits: a.n,
                model: a.model.model()?,
                state: a.state,
                theta: theta_spec(a.theta, a.theta_min, a.theta_max, a.steps)
                    .unwrap_or(ThetaSpec::Single(0.0)),
            }),
        };
        config.validate()?;
        Ok(config)
    }
}

/// Runs `config` and writes its report; the error carries the exit code.
pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    let report = commands::run(config)?;
    let mut sink: Box<dyn Write> = match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match config.format {
        OutputFormat::Csv => write_csv(&report, &mut sink)?,
        OutputFormat::Json => write_json(&report, &mut sink)?,
    }
    sink.flush()?;
    match report.failure {
        Some(msg) => Err(CliError::Verification(msg)),
        None => Ok(()),
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit code:
/// 0 pass, 1 usage, 2 verification failure, 3 resource cap, 4 degenerate input.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = RunConfig::try_from(cli).and_then(|config| execute(&config));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
