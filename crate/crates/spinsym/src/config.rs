// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Validated run configuration, independent of the argument parser.

use std::f64::consts::TAU;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use spinsym_core::grid::STANDARD_STEPS;
use spinsym_core::{
    basis_state, dicke_state, ChainModel, CoefficientTable, SpinProjection, StateVector, ThetaGrid,
    Transcription,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Either one θ or a half-open uniform grid `[min, max)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThetaSpec {
    Single(f64),
    Grid { min: f64, max: f64, steps: usize },
}

impl Default for ThetaSpec {
    fn default() -> Self {
        ThetaSpec::Grid {
            min: 0.0,
            max: TAU,
            steps: STANDARD_STEPS,
        }
    }
}

impl ThetaSpec {
    pub fn grid(&self) -> Result<ThetaGrid, CliError> {
        Ok(match *self {
            ThetaSpec::Single(theta) => ThetaGrid::single(theta)?,
            ThetaSpec::Grid { min, max, steps } => ThetaGrid::uniform(min, max, steps)?,
        })
    }
}

/// Input state of `squeeze`: `dicke:<m>` or `basis:<bits>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateSpec {
    Dicke(SpinProjection),
    Basis(String),
}

impl StateSpec {
    pub fn build(&self, n_qubits: usize) -> Result<StateVector, CliError> {
        Ok(match self {
            StateSpec::Dicke(m) => dicke_state(n_qubits, *m)?,
            StateSpec::Basis(bits) => basis_state(n_qubits, bits)?,
        })
    }
}

impl FromStr for StateSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some(("dicke", m)) => m
                .parse()
                .map(StateSpec::Dicke)
                .map_err(|_| format!("cannot parse spin projection {m:?}")),
            Some(("basis", bits))
                if !bits.is_empty() && bits.chars().all(|c| c == '0' || c == '1') =>
            {
                Ok(StateSpec::Basis(bits.to_string()))
            }
            Some(("basis", bits)) => Err(format!("basis state must be a bit string, got {bits:?}")),
            _ => Err(format!("expected dicke:<m> or basis:<bits>, got {s:?}")),
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Dicke(m) => write!(f, "dicke:{m}"),
            StateSpec::Basis(bits) => write!(f, "basis:{bits}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CommandConfig {
    Tables {
        table: CoefficientTable,
        transcription: Transcription,
        theta: ThetaSpec,
    },
    Leakage {
        n_qubits: usize,
        model: ChainModel,
        theta: ThetaSpec,
        tol: f64,
    },
    Invariant {
        n_qubits: usize,
        model: ChainModel,
        tol: f64,
    },
    Commutators {
        n_qubits: usize,
        model: ChainModel,
    },
    Squeeze {
        n_qubits: usize,
        model: ChainModel,
        state: StateSpec,
        theta: ThetaSpec,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandConfig,
    pub format: OutputFormat,
    /// Standard output when `None`.
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: CommandConfig) -> Self {
        Self {
            command,
            format: OutputFormat::Csv,
            out: None,
        }
    }

    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.format = format;
        self
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        let check_tol = |tol: f64| {
            if tol > 0.0 && tol.is_finite() {
                Ok(())
            } else {
                usage(format!("--tol must be positive, got {tol}"))
            }
        };
        let check_theta = |theta: &ThetaSpec| match *theta {
            ThetaSpec::Single(t) if !t.is_finite() => {
                usage(format!("--theta must be finite, got {t}"))
            }
            ThetaSpec::Grid { steps: 0, .. } => usage("--steps must be at least 1".into()),
            _ => theta.grid().map(|_| ()),
        };
        let check_model = |model: &ChainModel| {
            let (cx, cy, cz) = model.couplings();
            if [cx, cy, cz].iter().all(|c| c.is_finite()) {
                Ok(())
            } else {
                usage("couplings must be finite".into())
            }
        };
        match &self.command {
            CommandConfig::Tables { theta, .. } => check_theta(theta),
            CommandConfig::Leakage {
                model, theta, tol, ..
            } => {
                check_model(model)?;
                check_theta(theta)?;
                check_tol(*tol)
            }
            CommandConfig::Invariant { model, tol, .. } => {
                check_model(model)?;
                check_tol(*tol)
            }
            CommandConfig::Commutators { model, .. } => check_model(model),
            CommandConfig::Squeeze { model, theta, .. } => {
                check_model(model)?;
                check_theta(theta)
            }
        }
    }
}
