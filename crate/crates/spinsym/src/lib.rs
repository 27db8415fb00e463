// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for [`spinsym_core`].
//!
//! Every subcommand is also callable as a library function returning a
//! [`Report`], which [`format`] encodes as CSV or JSON.

pub mod cli;
pub mod commands;
pub mod config;
mod error;
pub mod format;

pub use config::{CommandConfig, OutputFormat, RunConfig, StateSpec, ThetaSpec};
pub use error::CliError;
pub use format::{Report, Section};
