// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

use std::io;

/// A failed run, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Degenerate(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 usage, 2 verification failure, 3 resource cap, 4 degenerate input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Degenerate(_) => 4,
        }
    }
}

impl From<spinsym_core::Error> for CliError {
    fn from(e: spinsym_core::Error) -> Self {
        use spinsym_core::Error;
        let msg = e.to_string();
        match e {
            Error::InvalidArgument(_) => CliError::Usage(msg),
            Error::ResourceCap { .. } => CliError::Resource(msg),
            Error::DegenerateDirection { .. } => CliError::Degenerate(msg),
        }
    }
}
