// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The request needs a dense or exponential-size object above a fixed cap.
    #[error("{what} supports at most {cap} qubits, got {n_qubits}")]
    ResourceCap {
        what: &'static str,
        n_qubits: usize,
        cap: usize,
    },

    /// The mean spin vanishes, so no direction perpendicular to it exists.
    #[error("mean spin |<J>| = {norm:e} is too small to define a perpendicular plane")]
    DegenerateDirection { norm: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
