// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact state-vector simulation of periodic spin chains and diagnostics for
//! permutation (exchange) symmetry of multiqubit states.
//!
//! The crate is `no_std` and only needs `alloc`. It covers
//!
//! * [`qstate`]: dense state vectors, basis conventions, transpositions and the
//!   x-basis (Walsh–Hadamard) transform,
//! * [`operators`]: Pauli-string operators, chain Hamiltonians, collective spin
//!   operators and commutator norms,
//! * [`dicke`]: the symmetric subspace, coefficient extraction and leakage,
//! * [`evolve`]: three independent time-evolution engines,
//! * [`tables`]: closed-form coefficient tables for 3 and 4 qubits,
//! * [`analysis`]: retention reports, invariant symmetric subspaces, the
//!   anisotropic-chain scan and the spin-squeezing parameter.
//!
//! Units: ħ = 1, the Hamiltonian is the dimensionless `A = H/(ħχ)` and time is
//! `θ = χt`, so that `U(θ) = exp(-iθA)`.
//!
//! Basis convention: qubit `α ∈ 1..=N` is bit `N - α` of the amplitude index
//! (qubit 1 is the most significant bit); bit value 0 is |0⟩ (spin up).

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod dense;
pub mod dicke;
mod error;
pub mod evolve;
pub mod grid;
pub mod operators;
pub mod qstate;
pub mod svd;
pub mod tables;
pub mod wht;

pub use error::{Error, Result};

pub use num_complex::Complex64;

pub use analysis::{
    heisenberg_symmetry_scan, invariant_symmetric_subspace, spin_squeezing_xi2,
    symmetry_retention_report, ClaimVerdict, HeisenbergScan, SqueezingAnalysis, SubspaceBasis,
    SymmetryReport,
};
pub use dicke::{
    dicke_state, is_symmetric, is_symmetric_by_transpositions, leakage, symmetric_decomposition,
    DickeBasis, SpinProjection, SymmetricDecomposition,
};
pub use evolve::{
    evolve, evolve_closed_form_n4, evolve_dense_oracle, evolve_xdiag, DensePropagator,
    EvolutionEngine, XDiagPropagator,
};
pub use grid::ThetaGrid;
pub use operators::{
    collective_operator, commutator_norm, heisenberg_xyz_hamiltonian, ising_hamiltonian, j_squared,
    Axis, ChainModel, OperatorSpec, Pauli, PauliString,
};
pub use qstate::{basis_state, inner_product, StateVector};
pub use tables::{table1_coefficients, table2_coefficients, CoefficientTable, Transcription};

/// Default tolerance for symmetry verdicts and kernel thresholds.
pub const DEFAULT_TOL: f64 = 1e-10;
