// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form Dicke coefficients of the evolved 3- and 4-qubit Dicke states
//! under the periodic Ising chain.
//!
//! Rows are indexed 1-based in descending `m` of the input state; each row is
//! the coefficient vector over the output Dicke states, also in descending
//! `m`. Entries follow the `c_m = ⟨ψ(θ)|N/2, m⟩` convention of the reference
//! tables. Two entries of the reference tables are known misprints, so both
//! transcriptions are available:
//!
//! * 3 qubits: the off-diagonal entry is printed as
//!   `(i√3/2) e^{−iθ/4} sin(θ/2)`; the value consistent with the diagonal
//!   entries of the same rows is `(i√3/2) e^{+iθ/4} sin(θ/2)`.
//! * 4 qubits, middle row: the `m = 0` entry is printed with denominator
//!   `√6`; normalization and the row's weight column require `6`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::dicke::{dicke_state, SpinProjection};
use crate::error::{invalid, Result};
use crate::evolve::phase_aligned_deviation;
use crate::qstate::StateVector;

/// Which reading of the reference tables to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Transcription {
    /// The expressions exactly as printed.
    Printed,
    /// The printed expressions with the two misprints repaired.
    #[default]
    Corrected,
}

/// The 3-qubit (`I`) and 4-qubit (`II`) tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientTable {
    I,
    II,
}

impl CoefficientTable {
    pub fn n_qubits(self) -> usize {
        match self {
            CoefficientTable::I => 3,
            CoefficientTable::II => 4,
        }
    }

    pub fn rows(self) -> usize {
        self.n_qubits() + 1
    }

    /// Input Dicke state of a 1-based row.
    pub fn input_state(self, row: usize) -> Result<StateVector> {
        self.check_row(row)?;
        let n = self.n_qubits();
        dicke_state(n, SpinProjection::from_excitations(n, row - 1))
    }

    /// Tabulated coefficients and tabulated `Σ|c_m|²` for a 1-based row.
    pub fn row(
        self,
        row: usize,
        theta: f64,
        transcription: Transcription,
    ) -> Result<(Vec<Complex64>, f64)> {
        match self {
            CoefficientTable::I => Ok((
                table1_coefficients(row, theta, transcription)?.to_vec(),
                1.0,
            )),
            CoefficientTable::II => {
                let (c, w) = table2_coefficients(row, theta, transcription)?;
                Ok((c.to_vec(), w))
            }
        }
    }

    fn check_row(self, row: usize) -> Result<()> {
        if row == 0 || row > self.rows() {
            return Err(invalid(alloc::format!(
                "row {row} out of range 1..={}",
                self.rows()
            )));
        }
        Ok(())
    }
}

fn cis(phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, phi)
}

/// 3-qubit row `row ∈ 1..=4` at time `theta`.
pub fn table1_coefficients(
    row: usize,
    theta: f64,
    transcription: Transcription,
) -> Result<[Complex64; 4]> {
    CoefficientTable::I.check_row(row)?;
    let i = Complex64::new(0.0, 1.0);
    let zero = Complex64::new(0.0, 0.0);
    let q = theta / 4.0;

    let diag_outer = Complex64::new(q.cos().powi(3), -q.sin().powi(3));
    let diag_inner = cis(3.0 * q) * (Complex64::new(3.0, 0.0) + cis(-theta)) / 4.0;
    let off_phase = match transcription {
        Transcription::Printed => cis(-q),
        Transcription::Corrected => cis(q),
    };
    let off = i * (3f64.sqrt() / 2.0) * off_phase * (theta / 2.0).sin();

    Ok(match row {
        1 => [diag_outer, zero, off, zero],
        2 => [zero, diag_inner, zero, off],
        3 => [off, zero, diag_inner, zero],
        _ => [zero, off, zero, diag_outer],
    })
}

/// 4-qubit row `row ∈ 1..=5` at time `theta`, with the tabulated `Σ|c_m|²`.
pub fn table2_coefficients(
    row: usize,
    theta: f64,
    transcription: Transcription,
) -> Result<([Complex64; 5], f64)> {
    CoefficientTable::II.check_row(row)?;
    let (s, c) = theta.sin_cos();
    let zero = Complex64::new(0.0, 0.0);
    let sqrt6 = 6f64.sqrt();

    let big = Complex64::new((3.0 + c) / 4.0, 0.0);
    let small = Complex64::new((c - 1.0) / 4.0, 0.0);
    let to_middle = Complex64::new(c - 1.0, -2.0 * s) / (2.0 * sqrt6);
    let w_stay = Complex64::new(1.0 + c, s) / 2.0;
    let w_flip = Complex64::new(c - 1.0, s) / 2.0;
    let middle_den = match transcription {
        Transcription::Printed => sqrt6,
        Transcription::Corrected => 6.0,
    };
    let middle = Complex64::new(1.0 + 5.0 * c, -4.0 * s) / middle_den;

    Ok(match row {
        1 => ([big, zero, to_middle, zero, small], (5.0 + c) / 6.0),
        2 => ([zero, w_stay, zero, w_flip, zero], 1.0),
        3 => ([to_middle, zero, middle, zero, to_middle], (8.0 + c) / 9.0),
        4 => ([zero, w_flip, zero, w_stay, zero], 1.0),
        _ => ([small, zero, to_middle, zero, big], (5.0 + c) / 6.0),
    })
}

/// How a numeric coefficient vector was matched to a tabulated one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableMatch {
    /// Phase-aligned maximum deviation.
    pub deviation: f64,
    /// True when the numeric vector was conjugated before comparison.
    pub conjugated: bool,
}

/// Compares tabulated and numeric coefficients up to a global phase and a
/// global complex conjugation, keeping the better of the two conventions.
pub fn match_coefficients(tabulated: &[Complex64], numeric: &[Complex64]) -> TableMatch {
    let direct = phase_aligned_deviation(tabulated, numeric);
    let conj: Vec<Complex64> = numeric.iter().map(|z| z.conj()).collect();
    let conjugated = phase_aligned_deviation(tabulated, &conj);
    if conjugated < direct {
        TableMatch {
            deviation: conjugated,
            conjugated: true,
        }
    } else {
        TableMatch {
            deviation: direct,
            conjugated: false,
        }
    }
}
