// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Time evolution `ψ(θ) = exp(−iθA) ψ`.
//!
//! Three engines are provided and are expected to agree to ~1e-11:
//!
//! * [`XDiagPropagator`]: for Hamiltonians built from `I`/`X` letters only.
//!   After a Hadamard on every qubit each `X` becomes `Z`, the Hamiltonian is
//!   diagonal, and evolution is a phase per x-basis string. Exact, `O(N·2^N)`.
//! * [`DensePropagator`]: materializes `A` with Kronecker products and takes a
//!   Padé scaling-and-squaring matrix exponential. Works for any model, capped
//!   at [`DENSE_MAX_QUBITS`](crate::dense::DENSE_MAX_QUBITS).
//! * [`evolve_closed_form_n4`]: the 4-site Ising chain has x-basis energies in
//!   `{−1, 0, 1}`, so `A³ = A` and `U = I + A²(cos θ − 1) − iA sin θ`.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::dense::{DenseMatrix, DENSE_MAX_QUBITS};
use crate::error::{invalid, Error, Result};
use crate::operators::{ising_hamiltonian, ChainModel, OperatorSpec};
use crate::qstate::StateVector;
use crate::wht::walsh_hadamard_in_place;

/// Which engine produced a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvolutionEngine {
    XDiag,
    DenseOracle,
    /// Valid only for the 4-site Ising chain.
    ClosedFormN4,
}

/// Exact propagator for Hamiltonians that are diagonal in the x basis.
#[derive(Debug, Clone)]
pub struct XDiagPropagator {
    n_qubits: usize,
    energies: Vec<f64>,
}

impl XDiagPropagator {
    pub fn new(model: &ChainModel, n_qubits: usize) -> Result<Self> {
        let op = model.hamiltonian(n_qubits)?;
        if !op.is_x_only() {
            return Err(invalid(format!(
                "the x-diagonal engine needs a σ_x-only Hamiltonian, got {model}"
            )));
        }
        Self::from_operator(&op)
    }

    /// Diagonalizes a Hermitian operator made of `I`/`X` letters.
    pub fn from_operator(op: &OperatorSpec) -> Result<Self> {
        if !op.is_x_only() {
            return Err(invalid("operator contains Y or Z letters"));
        }
        if op.terms().iter().any(|t| t.coefficient().im != 0.0) {
            return Err(invalid("operator is not Hermitian (complex coefficient)"));
        }
        let n = op.n_qubits();
        let dim = 1usize << n;
        let mut energies = alloc::vec![0.0; dim];
        for term in op.compiled() {
            // In the x basis the X-mask becomes a Z-mask.
            let c = term.factor.re;
            for (s, e) in energies.iter_mut().enumerate() {
                if (s & term.x_mask).count_ones() & 1 == 1 {
                    *e -= c;
                } else {
                    *e += c;
                }
            }
        }
        Ok(Self {
            n_qubits: n,
            energies,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Eigenvalue of `A` on each x-basis string (indexed like amplitudes).
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn evolve(&self, state: &StateVector, theta: f64) -> Result<StateVector> {
        if state.n_qubits() != self.n_qubits {
            return Err(invalid(format!(
                "propagator on {} qubits applied to a {} qubit state",
                self.n_qubits,
                state.n_qubits()
            )));
        }
        if theta == 0.0 {
            return Ok(state.clone());
        }
        let mut amps = state.amplitudes().to_vec();
        walsh_hadamard_in_place(&mut amps);
        for (a, &e) in amps.iter_mut().zip(&self.energies) {
            let (s, c) = (-theta * e).sin_cos();
            *a *= Complex64::new(c, s);
        }
        walsh_hadamard_in_place(&mut amps);
        Ok(StateVector::from_unitary_image(self.n_qubits, amps))
    }
}

/// Evolves with the x-diagonal engine; `model` must be σ_x-only.
pub fn evolve_xdiag(state: &StateVector, theta: f64, model: &ChainModel) -> Result<StateVector> {
    XDiagPropagator::new(model, state.n_qubits())?.evolve(state, theta)
}

/// Dense matrix-exponential propagator for any chain model.
#[derive(Debug, Clone)]
pub struct DensePropagator {
    generator: DenseMatrix,
    n_qubits: usize,
}

impl DensePropagator {
    pub fn new(model: &ChainModel, n_qubits: usize) -> Result<Self> {
        if n_qubits > DENSE_MAX_QUBITS {
            return Err(Error::ResourceCap {
                what: "dense evolution oracle",
                n_qubits,
                cap: DENSE_MAX_QUBITS,
            });
        }
        Self::from_operator(&model.hamiltonian(n_qubits)?)
    }

    pub fn from_operator(op: &OperatorSpec) -> Result<Self> {
        Ok(Self {
            generator: DenseMatrix::from_operator(op)?,
            n_qubits: op.n_qubits(),
        })
    }

    /// The dense Hamiltonian `A`.
    pub fn generator(&self) -> &DenseMatrix {
        &self.generator
    }

    /// `exp(−iθA)`.
    pub fn unitary(&self, theta: f64) -> DenseMatrix {
        self.generator.scaled(Complex64::new(0.0, -theta)).expm()
    }

    pub fn evolve(&self, state: &StateVector, theta: f64) -> Result<StateVector> {
        self.apply_unitary(&self.unitary(theta), state)
    }

    /// Applies a unitary previously obtained from [`Self::unitary`].
    pub fn apply_unitary(&self, unitary: &DenseMatrix, state: &StateVector) -> Result<StateVector> {
        if state.n_qubits() != self.n_qubits {
            return Err(invalid(format!(
                "propagator on {} qubits applied to a {} qubit state",
                self.n_qubits,
                state.n_qubits()
            )));
        }
        Ok(StateVector::from_unitary_image(
            self.n_qubits,
            unitary.mul_vec(state.amplitudes()),
        ))
    }
}

/// Evolves with the dense matrix exponential.
pub fn evolve_dense_oracle(
    state: &StateVector,
    theta: f64,
    model: &ChainModel,
) -> Result<StateVector> {
    DensePropagator::new(model, state.n_qubits())?.evolve(state, theta)
}

/// `U = I + A²(cos θ − 1) − iA sin θ` for the 4-site Ising chain.
pub fn evolve_closed_form_n4(state: &StateVector, theta: f64) -> Result<StateVector> {
    if state.n_qubits() != 4 {
        return Err(invalid(format!(
            "closed-form propagator is for 4 qubits, got {}",
            state.n_qubits()
        )));
    }
    let a = ising_hamiltonian(4)?;
    let a_psi = a.apply(state)?;
    let a2_psi = a.apply_amplitudes(&a_psi);
    let (s, c) = theta.sin_cos();
    let amps = state
        .amplitudes()
        .iter()
        .zip(a_psi.iter().zip(&a2_psi))
        .map(|(&psi, (&ap, &a2p))| psi + a2p * (c - 1.0) - Complex64::new(0.0, s) * ap)
        .collect();
    Ok(StateVector::from_unitary_image(4, amps))
}

/// Evolves with the fastest exact engine for `model`: x-diagonal when the
/// Hamiltonian is σ_x-only, dense otherwise.
pub fn evolve(state: &StateVector, theta: f64, model: &ChainModel) -> Result<StateVector> {
    Propagator::new(model, state.n_qubits())?.evolve(state, theta)
}

/// Engine chosen by [`evolve`], reusable across θ values.
#[derive(Debug, Clone)]
pub enum Propagator {
    XDiag(XDiagPropagator),
    Dense(DensePropagator),
}

impl Propagator {
    pub fn new(model: &ChainModel, n_qubits: usize) -> Result<Self> {
        let op = model.hamiltonian(n_qubits)?;
        if op.is_x_only() {
            Ok(Propagator::XDiag(XDiagPropagator::from_operator(&op)?))
        } else {
            Ok(Propagator::Dense(DensePropagator::new(model, n_qubits)?))
        }
    }

    pub fn engine(&self) -> EvolutionEngine {
        match self {
            Propagator::XDiag(_) => EvolutionEngine::XDiag,
            Propagator::Dense(_) => EvolutionEngine::DenseOracle,
        }
    }

    pub fn evolve(&self, state: &StateVector, theta: f64) -> Result<StateVector> {
        match self {
            Propagator::XDiag(p) => p.evolve(state, theta),
            Propagator::Dense(p) => p.evolve(state, theta),
        }
    }

    /// Evolves every state in `states` to the same `theta`, reusing the dense
    /// exponential when there is one.
    pub fn evolve_all(&self, states: &[StateVector], theta: f64) -> Result<Vec<StateVector>> {
        match self {
            Propagator::XDiag(p) => states.iter().map(|s| p.evolve(s, theta)).collect(),
            Propagator::Dense(p) => {
                let u = p.unitary(theta);
                states.iter().map(|s| p.apply_unitary(&u, s)).collect()
            }
        }
    }
}

/// Maximum amplitude deviation after rotating `b` onto the global phase of `a`,
/// using the phase of `a`'s largest-magnitude amplitude.
pub fn phase_aligned_deviation(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let k = a
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm_sqr().total_cmp(&y.1.norm_sqr()))
        .map(|(k, _)| k);
    let phase = match k {
        Some(k) if a[k].norm() > 0.0 && b[k].norm() > 0.0 => {
            (a[k] / a[k].norm()) * (b[k] / b[k].norm()).conj()
        }
        _ => Complex64::new(1.0, 0.0),
    };
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y * phase).norm())
        .fold(0.0, f64::max)
}
