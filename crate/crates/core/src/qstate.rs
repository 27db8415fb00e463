// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense N-qubit state vectors.
//!
//! Qubit `α` (1-based) lives at bit `N - α` of the amplitude index, so qubit 1
//! is the most significant bit and `|001⟩` has index 1 for `N = 3`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::wht::walsh_hadamard_in_place;

/// Largest register the dense representation accepts.
pub const MAX_QUBITS: usize = 20;

/// Normalization slack accepted by [`StateVector::new`].
const NORM_SLACK: f64 = 1e-10;

/// A normalized pure state over the `2^N` computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

pub(crate) fn check_qubits(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 {
        return Err(invalid("a register needs at least one qubit"));
    }
    if n_qubits > MAX_QUBITS {
        return Err(Error::ResourceCap {
            what: "dense state vector",
            n_qubits,
            cap: MAX_QUBITS,
        });
    }
    Ok(())
}

/// Bit shift of the 1-based `site` in an `n_qubits` register.
#[inline]
pub(crate) fn site_shift(n_qubits: usize, site: usize) -> usize {
    n_qubits - site
}

impl StateVector {
    /// Wraps `amps` after checking its length is `2^N` and its norm is 1.
    pub fn new(n_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        if amps.len() != 1 << n_qubits {
            return Err(invalid(format!(
                "expected {} amplitudes for {n_qubits} qubits, got {}",
                1usize << n_qubits,
                amps.len()
            )));
        }
        let norm = norm(&amps);
        if (norm - 1.0).abs() > NORM_SLACK {
            return Err(invalid(format!("state has norm {norm}, expected 1")));
        }
        Ok(Self { n_qubits, amps })
    }

    /// Rescales `amps` to unit norm.
    pub fn normalized(n_qubits: usize, mut amps: Vec<Complex64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        if amps.len() != 1 << n_qubits {
            return Err(invalid(format!(
                "expected {} amplitudes for {n_qubits} qubits, got {}",
                1usize << n_qubits,
                amps.len()
            )));
        }
        let norm = norm(&amps);
        if !(norm.is_finite() && norm > 0.0) {
            return Err(invalid("cannot normalize a zero or non-finite vector"));
        }
        for z in amps.iter_mut() {
            *z /= norm;
        }
        Ok(Self { n_qubits, amps })
    }

    /// Trusted constructor for unitary images of valid states.
    pub(crate) fn from_unitary_image(n_qubits: usize, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n_qubits);
        Self { n_qubits, amps }
    }

    /// The computational basis state with the given index.
    pub fn basis_index(n_qubits: usize, index: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(invalid(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amps)
    }

    /// `⟨self|ket⟩`, conjugate-linear in `self`.
    pub fn inner(&self, ket: &StateVector) -> Result<Complex64> {
        if self.n_qubits != ket.n_qubits {
            return Err(invalid(format!(
                "inner product between {} and {} qubit states",
                self.n_qubits, ket.n_qubits
            )));
        }
        Ok(dot(&self.amps, &ket.amps))
    }

    /// Exchanges qubits `a` and `b` (1-based sites).
    pub fn transposed(&self, a: usize, b: usize) -> Result<StateVector> {
        let n = self.n_qubits;
        for site in [a, b] {
            if site == 0 || site > n {
                return Err(invalid(format!("site {site} out of range 1..={n}")));
            }
        }
        if a == b {
            return Ok(self.clone());
        }
        let (sa, sb) = (site_shift(n, a), site_shift(n, b));
        let amps = (0..self.amps.len())
            .map(|i| self.amps[swap_bits(i, sa, sb)])
            .collect();
        Ok(Self { n_qubits: n, amps })
    }

    /// Applies a Hadamard to every qubit, mapping the z basis onto the σ_x
    /// eigenbasis. Self-inverse, `O(N·2^N)`.
    pub fn x_basis_transform(&self) -> StateVector {
        let mut amps = self.amps.clone();
        walsh_hadamard_in_place(&mut amps);
        Self {
            n_qubits: self.n_qubits,
            amps,
        }
    }
}

/// Builds `|bits⟩` where `bits[0]` is qubit 1.
pub fn basis_state(n_qubits: usize, bits: &str) -> Result<StateVector> {
    if bits.chars().count() != n_qubits {
        return Err(invalid(format!(
            "bit string {bits:?} has length {}, expected {n_qubits}",
            bits.chars().count()
        )));
    }
    let mut index = 0usize;
    for c in bits.chars() {
        index <<= 1;
        match c {
            '0' => {}
            '1' => index |= 1,
            other => return Err(invalid(format!("bit string contains {other:?}"))),
        }
    }
    StateVector::basis_index(n_qubits, index)
}

/// `⟨bra|ket⟩`.
pub fn inner_product(bra: &StateVector, ket: &StateVector) -> Result<Complex64> {
    bra.inner(ket)
}

#[inline]
fn swap_bits(i: usize, a: usize, b: usize) -> usize {
    let diff = ((i >> a) ^ (i >> b)) & 1;
    i ^ ((diff << a) | (diff << b))
}

pub(crate) fn dot(bra: &[Complex64], ket: &[Complex64]) -> Complex64 {
    bra.iter().zip(ket).map(|(a, b)| a.conj() * b).sum()
}

pub(crate) fn norm(amps: &[Complex64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
