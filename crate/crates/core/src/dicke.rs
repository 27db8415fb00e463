// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! The symmetric (maximal total spin) subspace and its Dicke basis.
//!
//! For `N` qubits the Dicke state `|N/2, m⟩` is the equal-weight superposition
//! of all bit strings with `k = N/2 − m` ones. Coefficients, symmetric weight
//! and leakage are computed in a single pass over the amplitudes by grouping
//! basis indices by popcount.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::qstate::{check_qubits, StateVector};

/// A spin projection `m`, stored as the integer `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinProjection {
    twice: i32,
}

impl SpinProjection {
    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    pub fn twice(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// Number of ones `k = N/2 − m` in the bit strings of `|N/2, m⟩`.
    pub fn excitations(self, n_qubits: usize) -> Result<usize> {
        let n = n_qubits as i32;
        if self.twice.abs() > n || (n - self.twice) % 2 != 0 {
            return Err(invalid(format!(
                "m = {self} is not a projection of spin {}/2",
                n_qubits
            )));
        }
        Ok(((n - self.twice) / 2) as usize)
    }

    /// Projection of the Dicke state with `k` excitations.
    pub fn from_excitations(n_qubits: usize, k: usize) -> Self {
        Self::from_twice(n_qubits as i32 - 2 * k as i32)
    }

    /// All projections `N/2, N/2 − 1, …, −N/2`.
    pub fn descending(n_qubits: usize) -> impl Iterator<Item = SpinProjection> {
        (0..=n_qubits).map(move |k| Self::from_excitations(n_qubits, k))
    }
}

impl fmt::Display for SpinProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for SpinProjection {
    type Err = Error;

    /// Accepts integers (`"1"`), halves (`"-3/2"`) and decimals (`"1.5"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || invalid(format!("cannot parse spin projection {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "1" => Ok(Self::from_twice(2 * num)),
                "2" => Ok(Self::from_twice(num)),
                _ => Err(bad()),
            };
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * v;
        if !twice.is_finite() || twice.fract() != 0.0 || twice.abs() > i32::MAX as f64 {
            return Err(bad());
        }
        Ok(Self::from_twice(twice as i32))
    }
}

/// `C(n, k)` as a float (exact for the register sizes used here).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// `|N/2, m⟩`.
pub fn dicke_state(n_qubits: usize, m: SpinProjection) -> Result<StateVector> {
    check_qubits(n_qubits)?;
    let k = m.excitations(n_qubits)?;
    let amp = Complex64::new(binomial(n_qubits, k).sqrt().recip(), 0.0);
    let amps = (0..1usize << n_qubits)
        .map(|i| {
            if i.count_ones() as usize == k {
                amp
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    StateVector::new(n_qubits, amps)
}

/// The `N + 1` Dicke states, ordered by descending `m`.
#[derive(Debug, Clone)]
pub struct DickeBasis {
    n_qubits: usize,
    states: Vec<StateVector>,
}

impl DickeBasis {
    pub fn new(n_qubits: usize) -> Result<Self> {
        let states = SpinProjection::descending(n_qubits)
            .map(|m| dicke_state(n_qubits, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n_qubits, states })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }

    pub fn projections(&self) -> impl Iterator<Item = SpinProjection> {
        SpinProjection::descending(self.n_qubits)
    }

    pub fn state(&self, m: SpinProjection) -> Result<&StateVector> {
        Ok(&self.states[m.excitations(self.n_qubits)?])
    }

    /// `Σ_m c_m |N/2, m⟩` for coefficients in descending-`m` order.
    pub fn synthesize(&self, coefficients: &[Complex64]) -> Result<Vec<Complex64>> {
        if coefficients.len() != self.states.len() {
            return Err(invalid(format!(
                "expected {} Dicke coefficients, got {}",
                self.states.len(),
                coefficients.len()
            )));
        }
        let n = self.n_qubits;
        let norms: Vec<f64> = (0..=n).map(|k| binomial(n, k).sqrt().recip()).collect();
        Ok((0..1usize << n)
            .map(|i| {
                let k = i.count_ones() as usize;
                coefficients[k] * norms[k]
            })
            .collect())
    }
}

/// Expansion of a state in the Dicke basis plus its out-of-subspace part.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricDecomposition {
    /// `c_m = ⟨N/2, m|ψ⟩`, descending `m`.
    pub coefficients: Vec<Complex64>,
    /// `Σ_m |c_m|²`.
    pub symmetric_weight: f64,
    /// `‖ψ − Pψ‖`.
    pub leakage: f64,
}

/// Popcount-class sums `S_k = Σ_{|i| = k} ψ_i`.
fn class_sums(amps: &[Complex64], n_qubits: usize) -> Vec<Complex64> {
    let mut sums = vec![Complex64::new(0.0, 0.0); n_qubits + 1];
    for (i, a) in amps.iter().enumerate() {
        sums[i.count_ones() as usize] += a;
    }
    sums
}

pub fn symmetric_decomposition(state: &StateVector) -> SymmetricDecomposition {
    decompose_amplitudes(state.amplitudes(), state.n_qubits())
}

pub(crate) fn decompose_amplitudes(amps: &[Complex64], n: usize) -> SymmetricDecomposition {
    let sums = class_sums(amps, n);
    let counts: Vec<f64> = (0..=n).map(|k| binomial(n, k)).collect();
    let coefficients: Vec<Complex64> = sums
        .iter()
        .zip(&counts)
        .map(|(s, c)| s / c.sqrt())
        .collect();
    let symmetric_weight = coefficients.iter().map(|c| c.norm_sqr()).sum();

    // Pψ is constant on each popcount class, equal to the class mean.
    let means: Vec<Complex64> = sums.iter().zip(&counts).map(|(s, c)| s / c).collect();
    let residual: f64 = amps
        .iter()
        .enumerate()
        .map(|(i, a)| (a - means[i.count_ones() as usize]).norm_sqr())
        .sum();

    SymmetricDecomposition {
        coefficients,
        symmetric_weight,
        leakage: residual.sqrt(),
    }
}

/// `‖ψ − Pψ‖`, the norm of the component outside the symmetric subspace.
pub fn leakage(state: &StateVector) -> f64 {
    symmetric_decomposition(state).leakage
}

/// `leakage(ψ) ≤ tol`.
pub fn is_symmetric(state: &StateVector, tol: f64) -> bool {
    leakage(state) <= tol
}

/// Independent symmetry test: every transposition `S_ab` must fix `ψ`, i.e.
/// `‖S_ab ψ − ψ‖ ≤ tol`.
///
/// An involution only admits the eigenphases `±1`, and `−1` (the 2-qubit
/// singlet, say) is antisymmetric, so no global phase is factored out. The
/// difference norm is linear in the deviation, like the leakage.
pub fn is_symmetric_by_transpositions(state: &StateVector, tol: f64) -> bool {
    let n = state.n_qubits();
    (1..=n).all(|a| {
        ((a + 1)..=n).all(|b| {
            let swapped = state.transposed(a, b).expect("sites in range");
            let diff: f64 = swapped
                .amplitudes()
                .iter()
                .zip(state.amplitudes())
                .map(|(x, y)| (x - y).norm_sqr())
                .sum();
            diff.sqrt() <= tol
        })
    })
}

/// Human-readable `m=<value>` label.
pub fn projection_label(m: SpinProjection) -> String {
    format!("m={m}")
}
