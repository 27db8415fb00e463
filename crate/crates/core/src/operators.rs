// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Pauli-string operator algebra, chain Hamiltonians and collective spin
//! operators.
//!
//! Every operator is a weighted sum of Pauli strings. Application to a state
//! works directly on basis indices: `X` flips a bit, `Z` applies a sign and `Y`
//! does both with a factor `±i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::qstate::{check_qubits, StateVector};

/// Largest register for which [`commutator_norm`] sweeps all basis columns.
pub const COMMUTATOR_MAX_QUBITS: usize = 12;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `self · other = phase · letter`.
    fn mul(self, other: Pauli) -> (Complex64, Pauli) {
        use Pauli::*;
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match (self, other) {
            (I, p) | (p, I) => (one, p),
            (X, X) | (Y, Y) | (Z, Z) => (one, I),
            (X, Y) => (i, Z),
            (Y, X) => (-i, Z),
            (Y, Z) => (i, X),
            (Z, Y) => (-i, X),
            (Z, X) => (i, Y),
            (X, Z) => (-i, Y),
        }
    }

    fn flips(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    fn signs(self) -> bool {
        matches!(self, Pauli::Y | Pauli::Z)
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        };
        write!(f, "{c}")
    }
}

/// Collective spin axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    fn letter(self) -> Pauli {
        match self {
            Axis::X => Pauli::X,
            Axis::Y => Pauli::Y,
            Axis::Z => Pauli::Z,
        }
    }
}

/// `coefficient · P_1 ⊗ P_2 ⊗ … ⊗ P_N`, letter `k` acting on qubit `k + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliString {
    coefficient: Complex64,
    letters: Vec<Pauli>,
}

/// Bit-mask form of a Pauli string: `P|j⟩ = factor · (-1)^{|j & z|} |j ^ x⟩`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CompiledTerm {
    pub x_mask: usize,
    pub z_mask: usize,
    pub factor: Complex64,
}

impl CompiledTerm {
    #[inline]
    pub fn act(&self, j: usize) -> (usize, Complex64) {
        let v = if (j & self.z_mask).count_ones() & 1 == 1 {
            -self.factor
        } else {
            self.factor
        };
        (j ^ self.x_mask, v)
    }
}

impl PauliString {
    pub fn new(coefficient: Complex64, letters: Vec<Pauli>) -> Self {
        Self {
            coefficient,
            letters,
        }
    }

    pub fn identity(n_qubits: usize, coefficient: Complex64) -> Self {
        Self::new(coefficient, vec![Pauli::I; n_qubits])
    }

    /// `coefficient · P` on the 1-based `site`.
    pub fn single(n_qubits: usize, site: usize, letter: Pauli, coefficient: f64) -> Result<Self> {
        Self::with_letters(n_qubits, &[(site, letter)], coefficient)
    }

    /// Places letters at the given 1-based sites; later entries on the same
    /// site multiply onto earlier ones.
    pub fn with_letters(
        n_qubits: usize,
        sites: &[(usize, Pauli)],
        coefficient: f64,
    ) -> Result<Self> {
        let mut s = Self::identity(n_qubits, Complex64::new(coefficient, 0.0));
        for &(site, letter) in sites {
            if site == 0 || site > n_qubits {
                return Err(invalid(format!("site {site} out of range 1..={n_qubits}")));
            }
            let (phase, p) = s.letters[site - 1].mul(letter);
            s.letters[site - 1] = p;
            s.coefficient *= phase;
        }
        Ok(s)
    }

    pub fn coefficient(&self) -> Complex64 {
        self.coefficient
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    /// Operator product `self · other`.
    pub fn product(&self, other: &PauliString) -> Result<PauliString> {
        if self.n_qubits() != other.n_qubits() {
            return Err(invalid("Pauli strings of different lengths"));
        }
        let mut coefficient = self.coefficient * other.coefficient;
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (phase, p) = a.mul(b);
                coefficient *= phase;
                p
            })
            .collect();
        Ok(PauliString {
            coefficient,
            letters,
        })
    }

    /// `(x_mask, z_mask)`, with qubit 1 at the most significant bit.
    pub(crate) fn masks(&self) -> (usize, usize) {
        let n = self.n_qubits();
        let mut x = 0;
        let mut z = 0;
        for (k, p) in self.letters.iter().enumerate() {
            let bit = 1usize << (n - 1 - k);
            if p.flips() {
                x |= bit;
            }
            if p.signs() {
                z |= bit;
            }
        }
        (x, z)
    }

    pub(crate) fn compile(&self) -> CompiledTerm {
        let (x_mask, z_mask) = self.masks();
        let n_y = self.letters.iter().filter(|&&p| p == Pauli::Y).count();
        // Y = iXZ: Z acts first, then the flip.
        let i_pow = match n_y % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        CompiledTerm {
            x_mask,
            z_mask,
            factor: self.coefficient * i_pow,
        }
    }

    fn letter_string(&self) -> alloc::string::String {
        self.letters.iter().map(|p| format!("{p}")).collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·{}", self.coefficient, self.letter_string())
    }
}

/// A sum of Pauli strings on a fixed register.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec {
    n_qubits: usize,
    terms: Vec<PauliString>,
}

impl OperatorSpec {
    pub fn new(n_qubits: usize, terms: Vec<PauliString>) -> Result<Self> {
        check_qubits(n_qubits)?;
        if let Some(t) = terms.iter().find(|t| t.n_qubits() != n_qubits) {
            return Err(invalid(format!(
                "term {t} has {} letters, expected {n_qubits}",
                t.n_qubits()
            )));
        }
        Ok(Self { n_qubits, terms })
    }

    pub fn identity(n_qubits: usize) -> Result<Self> {
        Self::new(
            n_qubits,
            vec![PauliString::identity(n_qubits, Complex64::new(1.0, 0.0))],
        )
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[PauliString] {
        &self.terms
    }

    pub fn scaled(&self, factor: Complex64) -> OperatorSpec {
        let terms = self
            .terms
            .iter()
            .map(|t| PauliString::new(t.coefficient * factor, t.letters.clone()))
            .collect();
        Self {
            n_qubits: self.n_qubits,
            terms,
        }
    }

    /// Concatenated term list of `self + other`.
    pub fn sum(&self, other: &OperatorSpec) -> Result<OperatorSpec> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self {
            n_qubits: self.n_qubits,
            terms,
        })
    }

    /// Expanded product `self · other` (one term per pair, unmerged).
    pub fn product(&self, other: &OperatorSpec) -> Result<OperatorSpec> {
        self.check_same(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.product(b)?);
            }
        }
        Ok(Self {
            n_qubits: self.n_qubits,
            terms,
        })
    }

    /// Merges terms with identical letters and drops exact zeros. Terms are
    /// ordered by their bit masks, so equal operators simplify identically.
    pub fn simplified(&self) -> OperatorSpec {
        let mut merged: BTreeMap<(usize, usize), PauliString> = BTreeMap::new();
        for t in &self.terms {
            merged
                .entry(t.masks())
                .and_modify(|acc| acc.coefficient += t.coefficient)
                .or_insert_with(|| t.clone());
        }
        let terms = merged
            .into_values()
            .filter(|t| t.coefficient.norm_sqr() != 0.0)
            .collect();
        Self {
            n_qubits: self.n_qubits,
            terms,
        }
    }

    /// True when every term consists of `I` and `X` letters only.
    pub fn is_x_only(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.letters.iter().all(|p| matches!(p, Pauli::I | Pauli::X)))
    }

    pub(crate) fn compiled(&self) -> Vec<CompiledTerm> {
        self.terms.iter().map(PauliString::compile).collect()
    }

    /// `op · ψ` as an unnormalized amplitude array.
    pub fn apply(&self, state: &StateVector) -> Result<Vec<Complex64>> {
        if state.n_qubits() != self.n_qubits {
            return Err(invalid(format!(
                "operator on {} qubits applied to a {} qubit state",
                self.n_qubits,
                state.n_qubits()
            )));
        }
        Ok(self.apply_amplitudes(state.amplitudes()))
    }

    /// Linear action on a raw amplitude array of length `2^N`.
    pub fn apply_amplitudes(&self, amps: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(amps.len(), 1 << self.n_qubits, "amplitude length mismatch");
        let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
        for term in self.compiled() {
            for (j, &a) in amps.iter().enumerate() {
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let (k, v) = term.act(j);
                out[k] += v * a;
            }
        }
        out
    }

    /// `⟨ψ|op|ψ⟩`.
    pub fn expectation(&self, state: &StateVector) -> Result<Complex64> {
        let image = self.apply(state)?;
        Ok(crate::qstate::dot(state.amplitudes(), &image))
    }

    fn check_same(&self, other: &OperatorSpec) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(invalid(format!(
                "operators on {} and {} qubits",
                self.n_qubits, other.n_qubits
            )));
        }
        Ok(())
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Periodic nearest-neighbour chain models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChainModel {
    /// `A = (1/4) Σ_α X_α X_{α+1}`.
    IsingX,
    /// `A = (1/4) Σ_α (cx X_α X_{α+1} + cy Y_α Y_{α+1} + cz Z_α Z_{α+1})`.
    HeisenbergXyz { cx: f64, cy: f64, cz: f64 },
}

impl ChainModel {
    pub fn xyz(cx: f64, cy: f64, cz: f64) -> Self {
        ChainModel::HeisenbergXyz { cx, cy, cz }
    }

    /// The dimensionless Hamiltonian `A` of this model on `n_qubits` sites.
    pub fn hamiltonian(&self, n_qubits: usize) -> Result<OperatorSpec> {
        match *self {
            ChainModel::IsingX => ising_hamiltonian(n_qubits),
            ChainModel::HeisenbergXyz { cx, cy, cz } => {
                heisenberg_xyz_hamiltonian(n_qubits, cx, cy, cz)
            }
        }
    }

    /// Couplings `(cx, cy, cz)`.
    pub fn couplings(&self) -> (f64, f64, f64) {
        match *self {
            ChainModel::IsingX => (1.0, 0.0, 0.0),
            ChainModel::HeisenbergXyz { cx, cy, cz } => (cx, cy, cz),
        }
    }
}

impl fmt::Display for ChainModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainModel::IsingX => f.write_str("ising"),
            ChainModel::HeisenbergXyz { cx, cy, cz } => write!(f, "xyz({cx},{cy},{cz})"),
        }
    }
}

fn chain_bonds(n_qubits: usize) -> Result<impl Iterator<Item = (usize, usize)>> {
    if n_qubits < 2 {
        return Err(invalid(format!(
            "a chain needs at least 2 sites, got {n_qubits}"
        )));
    }
    check_qubits(n_qubits)?;
    Ok((1..=n_qubits).map(move |a| (a, a % n_qubits + 1)))
}

/// Periodic Ising chain `A = (1/4) Σ_{α=1}^{N} X_α X_{α+1}`, site `N + 1 ≡ 1`.
///
/// The sum is kept literally: for `N = 2` both bonds are `X_1 X_2`, giving a
/// total weight of 1/2 after [`OperatorSpec::simplified`].
pub fn ising_hamiltonian(n_qubits: usize) -> Result<OperatorSpec> {
    let terms = chain_bonds(n_qubits)?
        .map(|(a, b)| PauliString::with_letters(n_qubits, &[(a, Pauli::X), (b, Pauli::X)], 0.25))
        .collect::<Result<Vec<_>>>()?;
    OperatorSpec::new(n_qubits, terms)
}

/// Periodic XYZ chain. Zero couplings contribute no terms.
pub fn heisenberg_xyz_hamiltonian(
    n_qubits: usize,
    cx: f64,
    cy: f64,
    cz: f64,
) -> Result<OperatorSpec> {
    if !(cx.is_finite() && cy.is_finite() && cz.is_finite()) {
        return Err(invalid("couplings must be finite"));
    }
    let mut terms = Vec::new();
    for (a, b) in chain_bonds(n_qubits)? {
        for (c, p) in [(cx, Pauli::X), (cy, Pauli::Y), (cz, Pauli::Z)] {
            if c != 0.0 {
                terms.push(PauliString::with_letters(
                    n_qubits,
                    &[(a, p), (b, p)],
                    0.25 * c,
                )?);
            }
        }
    }
    OperatorSpec::new(n_qubits, terms)
}

/// `J_axis = (1/2) Σ_α σ_{α,axis}`.
pub fn collective_operator(n_qubits: usize, axis: Axis) -> Result<OperatorSpec> {
    check_qubits(n_qubits)?;
    let terms = (1..=n_qubits)
        .map(|site| PauliString::single(n_qubits, site, axis.letter(), 0.5))
        .collect::<Result<Vec<_>>>()?;
    OperatorSpec::new(n_qubits, terms)
}

/// `J² = J_x² + J_y² + J_z²`, expanded and merged.
pub fn j_squared(n_qubits: usize) -> Result<OperatorSpec> {
    let mut total: Option<OperatorSpec> = None;
    for axis in Axis::ALL {
        let j = collective_operator(n_qubits, axis)?;
        let sq = j.product(&j)?;
        total = Some(match total {
            None => sq,
            Some(t) => t.sum(&sq)?,
        });
    }
    Ok(total.expect("three axes").simplified())
}

/// Frobenius norm of `[a, b]`, accumulated one basis column at a time.
pub fn commutator_norm(a: &OperatorSpec, b: &OperatorSpec) -> Result<f64> {
    a.check_same(b)?;
    let n = a.n_qubits;
    if n > COMMUTATOR_MAX_QUBITS {
        return Err(Error::ResourceCap {
            what: "commutator norm",
            n_qubits: n,
            cap: COMMUTATOR_MAX_QUBITS,
        });
    }
    let ta = a.compiled();
    let tb = b.compiled();
    let dim = 1usize << n;
    let mut column = vec![Complex64::new(0.0, 0.0); dim];
    let mut touched = Vec::new();
    let mut total = 0.0;

    for j in 0..dim {
        for (first, second, sign) in [(&tb, &ta, 1.0), (&ta, &tb, -1.0)] {
            for t1 in first.iter() {
                let (k, v1) = t1.act(j);
                for t2 in second.iter() {
                    let (l, v2) = t2.act(k);
                    if column[l].re == 0.0 && column[l].im == 0.0 {
                        touched.push(l);
                    }
                    column[l] += v1 * v2 * sign;
                }
            }
        }
        for &l in &touched {
            total += column[l].norm_sqr();
            column[l] = Complex64::new(0.0, 0.0);
        }
        touched.clear();
    }
    Ok(total.sqrt())
}
