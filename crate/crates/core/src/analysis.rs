// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Symmetry-retention analyses built on the evolution engines.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::dicke::{decompose_amplitudes, projection_label, DickeBasis, SpinProjection};
use crate::error::{invalid, Error, Result};
use crate::evolve::{EvolutionEngine, Propagator};
use crate::grid::ThetaGrid;
use crate::operators::{collective_operator, Axis, ChainModel};
use crate::qstate::{dot, StateVector};
use crate::svd::ThinSvd;

/// Largest register for [`invariant_symmetric_subspace`].
pub const SUBSPACE_MAX_QUBITS: usize = 12;

/// Magnitude below which canonicalized coefficients are reported as zero.
const COEFFICIENT_FLOOR: f64 = 1e-13;

/// Leakage history of one Dicke input state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateRetention {
    pub projection: SpinProjection,
    pub label: String,
    /// Leakage at each grid point.
    pub leakage: Vec<f64>,
    pub max_leakage: f64,
    /// `max_leakage ≤ tol`.
    pub retained: bool,
}

/// Leakage of every Dicke state of an `N`-site chain over a θ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub n_qubits: usize,
    pub model: ChainModel,
    pub engine: EvolutionEngine,
    pub theta_grid: Vec<f64>,
    pub tol: f64,
    /// One entry per Dicke state, descending `m`.
    pub states: Vec<StateRetention>,
}

impl SymmetryReport {
    pub fn verdicts(&self) -> Vec<bool> {
        self.states.iter().map(|s| s.retained).collect()
    }

    pub fn retained_projections(&self) -> Vec<SpinProjection> {
        self.states
            .iter()
            .filter(|s| s.retained)
            .map(|s| s.projection)
            .collect()
    }

    pub fn retained_count(&self) -> usize {
        self.states.iter().filter(|s| s.retained).count()
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Evolves every Dicke state over `grid` and records its leakage.
pub fn symmetry_retention_report(
    n_qubits: usize,
    model: &ChainModel,
    grid: &ThetaGrid,
    tol: f64,
) -> Result<SymmetryReport> {
    check_tol(tol)?;
    if grid.is_empty() {
        return Err(invalid("empty θ grid"));
    }
    let propagator = Propagator::new(model, n_qubits)?;
    let basis = DickeBasis::new(n_qubits)?;

    let mut leakage = alloc::vec![Vec::with_capacity(grid.len()); basis.len()];
    for &theta in grid.points() {
        let evolved = propagator.evolve_all(basis.states(), theta)?;
        for (series, state) in leakage.iter_mut().zip(&evolved) {
            series.push(decompose_amplitudes(state.amplitudes(), n_qubits).leakage);
        }
    }

    let states = basis
        .projections()
        .zip(leakage)
        .map(|(m, series)| {
            let max_leakage = series.iter().cloned().fold(0.0, f64::max);
            StateRetention {
                projection: m,
                label: projection_label(m),
                leakage: series,
                max_leakage,
                retained: max_leakage <= tol,
            }
        })
        .collect();

    Ok(SymmetryReport {
        n_qubits,
        model: *model,
        engine: propagator.engine(),
        theta_grid: grid.points().to_vec(),
        tol,
        states,
    })
}

/// Orthonormal basis of the largest `A`-invariant subspace of the symmetric
/// subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    pub n_qubits: usize,
    pub model: ChainModel,
    /// Orthonormal, exactly symmetric basis vectors.
    pub columns: Vec<StateVector>,
    /// Dicke coefficients (descending `m`) of each column.
    pub coefficients: Vec<Vec<Complex64>>,
    /// Kernel steps taken, including the one that confirmed the fixed point.
    pub iterations: usize,
}

impl SubspaceBasis {
    pub fn dimension(&self) -> usize {
        self.columns.len()
    }
}

/// Largest subspace `W` of the symmetric subspace `V₀` with `A W ⊆ W`.
///
/// Iterates `V_{k+1} = { v ∈ V_k : A v ∈ V_k }`: each step takes the numerical
/// kernel of `(I − P_k) A` restricted to `V_k`, with singular values at or
/// below `tol · ‖A V_k‖_F` counted as zero, until the dimension stops
/// shrinking. A state stays symmetric at every θ iff it lies in `W`.
///
/// The returned basis is canonical: the Dicke coefficient rows are brought to
/// reduced row-echelon form in descending-`m` order and then orthonormalized.
pub fn invariant_symmetric_subspace(
    n_qubits: usize,
    model: &ChainModel,
    tol: f64,
) -> Result<SubspaceBasis> {
    check_tol(tol)?;
    if n_qubits > SUBSPACE_MAX_QUBITS {
        return Err(Error::ResourceCap {
            what: "invariant subspace computation",
            n_qubits,
            cap: SUBSPACE_MAX_QUBITS,
        });
    }
    let op = model.hamiltonian(n_qubits)?;
    let basis = DickeBasis::new(n_qubits)?;
    let mut columns: Vec<Vec<Complex64>> = basis
        .states()
        .iter()
        .map(|s| s.amplitudes().to_vec())
        .collect();

    let mut iterations = 0;
    while !columns.is_empty() {
        iterations += 1;
        let images: Vec<Vec<Complex64>> = columns.iter().map(|v| op.apply_amplitudes(v)).collect();
        let scale = images
            .iter()
            .flat_map(|c| c.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        let residuals: Vec<Vec<Complex64>> = images
            .into_iter()
            .map(|mut r| {
                // Two passes of Gram–Schmidt against V_k.
                for _ in 0..2 {
                    for q in &columns {
                        let overlap = dot(q, &r);
                        for (x, y) in r.iter_mut().zip(q) {
                            *x -= overlap * y;
                        }
                    }
                }
                r
            })
            .collect();

        let svd = ThinSvd::compute(&residuals);
        let kernel: Vec<usize> = svd
            .singular_values
            .iter()
            .enumerate()
            .filter(|(_, &s)| s <= tol * scale)
            .map(|(j, _)| j)
            .collect();
        if kernel.len() == columns.len() {
            break;
        }
        let dim = columns[0].len();
        columns = kernel
            .iter()
            .map(|&j| {
                let x = &svd.right_vectors[j];
                let mut v = alloc::vec![Complex64::new(0.0, 0.0); dim];
                for (coef, col) in x.iter().zip(&columns) {
                    for (acc, c) in v.iter_mut().zip(col) {
                        *acc += coef * c;
                    }
                }
                v
            })
            .collect();
    }

    let rows: Vec<Vec<Complex64>> = columns
        .iter()
        .map(|c| decompose_amplitudes(c, n_qubits).coefficients)
        .collect();
    let coefficients = canonical_rows(rows);
    let columns = coefficients
        .iter()
        .map(|c| StateVector::normalized(n_qubits, basis.synthesize(c)?))
        .collect::<Result<Vec<_>>>()?;

    Ok(SubspaceBasis {
        n_qubits,
        model: *model,
        columns,
        coefficients,
        iterations,
    })
}

/// Reduced row-echelon form followed by Gram–Schmidt, with the first
/// significant entry of each row made real and positive.
fn canonical_rows(mut rows: Vec<Vec<Complex64>>) -> Vec<Vec<Complex64>> {
    const PIVOT_FLOOR: f64 = 1e-9;
    let d = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == d {
            break;
        }
        let best = (pivot_row..d)
            .max_by(|&a, &b| rows[a][col].norm().total_cmp(&rows[b][col].norm()))
            .expect("non-empty range");
        if rows[best][col].norm() < PIVOT_FLOOR {
            continue;
        }
        rows.swap(pivot_row, best);
        let inv = rows[pivot_row][col].inv();
        for z in rows[pivot_row].iter_mut() {
            *z *= inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row {
                continue;
            }
            let f = row[col];
            for (z, p) in row.iter_mut().zip(&pivot) {
                *z -= f * p;
            }
        }
        pivot_row += 1;
    }

    let mut out: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    for mut row in rows {
        for q in &out {
            let overlap = dot(q, &row);
            for (x, y) in row.iter_mut().zip(q) {
                *x -= overlap * y;
            }
        }
        let norm = row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in row.iter_mut() {
            *z /= norm;
        }
        if let Some(lead) = row.iter().find(|z| z.norm() > PIVOT_FLOOR).copied() {
            let phase = (lead / lead.norm()).conj();
            for z in row.iter_mut() {
                *z *= phase;
            }
        }
        for z in row.iter_mut() {
            if z.re.abs() < COEFFICIENT_FLOOR {
                z.re = 0.0;
            }
            if z.im.abs() < COEFFICIENT_FLOOR {
                z.im = 0.0;
            }
        }
        out.push(row);
    }
    out
}

/// Direction of anisotropy of an XYZ chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Anisotropy {
    Isotropic,
    AlongX,
    AlongY,
    AlongZ,
    General,
}

impl Anisotropy {
    pub fn classify(cx: f64, cy: f64, cz: f64) -> Self {
        let eq = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0);
        match (eq(cx, cy), eq(cy, cz), eq(cx, cz)) {
            (true, true, _) => Anisotropy::Isotropic,
            (_, true, _) => Anisotropy::AlongX,
            (_, _, true) => Anisotropy::AlongY,
            (true, _, _) => Anisotropy::AlongZ,
            _ => Anisotropy::General,
        }
    }
}

impl fmt::Display for Anisotropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Anisotropy::Isotropic => "isotropic",
            Anisotropy::AlongX => "x-anisotropic",
            Anisotropy::AlongY => "y-anisotropic",
            Anisotropy::AlongZ => "z-anisotropic",
            Anisotropy::General => "fully anisotropic",
        })
    }
}

/// What the anisotropic-chain claim predicts for the Dicke states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RetentionClaim {
    /// Every Dicke state keeps its exchange symmetry.
    AllRetained,
    /// No Dicke state keeps its exchange symmetry.
    NoneRetained,
}

/// Outcome of comparing a scan against the claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimVerdict {
    Agree,
    Disagree,
    /// The claim says nothing about this model and size.
    NoClaim,
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimVerdict::Agree => "agree",
            ClaimVerdict::Disagree => "disagree",
            ClaimVerdict::NoClaim => "no-claim",
        })
    }
}

/// Retention report of an XYZ chain together with the claim comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct HeisenbergScan {
    pub report: SymmetryReport,
    pub anisotropy: Anisotropy,
    pub claim: Option<RetentionClaim>,
    pub verdict: ClaimVerdict,
    /// One-line human-readable summary.
    pub summary: String,
}

/// Claim under test: x- or y-anisotropy destroys the symmetry of every
/// symmetric state for `N ≥ 5`; z-anisotropy preserves it for all `N`.
fn claim_for(anisotropy: Anisotropy, n_qubits: usize) -> Option<RetentionClaim> {
    match anisotropy {
        Anisotropy::AlongX | Anisotropy::AlongY if n_qubits >= 5 => {
            Some(RetentionClaim::NoneRetained)
        }
        Anisotropy::AlongZ => Some(RetentionClaim::AllRetained),
        _ => None,
    }
}

/// Retention scan of the XYZ chain, compared against the anisotropy claim.
///
/// The verdict is an observation: it reports agreement or disagreement and
/// never enforces the claim.
pub fn heisenberg_symmetry_scan(
    n_qubits: usize,
    cx: f64,
    cy: f64,
    cz: f64,
    grid: &ThetaGrid,
    tol: f64,
) -> Result<HeisenbergScan> {
    let model = ChainModel::xyz(cx, cy, cz);
    let report = symmetry_retention_report(n_qubits, &model, grid, tol)?;
    let anisotropy = Anisotropy::classify(cx, cy, cz);
    let claim = claim_for(anisotropy, n_qubits);
    let retained = report.retained_count();
    let total = report.states.len();
    let verdict = match claim {
        None => ClaimVerdict::NoClaim,
        Some(RetentionClaim::AllRetained) if retained == total => ClaimVerdict::Agree,
        Some(RetentionClaim::NoneRetained) if retained == 0 => ClaimVerdict::Agree,
        Some(_) => ClaimVerdict::Disagree,
    };
    let predicted = match claim {
        None => "no prediction",
        Some(RetentionClaim::AllRetained) => "predicted: all retained",
        Some(RetentionClaim::NoneRetained) => "predicted: none retained",
    };
    let summary = format!(
        "{anisotropy} chain ({cx}, {cy}, {cz}), N={n_qubits}: {retained} of {total} Dicke states retained; {predicted}; verdict: {verdict}"
    );
    Ok(HeisenbergScan {
        report,
        anisotropy,
        claim,
        verdict,
        summary,
    })
}

/// Mean spin, perpendicular frame and minimal perpendicular variance.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezingAnalysis {
    pub n_qubits: usize,
    /// `⟨J⃗⟩`.
    pub mean_spin: [f64; 3],
    /// Orthonormal pair spanning the plane perpendicular to `⟨J⃗⟩`.
    pub perpendicular: [[f64; 3]; 2],
    /// Covariance of `(J·n₁, J·n₂)`.
    pub covariance: [[f64; 2]; 2],
    /// `min_φ Var(J·(n₁ cos φ + n₂ sin φ))`.
    pub min_variance: f64,
    /// `2·min_variance/(N/2)`.
    pub xi2: f64,
}

/// Smallest `‖⟨J⃗⟩‖` for which a perpendicular plane is considered defined.
pub const MEAN_SPIN_FLOOR: f64 = 1e-8;

impl SqueezingAnalysis {
    pub fn compute(state: &StateVector) -> Result<Self> {
        let n = state.n_qubits();
        let images = Axis::ALL
            .iter()
            .map(|&a| collective_operator(n, a)?.apply(state))
            .collect::<Result<Vec<_>>>()?;
        let amps = state.amplitudes();
        let mean: [f64; 3] = core::array::from_fn(|k| dot(amps, &images[k]).re);
        let norm = norm3(mean);
        if norm.is_nan() || norm <= MEAN_SPIN_FLOOR {
            return Err(Error::DegenerateDirection { norm });
        }
        let dir = scale3(mean, 1.0 / norm);
        let n1 = perpendicular_to(dir);
        let n2 = cross(dir, n1);

        let project = |v: [f64; 3]| -> Vec<Complex64> {
            (0..amps.len())
                .map(|i| images[0][i] * v[0] + images[1][i] * v[1] + images[2][i] * v[2])
                .collect()
        };
        let j1 = project(n1);
        let j2 = project(n2);
        let m1 = dot(amps, &j1).re;
        let m2 = dot(amps, &j2).re;
        let c11 = dot(&j1, &j1).re - m1 * m1;
        let c22 = dot(&j2, &j2).re - m2 * m2;
        let c12 = dot(&j1, &j2).re - m1 * m2;

        let mean_var = 0.5 * (c11 + c22);
        let half_gap = 0.5 * (c11 - c22);
        let min_variance = mean_var - (half_gap * half_gap + c12 * c12).sqrt();
        let xi2 = 2.0 * min_variance / (n as f64 / 2.0);

        Ok(Self {
            n_qubits: n,
            mean_spin: mean,
            perpendicular: [n1, n2],
            covariance: [[c11, c12], [c12, c22]],
            min_variance,
            xi2,
        })
    }

    /// `n₁ cos φ + n₂ sin φ`.
    pub fn direction(&self, phi: f64) -> [f64; 3] {
        let (s, c) = phi.sin_cos();
        let [n1, n2] = self.perpendicular;
        core::array::from_fn(|k| n1[k] * c + n2[k] * s)
    }
}

/// Spin-squeezing parameter `ξ² = 2 (ΔJ_⊥)²_min / (N/2)`.
pub fn spin_squeezing_xi2(state: &StateVector) -> Result<f64> {
    Ok(SqueezingAnalysis::compute(state)?.xi2)
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn scale3(v: [f64; 3], s: f64) -> [f64; 3] {
    [v[0] * s, v[1] * s, v[2] * s]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Unit vector perpendicular to the unit vector `n`, built from the
/// coordinate axis least aligned with it.
fn perpendicular_to(n: [f64; 3]) -> [f64; 3] {
    let axis = (0..3)
        .min_by(|&a, &b| n[a].abs().total_cmp(&n[b].abs()))
        .expect("three axes");
    let mut e = [0.0; 3];
    e[axis] = 1.0;
    let d = n[axis];
    let v = [e[0] - d * n[0], e[1] - d * n[1], e[2] - d * n[2]];
    scale3(v, 1.0 / norm3(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicke::dicke_state;
    use crate::qstate::basis_state;

    #[test]
    fn anisotropy_classification() {
        assert_eq!(Anisotropy::classify(1.0, 1.0, 1.0), Anisotropy::Isotropic);
        assert_eq!(Anisotropy::classify(2.0, 1.0, 1.0), Anisotropy::AlongX);
        assert_eq!(Anisotropy::classify(1.0, 2.0, 1.0), Anisotropy::AlongY);
        assert_eq!(Anisotropy::classify(1.0, 1.0, 2.0), Anisotropy::AlongZ);
        assert_eq!(Anisotropy::classify(1.0, 0.0, 0.0), Anisotropy::AlongX);
        assert_eq!(Anisotropy::classify(1.0, 2.0, 3.0), Anisotropy::General);
    }

    #[test]
    fn coherent_state_is_not_squeezed() {
        for n in 1..=6 {
            let psi = StateVector::basis_index(n, 0).unwrap();
            assert!((spin_squeezing_xi2(&psi).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_mean_spin_is_degenerate() {
        let d = dicke_state(2, SpinProjection::from_twice(0)).unwrap();
        assert!(matches!(
            spin_squeezing_xi2(&d),
            Err(Error::DegenerateDirection { .. })
        ));
    }

    #[test]
    fn perpendicular_frame_is_orthonormal() {
        for n in [[0.0, 0.0, 1.0], [0.6, 0.8, 0.0], [0.48, 0.6, 0.64]] {
            let p = perpendicular_to(n);
            let q = cross(n, p);
            let d = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
            assert!(d(n, p).abs() < 1e-15 && d(n, q).abs() < 1e-15 && d(p, q).abs() < 1e-15);
            assert!((norm3(p) - 1.0).abs() < 1e-15 && (norm3(q) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn retention_report_rejects_bad_input() {
        let g = ThetaGrid::standard();
        assert!(symmetry_retention_report(3, &ChainModel::IsingX, &g, 0.0).is_err());
        assert!(symmetry_retention_report(1, &ChainModel::IsingX, &g, 1e-10).is_err());
        assert!(matches!(
            symmetry_retention_report(11, &ChainModel::xyz(1.0, 1.0, 2.0), &g, 1e-10),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn canonical_rows_recover_standard_basis() {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let c = |re: f64| Complex64::new(re, 0.0);
        let rows = alloc::vec![
            alloc::vec![c(0.0), c(s), c(0.0), Complex64::new(0.0, s), c(0.0)],
            alloc::vec![c(0.0), c(s), c(0.0), Complex64::new(0.0, -s), c(0.0)],
        ];
        let out = canonical_rows(rows);
        assert_eq!(out[0], alloc::vec![c(0.0), c(1.0), c(0.0), c(0.0), c(0.0)]);
        assert_eq!(out[1], alloc::vec![c(0.0), c(0.0), c(0.0), c(1.0), c(0.0)]);
    }

    #[test]
    fn two_qubit_invariant_subspace_is_everything() {
        let sub = invariant_symmetric_subspace(2, &ChainModel::IsingX, 1e-10).unwrap();
        assert_eq!(sub.dimension(), 3);
        assert_eq!(sub.iterations, 1);
        let top = basis_state(2, "00").unwrap();
        assert_eq!(sub.columns[0], top);
    }
}
