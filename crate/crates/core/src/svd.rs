// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! One-sided (Hestenes) Jacobi SVD for tall, thin complex matrices.
//!
//! Only the singular values and right singular vectors are kept; that is what
//! the numerical-kernel step of the invariant-subspace iteration needs.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

const MAX_SWEEPS: usize = 80;

/// Singular values and right singular vectors of an `m × d` matrix.
#[derive(Debug, Clone)]
pub struct ThinSvd {
    /// `σ_j`, in the column order of the input (unsorted).
    pub singular_values: Vec<f64>,
    /// `v_j` as `d`-vectors, with `M v_j` having norm `σ_j`.
    pub right_vectors: Vec<Vec<Complex64>>,
}

impl ThinSvd {
    /// Decomposes the matrix whose columns are `columns` (all of equal length).
    pub fn compute(columns: &[Vec<Complex64>]) -> ThinSvd {
        let d = columns.len();
        let mut a: Vec<Vec<Complex64>> = columns.to_vec();
        let mut v: Vec<Vec<Complex64>> = (0..d)
            .map(|j| {
                let mut e = vec![Complex64::new(0.0, 0.0); d];
                e[j] = Complex64::new(1.0, 0.0);
                e
            })
            .collect();

        for _ in 0..MAX_SWEEPS {
            let mut rotated = false;
            for p in 0..d {
                for q in (p + 1)..d {
                    let alpha: f64 = a[p].iter().map(|z| z.norm_sqr()).sum();
                    let beta: f64 = a[q].iter().map(|z| z.norm_sqr()).sum();
                    let gamma: Complex64 = a[p].iter().zip(&a[q]).map(|(x, y)| x.conj() * y).sum();
                    let g = gamma.norm();
                    if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                        continue;
                    }
                    rotated = true;
                    // Rotate a_q by the phase of γ so the pair's overlap is real.
                    let phase = (gamma / g).conj();
                    let zeta = (beta - alpha) / (2.0 * g);
                    let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = c * t;
                    rotate(&mut a, p, q, phase, c, s);
                    rotate(&mut v, p, q, phase, c, s);
                }
            }
            if !rotated {
                break;
            }
        }

        let singular_values = a
            .iter()
            .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
            .collect();
        ThinSvd {
            singular_values,
            right_vectors: v,
        }
    }
}

fn rotate(cols: &mut [Vec<Complex64>], p: usize, q: usize, phase: Complex64, c: f64, s: f64) {
    let (lo, hi) = cols.split_at_mut(q);
    let (cp, cq) = (&mut lo[p], &mut hi[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let yq = *y * phase;
        let xp = *x;
        *x = xp * c - yq * s;
        *y = xp * s + yq * c;
    }
}
