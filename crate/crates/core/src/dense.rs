// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense square complex matrices: Kronecker-product materialization of
//! operators, products, and the matrix exponential.
//!
//! This is the brute-force side of every cross-check, so it deliberately
//! avoids the bit-mask machinery used in [`crate::operators`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{OperatorSpec, Pauli};

/// Largest register [`DenseMatrix::from_operator`] materializes.
pub const DENSE_MAX_QUBITS: usize = 10;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Self { dim, data }
    }

    pub fn pauli(p: Pauli) -> Self {
        let (a, b, c, d) = match p {
            Pauli::I => (ONE, ZERO, ZERO, ONE),
            Pauli::X => (ZERO, ONE, ONE, ZERO),
            Pauli::Y => (
                ZERO,
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                ZERO,
            ),
            Pauli::Z => (ONE, ZERO, ZERO, -ONE),
        };
        Self {
            dim: 2,
            data: vec![a, b, c, d],
        }
    }

    /// Sums `c_k · P_{k,1} ⊗ … ⊗ P_{k,N}` with explicit Kronecker products.
    pub fn from_operator(op: &OperatorSpec) -> Result<Self> {
        let n = op.n_qubits();
        if n > DENSE_MAX_QUBITS {
            return Err(Error::ResourceCap {
                what: "dense operator",
                n_qubits: n,
                cap: DENSE_MAX_QUBITS,
            });
        }
        let mut total = Self::zeros(1 << n);
        for term in op.terms() {
            let mut m = Self::identity(1);
            for &p in term.letters() {
                m = m.kron(&Self::pauli(p));
            }
            total.axpy(term.coefficient(), &m);
        }
        Ok(total)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for r1 in 0..n {
            for c1 in 0..n {
                let a = self[(r1, c1)];
                if a == ZERO {
                    continue;
                }
                for r2 in 0..m {
                    for c2 in 0..m {
                        out[(r1 * m + r2, c1 * m + c2)] = a * other[(r2, c2)];
                    }
                }
            }
        }
        out
    }

    /// `self += alpha · other`.
    pub fn axpy(&mut self, alpha: Complex64, other: &DenseMatrix) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += alpha * b;
        }
    }

    pub fn scaled(&self, alpha: Complex64) -> DenseMatrix {
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * alpha).collect(),
        }
    }

    pub fn adjoint(&self) -> DenseMatrix {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in matmul");
        let n = self.dim;
        let mut out = Self::zeros(n);
        if n == 0 {
            return out;
        }
        let stride = n as isize;
        // SAFETY: `Complex64` is `#[repr(C)] { re, im }`, layout-identical to
        // `[f64; 2]`; all three buffers hold n*n elements in row-major order
        // with row stride n and column stride 1, and `out` does not alias.
        unsafe {
            matrixmultiply::zgemm(
                matrixmultiply::CGemmOption::Standard,
                matrixmultiply::CGemmOption::Standard,
                n,
                n,
                n,
                [1.0, 0.0],
                self.data.as_ptr() as *const [f64; 2],
                stride,
                1,
                other.data.as_ptr() as *const [f64; 2],
                stride,
                1,
                [0.0, 0.0],
                out.data.as_mut_ptr() as *mut [f64; 2],
                stride,
                1,
            );
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        self.data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self · other − other · self`.
    pub fn commutator(&self, other: &DenseMatrix) -> DenseMatrix {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|c| (0..self.dim).map(|r| self[(r, c)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖U†U − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        (&self.adjoint().matmul(self) - &Self::identity(self.dim)).frobenius_norm()
    }

    /// Solves `self · X = rhs` by LU factorization with partial pivoting.
    ///
    /// Returns `None` if a pivot vanishes.
    pub fn solve(&self, rhs: &DenseMatrix) -> Option<DenseMatrix> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut lu = self.clone();
        let mut x = rhs.clone();
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&a, &b| lu[(a, k)].norm().total_cmp(&lu[(b, k)].norm()))
                .expect("non-empty range");
            if lu[(pivot, k)].norm() == 0.0 {
                return None;
            }
            if pivot != k {
                lu.swap_rows(pivot, k);
                x.swap_rows(pivot, k);
            }
            let inv = lu[(k, k)].inv();
            for r in (k + 1)..n {
                let factor = lu[(r, k)] * inv;
                if factor == ZERO {
                    continue;
                }
                lu[(r, k)] = factor;
                for c in (k + 1)..n {
                    let v = lu[(k, c)];
                    lu[(r, c)] -= factor * v;
                }
                for c in 0..n {
                    let v = x[(k, c)];
                    x[(r, c)] -= factor * v;
                }
            }
        }
        for k in (0..n).rev() {
            let inv = lu[(k, k)].inv();
            for c in 0..n {
                let mut acc = x[(k, c)];
                for j in (k + 1)..n {
                    acc -= lu[(k, j)] * x[(j, c)];
                }
                x[(k, c)] = acc * inv;
            }
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        let n = self.dim;
        for c in 0..n {
            self.data.swap(a * n + c, b * n + c);
        }
    }

    /// `exp(self)` by scaling and squaring with a degree-13 Padé approximant.
    pub fn expm(&self) -> DenseMatrix {
        // b_k of the [13/13] Padé approximant to exp.
        const B: [f64; 14] = [
            64764752532480000.0,
            32382376266240000.0,
            7771770303897600.0,
            1187353796428800.0,
            129060195264000.0,
            10559470521600.0,
            670442572800.0,
            33522128640.0,
            1323241920.0,
            40840800.0,
            960960.0,
            16380.0,
            182.0,
            1.0,
        ];
        // Largest 1-norm for which the [13/13] approximant is accurate to
        // unit roundoff.
        const THETA_13: f64 = 5.371920351148152;

        let n = self.dim;
        if n == 0 {
            return self.clone();
        }
        let norm = self.one_norm();
        let squarings = if norm > THETA_13 {
            (norm / THETA_13).log2().ceil() as i32
        } else {
            0
        };
        let a = self.scaled(Complex64::new(2f64.powi(-squarings), 0.0));
        let ident = Self::identity(n);
        let a2 = a.matmul(&a);
        let a4 = a2.matmul(&a2);
        let a6 = a4.matmul(&a2);

        let c = |k: usize| Complex64::new(B[k], 0.0);
        let combo = |x: Complex64,
                     m6: &DenseMatrix,
                     y: Complex64,
                     m4: &DenseMatrix,
                     z: Complex64,
                     m2: &DenseMatrix| {
            let mut out = m6.scaled(x);
            out.axpy(y, m4);
            out.axpy(z, m2);
            out
        };

        let inner_u = a6.matmul(&combo(c(13), &a6, c(11), &a4, c(9), &a2));
        let mut poly_u = inner_u;
        poly_u.axpy(c(7), &a6);
        poly_u.axpy(c(5), &a4);
        poly_u.axpy(c(3), &a2);
        poly_u.axpy(c(1), &ident);
        let u = a.matmul(&poly_u);

        let mut v = a6.matmul(&combo(c(12), &a6, c(10), &a4, c(8), &a2));
        v.axpy(c(6), &a6);
        v.axpy(c(4), &a4);
        v.axpy(c(2), &a2);
        v.axpy(c(0), &ident);

        let p = &v + &u;
        let q = &v - &u;
        let mut result = q
            .solve(&p)
            .expect("Padé denominator is nonsingular for scaled arguments");
        for _ in 0..squarings {
            result = result.matmul(&result);
        }
        result
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        let mut out = self.clone();
        out.axpy(ONE, rhs);
        out
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        let mut out = self.clone();
        out.axpy(-ONE, rhs);
        out
    }
}
