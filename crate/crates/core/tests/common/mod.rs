// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinsym_core::{Complex64, DickeBasis, StateVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_amplitudes(rng: &mut impl Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

pub fn random_state(rng: &mut impl Rng, n: usize) -> StateVector {
    StateVector::normalized(n, random_amplitudes(rng, 1 << n)).unwrap()
}

pub fn random_symmetric_state(rng: &mut impl Rng, n: usize) -> StateVector {
    let basis = DickeBasis::new(n).unwrap();
    let c = random_amplitudes(rng, n + 1);
    StateVector::normalized(n, basis.synthesize(&c).unwrap()).unwrap()
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
