// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! In-place fast Walsh–Hadamard transform.

use num_complex::Complex64;

/// Applies the normalized Walsh–Hadamard transform `H^{⊗N}` in place.
///
/// `data.len()` must be a power of two. The transform is its own inverse.
pub fn walsh_hadamard_in_place(data: &mut [Complex64]) {
    let n = data.len();
    assert!(n.is_power_of_two(), "length {n} is not a power of two");

    let mut half = 1;
    while half < n {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }

    let scale = (n as f64).sqrt().recip();
    for z in data.iter_mut() {
        *z *= scale;
    }
}
