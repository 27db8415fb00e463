// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Grids of dimensionless times `θ = χt`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{invalid, Result};

/// Number of points in [`ThetaGrid::standard`].
pub const STANDARD_STEPS: usize = 64;

/// An ascending list of θ values.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaGrid {
    points: Vec<f64>,
}

impl ThetaGrid {
    /// `steps` points `min + k·(max − min)/steps`, `k = 0..steps`; the upper
    /// end is excluded so that a full period is not sampled twice.
    pub fn uniform(min: f64, max: f64, steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(invalid("a grid needs at least one step"));
        }
        if !(min.is_finite() && max.is_finite()) || max < min {
            return Err(invalid("grid bounds must be finite with min ≤ max"));
        }
        let points = (0..steps)
            .map(|k| min + (max - min) * k as f64 / steps as f64)
            .collect();
        Ok(Self { points })
    }

    /// 64 points on `[0, 2π)`.
    pub fn standard() -> Self {
        Self::uniform(0.0, TAU, STANDARD_STEPS).expect("valid bounds")
    }

    /// The standard grid together with `{0, π/2, π}`.
    pub fn standard_with_special_values() -> Self {
        Self::standard().with_points(&[0.0, FRAC_PI_2, PI])
    }

    /// A grid holding exactly `points` (sorted, duplicates removed).
    pub fn from_points(points: &[f64]) -> Result<Self> {
        if points.is_empty() {
            return Err(invalid("a grid needs at least one point"));
        }
        if points.iter().any(|t| !t.is_finite()) {
            return Err(invalid("grid points must be finite"));
        }
        Ok(Self { points: Vec::new() }.with_points(points))
    }

    pub fn single(theta: f64) -> Result<Self> {
        Self::from_points(&[theta])
    }

    fn with_points(mut self, extra: &[f64]) -> Self {
        self.points.extend_from_slice(extra);
        self.points.sort_by(f64::total_cmp);
        self.points.dedup();
        self
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}
