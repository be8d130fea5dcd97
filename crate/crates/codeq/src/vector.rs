//! Points in the search space and the box they live in.

use std::ops::Deref;

use crate::error::{Error, Result};

/// A point in `R^D`: one full set of network weights and biases, or any
/// other candidate solution of a continuous problem.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterVector(Vec<f64>);

impl ParameterVector {
    pub fn new(values: Vec<f64>) -> Self {
        ParameterVector(values)
    }

    pub fn zeros(dim: usize) -> Self {
        ParameterVector(vec![0.0; dim])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl Deref for ParameterVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for ParameterVector {
    fn from(values: Vec<f64>) -> Self {
        ParameterVector(values)
    }
}

/// Scalar search-space bounds, applied uniformly to every dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    lb: f64,
    ub: f64,
}

impl Bounds {
    /// Requires `lb < ub` strictly; both must be finite.
    pub fn new(lb: f64, ub: f64) -> Result<Self> {
        if !lb.is_finite() || !ub.is_finite() || lb >= ub {
            return Err(Error::InvalidBounds { lb, ub });
        }
        Ok(Bounds { lb, ub })
    }

    pub fn lb(&self) -> f64 {
        self.lb
    }

    pub fn ub(&self) -> f64 {
        self.ub
    }

    pub fn width(&self) -> f64 {
        self.ub - self.lb
    }

    /// Clamps a single coordinate into `[lb, ub]`. A NaN coordinate maps to
    /// `lb` rather than propagating.
    pub fn clamp_value(&self, x: f64) -> f64 {
        x.max(self.lb).min(self.ub)
    }

    /// Componentwise projection of a vector onto the box.
    pub fn clamp(&self, v: &ParameterVector) -> ParameterVector {
        ParameterVector(v.iter().map(|&x| self.clamp_value(x)).collect())
    }

    pub fn contains(&self, v: &ParameterVector) -> bool {
        v.iter().all(|&x| x >= self.lb && x <= self.ub)
    }
}
