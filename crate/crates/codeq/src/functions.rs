//! Classic benchmark objectives used in tests and the property suites.

use crate::objective::Objective;
use crate::vector::Bounds;

/// `f(x) = sum x_i^2`, minimum 0 at the origin.
#[derive(Clone, Copy, Debug)]
pub struct Sphere {
    dim: usize,
    bounds: Bounds,
}

impl Sphere {
    pub fn new(dim: usize, bounds: Bounds) -> Self {
        Sphere { dim, bounds }
    }
}

impl Objective for Sphere {
    fn dim(&self) -> usize {
        self.dim
    }

    fn bounds(&self) -> Bounds {
        self.bounds
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }
}

/// `f(x) = sum 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2`, minimum 0 at (1, ..., 1).
#[derive(Clone, Copy, Debug)]
pub struct Rosenbrock {
    dim: usize,
    bounds: Bounds,
}

impl Rosenbrock {
    pub fn new(dim: usize, bounds: Bounds) -> Self {
        Rosenbrock { dim, bounds }
    }
}

impl Objective for Rosenbrock {
    fn dim(&self) -> usize {
        self.dim
    }

    fn bounds(&self) -> Bounds {
        self.bounds
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        x.windows(2)
            .map(|w| {
                let d = w[1] - w[0] * w[0];
                100.0 * d * d + (1.0 - w[0]) * (1.0 - w[0])
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_at_origin() {
        let f = Sphere::new(3, Bounds::new(-5.0, 5.0).unwrap());
        assert_eq!(f.evaluate(&[0.0, 0.0, 0.0]), 0.0);
        assert_eq!(f.evaluate(&[1.0, 2.0, 0.0]), 5.0);
    }

    #[test]
    fn rosenbrock_at_ones() {
        let f = Rosenbrock::new(4, Bounds::new(-5.0, 5.0).unwrap());
        assert_eq!(f.evaluate(&[1.0; 4]), 0.0);
        assert_eq!(f.evaluate(&[0.0; 4]), 3.0);
    }
}
