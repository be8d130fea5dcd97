//! Populations of candidate solutions with a coherent fitness cache and an
//! objective-evaluation counter.

use crate::error::{Error, Result};
use crate::objective::{sanitize_fitness, Objective};
use crate::rng::RngStream;
use crate::vector::{Bounds, ParameterVector};

/// Difference-vector operators need two distinct donors besides the member
/// they apply to.
pub const MIN_POP_SIZE: usize = 4;

/// A set of candidate vectors, their cached fitness values (lower is
/// better), and a count of objective evaluations spent so far.
#[derive(Clone, Debug)]
pub struct Population {
    members: Vec<ParameterVector>,
    fitness: Vec<f64>,
    evaluations_used: usize,
}

impl Population {
    /// Random initialization within the search box. The fitness cache is
    /// left unfilled; evaluation is a separate, budget-counted step.
    pub fn uniform_init(
        bounds: Bounds,
        size: usize,
        dim: usize,
        rng: &mut RngStream,
    ) -> Result<Self> {
        if size < MIN_POP_SIZE {
            return Err(Error::PopulationTooSmall {
                size,
                min: MIN_POP_SIZE,
            });
        }
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        let members = (0..size)
            .map(|_| {
                ParameterVector::new(
                    (0..dim).map(|_| rng.range(bounds.lb(), bounds.ub())).collect(),
                )
            })
            .collect();
        Ok(Population {
            members,
            fitness: Vec::new(),
            evaluations_used: 0,
        })
    }

    /// Wraps externally constructed members (e.g. a shared initial
    /// population handed to several optimizers).
    pub fn from_members(members: Vec<ParameterVector>) -> Result<Self> {
        if members.len() < MIN_POP_SIZE {
            return Err(Error::PopulationTooSmall {
                size: members.len(),
                min: MIN_POP_SIZE,
            });
        }
        let dim = members[0].len();
        for m in &members {
            if m.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: m.len(),
                });
            }
        }
        Ok(Population {
            members,
            fitness: Vec::new(),
            evaluations_used: 0,
        })
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn dim(&self) -> usize {
        self.members[0].len()
    }

    pub fn members(&self) -> &[ParameterVector] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &ParameterVector {
        &self.members[i]
    }

    pub fn fitness(&self) -> &[f64] {
        &self.fitness
    }

    pub fn is_evaluated(&self) -> bool {
        self.fitness.len() == self.members.len()
    }

    pub fn evaluations_used(&self) -> usize {
        self.evaluations_used
    }

    /// Fills the fitness cache. A no-op on an already evaluated population;
    /// the counter grows only by the number of fresh evaluations.
    pub fn evaluate(&mut self, f: &dyn Objective) -> Result<()> {
        if self.is_evaluated() {
            return Ok(());
        }
        if self.dim() != f.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.dim(),
                got: self.dim(),
            });
        }
        self.fitness = self
            .members
            .iter()
            .map(|m| sanitize_fitness(f.evaluate(m)))
            .collect();
        self.evaluations_used += self.members.len();
        Ok(())
    }

    /// Indices of the fittest and least fit members. Ties break toward the
    /// lowest index so reports are reproducible.
    pub fn best_worst(&self) -> Result<(usize, usize)> {
        if !self.is_evaluated() {
            return Err(Error::Unevaluated);
        }
        let mut best = 0;
        let mut worst = 0;
        for (i, &fit) in self.fitness.iter().enumerate() {
            if fit < self.fitness[best] {
                best = i;
            }
            if fit > self.fitness[worst] {
                worst = i;
            }
        }
        Ok((best, worst))
    }

    /// Replaces a member and its cached fitness together, keeping the cache
    /// coherent.
    pub(crate) fn replace(&mut self, index: usize, member: ParameterVector, fitness: f64) {
        self.members[index] = member;
        self.fitness[index] = fitness;
    }

    pub(crate) fn add_evaluations(&mut self, n: usize) {
        self.evaluations_used += n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::Sphere;

    fn rng() -> RngStream {
        RngStream::new(2024)
    }

    #[test]
    fn init_rejects_tiny_populations() {
        let b = Bounds::new(-1.0, 1.0).unwrap();
        assert!(matches!(
            Population::uniform_init(b, 3, 2, &mut rng()),
            Err(Error::PopulationTooSmall { .. })
        ));
    }

    #[test]
    fn init_contains_all_components() {
        let b = Bounds::new(-1.0, 1.0).unwrap();
        let pop = Population::uniform_init(b, 4, 2, &mut rng()).unwrap();
        assert_eq!(pop.size(), 4);
        assert!(!pop.is_evaluated());
        for m in pop.members() {
            assert_eq!(m.len(), 2);
            assert!(b.contains(m));
        }
    }

    #[test]
    fn init_is_deterministic_under_seed() {
        let b = Bounds::new(-2.0, 3.0).unwrap();
        let a = Population::uniform_init(b, 6, 5, &mut RngStream::new(9)).unwrap();
        let c = Population::uniform_init(b, 6, 5, &mut RngStream::new(9)).unwrap();
        assert_eq!(a.members(), c.members());
    }

    #[test]
    fn evaluate_fills_cache_and_counts() {
        let f = Sphere::new(2, Bounds::new(-5.0, 5.0).unwrap());
        let mut pop = Population::from_members(vec![
            ParameterVector::new(vec![0.0, 0.0]),
            ParameterVector::new(vec![1.0, 2.0]),
            ParameterVector::new(vec![3.0, 0.0]),
            ParameterVector::new(vec![0.0, 1.0]),
        ])
        .unwrap();
        pop.evaluate(&f).unwrap();
        assert_eq!(pop.fitness()[0], 0.0);
        assert_eq!(pop.fitness()[1], 5.0);
        assert_eq!(pop.evaluations_used(), 4);
        // repeated evaluation is free
        pop.evaluate(&f).unwrap();
        assert_eq!(pop.evaluations_used(), 4);
    }

    #[test]
    fn evaluate_counts_full_population() {
        let f = Sphere::new(3, Bounds::new(-5.0, 5.0).unwrap());
        let b = Bounds::new(-5.0, 5.0).unwrap();
        let mut pop = Population::uniform_init(b, 20, 3, &mut rng()).unwrap();
        pop.evaluate(&f).unwrap();
        assert_eq!(pop.evaluations_used(), 20);
    }

    #[test]
    fn evaluate_cache_is_coherent() {
        let f = Sphere::new(2, Bounds::new(-5.0, 5.0).unwrap());
        let b = Bounds::new(-5.0, 5.0).unwrap();
        let mut pop = Population::uniform_init(b, 8, 2, &mut rng()).unwrap();
        pop.evaluate(&f).unwrap();
        for (m, &fit) in pop.members().iter().zip(pop.fitness()) {
            assert_eq!(f.evaluate(m), fit);
        }
    }

    #[test]
    fn best_worst_orders_by_fitness() {
        let mut pop = Population::from_members(vec![
            ParameterVector::new(vec![2.0]),
            ParameterVector::new(vec![1.4142135623730951]),
            ParameterVector::new(vec![-1.4142135623730951]),
            ParameterVector::new(vec![3.0]),
        ])
        .unwrap();
        let f = Sphere::new(1, Bounds::new(-5.0, 5.0).unwrap());
        pop.evaluate(&f).unwrap();
        // fitness [4, 2, 2, 9]
        let (best, worst) = pop.best_worst().unwrap();
        assert_eq!((best, worst), (1, 3));
    }

    #[test]
    fn best_worst_ties_go_to_lowest_index() {
        let mut pop = Population::from_members(vec![
            ParameterVector::new(vec![5.0]),
            ParameterVector::new(vec![-5.0]),
            ParameterVector::new(vec![5.0]),
            ParameterVector::new(vec![-5.0]),
        ])
        .unwrap();
        let f = Sphere::new(1, Bounds::new(-5.0, 5.0).unwrap());
        pop.evaluate(&f).unwrap();
        let (best, worst) = pop.best_worst().unwrap();
        assert_eq!((best, worst), (0, 0));
    }

    #[test]
    fn best_worst_requires_cache() {
        let b = Bounds::new(-1.0, 1.0).unwrap();
        let pop = Population::uniform_init(b, 4, 1, &mut rng()).unwrap();
        assert!(matches!(pop.best_worst(), Err(Error::Unevaluated)));
    }
}
