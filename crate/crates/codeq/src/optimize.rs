//! Pieces shared by every optimizer: the run-result shape, the common
//! budget/initialization contract, and donor-index sampling.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::population::{Population, MIN_POP_SIZE};
use crate::rng::RngStream;
use crate::vector::ParameterVector;

/// Outcome of a single optimizer run.
#[derive(Clone, Debug)]
pub struct OptimizeResult {
    /// Best vector found over the whole run.
    pub best: ParameterVector,
    /// Fitness of `best`.
    pub best_fitness: f64,
    /// Best fitness of the evaluated initial population (generation 0).
    /// With a shared initial population this value is identical across
    /// algorithms, which is what makes their comparison fair.
    pub initial_best: f64,
    /// Best fitness after each iteration. Non-increasing; empty when the
    /// budget only covered the initial evaluation.
    pub history: Vec<f64>,
    /// Objective evaluations actually spent. Never exceeds the budget.
    pub evaluations: usize,
}

/// Applies the shared run preamble: take or create the initial population,
/// check the budget can afford its evaluation, and fill the fitness cache.
pub(crate) fn prepare_population(
    f: &dyn Objective,
    pop_size: usize,
    budget: usize,
    rng: &mut RngStream,
    initial: Option<Population>,
) -> Result<Population> {
    let mut pop = match initial {
        Some(p) => p,
        None => Population::uniform_init(f.bounds(), pop_size, f.dim(), rng)?,
    };
    if budget < pop.size() {
        return Err(Error::InvalidBudget {
            budget,
            pop_size: pop.size(),
        });
    }
    pop.evaluate(f)?;
    Ok(pop)
}

/// Two distinct indices in `[0, size)`, both different from `excluded`,
/// drawn by rejection sampling.
pub(crate) fn sample_distinct_pair(
    rng: &mut RngStream,
    size: usize,
    excluded: usize,
) -> (usize, usize) {
    debug_assert!(size >= MIN_POP_SIZE);
    let first = loop {
        let k = rng.below(size);
        if k != excluded {
            break k;
        }
    };
    let second = loop {
        let k = rng.below(size);
        if k != excluded && k != first {
            break k;
        }
    };
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_respects_exclusions() {
        let mut rng = RngStream::new(11);
        for _ in 0..1000 {
            let (a, b) = sample_distinct_pair(&mut rng, 5, 2);
            assert_ne!(a, b);
            assert_ne!(a, 2);
            assert_ne!(b, 2);
        }
    }
}
