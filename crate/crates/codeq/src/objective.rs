//! The objective-function contract every optimizer minimizes against.

use crate::vector::Bounds;

/// A pure fitness function over a bounded continuous search space.
///
/// Lower is better. Implementations must be deterministic: the same vector
/// always yields the same fitness.
pub trait Objective: Sync {
    /// Problem dimension `D`.
    fn dim(&self) -> usize;

    /// The box the search is confined to.
    fn bounds(&self) -> Bounds;

    /// Fitness of a candidate point.
    fn evaluate(&self, x: &[f64]) -> f64;
}

/// A NaN fitness is treated as worst-possible so greedy selection stays
/// well-defined over a long run.
pub(crate) fn sanitize_fitness(raw: f64) -> f64 {
    if raw.is_nan() {
        f64::INFINITY
    } else {
        raw
    }
}
