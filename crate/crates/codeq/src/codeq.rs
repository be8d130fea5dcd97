//! The CODEQ optimizer.
//!
//! CODEQ is a parameter-free population method that hybridizes concepts from
//! chaotic search, opposition-based learning, differential evolution and
//! quantum mechanics. Each iteration mutates every parent with a
//! quantum-inspired trial vector under greedy selection, then creates one
//! extra candidate — either an opposition point of the worst member or a
//! chaotic perturbation of the best — that replaces the worst member if it
//! improves on it.

use crate::error::{Error, Result};
use crate::objective::{sanitize_fitness, Objective};
use crate::optimize::{prepare_population, sample_distinct_pair, OptimizeResult};
use crate::population::Population;
use crate::rng::RngStream;
use crate::vector::{Bounds, ParameterVector};

/// State of the piecewise-linear chaotic map
/// `c(t) = c(t-1)/p` for `c(t-1) < p`, else `(1 - c(t-1))/(1 - p)`.
///
/// `c` and `p` stay strictly inside `(0,1)`; if the map ever emits an
/// endpoint exactly (e.g. when `c` hits `p`, the orbit would collapse onto
/// 0), the value is resampled uniformly in `(0,1)` so the source stays
/// non-degenerate over long runs.
#[derive(Clone, Copy, Debug)]
pub struct ChaoticState {
    c: f64,
    p: f64,
}

impl ChaoticState {
    /// Random initialization of both `c(0)` and the breakpoint `p`.
    pub fn random(rng: &mut RngStream) -> Self {
        ChaoticState {
            c: rng.open01(),
            p: rng.open01(),
        }
    }

    /// Explicit state, mainly for tests. Both values must lie in `(0,1)`.
    pub fn new(c: f64, p: f64) -> Result<Self> {
        if !(c > 0.0 && c < 1.0 && p > 0.0 && p < 1.0) {
            return Err(Error::InvalidChaoticState { c, p });
        }
        Ok(ChaoticState { c, p })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Advances the map once and returns the new chaotic value.
    pub fn step(&mut self, rng: &mut RngStream) -> f64 {
        let mut next = if self.c < self.p {
            self.c / self.p
        } else {
            (1.0 - self.c) / (1.0 - self.p)
        };
        if !(next > 0.0 && next < 1.0) {
            next = rng.open01();
        }
        self.c = next;
        next
    }
}

/// Quantum-inspired mutation: `v = parent + (a - b) * ln(1/u)`.
///
/// One scalar `u`, drawn strictly inside `(0,1)`, scales the whole
/// difference vector. The caller clamps the result to the search box.
pub fn trial_vector(
    parent: &ParameterVector,
    donor_a: &ParameterVector,
    donor_b: &ParameterVector,
    u: f64,
) -> Result<ParameterVector> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::InvalidU(u));
    }
    let scale = (1.0 / u).ln();
    Ok(ParameterVector::new(
        parent
            .iter()
            .zip(donor_a.iter().zip(donor_b.iter()))
            .map(|(&x, (&a, &b))| x + (a - b) * scale)
            .collect(),
    ))
}

/// Evaluates `candidate` and replaces member `index` only on strict fitness
/// improvement. Costs one objective evaluation either way. Returns whether
/// the replacement happened.
pub fn greedy_replace(
    pop: &mut Population,
    index: usize,
    candidate: ParameterVector,
    f: &dyn Objective,
) -> Result<bool> {
    if index >= pop.size() {
        return Err(Error::IndexOutOfRange {
            index,
            size: pop.size(),
        });
    }
    if !pop.is_evaluated() {
        return Err(Error::Unevaluated);
    }
    let fitness = sanitize_fitness(f.evaluate(&candidate));
    pop.add_evaluations(1);
    if fitness < pop.fitness()[index] {
        pop.replace(index, candidate, fitness);
        Ok(true)
    } else {
        Ok(false)
    }
}

/// Evaluates `candidate` and replaces the worst member only on strict
/// improvement over it. Costs one objective evaluation either way.
pub fn replace_worst_if_better(
    pop: &mut Population,
    candidate: ParameterVector,
    f: &dyn Objective,
) -> Result<bool> {
    let (_, worst) = pop.best_worst()?;
    let fitness = sanitize_fitness(f.evaluate(&candidate));
    pop.add_evaluations(1);
    if fitness < pop.fitness()[worst] {
        pop.replace(worst, candidate, fitness);
        Ok(true)
    } else {
        Ok(false)
    }
}

/// Opposition point of the worst member: `LB + UB - r * x_worst`.
fn opposition_point(worst: &ParameterVector, bounds: Bounds, r: f64) -> ParameterVector {
    ParameterVector::new(
        worst
            .iter()
            .map(|&x| bounds.lb() + bounds.ub() - r * x)
            .collect(),
    )
}

/// Chaotic attraction around the best member:
/// `x_best + |a - b| * (2c - 1)`.
fn chaos_attracted_point(
    best: &ParameterVector,
    donor_a: &ParameterVector,
    donor_b: &ParameterVector,
    c: f64,
) -> ParameterVector {
    let k = 2.0 * c - 1.0;
    ParameterVector::new(
        best.iter()
            .zip(donor_a.iter().zip(donor_b.iter()))
            .map(|(&g, (&a, &b))| g + (a - b).abs() * k)
            .collect(),
    )
}

/// The per-iteration exploration vector: with probability 1/2 an opposition
/// point of the worst member (scaled by a fresh `r ~ U(0,1)`), otherwise a
/// chaotic perturbation of the best member, driven by one step of the
/// chaotic map. Donor indices exclude the worst member. The result is
/// clamped to the search box.
pub fn opposition_quantum_vector(
    pop: &Population,
    chaos: &mut ChaoticState,
    bounds: Bounds,
    rng: &mut RngStream,
) -> Result<ParameterVector> {
    let (best, worst) = pop.best_worst()?;
    let candidate = if rng.uniform() <= 0.5 {
        let r = rng.uniform();
        opposition_point(pop.member(worst), bounds, r)
    } else {
        let (i1, i2) = sample_distinct_pair(rng, pop.size(), worst);
        let c = chaos.step(rng);
        chaos_attracted_point(pop.member(best), pop.member(i1), pop.member(i2), c)
    };
    Ok(bounds.clamp(&candidate))
}

/// Runs CODEQ against `f` until the evaluation budget is spent.
///
/// `initial` overrides random initialization when several optimizers must
/// start from the same population. The budget is counted in objective
/// evaluations and consumed exactly: an iteration that cannot afford all of
/// its evaluations performs as many as the budget still allows and stops.
pub fn codeq_optimize(
    f: &dyn Objective,
    pop_size: usize,
    budget: usize,
    seed: u64,
    initial: Option<Population>,
) -> Result<OptimizeResult> {
    let mut rng = RngStream::new(seed);
    let mut pop = prepare_population(f, pop_size, budget, &mut rng, initial)?;
    let mut chaos = ChaoticState::random(&mut rng);
    let bounds = f.bounds();
    let initial_best = {
        let (b, _) = pop.best_worst()?;
        pop.fitness()[b]
    };
    let mut history = Vec::new();

    while pop.evaluations_used() < budget {
        // One quantum trial per parent, greedy selection.
        for i in 0..pop.size() {
            if pop.evaluations_used() >= budget {
                break;
            }
            let (i1, i2) = sample_distinct_pair(&mut rng, pop.size(), i);
            let u = rng.open01();
            let v = trial_vector(pop.member(i), pop.member(i1), pop.member(i2), u)?;
            greedy_replace(&mut pop, i, bounds.clamp(&v), f)?;
        }
        // One opposition/chaotic vector per iteration, replacing the worst.
        if pop.evaluations_used() < budget {
            let w = opposition_quantum_vector(&pop, &mut chaos, bounds, &mut rng)?;
            replace_worst_if_better(&mut pop, w, f)?;
        }
        let (b, _) = pop.best_worst()?;
        history.push(pop.fitness()[b]);
    }

    let (b, _) = pop.best_worst()?;
    Ok(OptimizeResult {
        best: pop.member(b).clone(),
        best_fitness: pop.fitness()[b],
        initial_best,
        history,
        evaluations: pop.evaluations_used(),
    })
}
