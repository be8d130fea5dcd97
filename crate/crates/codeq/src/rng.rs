//! Deterministic random number source shared by every optimizer.
//!
//! All stochastic decisions in this crate flow through [`RngStream`], a
//! ChaCha8 generator seeded from a single `u64`. The same seed produces a
//! bit-identical draw sequence on every platform, which is what makes whole
//! benchmark runs reproducible byte for byte.

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer, used to derive child seeds from a master seed.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from a master seed and a tag.
///
/// The benchmark harness uses this to give the train/test split, each run,
/// and each algorithm within a run its own independent stream, so adding an
/// algorithm or a run never perturbs the others' trajectories.
pub fn derive_seed(master: u64, tag: u64) -> u64 {
    splitmix64(master ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A seeded, reproducible stream of uniform random numbers.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform draw strictly inside `(0, 1)`.
    pub fn open01(&mut self) -> f64 {
        self.rng.sample(Open01)
    }

    /// Uniform draw in `[lo, hi]`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Uniform index in `[0, n)`.
    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// A new independent stream derived from this stream's seed and a tag.
    pub fn substream(&self, tag: u64) -> RngStream {
        RngStream::new(derive_seed(self.seed, tag))
    }
}
