//! Seeded generators of bounded-height exact scalars.
//!
//! Each randomized item gets its own ChaCha stream keyed by `(seed, index)`,
//! so a suite produces identical draws whether it runs sequentially or in
//! parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::GaussRat;

/// Default bound on numerators and denominators of drawn rationals.
pub const DEFAULT_HEIGHT: i64 = 20;

pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self::with_height(seed, stream, DEFAULT_HEIGHT)
    }

    pub fn with_height(seed: u64, stream: u64, height: i64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng, height: height.max(1) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// `p/q` with `|p| ≤ height`, `1 ≤ q ≤ height`.
    pub fn rational(&mut self) -> GaussRat {
        let p = self.int(-self.height, self.height);
        let q = self.int(1, self.height);
        GaussRat::frac(p, q)
    }

    pub fn nonzero_rational(&mut self) -> GaussRat {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Small integer, for entries of unipotent group elements where the
    /// height of products should stay modest.
    pub fn small_int(&mut self) -> GaussRat {
        GaussRat::from_int(self.int(-3, 3))
    }

    /// Rational real and imaginary parts.
    pub fn gauss(&mut self) -> GaussRat {
        &self.rational() + &(&self.rational() * &GaussRat::i())
    }

    pub fn rationals(&mut self, n: usize) -> Vec<GaussRat> {
        (0..n).map(|_| self.rational()).collect()
    }
}
