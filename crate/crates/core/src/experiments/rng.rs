//! The sampler's pseudo-random generator.
//!
//! SplitMix64 with the usual constants: the state advances by
//! `0x9E3779B97F4A7C15` and each output is
//!
//! ```text
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! out = z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic. Sample `i` of a run seeded with `s` starts from
//! state `s + i * 0xD1B54A32D192ED03`, so samples can be drawn in any order.
//! Bounded draws reject outputs from the incomplete top block, keeping them
//! exactly uniform.

use rand_xoshiro::rand_core::{Rng, SeedableRng};

const STREAM: u64 = 0xD1B5_4A32_D192_ED03;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64(rand_xoshiro::SplitMix64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(rand_xoshiro::SplitMix64::seed_from_u64(seed))
    }

    /// Generator for sample `index` of a run seeded with `seed`.
    pub fn for_sample(seed: u64, index: u64) -> Self {
        Self::new(seed.wrapping_add(index.wrapping_mul(STREAM)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform draw from `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let zone = u64::MAX - (u64::MAX - n + 1) % n;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % n;
            }
        }
    }

    /// Uniform draw from `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: u32, hi: u32) -> u32 {
        assert!(lo <= hi);
        lo + self.below(u64::from(hi - lo) + 1) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_outputs() {
        // first outputs for seed 0, as published with the algorithm
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut r = SplitMix64::for_sample(42, 7);
        for n in 1..50u64 {
            for _ in 0..20 {
                assert!(r.below(n) < n);
            }
        }
        for _ in 0..100 {
            let v = r.range_inclusive(3, 5);
            assert!((3..=5).contains(&v));
        }
    }

    #[test]
    fn sample_streams_are_reproducible() {
        let a: Vec<u64> = {
            let mut r = SplitMix64::for_sample(9, 3);
            (0..5).map(|_| r.next_u64()).collect()
        };
        let mut r = SplitMix64::for_sample(9, 3);
        assert!(a.iter().all(|&x| x == r.next_u64()));
        let mut other = SplitMix64::for_sample(9, 4);
        assert_ne!(a[0], other.next_u64());
    }
}
