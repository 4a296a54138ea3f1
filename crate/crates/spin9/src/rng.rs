//! Seeded deterministic randomness for the verification suites.
//!
//! A fixed in-crate generator keeps reports byte-identical across runs,
//! platforms and dependency upgrades.

use crate::rational::{rat, Rational};

/// SplitMix64.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// A rational with numerator in -3..=3 and denominator in 1..=4.
    pub fn small_rational(&mut self) -> Rational {
        let n = (self.below(7) as i64) - 3;
        let d = (self.below(4) as i64) + 1;
        rat(n, d)
    }

    /// A rational vector with small entries.
    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.small_rational()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_across_instances() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn frozen_stream_head() {
        // the suites' reproducibility depends on this exact stream
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }
}
