//! Seeded deterministic generator shared by every sampler in the crate.
//!
//! A plain 64-bit linear congruential generator with the PCG/Knuth MMIX constants.
//! Streams are reproducible across platforms and implementations.

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Uniform integer in `lo..=hi`, drawn from the high 31 bits of the state.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + ((self.next_u64() >> 33) % span) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_follow_recurrence() {
        let mut rng = Lcg64::new(0);
        assert_eq!(rng.next_u64(), INCREMENT);
        assert_eq!(
            rng.next_u64(),
            INCREMENT.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT)
        );
    }

    #[test]
    fn range_stays_in_bounds() {
        let mut rng = Lcg64::new(42);
        for _ in 0..1000 {
            let v = rng.range_i64(-5, 5);
            assert!((-5..=5).contains(&v));
        }
    }
}
