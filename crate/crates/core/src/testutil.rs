//! Deterministic pseudo-random values for tests. Not exported.

/// SplitMix64: tiny, seedable, good enough for generating test inputs.
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0; modulo bias is irrelevant
    /// at test scale).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
