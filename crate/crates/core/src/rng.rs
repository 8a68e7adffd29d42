//! Seedable counter-based random number generation.
//!
//! The generator is stateless in spirit: output `i` of a stream is a 64-bit
//! hash of `(key, i)`, so a stream can be split into any number of substreams
//! whose outputs never depend on scheduling or draw order. The stream-splitting
//! rule used by the simulation code is "trial index → substream": trial `t`
//! always reads `CounterRng::stream(seed, t)`, which makes parallel tallies
//! bit-identical to sequential ones.

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;
const STREAM_SALT: u64 = 0x6a09_e667_f3bc_c909;

/// SplitMix64 finalizer; a strong 64-bit mixing function.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Counter-based generator: `output_i = mix64(key + i * GOLDEN)`.
#[derive(Debug, Clone)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    /// Stream 0 of the given seed.
    pub fn new(seed: u64) -> Self {
        Self::stream(seed, 0)
    }

    /// Independent stream `stream` of the given seed.
    pub fn stream(seed: u64, stream: u64) -> Self {
        let key = mix64(mix64(seed) ^ mix64(stream ^ STREAM_SALT));
        Self { key, counter: 0 }
    }

    /// Derives a fresh substream keyed off this generator and `index`,
    /// independent of how many values either has produced.
    pub fn substream(&self, index: u64) -> Self {
        let key = mix64(self.key ^ mix64(index.wrapping_mul(GOLDEN) ^ STREAM_SALT));
        Self { key, counter: 0 }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let v = mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)));
        self.counter += 1;
        v
    }

    /// Uniform in [0, 1), 53-bit resolution.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in (0, 1]; never returns zero, safe under `ln`.
    #[inline]
    pub fn uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller.
    pub fn normal(&mut self) -> f64 {
        let (z0, _) = self.normal_pair();
        z0
    }

    /// A pair of independent standard normals from one Box-Muller transform.
    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.uniform_open();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        (r * angle.cos(), r * angle.sin())
    }

    /// Uniform draw from {0, 1, ..., n-1}.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // Multiply-shift; bias is negligible for the small n used here.
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }
}
