//! Deterministic pseudo-random streams.
//!
//! Every generator in this crate draws from a fixed xoroshiro128++ generator
//! seeded through SplitMix64, so results are bit-identical across platforms
//! and independent of any external RNG crate's evolution. Streams are derived
//! from `(seed, role)` pairs: two generators with different role tags never
//! share draws, which keeps concurrent dataset generation deterministic.
//!
//! Gaussian variates use the Marsaglia polar method.

use num_complex::Complex64;

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// FNV-1a over the role tag, used to decorrelate streams sharing a seed.
fn role_hash(role: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in role.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// A splittable xoroshiro128++ stream.
#[derive(Clone, Debug)]
pub struct SplitRng {
    s0: u64,
    s1: u64,
    gauss_spare: Option<f64>,
}

impl SplitRng {
    /// Stream for a bare seed.
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let s0 = splitmix64(&mut sm);
        let s1 = splitmix64(&mut sm);
        SplitRng {
            s0,
            s1,
            gauss_spare: None,
        }
    }

    /// Stream for `(seed, role)`. Distinct roles yield independent streams.
    pub fn for_role(seed: u64, role: &str) -> Self {
        Self::new(seed ^ role_hash(role))
    }

    /// Derive a child stream; used for per-cell / per-fold streams.
    pub fn for_subrole(seed: u64, role: &str, index: u64) -> Self {
        Self::new(seed ^ role_hash(role) ^ index.wrapping_mul(GOLDEN))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let (s0, mut s1) = (self.s0, self.s1);
        let result = s0
            .wrapping_add(s1)
            .rotate_left(17)
            .wrapping_add(s0);
        s1 ^= s0;
        self.s0 = s0.rotate_left(49) ^ s1 ^ (s1 << 21);
        self.s1 = s1.rotate_left(28);
        result
    }

    /// Uniform in [0, 1) with 53 random bits.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Inclusive-exclusive integer range.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal variate via the polar method.
    pub fn gaussian(&mut self) -> f64 {
        if let Some(g) = self.gauss_spare.take() {
            return g;
        }
        loop {
            let u = 2.0 * self.uniform() - 1.0;
            let v = 2.0 * self.uniform() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let m = (-2.0 * s.ln() / s).sqrt();
                self.gauss_spare = Some(v * m);
                return u * m;
            }
        }
    }

    /// Circular complex Gaussian with total variance `variance`
    /// (each component carries `variance / 2`).
    pub fn complex_circular(&mut self, variance: f64) -> Complex64 {
        let sigma = (variance / 2.0).sqrt();
        Complex64::new(sigma * self.gaussian(), sigma * self.gaussian())
    }

    /// Fisher-Yates shuffle of `0..n`, used for cross-validation folds.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.index(i + 1);
            idx.swap(i, j);
        }
        idx
    }
}
