use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::num::Matrix;

/// Seeded pseudo-random generator used everywhere randomness is needed.
///
/// Backed by ChaCha8, a counter-based stream cipher: the same seed yields the
/// same stream on every platform. The float and integer adapters below are
/// plain arithmetic on the raw 64-bit output, so they inherit that guarantee.
/// A generator is single-owner; derive fresh ones (`seed + offset`) for
/// parallel work instead of sharing.
pub struct Rng {
    seed: u64,
    state: ChaCha8Rng,
    spare_normal: Option<f64>,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            seed,
            state: ChaCha8Rng::seed_from_u64(seed),
            spare_normal: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state.next_u64()
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Unbiased integer in [0, n) by rejection sampling.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0) is undefined");
        let n = n as u64;
        let rem = (u64::MAX % n + 1) % n;
        let bound = u64::MAX - rem;
        loop {
            let x = self.next_u64();
            if x <= bound {
                return (x % n) as usize;
            }
        }
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }

    /// Standard normal via Box-Muller; the spare draw is cached.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = 1.0 - self.next_f64(); // (0, 1], keeps ln finite
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.spare_normal = Some(r * theta.sin());
        r * theta.cos()
    }
}

/// Glorot-uniform weight initialization: entries i.i.d. uniform in
/// ±sqrt(6/(rows+cols)), filled row-major so the draw order is fixed.
pub fn init_weights(rows: usize, cols: usize, rng: &mut Rng) -> Matrix {
    let bound = (6.0 / (rows + cols) as f64).sqrt();
    let mut m = Matrix::zeros(rows, cols);
    for v in m.data_mut() {
        *v = rng.uniform(-bound, bound);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_seeds_equal_streams() {
        let mut a = Rng::new(123);
        let mut b = Rng::new(123);
        for _ in 0..1_000_000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn different_seeds_differ() {
        let mut a = Rng::new(1);
        let mut b = Rng::new(2);
        let same = (0..64).filter(|_| a.next_u64() == b.next_u64()).count();
        assert!(same < 4);
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = Rng::new(9);
        for n in [1usize, 2, 3, 7, 1000] {
            for _ in 0..200 {
                assert!(rng.below(n) < n);
            }
        }
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = Rng::new(4);
        let mut xs: Vec<usize> = (0..50).collect();
        rng.shuffle(&mut xs);
        let mut sorted = xs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn init_weights_deterministic_under_seed() {
        let a = init_weights(5, 8, &mut Rng::new(77));
        let b = init_weights(5, 8, &mut Rng::new(77));
        assert_eq!(a, b);
    }

    #[test]
    fn init_weights_within_bound() {
        let m = init_weights(10, 14, &mut Rng::new(3));
        let bound = (6.0 / 24.0_f64).sqrt();
        assert!(m.data().iter().all(|v| v.abs() <= bound));
    }

    #[test]
    fn init_weights_mean_near_zero() {
        // Uniform on ±b has sd b/sqrt(3); the mean of N draws has sd b/sqrt(3N).
        let (rows, cols) = (25, 40);
        let m = init_weights(rows, cols, &mut Rng::new(15));
        let n = (rows * cols) as f64;
        let bound = (6.0 / (rows + cols) as f64).sqrt();
        let mean = m.data().iter().sum::<f64>() / n;
        let three_sigma = 3.0 * bound / (3.0 * n).sqrt();
        assert!(mean.abs() < three_sigma, "mean {mean} vs 3sigma {three_sigma}");
    }

    #[test]
    fn normal_moments_are_sane() {
        let mut rng = Rng::new(21);
        let n = 20_000;
        let xs: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64;
        assert!(mean.abs() < 0.03, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }
}
