//! Seeded pseudo-random numbers for solver restarts.
//!
//! Reproducibility is part of the solver contract, so the generator is a
//! fixed, dependency-free splitmix64: the same seed yields the same stream
//! on every platform and every build.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// splitmix64 generator (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(-1, 1)`, excluding exact zero draws.
    pub fn next_symmetric(&mut self) -> f64 {
        loop {
            let v = 2.0 * self.next_f64() - 1.0;
            if v != 0.0 {
                return v;
            }
        }
    }

    /// Random point on the Euclidean unit sphere in `R^n`.
    ///
    /// Rejection-sampled from the cube; adequate for the small dimensions
    /// used by solver restarts.
    pub fn unit_vector(&mut self, n: usize) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..n).map(|_| self.next_symmetric()).collect();
            let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            if norm > 1e-3 {
                return v.into_iter().map(|a| a / norm).collect();
            }
        }
    }

    /// Random point on the standard simplex over the coordinates in
    /// `support` (all other coordinates zero), of total length `n`.
    pub fn simplex_point(&mut self, n: usize, support: &[usize]) -> Vec<f64> {
        let mut u = alloc::vec![0.0; n];
        let mut total = 0.0;
        for &i in support {
            // Exp(1) draws normalized to the simplex (uniform Dirichlet).
            let e = -(1.0 - self.next_f64()).ln();
            u[i] = e;
            total += e;
        }
        if total > 0.0 {
            for &i in support {
                u[i] /= total;
            }
        }
        u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn unit_vector_is_normalized() {
        let mut rng = SplitMix64::new(7);
        for n in 1..6 {
            let v = rng.unit_vector(n);
            let norm: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn simplex_point_sums_to_one() {
        let mut rng = SplitMix64::new(3);
        let u = rng.simplex_point(5, &[0, 2, 4]);
        assert!((u.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(u[1], 0.0);
        assert_eq!(u[3], 0.0);
    }
}
