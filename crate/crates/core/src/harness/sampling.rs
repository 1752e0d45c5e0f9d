use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::RootForm;

/// Rejection cap for [`sample_simple_polynomial`].
pub const MAX_ATTEMPTS: usize = 10_000;

/// SplitMix64 finalizer.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Per-sample seed derived from the master seed, the degree and the sample index.
pub fn sample_seed(master: u64, degree: usize, index: usize) -> u64 {
    let slot = ((degree as u64) << 32) ^ index as u64;
    splitmix64(master ^ splitmix64(slot))
}

/// A point uniform on the closed unit disk (area measure).
pub fn uniform_disk_point<R: Rng>(rng: &mut R) -> Complex64 {
    let radius = rng.random::<f64>().sqrt();
    let angle = TAU * rng.random::<f64>();
    Complex64::from_polar(radius, angle)
}

/// `n` roots i.i.d. uniform on the unit disk, resampled until every pair is
/// at least `min_sep` apart.
pub fn sample_simple_polynomial(n: usize, seed: u64, min_sep: f64) -> Result<RootForm> {
    if n < 2 {
        return Err(Error::InvalidDegree(n, "n must be at least 2"));
    }
    if !(min_sep > 0.0) {
        return Err(Error::OutOfRange {
            name: "min_sep",
            value: min_sep,
            reason: "must be positive",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let roots: Vec<Complex64> = (0..n).map(|_| uniform_disk_point(&mut rng)).collect();
        let separated = roots
            .iter()
            .enumerate()
            .all(|(i, zi)| roots[i + 1..].iter().all(|zj| (zi - zj).norm() >= min_sep));
        if separated {
            return RootForm::new(roots);
        }
    }
    Err(Error::SeparationInfeasible {
        n,
        min_sep,
        attempts: MAX_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_inputs() {
        let a = sample_simple_polynomial(6, 42, 1e-3).unwrap();
        let b = sample_simple_polynomial(6, 42, 1e-3).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_simple_polynomial(6, 43, 1e-3).unwrap());
    }

    #[test]
    fn generator_contract() {
        for seed in 0..50 {
            let p = sample_simple_polynomial(5, seed, 0.05).unwrap();
            assert_eq!(p.degree(), 5);
            assert!(p.roots().iter().all(|z| z.norm() <= 1.0));
            assert!(p.min_separation() >= 0.05);
        }
    }

    #[test]
    fn second_moment_matches_uniform_disk() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = 10_000;
        let mean = (0..m)
            .map(|_| uniform_disk_point(&mut rng).norm_sqr())
            .sum::<f64>()
            / m as f64;
        assert!((mean - 0.5).abs() < 0.02, "{mean}");
    }

    #[test]
    fn infeasible_separation_is_reported() {
        assert!(matches!(
            sample_simple_polynomial(12, 1, 1.5),
            Err(Error::SeparationInfeasible { .. })
        ));
        assert!(sample_simple_polynomial(1, 1, 0.1).is_err());
        assert!(sample_simple_polynomial(3, 1, 0.0).is_err());
    }

    #[test]
    fn seeds_differ_across_slots() {
        let s = sample_seed(42, 3, 0);
        assert_ne!(s, sample_seed(42, 3, 1));
        assert_ne!(s, sample_seed(42, 4, 0));
        assert_ne!(s, sample_seed(43, 3, 0));
        assert_eq!(s, sample_seed(42, 3, 0));
    }
}
