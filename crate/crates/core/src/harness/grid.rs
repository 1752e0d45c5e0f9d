//! Grid sweeps over the scalar inequalities and the frame construction.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::sampling::sample_seed;
use crate::bounds::{
    alpha_product_bound, alphas, b_ceiling, bound_b, circle_intersection, lemma4_product,
    line_circle_intersection, little_a, GeometryFrame,
};
use crate::error::{Error, Result};

pub const CLOSED_FORM_TOL: f64 = 1e-12;
pub const LEMMA4_TOL: f64 = 1e-12;
pub const FACTORIZATION_TOL: f64 = 1e-9;
/// Sampled points per `(n, a, b)` in the exclusion sweep.
pub const EXCLUSION_SAMPLES: usize = 10_000;
/// Sampled points per `(n, a)` in the factorization sweep.
pub const FACTORIZATION_SAMPLES: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCheck {
    pub name: String,
    pub n: usize,
    pub evaluated: usize,
    pub violations: usize,
    pub worst: f64,
}

impl GridCheck {
    fn new(name: &str, n: usize) -> Self {
        Self {
            name: name.to_string(),
            n,
            evaluated: 0,
            violations: 0,
            worst: 0.0,
        }
    }

    fn record(&mut self, value: f64, ok: bool) {
        self.evaluated += 1;
        self.worst = self.worst.max(value);
        if !ok {
            self.violations += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridReport {
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<GridCheck>,
    pub violations: usize,
}

/// `a_n + 0.01, a_n + 0.02, ...` up to `0.99`.
pub fn a_grid(n: usize) -> Result<Vec<f64>> {
    let a_n = little_a(n)?;
    Ok((1..)
        .map(|k| a_n + 0.01 * k as f64)
        .take_while(|&a| a <= 0.99 + 1e-9)
        .collect())
}

/// `0.01, 0.02, ...` up to `2/n`.
pub fn s_grid(n: usize) -> Vec<f64> {
    let limit = 2.0 / n as f64;
    (1..)
        .map(|k| 0.01 * k as f64)
        .take_while(|&s| s <= limit)
        .collect()
}

/// `|(v - a)^n - v^n|`.
pub fn coincidence_gap(n: usize, a: f64, v: Complex64) -> f64 {
    ((v - a).powu(n as u32) - v.powu(n as u32)).norm()
}

/// Closed-form frame points against circle/line intersections, and the gap
/// inequality, over the `(a, s)` grid.
pub fn frame_sweep(n: usize) -> Result<(GridCheck, GridCheck)> {
    let mut forms = GridCheck::new("frame_closed_forms", n);
    let mut gaps = GridCheck::new("frame_gap", n);
    let origin = Complex64::new(0.0, 0.0);
    for a in a_grid(n)? {
        for s in s_grid(n) {
            let frame = match GeometryFrame::new(a, s, n) {
                Ok(f) => f,
                Err(Error::GapViolation { gap, bound }) => {
                    gaps.record(bound - gap, false);
                    continue;
                }
                Err(e) => return Err(e),
            };
            gaps.record(frame.gap_bound() - frame.gap, frame.gap > frame.gap_bound());

            let mut dev: f64 = 0.0;
            let pts = circle_intersection(origin, 1.0, frame.z0, s)?;
            if pts.len() == 2 {
                dev = dev
                    .max((pts[0] - frame.v1).norm())
                    .max((pts[1] - frame.v2).norm());
            } else {
                dev = f64::INFINITY;
            }
            let left = line_circle_intersection(&frame.line, Complex64::new(a, 0.0), 1.0)
                .into_iter()
                .find(|z| z.re < 0.5 * a);
            dev = match left {
                Some(v3) => dev.max((v3 - frame.v3).norm()),
                None => f64::INFINITY,
            };
            forms.record(dev, dev <= CLOSED_FORM_TOL);
        }
    }
    Ok((forms, gaps))
}

pub fn alpha_product_check(n: usize) -> Result<GridCheck> {
    let mut check = GridCheck::new("alpha_product", n);
    let prod = lemma4_product(n)?;
    let bound = alpha_product_bound(n)?;
    if n.is_multiple_of(2) {
        let dev = (prod - 1.0).abs();
        check.record(dev, dev <= LEMMA4_TOL);
    } else {
        check.record(bound - prod, prod >= bound - LEMMA4_TOL);
    }
    Ok(check)
}

/// `r^2/24` stays under the admissibility ceiling for every `r` on the grid.
pub fn admissible_b_check(n: usize) -> Result<GridCheck> {
    let mut check = GridCheck::new("admissible_b", n);
    if let Some(ceiling) = b_ceiling(n)? {
        let mut rs = s_grid(n);
        rs.push(2.0 / n as f64);
        for r in rs {
            let b = r * r / 24.0;
            check.record(b / ceiling, b < ceiling);
        }
    }
    Ok(check)
}

/// Admissible `(a, b)` pairs used by the exclusion sweep.
pub fn exclusion_params(n: usize) -> Result<Vec<(f64, f64)>> {
    let a_n = little_a(n)?;
    let ceiling = b_ceiling(n)?.unwrap_or(1.0);
    let mut out = Vec::new();
    for fa in [0.05, 0.5, 0.95] {
        for fb in [0.01, 0.5, 0.99] {
            out.push((a_n + fa * (1.0 - a_n), fb * ceiling));
        }
    }
    Ok(out)
}

/// A point strictly left of `a/2 - b`: half near the boundary and near a
/// node height, half spread over a wide box.
pub fn exclusion_point<R: Rng>(rng: &mut R, a: f64, b: f64, heights: &[f64]) -> Complex64 {
    let edge = 0.5 * a - b;
    if rng.random::<bool>() && !heights.is_empty() {
        let j = rng.random_range(0..heights.len());
        let re = edge - 1e-3 * (1.0 - rng.random::<f64>());
        let im = heights[j] + 0.05 * (rng.random::<f64>() - 0.5);
        Complex64::new(re, im)
    } else {
        let re = edge - 3.0 * (1.0 - rng.random::<f64>());
        let span = 1.0 + heights.iter().fold(0.0f64, |m, h| m.max(h.abs()));
        let im = span * (2.0 * rng.random::<f64>() - 1.0);
        Complex64::new(re, im)
    }
}

/// Sampled check of `|(v - a)^n - v^n| > B_n(b)` for `Re v < a/2 - b`.
pub fn exclusion_check(n: usize, seed: u64, samples: usize) -> Result<GridCheck> {
    let mut check = GridCheck::new("threshold_exclusion", n);
    for (k, (a, b)) in exclusion_params(n)?.into_iter().enumerate() {
        let heights: Vec<f64> = alphas(n)?.into_iter().map(|al| 0.5 * a * al).collect();
        let bound = bound_b(n, b)?;
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, n, k));
        for _ in 0..samples {
            let v = exclusion_point(&mut rng, a, b, &heights);
            let gap = coincidence_gap(n, a, v);
            check.record(bound / gap, gap > bound);
        }
    }
    Ok(check)
}

/// `|(v - a)^n - v^n|^2 = n^2 a^2 prod_j ((Re v - a/2)^2 + (Im v - (a/2) alpha_j)^2)`.
pub fn factorization_check(n: usize, seed: u64, samples: usize) -> Result<GridCheck> {
    let mut check = GridCheck::new("factorization_identity", n);
    let al = alphas(n)?;
    for (k, a) in [0.5, 0.9].into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed ^ 0xFAC7, n, k));
        for _ in 0..samples {
            let v = Complex64::from_polar(
                2.0 * rng.random::<f64>().sqrt(),
                std::f64::consts::TAU * rng.random::<f64>(),
            );
            let lhs = coincidence_gap(n, a, v).powi(2);
            let dx = v.re - 0.5 * a;
            let rhs = (n * n) as f64
                * a
                * a
                * al.iter()
                    .map(|&x| dx * dx + (v.im - 0.5 * a * x).powi(2))
                    .product::<f64>();
            let rel = (lhs - rhs).abs() / rhs;
            check.record(rel, rel <= FACTORIZATION_TOL);
        }
    }
    Ok(check)
}

pub fn run_lemma_grid(n_min: usize, n_max: usize, seed: u64) -> Result<GridReport> {
    if n_min < 2 || n_max < n_min {
        return Err(Error::InvalidConfig(format!(
            "invalid degree range {n_min}..={n_max}"
        )));
    }
    let mut checks = Vec::new();
    for n in n_min..=n_max {
        let (forms, gaps) = frame_sweep(n)?;
        checks.push(forms);
        checks.push(gaps);
        checks.push(alpha_product_check(n)?);
        checks.push(admissible_b_check(n)?);
        checks.push(exclusion_check(n, seed, EXCLUSION_SAMPLES)?);
        checks.push(factorization_check(n, seed, FACTORIZATION_SAMPLES)?);
    }
    let violations = checks.iter().map(|c| c.violations).sum();
    Ok(GridReport {
        n_min,
        n_max,
        checks,
        violations,
    })
}
