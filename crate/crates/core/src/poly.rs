//! Monic complex polynomials in root form and coefficient form.
//!
//! [`RootForm`] keeps the zeros in a canonical order so that two polynomials
//! compare equal exactly when their root lists do. [`CoeffForm`] is the
//! ascending, monic coefficient vector that the root finder and the
//! evaluation routines operate on.

use std::cmp::Ordering;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scalar type used throughout the crate.
pub type ComplexScalar = Complex64;

/// Slack used when two real parts are considered equal for ordering.
pub const ORDER_SLACK: f64 = 1e-12;

/// Correction size at which a root iterate is considered converged.
pub const ROOT_TOL: f64 = 1e-12;

/// Iteration cap for the simultaneous root finder.
pub const MAX_ITER: usize = 200;

fn all_finite(zs: &[Complex64]) -> bool {
    zs.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Sort by real part, then by imaginary part among points whose real parts
/// agree to within [`ORDER_SLACK`].
///
/// Runs of nearly equal real parts are grouped against the first element of
/// the run, which keeps the comparison a total order.
pub fn canonical_sort(zs: &mut [Complex64]) {
    zs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut start = 0;
    while start < zs.len() {
        let anchor = zs[start].re;
        let mut end = start + 1;
        while end < zs.len() && zs[end].re - anchor <= ORDER_SLACK {
            end += 1;
        }
        zs[start..end].sort_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)));
        start = end;
    }
}

/// Canonically ordered list of the `n` zeros of a monic polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct RootForm {
    roots: Vec<Complex64>,
}

impl RootForm {
    pub fn new(mut roots: Vec<Complex64>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidDegree(
                0,
                "a polynomial needs at least one root",
            ));
        }
        if !all_finite(&roots) {
            return Err(Error::NonFinite("roots"));
        }
        canonical_sort(&mut roots);
        Ok(Self { roots })
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    /// Minimum distance between two distinct entries of the root list.
    /// Infinite for a single root.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, zi) in self.roots.iter().enumerate() {
            for zj in &self.roots[i + 1..] {
                best = best.min((zi - zj).norm());
            }
        }
        best
    }

    /// `min_{i != j} |z_i - z_j|` for a single root.
    pub fn nearest_other(&self, j: usize) -> f64 {
        let zj = self.roots[j];
        self.roots
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, zi)| (zi - zj).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Position of `z` in the canonical list, if present.
    pub fn index_of(&self, z: Complex64) -> Option<usize> {
        self.roots.iter().position(|&w| w == z)
    }

    pub fn to_coeffs(&self) -> CoeffForm {
        roots_to_coeffs(self)
    }
}

impl TryFrom<Vec<Complex64>> for RootForm {
    type Error = Error;

    fn try_from(roots: Vec<Complex64>) -> Result<Self> {
        Self::new(roots)
    }
}

impl From<RootForm> for Vec<Complex64> {
    fn from(p: RootForm) -> Self {
        p.roots
    }
}

/// Ascending coefficient vector of a monic polynomial; `coeffs[n] == 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffForm {
    coeffs: Vec<Complex64>,
}

impl CoeffForm {
    /// Accepts an ascending coefficient vector whose last entry is exactly 1.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite("coefficients"));
        }
        match coeffs.last() {
            None => Err(Error::InvalidDegree(0, "empty coefficient vector")),
            Some(&lead) if lead != Complex64::new(1.0, 0.0) => Err(Error::NotMonic(lead)),
            Some(_) => Ok(Self { coeffs }),
        }
    }

    /// Divides through by the leading coefficient. Trailing exact zeros are
    /// dropped first.
    pub fn normalized(mut coeffs: Vec<Complex64>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        let lead = *coeffs
            .last()
            .ok_or(Error::InvalidDegree(0, "empty coefficient vector"))?;
        if lead == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidInput("zero polynomial".into()));
        }
        let mut coeffs: Vec<_> = coeffs.into_iter().map(|c| c / lead).collect();
        *coeffs.last_mut().unwrap() = Complex64::new(1.0, 0.0);
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    pub fn derivative(&self) -> Result<Derivative> {
        derivative(self)
    }

    pub fn find_roots(&self) -> Result<Vec<Complex64>> {
        find_roots(self)
    }
}

/// Elementary symmetric polynomials `e_0 = 1, e_1, ..., e_m` of `u`.
pub fn elementary_symmetric(u: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); u.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (m, &x) in u.iter().enumerate() {
        for k in (1..=m + 1).rev() {
            let prev = e[k - 1];
            e[k] += prev * x;
        }
    }
    e
}

/// Vieta expansion of `prod (z - z_j)`.
pub fn roots_to_coeffs(p: &RootForm) -> CoeffForm {
    let n = p.degree();
    let e = elementary_symmetric(p.roots());
    // coefficient of z^{n-k} is (-1)^k e_k
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    for (k, ek) in e.into_iter().enumerate() {
        coeffs[n - k] = if k % 2 == 0 { ek } else { -ek };
    }
    coeffs[n] = Complex64::new(1.0, 0.0);
    CoeffForm { coeffs }
}

pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

pub fn eval(p: &CoeffForm, z: Complex64) -> Complex64 {
    p.eval(z)
}

/// `p'` as a raw coefficient vector (leading coefficient `n`) together with
/// its monic normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct Derivative {
    pub coeffs: Vec<Complex64>,
    pub monic: CoeffForm,
    /// Leading coefficient of the raw derivative, i.e. the degree of `p`.
    pub scale: f64,
}

impl Derivative {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }
}

pub fn derivative(p: &CoeffForm) -> Result<Derivative> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let coeffs: Vec<Complex64> = p.coeffs[1..]
        .iter()
        .enumerate()
        .map(|(k, &c)| c * (k + 1) as f64)
        .collect();
    let scale = n as f64;
    let mut monic: Vec<Complex64> = coeffs.iter().map(|&c| c / scale).collect();
    monic[n - 1] = Complex64::new(1.0, 0.0);
    Ok(Derivative {
        coeffs,
        monic: CoeffForm { coeffs: monic },
        scale,
    })
}

/// Value, derivative, and the magnitude sum `sum |c_k| |z|^k` used as a
/// rounding-error scale for the value.
fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let zero = Complex64::new(0.0, 0.0);
    let az = z.norm();
    let mut value = zero;
    let mut slope = zero;
    let mut mag = 0.0;
    for &c in coeffs.iter().rev() {
        slope = slope * z + value;
        value = value * z + c;
        mag = mag * az + c.norm();
    }
    (value, slope, mag)
}

/// All `n` zeros of a monic polynomial by Aberth-Ehrlich simultaneous
/// iteration, canonically ordered.
pub fn find_roots(p: &CoeffForm) -> Result<Vec<Complex64>> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let c = &p.coeffs;
    if n == 1 {
        return Ok(vec![-c[0]]);
    }

    let center = -c[n - 1] / n as f64;
    let bound = (0..n)
        .map(|k| c[k].norm().powf(1.0 / (n - k) as f64))
        .fold(1.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.7 / n as f64;
            let rho = bound * (1.0 + 0.01 * k as f64 / n as f64);
            center + Complex64::from_polar(rho, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let noise = 4.0 * n as f64 * f64::EPSILON;

    for _ in 0..MAX_ITER {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (value, slope, mag) = horner_with_derivative(c, z[i]);
            if value.norm() <= noise * mag {
                done[i] = true;
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let denom = slope - value * repulsion;
            let step = if denom.norm() == 0.0 {
                // stationary point of the Aberth correction: nudge off it
                Complex64::new(ROOT_TOL, ROOT_TOL) * z[i].norm().max(1.0)
            } else {
                value / denom
            };
            z[i] -= step;
            if step.norm() <= ROOT_TOL * z[i].norm().max(1.0) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            canonical_sort(&mut z);
            return Ok(z);
        }
    }

    let residual = z.iter().map(|&zi| p.eval(zi).norm()).fold(0.0, f64::max);
    canonical_sort(&mut z);
    Err(Error::NoConvergence {
        iterations: MAX_ITER,
        best: z,
        residual,
    })
}

/// Smallest achievable maximum distance over all one-to-one pairings of `a`
/// with `b` (bottleneck assignment). Infinite when the lengths differ.
pub fn max_pairing_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    if a.is_empty() {
        return 0.0;
    }
    let n = a.len();
    let dist: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| (x - y).norm()).collect())
        .collect();
    let mut levels: Vec<f64> = dist.iter().flatten().copied().collect();
    levels.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    levels.dedup();

    let feasible = |limit: f64| -> bool {
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let mut seen = vec![false; n];
            if !augment(i, limit, &dist, &mut seen, &mut owner) {
                return false;
            }
        }
        true
    };

    let (mut lo, mut hi) = (0, levels.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(levels[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    levels[lo]
}

fn augment(
    i: usize,
    limit: f64,
    dist: &[Vec<f64>],
    seen: &mut [bool],
    owner: &mut [Option<usize>],
) -> bool {
    for j in 0..dist.len() {
        if dist[i][j] <= limit && !seen[j] {
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, limit, dist, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
    }
    false
}
