//! Scalar constants: `a_n`, the cotangent weights `alpha_j`, their products,
//! the thresholds `A_n(r)` and `B_n(b)`, the product `C_n(y)`, and the
//! coincidence nodes on the line `Re v = a/2`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Relative slack accepted on the upper limit `r <= 2/n`.
const R_LIMIT_SLACK: f64 = 1e-12;

fn check_degree(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDegree(n, "n must be at least 2"))
    } else {
        Ok(())
    }
}

/// `a_n = n^(1/(n-1)) - 1`.
pub fn little_a(n: usize) -> Result<f64> {
    check_degree(n)?;
    Ok(((n as f64).ln() / (n - 1) as f64).exp_m1())
}

/// `alpha_j = sin(2 j pi / n) / (1 - cos(2 j pi / n))` for `1 <= j <= n-1`.
///
/// The denominator is evaluated as `2 sin^2(j pi / n)`.
pub fn alpha(j: usize, n: usize) -> Result<f64> {
    if n < 2 || j == 0 || j >= n {
        return Err(Error::AlphaIndex {
            j,
            max: n.saturating_sub(1),
        });
    }
    let half = PI * j as f64 / n as f64;
    let one_minus_cos = 2.0 * half.sin().powi(2);
    Ok((2.0 * half).sin() / one_minus_cos)
}

/// `alpha_1 .. alpha_{n-1}`.
pub fn alphas(n: usize) -> Result<Vec<f64>> {
    check_degree(n)?;
    (1..n).map(|j| alpha(j, n)).collect()
}

/// Number of factors in the alpha product: `p - 1` for `n = 2p`, `p` for
/// `n = 2p + 1`.
fn alpha_product_len(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n / 2 - 1
    } else {
        (n - 1) / 2
    }
}

/// `alpha_1 ... alpha_{p-1}` for even `n = 2p` (empty product 1 when `p = 1`),
/// `alpha_1 ... alpha_p` for odd `n = 2p + 1`.
pub fn lemma4_product(n: usize) -> Result<f64> {
    check_degree(n)?;
    (1..=alpha_product_len(n)).try_fold(1.0, |acc, j| Ok(acc * alpha(j, n)?))
}

/// Lower bound the alpha product is guaranteed to meet: `1` for even `n`,
/// `(sqrt(3)/3)^p` for odd `n = 2p + 1`.
pub fn alpha_product_bound(n: usize) -> Result<f64> {
    check_degree(n)?;
    Ok(if n.is_multiple_of(2) {
        1.0
    } else {
        (3f64.sqrt() / 3.0).powi(((n - 1) / 2) as i32)
    })
}

/// Threshold on `|p(0)|` below which the conjecture is guaranteed:
/// `A_{2p} = 2p (r^2 a_{2p} / 24)^p`,
/// `A_{2p+1} = (2p+1) a_{2p+1}^{p+1} (r^2 sqrt(3) / 72)^p`.
pub fn threshold_a(n: usize, r: f64) -> Result<f64> {
    let a_n = little_a(n)?;
    let limit = 2.0 / n as f64;
    if !(r > 0.0 && r <= limit * (1.0 + R_LIMIT_SLACK)) {
        return Err(Error::OutOfRange {
            name: "r",
            value: r,
            reason: "must lie in (0, 2/n]",
        });
    }
    let r2 = r * r;
    Ok(if n.is_multiple_of(2) {
        let p = n / 2;
        (2 * p) as f64 * (r2 * a_n / 24.0).powi(p as i32)
    } else {
        let p = (n - 1) / 2;
        n as f64 * a_n.powi(p as i32 + 1) * (r2 * 3f64.sqrt() / 72.0).powi(p as i32)
    })
}

/// `B_{2p}(b) = 2p (b a_{2p})^p`, `B_{2p+1}(b) = (2p+1) a_{2p+1}^{p+1} (b sqrt(3)/3)^p`.
pub fn bound_b(n: usize, b: f64) -> Result<f64> {
    let a_n = little_a(n)?;
    if !(b > 0.0) {
        return Err(Error::OutOfRange {
            name: "b",
            value: b,
            reason: "must be positive",
        });
    }
    Ok(if n.is_multiple_of(2) {
        let p = n / 2;
        (2 * p) as f64 * (b * a_n).powi(p as i32)
    } else {
        let p = (n - 1) / 2;
        n as f64 * a_n.powi(p as i32 + 1) * (b * 3f64.sqrt() / 3.0).powi(p as i32)
    })
}

/// Admissibility ceiling for `b`: `(a_n / 2) alpha_{p-1}` for `n = 2p`,
/// `(a_n / 2) alpha_p` for `n = 2p + 1`. `None` for `n = 2`, where the
/// index `p - 1` is zero and no ceiling exists.
pub fn b_ceiling(n: usize) -> Result<Option<f64>> {
    let a_n = little_a(n)?;
    let m = alpha_product_len(n);
    if m == 0 {
        return Ok(None);
    }
    Ok(Some(a_n / 2.0 * alpha(m, n)?))
}

/// `C_n(y) = prod_{j=1}^{n-1} (b^2 + (y - (a/2) alpha_j)^2)`.
pub fn c_product(n: usize, a: f64, b: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    if !(b > 0.0) {
        return Err(Error::OutOfRange {
            name: "b",
            value: b,
            reason: "must be positive",
        });
    }
    let b2 = b * b;
    (1..n).try_fold(1.0, |acc, j| {
        let d = y - 0.5 * a * alpha(j, n)?;
        Ok(acc * (b2 + d * d))
    })
}

/// The `n - 1` solutions `v_j = (a/2)(1 + i alpha_j)` of `(v - a)^n = v^n`.
pub fn coincidence_nodes(n: usize, a: f64) -> Result<Vec<Complex64>> {
    check_degree(n)?;
    if !(a > 0.0) {
        return Err(Error::OutOfRange {
            name: "a",
            value: a,
            reason: "must be positive",
        });
    }
    let half = 0.5 * a;
    (1..n)
        .map(|j| Ok(Complex64::new(half, half * alpha(j, n)?)))
        .collect()
}

/// Everything the theorem needs at one degree.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdTable {
    pub n: usize,
    pub a_n: f64,
    pub alphas: Vec<f64>,
    pub lemma4_product: f64,
    pub alpha_product_bound: f64,
    pub b_ceiling: Option<f64>,
}

impl ThresholdTable {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            a_n: little_a(n)?,
            alphas: alphas(n)?,
            lemma4_product: lemma4_product(n)?,
            alpha_product_bound: alpha_product_bound(n)?,
            b_ceiling: b_ceiling(n)?,
        })
    }

    pub fn threshold_a(&self, r: f64) -> Result<f64> {
        threshold_a(self.n, r)
    }

    pub fn bound_b(&self, b: f64) -> Result<f64> {
        bound_b(self.n, b)
    }
}
