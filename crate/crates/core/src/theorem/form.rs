//! The symmetric multilinear form `k(z, u_1, ..., u_{n-1})` and its diagonal
//! restriction at `z = a`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{canonical_sort, elementary_symmetric, CoeffForm};

/// Largest degree for which binomials are formed exactly.
pub const MAX_EXACT_DEGREE: usize = 64;

/// Residual multiplier for coincidence solutions.
pub const WALSH_RESIDUAL_TOL: f64 = 1e-9;

const POLISH_STEPS: usize = 8;

/// `k(z, u) = z^n + sum_{k=1}^{n-1} (-1)^k n/(n-k) e_k(u) z^{n-k}`, `n = u.len() + 1`.
///
/// With `u` the critical points of a monic `p` of degree `n`, this is
/// `p(z) - p(0)`.
pub fn k_eval(z: Complex64, u: &[Complex64]) -> Result<Complex64> {
    if u.is_empty() {
        return Err(Error::InvalidDegree(1, "form needs at least one argument"));
    }
    let n = u.len() + 1;
    let e = elementary_symmetric(u);
    // Horner over descending powers z^n, z^{n-1}, ..., z^1
    let mut acc = Complex64::new(1.0, 0.0);
    for (k, ek) in e.iter().enumerate().skip(1) {
        let weight = n as f64 / (n - k) as f64;
        let term = if k % 2 == 0 {
            ek * weight
        } else {
            -ek * weight
        };
        acc = acc * z + term;
    }
    Ok(acc * z)
}

/// Exact `C(n, k)` for `n <= MAX_EXACT_DEGREE`.
pub fn binomial_exact(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `f(v) = (a - v)^n + (-1)^(n-1) v^n - target`, expanded in ascending powers
/// of `v`. The `v^n` terms cancel, leaving degree `n - 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoincidenceForm {
    pub n: usize,
    pub a: f64,
    pub target: Complex64,
    /// Ascending coefficients of `f`, length `n` (degree `n - 1`).
    pub coeffs: Vec<Complex64>,
    /// Coefficient of `v^n` after cancellation; exactly zero.
    pub top: f64,
}

impl CoincidenceForm {
    pub fn new(n: usize, a: f64, target: Complex64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDegree(n, "n must be at least 2"));
        }
        if n > MAX_EXACT_DEGREE {
            return Err(Error::InvalidDegree(
                n,
                "exact binomials limited to n <= 64",
            ));
        }
        if !(a > 0.0) {
            return Err(Error::OutOfRange {
                name: "a",
                value: a,
                reason: "must be positive",
            });
        }
        if !(target.re.is_finite() && target.im.is_finite()) {
            return Err(Error::NonFinite("target"));
        }
        let sign = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        // (a - v)^n contributes C(n, k) a^{n-k} (-1)^k v^k
        let mut coeffs: Vec<Complex64> = (0..n)
            .map(|k| {
                let c = binomial_exact(n, k) as f64 * a.powi((n - k) as i32) * sign(k);
                Complex64::new(c, 0.0)
            })
            .collect();
        coeffs[0] -= target;
        let top = sign(n) + sign(n - 1);
        Ok(Self {
            n,
            a,
            target,
            coeffs,
            top,
        })
    }

    /// Leading coefficient predicted by the binomial expansion: `(-1)^(n-1) n a`.
    pub fn predicted_leading(&self) -> f64 {
        let s = if (self.n - 1).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        s * self.n as f64 * self.a
    }

    pub fn eval(&self, v: Complex64) -> Complex64 {
        crate::poly::horner(&self.coeffs, v)
    }

    fn sign(&self) -> f64 {
        if (self.n - 1).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// `f(v)` from the unexpanded expression, free of the cancellation in
    /// the binomial coefficients.
    pub fn direct(&self, v: Complex64) -> Complex64 {
        let n = self.n as u32;
        (self.a - v).powu(n) + v.powu(n) * self.sign() - self.target
    }

    fn direct_derivative(&self, v: Complex64) -> Complex64 {
        let m = self.n as u32 - 1;
        ((self.a - v).powu(m) * -1.0 + v.powu(m) * self.sign()) * self.n as f64
    }

    /// `|f(v)|` by direct evaluation of the unexpanded expression.
    pub fn residual(&self, v: Complex64) -> f64 {
        self.direct(v).norm()
    }

    /// Newton steps on the unexpanded expression, each kept only if it
    /// lowers the residual.
    pub fn polish(&self, mut v: Complex64) -> Complex64 {
        let mut res = self.residual(v);
        for _ in 0..POLISH_STEPS {
            let d = self.direct_derivative(v);
            if d.norm() == 0.0 || res == 0.0 {
                break;
            }
            let next = v - self.direct(v) / d;
            let next_res = self.residual(next);
            if !(next_res < res) {
                break;
            }
            v = next;
            res = next_res;
        }
        v
    }

    /// Floating-point scale of `f(v)`: `max(1, |target|, a^n, |a - v|^n + |v|^n)`.
    pub fn residual_scale(&self, v: Complex64) -> f64 {
        let n = self.n as i32;
        let terms = (self.a - v).norm().powi(n) + v.norm().powi(n);
        1f64.max(self.target.norm()).max(self.a.powi(n)).max(terms)
    }

    pub fn monic(&self) -> Result<CoeffForm> {
        CoeffForm::normalized(self.coeffs.clone())
    }
}

/// All `v` with `(a - v)^n + (-1)^(n-1) v^n = target`, canonically ordered.
pub fn walsh_solve(n: usize, a: f64, target: Complex64) -> Result<Vec<Complex64>> {
    let form = CoincidenceForm::new(n, a, target)?;
    let mut roots: Vec<Complex64> = form
        .monic()?
        .find_roots()?
        .into_iter()
        .map(|v| form.polish(v))
        .collect();
    canonical_sort(&mut roots);
    for &v in &roots {
        let residual = form.residual(v);
        let bound = WALSH_RESIDUAL_TOL * form.residual_scale(v);
        if residual > bound {
            return Err(Error::Residual { residual, bound });
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::coincidence_nodes;
    use crate::poly::max_pairing_distance;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn k_eval_degree_two() {
        let z = c(0.3, -0.7);
        let u = c(0.2, 0.1);
        let got = k_eval(z, &[u]).unwrap();
        assert!((got - (z * z - u * z * 2.0)).norm() < 1e-15);
        assert_eq!(k_eval(z, &[c(0.0, 0.0)]).unwrap(), z * z);
        assert!(k_eval(z, &[]).is_err());
    }

    #[test]
    fn k_eval_recovers_quadratic() {
        // p = z^2 - 1, w_1 = 0
        for z in [c(0.5, 0.5), c(-1.0, 2.0)] {
            let p = z * z - 1.0;
            assert!((k_eval(z, &[c(0.0, 0.0)]).unwrap() - (p + 1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn binomials_exact_to_64() {
        assert_eq!(binomial_exact(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial_exact(10, 3), 120);
        assert_eq!(binomial_exact(7, 0), 1);
        assert_eq!(binomial_exact(7, 7), 1);
    }

    #[test]
    fn coincidence_form_degree() {
        for n in 2..=20 {
            let f = CoincidenceForm::new(n, 0.7, c(0.1, 0.0)).unwrap();
            assert_eq!(f.coeffs.len(), n);
            assert_eq!(f.top, 0.0);
            assert!((f.coeffs[n - 1].re - f.predicted_leading()).abs() <= 1e-14);
        }
        assert!(CoincidenceForm::new(65, 0.7, c(0.0, 0.0)).is_err());
        assert!(CoincidenceForm::new(3, 0.0, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn walsh_examples() {
        let v = walsh_solve(2, 1.0, c(1.0, 0.0)).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].norm() < 1e-15);

        let v = walsh_solve(2, 1.0, c(0.0, 0.0)).unwrap();
        assert!((v[0] - c(0.5, 0.0)).norm() < 1e-15);

        let v = walsh_solve(3, 1.0, c(0.0, 0.0)).unwrap();
        let nodes = coincidence_nodes(3, 1.0).unwrap();
        assert!(max_pairing_distance(&v, &nodes) < 1e-12);
    }
}
