//! Critical points, per-root Sendov distances, and the structural facts the
//! argument leans on (Gauss-Lucas hull membership, exclusion disks around
//! simple zeros, and the product identity at a zero).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{little_a, threshold_a};
use crate::error::{Error, Result};
use crate::poly::{canonical_sort, elementary_symmetric, Derivative, RootForm};

/// Pairwise root distance below which zeros are not treated as simple.
pub const SIMPLE_GATE: f64 = 1e-6;
/// Half-width of the marginal band around distance 1.
pub const VERDICT_TOL: f64 = 1e-9;
/// Slack on `|z_j| <= 1`.
pub const UNIT_DISK_SLACK: f64 = 1e-12;
/// Slack for the hull, exclusion-disk and product-identity checks.
pub const STRUCTURAL_TOL: f64 = 1e-9;

/// Multiplier on the rounding bound when deciding that a cluster of computed
/// critical points is one multiple critical point.
const CLUSTER_SAFETY: f64 = 100.0;
/// Clusters wider than this are never merged.
const CLUSTER_RADIUS: f64 = 0.25;
const POLISH_STEPS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Marginal,
    Fails,
}

impl Verdict {
    pub fn from_distance(d: f64) -> Self {
        if d <= 1.0 - VERDICT_TOL {
            Verdict::Holds
        } else if d < 1.0 + VERDICT_TOL {
            Verdict::Marginal
        } else {
            Verdict::Fails
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Marginal => "marginal",
            Verdict::Fails => "fails",
        }
    }
}

/// The `n - 1` zeros of `p'`, with `|p'(w_k)|` for each.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalSet {
    pub points: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

fn require_simple(p: &RootForm) -> Result<()> {
    let sep = p.min_separation();
    if sep < SIMPLE_GATE {
        Err(Error::ZerosNotSimple(sep))
    } else {
        Ok(())
    }
}

fn require_unit_disk(p: &RootForm) -> Result<()> {
    match p.roots().iter().find(|z| z.norm() > 1.0 + UNIT_DISK_SLACK) {
        Some(&z) => Err(Error::RootOutsideUnitDisk(z)),
        None => Ok(()),
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Coefficients of `q(c + h)` in powers of `h`.
fn taylor_at(coeffs: &[Complex64], c: Complex64) -> Vec<Complex64> {
    let mut t = coeffs.to_vec();
    let m = t.len();
    for i in 0..m {
        for k in (i..m - 1).rev() {
            let carry = t[k + 1] * c;
            t[k] += carry;
        }
    }
    t
}

/// `sum_k C(k, i) bound_k |c|^(k-i)` for each `i`.
fn taylor_bounds(bounds: &[f64], c: f64) -> Vec<f64> {
    (0..bounds.len())
        .map(|i| {
            bounds[i..]
                .iter()
                .enumerate()
                .map(|(off, b)| binomial(i + off, i) * b * c.powi(off as i32))
                .sum()
        })
        .collect()
}

/// Replaces clusters of computed critical points that are numerically one
/// multiple zero of `p'` by their centroid, repeated with multiplicity.
///
/// A cluster of `m` points with centroid `c` is merged only when the first
/// `m` Taylor coefficients of `p'` at `c` are all within the rounding bound
/// of the coefficient computation, i.e. `p'` is indistinguishable from a
/// polynomial with an `m`-fold zero at `c`.
fn consolidate(points: &mut Vec<Complex64>, deriv: &Derivative, coeff_error: &[f64]) {
    let m = points.len();
    let mut assigned = vec![false; m];
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        if assigned[i] {
            continue;
        }
        let mut near: Vec<usize> = (0..m).filter(|&j| !assigned[j]).collect();
        near.sort_by(|&x, &y| {
            (points[x] - points[i])
                .norm()
                .total_cmp(&(points[y] - points[i]).norm())
        });
        let mut merged = false;
        for k in (2..=near.len()).rev() {
            let members = &near[..k];
            if (points[members[k - 1]] - points[i]).norm() > CLUSTER_RADIUS {
                continue;
            }
            let centroid = members.iter().map(|&j| points[j]).sum::<Complex64>() / k as f64;
            let taylor = taylor_at(&deriv.coeffs, centroid);
            let bounds = taylor_bounds(coeff_error, centroid.norm());
            if (0..k).all(|t| taylor[t].norm() <= CLUSTER_SAFETY * bounds[t]) {
                for &j in members {
                    assigned[j] = true;
                }
                out.extend(std::iter::repeat_n(centroid, k));
                merged = true;
                break;
            }
        }
        if !merged {
            assigned[i] = true;
            out.push(points[i]);
        }
    }
    canonical_sort(&mut out);
    *points = out;
}

/// `sum_j 1/(z - z_j)` and its derivative; zero exactly where `p'` is.
fn log_derivative(z: Complex64, roots: &[Complex64]) -> (Complex64, Complex64) {
    roots.iter().fold(
        (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
        |(g, dg), &zj| {
            let t = (z - zj).inv();
            (g + t, dg - t * t)
        },
    )
}

/// Newton steps on the logarithmic derivative, which is evaluated from the
/// zeros directly instead of from rounded coefficients. Merged multiple
/// points are left alone; a step is kept only if it lowers `|g|` and stays
/// well inside the gap to the neighbouring critical points.
fn polish_simple(points: &mut [Complex64], roots: &[Complex64]) {
    let snapshot = points.to_vec();
    for (i, w) in points.iter_mut().enumerate() {
        let gap = snapshot
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &o)| (o - *w).norm())
            .fold(f64::INFINITY, f64::min);
        if gap == 0.0 {
            continue;
        }
        let start = *w;
        let (mut g, _) = log_derivative(*w, roots);
        for _ in 0..POLISH_STEPS {
            let (_, dg) = log_derivative(*w, roots);
            if g.norm() == 0.0 || dg.norm() == 0.0 {
                break;
            }
            let next = *w - g / dg;
            let (g_next, _) = log_derivative(next, roots);
            if !(g_next.norm() < g.norm()) || (next - start).norm() > 0.25 * gap {
                break;
            }
            *w = next;
            g = g_next;
        }
    }
    canonical_sort(points);
}

/// All `n - 1` critical points of a polynomial with simple zeros.
pub fn critical_points(p: &RootForm) -> Result<CriticalSet> {
    require_simple(p)?;
    let n = p.degree();
    if n == 1 {
        return Ok(CriticalSet {
            points: Vec::new(),
            residuals: Vec::new(),
        });
    }
    let coeffs = p.to_coeffs();
    let deriv = coeffs.derivative()?;
    let mut points = deriv.monic.find_roots()?;

    // Rounding bound on the expanded coefficients: |delta e_k| <= 2n eps e_k(|z|),
    // carried through the derivative and its evaluation.
    let moduli: Vec<Complex64> = p
        .roots()
        .iter()
        .map(|z| Complex64::new(z.norm(), 0.0))
        .collect();
    let abs_e = elementary_symmetric(&moduli);
    let gamma = 2.0 * n as f64 * f64::EPSILON;
    let coeff_error: Vec<f64> = (1..=n)
        .map(|k| {
            let raw = abs_e[n - k].re;
            k as f64 * (gamma * raw + gamma * deriv.coeffs[k - 1].norm() / k as f64)
        })
        .collect();
    consolidate(&mut points, &deriv, &coeff_error);
    polish_simple(&mut points, p.roots());

    let residuals = points.iter().map(|&w| deriv.eval(w).norm()).collect();
    Ok(CriticalSet { points, residuals })
}

/// Per-root distances to the nearest critical point and the `|p(0)| <= A_n`
/// applicability test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SendovReport {
    pub roots: Vec<Complex64>,
    pub critical_points: Vec<Complex64>,
    pub per_root_distance: Vec<f64>,
    pub separation_r: f64,
    pub p0_abs: f64,
    pub threshold_a: f64,
    pub theorem_applies: bool,
    pub verdict_per_root: Vec<Verdict>,
}

impl SendovReport {
    pub fn max_distance(&self) -> f64 {
        self.per_root_distance.iter().copied().fold(0.0, f64::max)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.verdict_per_root.iter().filter(|&&x| x == v).count()
    }
}

pub fn nearest_distance(z: Complex64, points: &[Complex64]) -> f64 {
    points
        .iter()
        .map(|w| (z - w).norm())
        .fold(f64::INFINITY, f64::min)
}

pub fn sendov_report(p: &RootForm) -> Result<SendovReport> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::InvalidDegree(n, "n must be at least 2"));
    }
    require_unit_disk(p)?;
    let crit = critical_points(p)?;
    let per_root_distance: Vec<f64> = p
        .roots()
        .iter()
        .map(|&z| nearest_distance(z, &crit.points))
        .collect();
    let separation_r = p.min_separation() / n as f64;
    let p0_abs = p.roots().iter().map(|z| z.norm()).product::<f64>();
    let threshold = threshold_a(n, separation_r)?;
    Ok(SendovReport {
        roots: p.roots().to_vec(),
        verdict_per_root: per_root_distance
            .iter()
            .map(|&d| Verdict::from_distance(d))
            .collect(),
        critical_points: crit.points,
        per_root_distance,
        separation_r,
        p0_abs,
        threshold_a: threshold,
        theorem_applies: p0_abs <= threshold,
    })
}

/// Outcome of one structural check, with its worst observed value and
/// where it occurred (`(root index, critical point index)` where relevant).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub passed: bool,
    pub worst: f64,
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructuralChecks {
    /// Largest distance of a critical point outside the root hull.
    pub gauss_lucas: CheckResult,
    /// Largest `M_j / n - |w_k - z_j|` over all pairs.
    pub exclusion_disks: CheckResult,
    /// Largest relative error of `n prod |z_j - w_k| = prod_{k != j} |z_j - z_k|`.
    pub product_identity: CheckResult,
}

impl StructuralChecks {
    pub fn all_passed(&self) -> bool {
        self.gauss_lucas.passed && self.exclusion_disks.passed && self.product_identity.passed
    }
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Counter-clockwise convex hull without collinear vertices.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Complex64>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// How far `z` lies outside the hull (non-positive inside for polygons).
pub fn hull_excess(hull: &[Complex64], z: Complex64) -> f64 {
    match hull.len() {
        0 => f64::INFINITY,
        1 => (z - hull[0]).norm(),
        2 => segment_distance(z, hull[0], hull[1]),
        m => (0..m)
            .map(|i| {
                let (a, b) = (hull[i], hull[(i + 1) % m]);
                -cross(a, b, z) / (b - a).norm()
            })
            .fold(f64::NEG_INFINITY, f64::max),
    }
}

pub fn structural_checks(p: &RootForm) -> Result<StructuralChecks> {
    require_unit_disk(p)?;
    let crit = critical_points(p)?;
    let roots = p.roots();
    let n = p.degree();

    let hull = convex_hull(roots);
    let mut gl = CheckResult {
        passed: true,
        worst: f64::NEG_INFINITY,
        witness: None,
    };
    for (k, &w) in crit.points.iter().enumerate() {
        let e = hull_excess(&hull, w);
        if e > gl.worst {
            gl.worst = e;
            gl.witness = Some((0, k));
        }
    }
    gl.passed = gl.worst <= STRUCTURAL_TOL;

    let mut excl = CheckResult {
        passed: true,
        worst: f64::NEG_INFINITY,
        witness: None,
    };
    for (j, &z) in roots.iter().enumerate() {
        let radius = p.nearest_other(j) / n as f64;
        for (k, &w) in crit.points.iter().enumerate() {
            let e = radius - (w - z).norm();
            if e > excl.worst {
                excl.worst = e;
                excl.witness = Some((j, k));
            }
        }
    }
    excl.passed = excl.worst <= STRUCTURAL_TOL;

    let mut ident = CheckResult {
        passed: true,
        worst: 0.0,
        witness: None,
    };
    for (j, &z) in roots.iter().enumerate() {
        let lhs = n as f64 * crit.points.iter().map(|w| (z - w).norm()).product::<f64>();
        let rhs: f64 = roots
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, zi)| (z - zi).norm())
            .product();
        let rel = (lhs - rhs).abs() / rhs;
        if rel > ident.worst || ident.witness.is_none() {
            ident.worst = ident.worst.max(rel);
            ident.witness = Some((j, 0));
        }
    }
    ident.passed = ident.worst <= STRUCTURAL_TOL;

    Ok(StructuralChecks {
        gauss_lucas: gl,
        exclusion_disks: excl,
        product_identity: ident,
    })
}

/// True when `|z_j| <= a_n`, which settles the conjecture at `z_j` without
/// locating any critical point.
pub fn lemma1_shortcut(z: Complex64, n: usize) -> bool {
    little_a(n).is_ok_and(|a_n| z.norm() <= a_n)
}

/// Result of rotating a polynomial so that a chosen root lands on the
/// positive real axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rotation {
    pub form: RootForm,
    /// The roots were multiplied by `exp(-i * phase)`.
    pub phase: f64,
    /// Canonical index of the distinguished root in `form`.
    pub index: usize,
}

/// Rotates the roots by `exp(-i theta)`, `theta = arg z_j`, so that `z_j`
/// becomes `|z_j| > 0`. The distinguished root is set to exactly `|z_j|`.
pub fn rotate_to_positive_real(p: &RootForm, j: usize) -> Result<Rotation> {
    let n = p.degree();
    let zj = *p.roots().get(j).ok_or(Error::IndexOutOfRange {
        index: j,
        degree: n,
    })?;
    if zj.norm() == 0.0 {
        return Err(Error::ZeroRoot);
    }
    let phase = zj.arg();
    let turn = Complex64::from_polar(1.0, -phase);
    let target = Complex64::new(zj.norm(), 0.0);
    let rotated: Vec<Complex64> = p
        .roots()
        .iter()
        .enumerate()
        .map(|(i, &z)| if i == j { target } else { z * turn })
        .collect();
    let form = RootForm::new(rotated)?;
    let index = form.index_of(target).expect("distinguished root present");
    Ok(Rotation { form, phase, index })
}
