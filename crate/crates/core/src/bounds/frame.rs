//! The frame anchored at `z0 = a/2 + i sqrt(4 - a^2)/2`, the common point of
//! the unit circle and the unit circle about `a`.
//!
//! For a radius `s` the circle `|z - z0| = s` cuts the unit circle at `v1`
//! and `v2`; the line `L` through them bounds the closed halfplane `H` away
//! from the origin, and `v3` is where `L` meets `|z - a| = 1` to the left of
//! `a/2`. The quantity `a/2 - Re v3` is the gap that pushes critical points
//! left of the vertical line `Re z = a/2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::region::{HalfPlane, Region};
use super::thresholds::little_a;
use crate::error::{Error, Result};

/// Slack on the strict gap inequality `gap > s^2/6`.
pub const GAP_SLACK: f64 = 1e-14;

/// Oriented line `cx * x + cy * y = c0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub cx: f64,
    pub cy: f64,
    pub c0: f64,
}

impl Line {
    pub fn value(&self, z: Complex64) -> f64 {
        self.cx * z.re + self.cy * z.im
    }

    /// Signed distance of `z` from the line, positive on the `>= c0` side.
    pub fn signed_distance(&self, z: Complex64) -> f64 {
        (self.value(z) - self.c0) / self.cx.hypot(self.cy)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryFrame {
    pub a: f64,
    pub s: f64,
    pub n: usize,
    pub z0: Complex64,
    pub v1: Complex64,
    pub v2: Complex64,
    pub v3: Complex64,
    pub line: Line,
    /// `H = { line.value(z) >= line.c0 }`, the side not containing 0.
    pub halfplane: HalfPlane,
    pub gap: f64,
    /// True for the conjugate frame anchored at `a/2 - i sqrt(4 - a^2)/2`.
    pub mirrored: bool,
}

impl GeometryFrame {
    /// Builds the frame from the closed-form expressions.
    ///
    /// Requires `a_n < a < 1` and `0 < s <= 2/n`.
    pub fn new(a: f64, s: f64, n: usize) -> Result<Self> {
        let a_n = little_a(n)?;
        if !(a > a_n && a < 1.0) {
            return Err(Error::FrameRegime { a, a_n });
        }
        if !(s > 0.0 && s <= 2.0 / n as f64) {
            return Err(Error::OutOfRange {
                name: "s",
                value: s,
                reason: "must lie in (0, 2/n]",
            });
        }

        let a2 = a * a;
        let s2 = s * s;
        let root_4a = (4.0 - a2).sqrt();
        let z0 = Complex64::new(0.5 * a, 0.5 * root_4a);

        let spread = s * ((4.0 - a2) * (4.0 - s2)).sqrt();
        let re_v1 = 0.25 * (a * (2.0 - s2) - spread);
        let re_v2 = 0.25 * (a * (2.0 - s2) + spread);
        let im_on_line = |re: f64| -a / (4.0 * root_4a) * (4.0 * re) + (2.0 - s2) / root_4a;
        let v1 = Complex64::new(re_v1, im_on_line(re_v1));
        let v2 = Complex64::new(re_v2, im_on_line(re_v2));

        let disc = ((4.0 - a2) * (4.0 - a2 - s2) * (a2 + s2)).sqrt();
        let re_v3 = 0.25 * (a * (6.0 - a2 - s2) - disc);
        let v3 = Complex64::new(re_v3, im_on_line(re_v3));

        let line = Line {
            cx: a,
            cy: root_4a,
            c0: 2.0 - s2,
        };
        let gap = 0.5 * a - re_v3;
        let bound = s2 / 6.0;
        if !(gap > bound - GAP_SLACK) {
            return Err(Error::GapViolation { gap, bound });
        }

        Ok(Self {
            a,
            s,
            n,
            z0,
            v1,
            v2,
            v3,
            line,
            halfplane: HalfPlane::from_line(line, true),
            gap,
            mirrored: false,
        })
    }

    /// Lower bound that the gap is guaranteed to exceed.
    pub fn gap_bound(&self) -> f64 {
        self.s * self.s / 6.0
    }

    /// `A(z0, s)`: the closed unit disk intersected with `H`.
    pub fn region_a(&self) -> Region {
        Region::DiskCap {
            center: Complex64::new(0.0, 0.0),
            radius: 1.0,
            halfplane: self.halfplane,
        }
    }

    /// The conjugate frame. Applying it twice returns the original exactly.
    pub fn mirror(&self) -> Self {
        let line = Line {
            cy: -self.line.cy,
            ..self.line
        };
        Self {
            z0: self.z0.conj(),
            v1: self.v1.conj(),
            v2: self.v2.conj(),
            v3: self.v3.conj(),
            line,
            halfplane: HalfPlane::from_line(line, true),
            mirrored: !self.mirrored,
            ..self.clone()
        }
    }
}

pub fn geometry_frame(a: f64, s: f64, n: usize) -> Result<GeometryFrame> {
    GeometryFrame::new(a, s, n)
}

pub fn mirror_frame(f: &GeometryFrame) -> GeometryFrame {
    f.mirror()
}

/// Intersection points of the circles `|z - c1| = r1` and `|z - c2| = r2`,
/// sorted by real part. Tangency yields a single point.
pub fn circle_intersection(
    c1: Complex64,
    r1: f64,
    c2: Complex64,
    r2: f64,
) -> Result<Vec<Complex64>> {
    if !(r1 > 0.0 && r2 > 0.0) {
        return Err(Error::OutOfRange {
            name: "radius",
            value: r1.min(r2),
            reason: "must be positive",
        });
    }
    let delta = c2 - c1;
    let d = delta.norm();
    if d == 0.0 {
        return if r1 == r2 {
            Err(Error::InfiniteIntersection)
        } else {
            Ok(Vec::new())
        };
    }
    // distance from c1 to the radical line along the center axis
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h2 = r1 * r1 - along * along;
    let tol = 4.0 * f64::EPSILON * r1 * r1.max(r2).max(d);
    let unit = delta / d;
    let foot = c1 + unit * along;
    if h2 < -tol {
        return Ok(Vec::new());
    }
    if h2 <= tol {
        return Ok(vec![foot]);
    }
    let h = h2.sqrt();
    let normal = Complex64::new(-unit.im, unit.re);
    let mut pts = vec![foot - normal * h, foot + normal * h];
    pts.sort_by(|p, q| p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im)));
    Ok(pts)
}

/// Intersection points of `line` with the circle `|z - center| = radius`,
/// sorted by real part.
pub fn line_circle_intersection(line: &Line, center: Complex64, radius: f64) -> Vec<Complex64> {
    let norm = line.cx.hypot(line.cy);
    let (ux, uy) = (line.cx / norm, line.cy / norm);
    // signed offset of the line from the center along the unit normal
    let offset = (line.c0 - line.cx * center.re - line.cy * center.im) / norm;
    let h2 = radius * radius - offset * offset;
    let foot = center + Complex64::new(ux, uy) * offset;
    if h2 < 0.0 {
        return Vec::new();
    }
    let h = h2.sqrt();
    let dir = Complex64::new(-uy, ux);
    let mut pts = vec![foot - dir * h, foot + dir * h];
    pts.sort_by(|p, q| p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im)));
    pts.dedup();
    pts
}
