use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::frame::Line;

/// Boundary slack for membership tests.
pub const BOUNDARY_SLACK: f64 = 1e-12;

/// `{ nx * x + ny * y >= c }` (closed) or `>` (open).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub nx: f64,
    pub ny: f64,
    pub c: f64,
    pub closed: bool,
}

impl HalfPlane {
    pub fn from_line(line: Line, closed: bool) -> Self {
        Self {
            nx: line.cx,
            ny: line.cy,
            c: line.c0,
            closed,
        }
    }

    /// The open halfplane `{ Re z < x0 }`.
    pub fn left_of(x0: f64) -> Self {
        Self {
            nx: -1.0,
            ny: 0.0,
            c: -x0,
            closed: false,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let norm = self.nx.hypot(self.ny);
        let d = (self.nx * z.re + self.ny * z.im - self.c) / norm;
        if self.closed {
            d >= -BOUNDARY_SLACK
        } else {
            d > BOUNDARY_SLACK
        }
    }
}

/// Circular regions, plus the disk cap `A(z0, s)` used by the
/// critical-point-free region argument.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    ClosedDisk {
        center: Complex64,
        radius: f64,
    },
    OpenDisk {
        center: Complex64,
        radius: f64,
    },
    HalfPlane(HalfPlane),
    Complement(Box<Region>),
    /// Closed disk intersected with a halfplane.
    DiskCap {
        center: Complex64,
        radius: f64,
        halfplane: HalfPlane,
    },
}

impl Region {
    /// `C = { Re z < a/2 - b }`, the open halfplane the coincidence point
    /// must land in. Also used for `E = { Re z < a/2 - t }`.
    pub fn left_of(x0: f64) -> Self {
        Region::HalfPlane(HalfPlane::left_of(x0))
    }

    pub fn contains(&self, z: Complex64) -> bool {
        match self {
            Region::ClosedDisk { center, radius } => (z - center).norm() <= radius + BOUNDARY_SLACK,
            Region::OpenDisk { center, radius } => (z - center).norm() < radius - BOUNDARY_SLACK,
            Region::HalfPlane(h) => h.contains(z),
            Region::Complement(inner) => !inner.contains(z),
            Region::DiskCap {
                center,
                radius,
                halfplane,
            } => (z - center).norm() <= radius + BOUNDARY_SLACK && halfplane.contains(z),
        }
    }
}

pub fn region_contains(region: &Region, z: Complex64) -> bool {
    region.contains(z)
}
