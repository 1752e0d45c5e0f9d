//! Thresholds and geometric constructions behind the `|p(0)|` criterion.

mod frame;
mod region;
mod thresholds;

pub use frame::{
    circle_intersection, geometry_frame, line_circle_intersection, mirror_frame, GeometryFrame,
    Line, GAP_SLACK,
};
pub use region::{region_contains, HalfPlane, Region, BOUNDARY_SLACK};
pub use thresholds::{
    alpha, alpha_product_bound, alphas, b_ceiling, bound_b, c_product, coincidence_nodes,
    lemma4_product, little_a, threshold_a, ThresholdTable,
};
