//! Numerical checks of the Sendov conjecture on polynomials whose zeros are
//! distinct and lie in the closed unit disk.
//!
//! * [`poly`]: root/coefficient forms, evaluation, simultaneous root finding.
//! * [`sendov`]: critical points, per-root Sendov distances, structural checks.
//! * [`bounds`]: the constants `a_n`, `alpha_j`, `A_n`, `B_n`, `C_n` and the
//!   geometric frame around `z0`.
//! * [`theorem`]: the symmetric form `k`, the coincidence solver, the
//!   threshold verdict and the audit trace.
//! * [`harness`]: sampling, batch runs, grid sweeps and report emission.

// `!(x > 0.0)` is how NaN gets rejected along with the rest
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod harness;
pub mod poly;
pub mod sendov;
pub mod theorem;

pub use error::{Error, Result};
pub use poly::{CoeffForm, ComplexScalar, RootForm};
