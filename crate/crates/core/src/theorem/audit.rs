//! Instance-level replay of the contradiction argument.
//!
//! Given a polynomial with a distinguished positive real root `a`, the chain
//! asks whether every critical point is farther than 1 from `a` (a would-be
//! counterexample). On real inputs that hypothesis is empty; the remaining
//! steps are still reachable through [`audit_chain`] with synthetic inputs.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::form::{k_eval, walsh_solve};
use crate::bounds::{bound_b, coincidence_nodes, little_a, GeometryFrame, Region};
use crate::error::{Error, Result};
use crate::poly::{max_pairing_distance, RootForm};
use crate::sendov::{critical_points, rotate_to_positive_real, UNIT_DISK_SLACK, VERDICT_TOL};

/// Allowed imaginary part of a root that is supposed to be positive real.
pub const REAL_AXIS_SLACK: f64 = 1e-12;
/// Relative tolerance of `k(a, w) = -p(0)`.
pub const FORM_IDENTITY_TOL: f64 = 1e-9;
/// Set-equality tolerance for coincidence solutions against the closed-form nodes.
pub const NODE_MATCH_TOL: f64 = 1e-9;
/// `|p(0)|` below which the constant term counts as zero.
pub const ZERO_CONSTANT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepVerdict {
    Pass,
    Fail,
    Skip,
}

impl StepVerdict {
    fn of(ok: bool) -> Self {
        if ok {
            StepVerdict::Pass
        } else {
            StepVerdict::Fail
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    HypothesisEmpty,
    Consistent,
    ContradictionFound,
}

impl Overall {
    pub fn as_str(&self) -> &'static str {
        match self {
            Overall::HypothesisEmpty => "hypothesis_empty",
            Overall::Consistent => "consistent",
            Overall::ContradictionFound => "contradiction_found",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditStep {
    pub name: String,
    pub inputs: BTreeMap<String, f64>,
    pub value: f64,
    pub verdict: StepVerdict,
}

impl AuditStep {
    fn new(name: &str, inputs: &[(&str, f64)], value: f64, verdict: StepVerdict) -> Self {
        Self {
            name: name.to_string(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value,
            verdict,
        }
    }
}

/// Everything a chain replay depends on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditInput {
    pub n: usize,
    pub a: f64,
    pub r: f64,
    pub p0: Complex64,
    pub critical_points: Vec<Complex64>,
}

impl AuditInput {
    /// Input with `p(0)` chosen so that `k(a, w) = -p(0)` holds exactly, as
    /// it does for a genuine polynomial vanishing at `a`.
    pub fn synthetic(a: f64, r: f64, critical_points: Vec<Complex64>) -> Result<Self> {
        let p0 = -k_eval(Complex64::new(a, 0.0), &critical_points)?;
        Ok(Self {
            n: critical_points.len() + 1,
            a,
            r,
            p0,
            critical_points,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditTrace {
    pub input: AuditInput,
    pub steps: Vec<AuditStep>,
    pub overall: Overall,
}

impl AuditTrace {
    pub fn step(&self, name: &str) -> Option<&AuditStep> {
        self.steps.iter().find(|s| s.name == name)
    }
}

fn require_positive_real(p: &RootForm, j: usize) -> Result<f64> {
    let z = *p.roots().get(j).ok_or(Error::IndexOutOfRange {
        index: j,
        degree: p.degree(),
    })?;
    if z.im.abs() > REAL_AXIS_SLACK || z.re <= 0.0 {
        return Err(Error::NotNormalized(z));
    }
    if z.re > 1.0 + UNIT_DISK_SLACK {
        return Err(Error::RootOutsideUnitDisk(z));
    }
    Ok(z.re)
}

fn require_unit_disk(p: &RootForm) -> Result<()> {
    match p.roots().iter().find(|z| z.norm() > 1.0 + UNIT_DISK_SLACK) {
        Some(&z) => Err(Error::RootOutsideUnitDisk(z)),
        None => Ok(()),
    }
}

/// `p(0)` of the monic polynomial with the given roots.
pub fn constant_term(p: &RootForm) -> Complex64 {
    p.roots()
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &z| acc * -z)
}

fn input_for(p: &RootForm, a: f64) -> Result<AuditInput> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::InvalidDegree(n, "n must be at least 2"));
    }
    require_unit_disk(p)?;
    let crit = critical_points(p)?;
    Ok(AuditInput {
        n,
        a,
        r: p.min_separation() / n as f64,
        p0: constant_term(p),
        critical_points: crit.points,
    })
}

fn min_distance_to(a: f64, points: &[Complex64]) -> f64 {
    points
        .iter()
        .map(|w| (w - a).norm())
        .fold(f64::INFINITY, f64::min)
}

/// Replays the chain on one instance. The `j`-th root must already be a
/// positive real (see [`rotate_to_positive_real`]).
pub fn proof_audit(p: &RootForm, j: usize) -> Result<AuditTrace> {
    let a = require_positive_real(p, j)?;
    audit_chain(&input_for(p, a)?)
}

/// Rotates root `j` onto the positive real axis and audits it. A zero root
/// is audited at `a = 0`, where the small-root regime closes the chain.
pub fn audit_root(p: &RootForm, j: usize) -> Result<AuditTrace> {
    let z = *p.roots().get(j).ok_or(Error::IndexOutOfRange {
        index: j,
        degree: p.degree(),
    })?;
    if z.norm() == 0.0 {
        return audit_chain(&input_for(p, 0.0)?);
    }
    let rot = rotate_to_positive_real(p, j)?;
    proof_audit(&rot.form, rot.index)
}

/// Reruns the chain on the inputs recorded in `trace`.
pub fn replay(trace: &AuditTrace) -> Result<AuditTrace> {
    audit_chain(&trace.input)
}

pub fn audit_chain(input: &AuditInput) -> Result<AuditTrace> {
    let AuditInput {
        n,
        a,
        r,
        p0,
        ref critical_points,
    } = *input;
    let w = critical_points;
    if w.len() + 1 != n {
        return Err(Error::DegreeMismatch {
            expected: n - 1,
            got: w.len(),
        });
    }
    let mut steps = Vec::new();
    let finish = |steps, overall| {
        Ok(AuditTrace {
            input: input.clone(),
            steps,
            overall,
        })
    };

    let a_n = little_a(n)?;
    let in_regime = a <= a_n;
    steps.push(AuditStep::new(
        "small_root_regime",
        &[("a", a), ("a_n", a_n)],
        a - a_n,
        StepVerdict::of(in_regime),
    ));
    if in_regime {
        return finish(steps, Overall::HypothesisEmpty);
    }

    let nearest = min_distance_to(a, w);
    let far = nearest > 1.0 + VERDICT_TOL;
    steps.push(AuditStep::new(
        "all_critical_points_far",
        &[("a", a), ("tol", VERDICT_TOL)],
        nearest,
        StepVerdict::of(far),
    ));
    if !far {
        return finish(steps, Overall::HypothesisEmpty);
    }

    // Would-be counterexample at `a`: replay the remaining steps.
    let half = 0.5 * a;
    let max_re = w.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    steps.push(AuditStep::new(
        "critical_points_left_of_half",
        &[("a", a)],
        max_re - half,
        StepVerdict::of(max_re < half),
    ));

    let s = 0.5 * r;
    let frame_step = match GeometryFrame::new(a, s, n) {
        Ok(frame) => {
            let upper = frame.region_a();
            let lower = frame.mirror().region_a();
            let hits = w
                .iter()
                .filter(|&&z| upper.contains(z) || lower.contains(z))
                .count();
            AuditStep::new(
                "frame_region_empty",
                &[("a", a), ("s", s), ("gap", frame.gap)],
                hits as f64,
                StepVerdict::of(hits == 0),
            )
        }
        Err(_) => AuditStep::new(
            "frame_region_empty",
            &[("a", a), ("s", s)],
            0.0,
            StepVerdict::Skip,
        ),
    };
    steps.push(frame_step);

    let b = r * r / 24.0;
    let region_c = Region::left_of(half - b);
    let all_in_c = w.iter().all(|&z| region_c.contains(z));
    steps.push(AuditStep::new(
        "critical_points_in_c",
        &[("a", a), ("b", b)],
        max_re - (half - b),
        StepVerdict::of(all_in_c),
    ));

    let target = k_eval(Complex64::new(a, 0.0), w)?;
    let identity_err = (target + p0).norm();
    steps.push(AuditStep::new(
        "form_identity",
        &[("p0_re", p0.re), ("p0_im", p0.im)],
        identity_err,
        StepVerdict::of(identity_err <= FORM_IDENTITY_TOL * p0.norm().max(1.0)),
    ));

    let solutions = walsh_solve(n, a, target)?;
    let leftmost = solutions.iter().map(|v| v.re).fold(f64::INFINITY, f64::min);
    let any_in_c = solutions.iter().any(|&v| region_c.contains(v));
    steps.push(AuditStep::new(
        "coincidence_point_in_c",
        &[
            ("a", a),
            ("b", b),
            ("target_re", target.re),
            ("target_im", target.im),
        ],
        leftmost - (half - b),
        StepVerdict::of(any_in_c),
    ));

    let bound = if r > 0.0 { bound_b(n, b)? } else { 0.0 };
    let p0_abs = p0.norm();
    let threshold_bites = r > 0.0 && p0_abs <= bound;
    steps.push(AuditStep::new(
        "threshold_exclusion",
        &[("p0_abs", p0_abs), ("bound_b", bound)],
        p0_abs - bound,
        if threshold_bites {
            StepVerdict::of(!any_in_c)
        } else {
            StepVerdict::Skip
        },
    ));

    // the first two steps are gates; their failure is what got us here
    let overall = if steps.iter().skip(2).any(|s| s.verdict == StepVerdict::Fail) || threshold_bites
    {
        Overall::ContradictionFound
    } else {
        Overall::Consistent
    };
    finish(steps, overall)
}

/// Checks the `p(0) = 0` variant: the coincidence equation with zero target
/// is solved exactly by the nodes on `Re v = a/2`, none of which lies in any
/// halfplane `{ Re z < a/2 - t }`, `t > 0`.
pub fn remark2_audit(p: &RootForm, j: usize) -> Result<AuditTrace> {
    let p0 = constant_term(p);
    if p0.norm() > ZERO_CONSTANT_TOL {
        return Err(Error::NonzeroConstantTerm(p0.norm()));
    }
    let a = require_positive_real(p, j)?;
    let input = input_for(p, a)?;
    let n = input.n;
    let half = 0.5 * a;
    let mut steps = Vec::new();

    let nearest = min_distance_to(a, &input.critical_points);
    let far = nearest > 1.0 + VERDICT_TOL;
    steps.push(AuditStep::new(
        "all_critical_points_far",
        &[("a", a), ("tol", VERDICT_TOL)],
        nearest,
        StepVerdict::of(far),
    ));

    let solutions = walsh_solve(n, a, Complex64::new(0.0, 0.0))?;
    let nodes = coincidence_nodes(n, a)?;
    let mismatch = max_pairing_distance(&solutions, &nodes);
    steps.push(AuditStep::new(
        "walsh_matches_nodes",
        &[("a", a), ("tol", NODE_MATCH_TOL)],
        mismatch,
        StepVerdict::of(mismatch <= NODE_MATCH_TOL),
    ));

    let node_offset = nodes
        .iter()
        .map(|v| (v.re - half).abs())
        .fold(0.0, f64::max);
    steps.push(AuditStep::new(
        "nodes_on_half_line",
        &[("a", a)],
        node_offset,
        StepVerdict::of(node_offset == 0.0),
    ));

    let t = VERDICT_TOL;
    let region_e = Region::left_of(half - t);
    let hits = solutions
        .iter()
        .chain(&nodes)
        .filter(|&&v| region_e.contains(v))
        .count();
    steps.push(AuditStep::new(
        "nodes_outside_e",
        &[("a", a), ("t", t)],
        hits as f64,
        StepVerdict::of(hits == 0),
    ));

    let overall = if steps.iter().skip(1).any(|s| s.verdict == StepVerdict::Fail) || far {
        Overall::ContradictionFound
    } else {
        Overall::HypothesisEmpty
    };
    Ok(AuditTrace {
        input,
        steps,
        overall,
    })
}
