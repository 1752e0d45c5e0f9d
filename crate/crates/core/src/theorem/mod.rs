//! The symmetric form `k`, the coincidence solver, the `|p(0)| <= A_n`
//! verdict, and the step-by-step audit of the contradiction argument.

mod audit;
mod form;

pub use audit::{
    audit_chain, audit_root, constant_term, proof_audit, remark2_audit, replay, AuditInput,
    AuditStep, AuditTrace, Overall, StepVerdict, FORM_IDENTITY_TOL, NODE_MATCH_TOL,
    REAL_AXIS_SLACK, ZERO_CONSTANT_TOL,
};
pub use form::{binomial_exact, k_eval, walsh_solve, CoincidenceForm, MAX_EXACT_DEGREE};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::RootForm;
use crate::sendov::{lemma1_shortcut, sendov_report, SendovReport, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theorem1Verdict {
    pub report: SendovReport,
    /// `|z_j| <= a_n` at each root.
    pub small_root_per_root: Vec<bool>,
    /// Sendov is guaranteed at the root by the threshold or by the small-root shortcut.
    pub guaranteed_per_root: Vec<bool>,
    /// A guaranteed root whose computed verdict is `fails`.
    pub critical_finding: bool,
}

pub fn theorem1_verdict(p: &RootForm) -> Result<Theorem1Verdict> {
    let report = sendov_report(p)?;
    let n = p.degree();
    let small_root_per_root: Vec<bool> = p.roots().iter().map(|&z| lemma1_shortcut(z, n)).collect();
    let guaranteed_per_root: Vec<bool> = small_root_per_root
        .iter()
        .map(|&l| l || report.theorem_applies)
        .collect();
    let critical_finding = guaranteed_per_root
        .iter()
        .zip(&report.verdict_per_root)
        .any(|(&g, &v)| g && v == Verdict::Fails);
    Ok(Theorem1Verdict {
        report,
        small_root_per_root,
        guaranteed_per_root,
        critical_finding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn verdict_examples() {
        let cube = RootForm::new(
            (0..3)
                .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / 3.0))
                .collect(),
        )
        .unwrap();
        let v = theorem1_verdict(&cube).unwrap();
        assert!(!v.report.theorem_applies);
        assert!((v.report.threshold_a - 0.012_891_711_531_604_294).abs() < 1e-15);
        assert!(!v.critical_finding);
        assert!(v
            .report
            .verdict_per_root
            .iter()
            .all(|&x| x != Verdict::Fails));

        let odd = RootForm::new(vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let v = theorem1_verdict(&odd).unwrap();
        assert!(v.report.theorem_applies);
        assert!((v.report.threshold_a - 0.004_297_237_177_201_431).abs() < 1e-15);
        assert!(v.guaranteed_per_root.iter().all(|&g| g));
        assert_eq!(v.report.count(Verdict::Holds), 3);

        let quad = RootForm::new(vec![c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let v = theorem1_verdict(&quad).unwrap();
        assert!(!v.report.theorem_applies);
        assert!((v.report.threshold_a - 1.0 / 12.0).abs() < 1e-16);
        // both roots sit at distance exactly 1 from the critical point 0
        assert_eq!(v.report.count(Verdict::Marginal), 2);
    }
}
