use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::RunConfig;
use super::sampling::{sample_seed, sample_simple_polynomial};
use crate::error::{Error, Result};
use crate::sendov::Verdict;
use crate::theorem::{audit_root, theorem1_verdict, Overall};

/// Degrees at or below which the conjecture is known to hold; a failure
/// there is an implementation defect.
pub const VERIFIED_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub degree: usize,
    pub sample_index: usize,
    pub seed: u64,
    pub roots: Vec<Complex64>,
    pub r: f64,
    pub p0_abs: f64,
    pub threshold_a: f64,
    pub theorem_applies: bool,
    pub max_sendov_distance: f64,
    pub distances: Vec<f64>,
    pub verdicts: Vec<Verdict>,
    /// Worst audit outcome over all roots.
    pub audit_overall: Overall,
    pub critical_finding: bool,
}

impl SampleRecord {
    pub fn has_failure(&self) -> bool {
        self.verdicts.contains(&Verdict::Fails)
    }

    pub fn is_contradiction(&self) -> bool {
        self.critical_finding || self.audit_overall == Overall::ContradictionFound
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub samples: usize,
    pub roots: usize,
    pub holds: usize,
    pub marginal: usize,
    pub fails: usize,
    pub theorem_applies: usize,
    pub consistent: usize,
    pub contradictions: usize,
}

impl Summary {
    pub fn from_records(records: &[SampleRecord]) -> Self {
        let mut s = Summary::default();
        for rec in records {
            s.samples += 1;
            s.roots += rec.degree;
            for v in &rec.verdicts {
                match v {
                    Verdict::Holds => s.holds += 1,
                    Verdict::Marginal => s.marginal += 1,
                    Verdict::Fails => s.fails += 1,
                }
            }
            s.theorem_applies += usize::from(rec.theorem_applies);
            s.consistent += usize::from(rec.audit_overall == Overall::Consistent);
            s.contradictions += usize::from(rec.is_contradiction());
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.fails > 0 || self.contradictions > 0 {
            1
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOutput {
    pub config: RunConfig,
    pub summary: Summary,
    pub records: Vec<SampleRecord>,
}

/// Builds, checks and audits one sample.
pub fn evaluate_sample(config: &RunConfig, degree: usize, index: usize) -> Result<SampleRecord> {
    let seed = sample_seed(config.seed, degree, index);
    let p = sample_simple_polynomial(degree, seed, config.min_sep)?;
    let verdict = theorem1_verdict(&p)?;
    let mut worst = Overall::HypothesisEmpty;
    for j in 0..degree {
        worst = worst.max(audit_root(&p, j)?.overall);
    }
    let rep = verdict.report;
    Ok(SampleRecord {
        degree,
        sample_index: index,
        seed,
        roots: rep.roots.clone(),
        r: rep.separation_r,
        p0_abs: rep.p0_abs,
        threshold_a: rep.threshold_a,
        theorem_applies: rep.theorem_applies,
        max_sendov_distance: rep.max_distance(),
        distances: rep.per_root_distance,
        verdicts: rep.verdict_per_root,
        audit_overall: worst,
        critical_finding: verdict.critical_finding,
    })
}

/// Runs every `(degree, sample)` pair. Records come back in
/// `(degree, sample index)` order whatever the worker count.
pub fn run_search(config: &RunConfig) -> Result<SearchOutput> {
    config.validate()?;
    let work: Vec<(usize, usize)> = (config.n_min..=config.n_max)
        .flat_map(|n| (0..config.samples).map(move |i| (n, i)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let records = pool.install(|| {
        work.par_iter()
            .map(|&(n, i)| evaluate_sample(config, n, i))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SearchOutput {
        config: config.clone(),
        summary: Summary::from_records(&records),
        records,
    })
}
