//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! worst observed value and runtime; the process exits nonzero if any fail.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sendov_lab::bounds::{bound_b, coincidence_nodes, lemma4_product, threshold_a};
use sendov_lab::harness::{
    exclusion_check, factorization_check, frame_sweep, sample_seed, sample_simple_polynomial,
    uniform_disk_point, EXCLUSION_SAMPLES, FACTORIZATION_SAMPLES,
};
use sendov_lab::poly::max_pairing_distance;
use sendov_lab::sendov::{critical_points, structural_checks};
use sendov_lab::theorem::{constant_term, k_eval, walsh_solve};

const SEED: u64 = 20_240_601;

type Criterion = (&'static str, fn() -> Outcome, u64);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

// high-precision reference values
const A3_AT_R_ROOT3_OVER_3: f64 = 0.012_891_711_531_604_294;

fn alpha_product_even() -> Outcome {
    let worst = (2..=64)
        .step_by(2)
        .map(|n| (lemma4_product(n).unwrap() - 1.0).abs())
        .fold(0.0, f64::max);
    outcome(worst <= 1e-12, format!("max |prod - 1| = {worst:.3e}"))
}

fn alpha_product_odd() -> Outcome {
    let mut worst = f64::INFINITY;
    for n in (3..=63).step_by(2) {
        let p = (n - 1) / 2;
        let bound = (3f64.sqrt() / 3.0).powi(p as i32);
        worst = worst.min(lemma4_product(n).unwrap() - bound);
    }
    outcome(worst >= -1e-12, format!("min (prod - bound) = {worst:.3e}"))
}

fn frame_closed_forms() -> Outcome {
    let (mut dev, mut points, mut bad) = (0.0f64, 0, 0);
    for n in 3..=12 {
        let (forms, gaps) = frame_sweep(n).unwrap();
        dev = dev.max(forms.worst);
        points += forms.evaluated;
        bad += forms.violations + gaps.violations;
        if gaps.evaluated != forms.evaluated {
            bad += 1;
        }
    }
    outcome(
        bad == 0 && points > 0 && dev <= 1e-12,
        format!("{points} grid points, max deviation {dev:.3e}, {bad} violations"),
    )
}

fn factorization() -> Outcome {
    let (mut worst, mut bad, mut count) = (0.0f64, 0, 0);
    for n in 2..=16 {
        let c = factorization_check(n, SEED, FACTORIZATION_SAMPLES).unwrap();
        worst = worst.max(c.worst);
        bad += c.violations;
        count += c.evaluated;
    }
    outcome(
        bad == 0,
        format!("{count} points, max relative error {worst:.3e}"),
    )
}

fn exclusion() -> Outcome {
    let (mut worst, mut bad, mut count) = (0.0f64, 0, 0);
    for n in 3..=12 {
        let c = exclusion_check(n, SEED, EXCLUSION_SAMPLES).unwrap();
        worst = worst.max(c.worst);
        bad += c.violations;
        count += c.evaluated;
    }
    outcome(
        bad == 0,
        format!("{count} points, {bad} violations, max bound/gap {worst:.3e}"),
    )
}

fn threshold_identity() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=40 {
        let limit = 2.0 / n as f64;
        let mut k = 1;
        while 0.01 * k as f64 <= limit {
            let r = 0.01 * k as f64;
            let a = threshold_a(n, r).unwrap();
            let b = bound_b(n, r * r / 24.0).unwrap();
            worst = worst.max((a - b).abs() / b);
            k += 1;
        }
    }
    let spot2 = (threshold_a(2, 1.0).unwrap() - 1.0 / 12.0).abs();
    let spot3 = (threshold_a(3, 3f64.sqrt() / 3.0).unwrap() - A3_AT_R_ROOT3_OVER_3).abs();
    outcome(
        worst <= 1e-14 && spot2 <= 1e-15 && spot3 <= 1e-15,
        format!("max relative gap {worst:.3e}, spot errors {spot2:.1e}, {spot3:.1e}"),
    )
}

fn form_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for i in 0..500 {
        let n = 2 + i % 11;
        let p = sample_simple_polynomial(n, sample_seed(SEED, n, i), 1e-3).unwrap();
        let w = critical_points(&p).unwrap().points;
        let coeffs = p.to_coeffs();
        let p0 = constant_term(&p);
        let zs: Vec<Complex64> = (0..50).map(|_| uniform_disk_point(&mut rng)).collect();
        let scale = 1.0
            + zs.iter()
                .map(|&z| coeffs.eval(z).norm())
                .fold(0.0, f64::max);
        for z in zs {
            let err = (k_eval(z, &w).unwrap() - (coeffs.eval(z) - p0)).norm() / scale;
            worst = worst.max(err);
        }
    }
    outcome(
        worst <= 1e-9,
        format!("25000 points, max scaled error {worst:.3e}"),
    )
}

fn walsh() -> Outcome {
    let mut node_dev = 0.0f64;
    for n in 2..=20 {
        for a in [0.3, 0.7, 1.0] {
            let sol = walsh_solve(n, a, Complex64::new(0.0, 0.0)).unwrap();
            let nodes = coincidence_nodes(n, a).unwrap();
            node_dev = node_dev.max(max_pairing_distance(&sol, &nodes));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x5A15);
    let mut misses = 0;
    let mut worst_excess = f64::NEG_INFINITY;
    for _ in 0..1000 {
        let n = rng.random_range(2..=10);
        let a = rng.random_range(0.1..=1.0);
        let center = 1.5 * uniform_disk_point(&mut rng);
        let radius = rng.random_range(0.05..=1.0);
        let w: Vec<Complex64> = (1..n)
            .map(|_| center + radius * uniform_disk_point(&mut rng))
            .collect();
        let target = k_eval(Complex64::new(a, 0.0), &w).unwrap();
        let sol = walsh_solve(n, a, target).unwrap();
        let excess = sol
            .iter()
            .map(|v| (v - center).norm() - radius)
            .fold(f64::INFINITY, f64::min);
        worst_excess = worst_excess.max(excess);
        if excess > 1e-9 {
            misses += 1;
        }
    }
    outcome(
        node_dev <= 1e-9 && misses == 0,
        format!("node mismatch {node_dev:.3e}; disk instances missed {misses}/1000, worst excess {worst_excess:.3e}"),
    )
}

fn structural() -> Outcome {
    let mut failures = 0;
    let (mut hull, mut disk, mut ident) = (f64::NEG_INFINITY, f64::NEG_INFINITY, 0.0f64);
    for n in 2..=10 {
        for i in 0..1000 {
            let p = sample_simple_polynomial(n, sample_seed(SEED ^ 0x57, n, i), 1e-3).unwrap();
            let s = structural_checks(&p).unwrap();
            failures += usize::from(!s.all_passed());
            hull = hull.max(s.gauss_lucas.worst);
            disk = disk.max(s.exclusion_disks.worst);
            ident = ident.max(s.product_identity.worst);
        }
    }
    outcome(
        failures == 0,
        format!("9000 polynomials, {failures} failing; worst hull {hull:.2e}, disk {disk:.2e}, identity {ident:.2e}"),
    )
}

fn end_to_end() -> Outcome {
    let dir = std::env::temp_dir().join(format!("sendov-lab-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let path = dir.join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_sendov-lab"))
            .args([
                "search",
                "--n-min",
                "2",
                "--n-max",
                "8",
                "--samples",
                "200",
                "--seed",
                "42",
                "--out",
            ])
            .arg(&path)
            .output()
            .unwrap()
            .status;
        (status.code(), fs::read(&path).unwrap_or_default())
    };
    let (code1, first) = run("first.json");
    let (code2, second) = run("second.json");
    let _ = fs::remove_dir_all(&dir);
    let summary: serde_json::Value = serde_json::from_slice::<serde_json::Value>(&first)
        .map(|v| v["summary"].clone())
        .unwrap_or_default();
    let fails = summary["fails"].as_u64();
    let contradictions = summary["contradictions"].as_u64();
    let identical = !first.is_empty() && first == second;
    outcome(
        code1 == Some(0) && code2 == Some(0) && fails == Some(0) && contradictions == Some(0) && identical,
        format!(
            "exit {code1:?}/{code2:?}, fails {fails:?}, contradictions {contradictions:?}, identical rerun {identical}, marginal {}",
            summary["marginal"]
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("even-degree alpha product equals 1", alpha_product_even, 1),
        ("odd-degree alpha product lower bound", alpha_product_odd, 1),
        (
            "frame closed forms and gap inequality",
            frame_closed_forms,
            10,
        ),
        ("coincidence factorization identity", factorization, 5),
        ("sampled exclusion left of a/2 - b", exclusion, 10),
        ("threshold identity and spot values", threshold_identity, 1),
        ("symmetric form identity", form_identity, 10),
        ("coincidence solver and disk property", walsh, 10),
        ("structural suite", structural, 30),
        ("end-to-end search", end_to_end, 60),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let ok = out.passed && in_time;
        failed += usize::from(!ok);
        println!(
            "criterion {:>2}: {} {name}: {} [{:.2}s, limit {limit}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
        );
    }
    println!("acceptance: {} of 10 passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
