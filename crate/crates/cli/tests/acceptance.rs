//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test -- --nocapture`). Tolerances and time
//! budgets are pinned here, not configurable.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use inatt_core::analysis::{
    check_effort_dominance, check_effort_reversals, check_order_properties,
    check_sweep_agreement, construct_dominated_effort_task, verify_effort_dominance,
};
use inatt_core::model::{Agent, CostSpec, Task};
use inatt_core::oracle::oracle_solve_at_prior;
use inatt_core::order::default_reward_grid;
use inatt_core::solver::{optimal_cutoff, solve_with_prior};
use inatt_core::thresholds::{kappa_w, phi_w};

fn report(criterion: u8, passed: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} - {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_concavification_figure() {
    let start = Instant::now();
    let quad = CostSpec::Quadratic;

    let cutoff = optimal_cutoff(0.5, 1.0, &quad).unwrap();
    let flat_level = 0.5 * (1.0 - cutoff) - quad.value(cutoff).unwrap();
    let solver_ok = (cutoff - 0.25).abs() <= 1e-9 && (flat_level - 0.5625).abs() <= 1e-9;

    let oracle = oracle_solve_at_prior(0.5, 1.0, &quad, 0.5, 4001).unwrap();
    let flat_oracle = oracle.value - quad.value(0.5).unwrap();
    let oracle_ok =
        (oracle.cutoff - 0.25).abs() <= 2.5e-4 && (flat_oracle - 0.5625).abs() <= 2.5e-4;

    let elapsed = start.elapsed().as_secs_f64();
    report(
        1,
        solver_ok && oracle_ok && elapsed < 1.0,
        &format!(
            "cutoff {cutoff:.12}, flat level {flat_level:.12}, oracle cutoff {:.6}, {elapsed:.3}s",
            oracle.cutoff
        ),
    );
}

#[test]
fn criterion_2_accuracy_polyline() {
    let quad = CostSpec::Quadratic;
    let cutoff = optimal_cutoff(0.5, 1.0, &quad).unwrap();

    let vertices = [(0.0, 1.0), (0.25, 0.75), (0.75, 0.75), (1.0, 1.0)];
    let mut vertex_gap: f64 = 0.0;
    for (prior, expected) in vertices {
        let report = solve_with_prior(0.5, 1.0, &quad, prior).unwrap();
        vertex_gap = vertex_gap.max((report.accuracy - expected).abs());
    }

    let mut grid_gap: f64 = 0.0;
    for i in 0..=100 {
        let prior = i as f64 / 100.0;
        let polyline = prior.max(1.0 - prior).max(0.75);
        let report = solve_with_prior(0.5, 1.0, &quad, prior).unwrap();
        grid_gap = grid_gap.max((report.accuracy - polyline).abs());
    }

    let _ = cutoff;
    report(
        2,
        vertex_gap <= 1e-9 && grid_gap <= 1e-6,
        &format!("vertex gap {vertex_gap:.2e}, grid gap {grid_gap:.2e}"),
    );
}

#[test]
fn criterion_3_quadratic_closed_forms() {
    let quad = CostSpec::Quadratic;
    let mut max_gap: f64 = 0.0;

    // Cutoff against clip((1 - u1/kappa)/2, 0, 1/2) on a 20x20 grid.
    for i in 1..=20 {
        for j in 1..=20 {
            let stake = 0.15 * i as f64;
            let kappa = 0.2 * j as f64;
            let expected = (0.5 * (1.0 - stake / kappa)).clamp(0.0, 0.5);
            let found = optimal_cutoff(stake, kappa, &quad).unwrap();
            max_gap = max_gap.max((found - expected).abs());
        }
    }

    // kappa_w = w and phi_w = max{0, 1 - w/kappa}.
    for i in 0..=20 {
        let w = 0.2 * i as f64;
        let agent = Agent::linear(w).unwrap();
        max_gap = max_gap.max((kappa_w(&agent, &quad).unwrap() - w).abs());
    }
    let unit = Agent::linear(1.0).unwrap();
    for j in 1..=20 {
        let kappa = 0.2 * j as f64;
        let expected = (1.0 - 1.0 / kappa).max(0.0);
        let found = phi_w(&unit, kappa, &quad).unwrap();
        max_gap = max_gap.max((found - expected).abs());
    }
    // The kink at kappa_w = 1: flat zero below, strictly positive above.
    let below = phi_w(&unit, 1.0, &quad).unwrap();
    let above = phi_w(&unit, 1.0 + 1e-6, &quad).unwrap();
    let kink_ok = below == 0.0 && above > 0.0;

    report(
        3,
        max_gap <= 1e-10 && kink_ok,
        &format!("max closed-form gap {max_gap:.2e}, kink at kappa_w reproduced: {kink_ok}"),
    );
}

#[test]
fn criterion_4_order_oracle_equivalence() {
    let start = Instant::now();
    let mut pairs = 0;
    let mut disagreements = 0;
    let mut seed = 42;
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        for w in [0.0, 1.0, 2.0] {
            let agent = Agent::linear(w).unwrap();
            let rewards = default_reward_grid(&agent);
            assert_eq!(rewards.len(), 41);
            let suite = check_sweep_agreement(&agent, &cost, 167, seed, &rewards).unwrap();
            pairs += suite.samples;
            disagreements += suite.violations.len();
            seed += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        4,
        pairs >= 1000 && disagreements == 0 && elapsed < 10.0,
        &format!("{pairs} pairs, {disagreements} disagreements, {elapsed:.3}s"),
    );
}

#[test]
fn criterion_5_order_property_suite() {
    let start = Instant::now();
    let mut all_pass = true;
    let mut witnesses = 0;
    let mut lines = Vec::new();
    let mut seed = 42;
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        for (w_low, w_high) in [(0.0, 1.0), (1.0, 2.0)] {
            let low = Agent::linear(w_low).unwrap();
            let high = Agent::linear(w_high).unwrap();
            let suite = check_order_properties(&low, &high, &cost, 1000, seed).unwrap();
            all_pass &= suite.passes();
            witnesses += suite.incomparable_witnesses;
            lines.push(suite.summary());
            seed += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    for line in &lines {
        println!("  {line}");
    }
    report(
        5,
        all_pass && witnesses >= 1 && elapsed < 10.0,
        &format!("4 suites x 1000 triples, {witnesses} incomparable witnesses, {elapsed:.3}s"),
    );
}

#[test]
fn criterion_6_more_complex_less_effort() {
    let agent = Agent::linear(1.0).unwrap();
    let rewards = default_reward_grid(&agent);
    let mut cases = 0;
    let mut failures = 0;
    let mut min_margin = f64::INFINITY;
    for (cost, seed) in [(CostSpec::Quadratic, 42), (CostSpec::Shannon, 43)] {
        let suite = check_effort_dominance(&agent, &cost, 100, seed, &rewards).unwrap();
        cases += suite.samples;
        failures += suite.violations.len();
        min_margin = min_margin.min(suite.min_gap);
    }

    // The worked instance: (0.75, 2) -> (0.5, 2.375) under quadratic cost.
    let source = Task::new(0.75, 2.0).unwrap();
    let built = construct_dominated_effort_task(&source, &agent, &CostSpec::Quadratic).unwrap();
    let instance_ok = (built.phi() - 0.5).abs() <= 1e-9 && (built.kappa() - 2.375).abs() <= 1e-8;
    let outcome =
        verify_effort_dominance(&source, &built, &agent, &CostSpec::Quadratic, &rewards).unwrap();
    let certified = outcome.certificate().is_some();

    report(
        6,
        cases == 200 && failures == 0 && min_margin > 0.0 && instance_ok && certified,
        &format!(
            "{cases} constructions, {failures} failures, min margin {min_margin:.3e}, \
             worked instance ({:.3}, {:.3})",
            built.phi(),
            built.kappa()
        ),
    );
}

#[test]
fn criterion_7_effort_reversal_witnesses() {
    let agent = Agent::linear(1.0).unwrap();
    let mut cases = 0;
    let mut failures = 0;
    for (cost, seed) in [(CostSpec::Quadratic, 42), (CostSpec::Shannon, 43)] {
        let suite = check_effort_reversals(&agent, &cost, 25, seed, 200.0).unwrap();
        cases += suite.samples;
        failures += suite.violations.len();
    }
    report(
        7,
        cases == 50 && failures == 0,
        &format!("{cases} configurations, {failures} failures (witness + single sign change)"),
    );
}

fn run_to_file(args: &[&str], out: &Path) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_inatt"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("INATT_CONFIG")
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "{args:?}: {output:?}");
    std::fs::read(out).unwrap()
}

fn run_stdout(args: &[&str]) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_inatt"))
        .args(args)
        .env_remove("INATT_CONFIG")
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "{args:?}: {output:?}");
    output.stdout
}

#[test]
fn criterion_8_byte_identical_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("data.csv");
    let mut all_equal = true;

    for figure in ["1", "2", "3", "4", "5"] {
        let first = run_to_file(&["--threads", "1", "figure", figure], &out);
        let second = run_to_file(&["--threads", "1", "figure", figure], &out);
        let threaded = run_to_file(&["--threads", "8", "figure", figure], &out);
        all_equal &= first == second && first == threaded;
    }

    let verify_once = run_stdout(&["--threads", "1", "verify", "--seed", "42", "--samples", "400"]);
    let verify_again = run_stdout(&["--threads", "1", "verify", "--seed", "42", "--samples", "400"]);
    let verify_threaded =
        run_stdout(&["--threads", "8", "verify", "--seed", "42", "--samples", "400"]);
    all_equal &= verify_once == verify_again && verify_once == verify_threaded;

    report(
        8,
        all_equal,
        "figures 1-5 and verify byte-identical across reruns and 1 vs 8 threads",
    );
}
