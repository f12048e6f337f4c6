//! End-to-end checks of the constructive results on seeded samples.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use inatt_core::analysis::{check_effort_dominance, check_effort_reversals, sign_changes};
use inatt_core::model::{Agent, CostSpec, Task};
use inatt_core::order::default_reward_grid;
use inatt_core::solver::{effort, optimal_signal};
use inatt_core::thresholds::kappa_w;

#[test]
fn constructed_tasks_dominate_with_less_effort_in_batch() {
    let agent = Agent::linear(1.0).unwrap();
    let grid = default_reward_grid(&agent);
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        let report = check_effort_dominance(&agent, &cost, 200, 4242, &grid).unwrap();
        assert!(report.passes(), "{}", report.summary());
        assert!(report.min_gap > 0.0);
    }
}

#[test]
fn effort_is_monotone_in_uncertainty_alone() {
    // Equal difficulty, higher uncertainty: weakly more effort everywhere,
    // strictly wherever the more uncertain task acquires information.
    let agent = Agent::linear(1.0).unwrap();
    let grid = default_reward_grid(&agent);
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        let threshold = kappa_w(&agent, &cost).unwrap();
        for _ in 0..40 {
            let kappa = threshold + rng.random_range(0.05..4.0);
            let lo: f64 = rng.random_range(0.05..0.9);
            let hi = rng.random_range((lo + 0.05).min(1.0)..=1.0);
            let more = Task::new(hi, kappa).unwrap();
            let less = Task::new(lo, kappa).unwrap();
            for &x in &grid {
                let e_more = effort(x, &agent, &more, &cost).unwrap();
                let e_less = effort(x, &agent, &less, &cost).unwrap();
                assert!(e_more >= e_less - 1e-12, "x={x} {more:?} {less:?}");
                let report = optimal_signal(x, &agent, &more, &cost).unwrap();
                if report.informative {
                    assert!(e_more > e_less, "x={x} {more:?} {less:?}");
                }
            }
        }
    }
}

#[test]
fn effort_reversals_change_sign_exactly_once() {
    let agent = Agent::linear(1.0).unwrap();
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        let report = check_effort_reversals(&agent, &cost, 25, 1234, 200.0).unwrap();
        assert!(report.passes(), "{}", report.summary());
    }
}

#[test]
fn reversal_sign_pattern_on_a_fine_linear_grid() {
    // Independent of the search grid: the effort difference between the
    // easier and the harder task is zero, then positive, then negative.
    let agent = Agent::linear(1.0).unwrap();
    let quad = CostSpec::Quadratic;
    let low = Task::new(0.5, 3.0).unwrap();
    let high = Task::new(0.5, 4.0).unwrap();
    let diffs: Vec<f64> = (0..=4000)
        .map(|i| {
            let x = 10.0 * i as f64 / 4000.0;
            effort(x, &agent, &low, &quad).unwrap() - effort(x, &agent, &high, &quad).unwrap()
        })
        .collect();
    assert_eq!(sign_changes(&diffs, 1e-12), 1);
    let first = diffs.iter().find(|d| d.abs() > 1e-12).unwrap();
    assert!(*first > 0.0);
}
