//! Seeded suites for the complexity order: threshold/sweep equivalence,
//! the vector representation, incompleteness, and invariance to the
//! reward-utility family.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use inatt_core::analysis::check_sweep_agreement;
use inatt_core::model::{Agent, CostSpec, Task, UtilityFamily};
use inatt_core::order::{compare, compare_by_sweep, default_reward_grid, vector_utility, Verdict};
use inatt_core::thresholds::kappa_w;

fn agents() -> Vec<Agent> {
    [0.0, 1.0, 2.0]
        .iter()
        .map(|&w| Agent::linear(w).unwrap())
        .collect()
}

#[test]
fn threshold_and_sweep_verdicts_agree_at_scale() {
    // 1002 pairs across two catalog costs and three incentive levels.
    let costs = [CostSpec::Quadratic, CostSpec::Shannon];
    let mut seed = 42;
    for cost in &costs {
        for agent in agents() {
            let grid = default_reward_grid(&agent);
            let report = check_sweep_agreement(&agent, cost, 167, seed, &grid).unwrap();
            assert!(report.passes(), "{}", report.summary());
            seed += 1;
        }
    }
}

#[test]
fn incomparability_witness_for_each_incentive_level() {
    // High uncertainty with low difficulty against low uncertainty with
    // high difficulty is never ranked, provided the low uncertainty sits
    // below the acquisition threshold of the easier task.
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        for agent in agents() {
            // phi_w(kappa_a) = 1/2 > phi_b; with no intrinsic incentive
            // phi_w is identically 1 and any difficulty works.
            let kappa_a = inatt_core::thresholds::phi_w_inverse(&agent, 0.5, &cost)
                .unwrap_or(kappa_w(&agent, &cost).unwrap() + 1.0);
            let a = Task::new(0.9, kappa_a).unwrap();
            let b = Task::new(0.1, kappa_a + 2.0).unwrap();
            let result = compare(&a, &b, &agent, &cost).unwrap();
            assert_eq!(
                result.verdict,
                Verdict::Incomparable,
                "w={} cost={}",
                agent.intrinsic(),
                cost.label()
            );
        }
    }
}

#[test]
fn vector_representation_matches_the_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    for cost in [CostSpec::Quadratic, CostSpec::Shannon] {
        for agent in agents() {
            let threshold = kappa_w(&agent, &cost).unwrap();
            for _ in 0..200 {
                let a = Task::new(
                    rng.random_range(0.05..=1.0),
                    threshold + rng.random_range(0.02..4.0),
                )
                .unwrap();
                let b = Task::new(
                    rng.random_range(0.05..=1.0),
                    threshold + rng.random_range(0.02..4.0),
                )
                .unwrap();
                let va = vector_utility(&a, &agent, &cost).unwrap();
                let vb = vector_utility(&b, &agent, &cost).unwrap();
                let result = compare(&a, &b, &agent, &cost).unwrap();
                assert_eq!(
                    result.b_dominates_a,
                    vb.0 >= va.0 && vb.1 >= va.1,
                    "b>=a mismatch: a={a:?} b={b:?} va={va:?} vb={vb:?}"
                );
                assert_eq!(
                    result.a_dominates_b,
                    va.0 >= vb.0 && va.1 >= vb.1,
                    "a>=b mismatch: a={a:?} b={b:?} va={va:?} vb={vb:?}"
                );
            }
        }
    }
}

#[test]
fn verdicts_do_not_depend_on_the_utility_slope() {
    // The order quantifies over all rewards, so reparametrizing the reward
    // axis cannot change a verdict.
    let quad = CostSpec::Quadratic;
    let mut rng = ChaCha8Rng::seed_from_u64(2718);
    let slopes = [0.5, 1.0, 2.0];
    for _ in 0..60 {
        let a = Task::new(rng.random_range(0.05..=1.0), rng.random_range(0.1..5.0)).unwrap();
        let b = Task::new(rng.random_range(0.05..=1.0), rng.random_range(0.1..5.0)).unwrap();
        let mut verdicts = Vec::new();
        let mut sweep_verdicts = Vec::new();
        for slope in slopes {
            let agent = Agent::new(1.0, 0.0, UtilityFamily::Linear { slope }).unwrap();
            verdicts.push(compare(&a, &b, &agent, &quad).unwrap().verdict);
            let grid = default_reward_grid(&agent);
            sweep_verdicts.push(compare_by_sweep(&a, &b, &agent, &quad, &grid).unwrap().verdict);
        }
        assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{verdicts:?}");
        assert!(
            sweep_verdicts.windows(2).all(|w| w[0] == w[1]),
            "{sweep_verdicts:?}"
        );
    }
}

#[test]
fn more_uncertainty_with_equal_difficulty_is_weakly_more_complex() {
    let quad = CostSpec::Quadratic;
    let agent = Agent::linear(1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(555);
    for _ in 0..100 {
        let kappa = rng.random_range(1.05..5.0);
        let lo = rng.random_range(0.05..0.9);
        let hi = rng.random_range(lo..=1.0);
        let a = Task::new(lo, kappa).unwrap();
        let b = Task::new(hi, kappa).unwrap();
        let result = compare(&a, &b, &agent, &quad).unwrap();
        assert!(result.b_dominates_a, "a={a:?} b={b:?}");
    }
}
