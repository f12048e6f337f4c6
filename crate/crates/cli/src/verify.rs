//! The `verify` subcommand: seeded property suites with one summary line
//! each and a CSV of violations.

use inatt_core::analysis::{
    check_effort_dominance, check_effort_reversals, check_order_properties,
    check_sweep_agreement, Violation,
};
use inatt_core::model::{Agent, CostSpec};
use inatt_core::order::default_reward_grid;
use inatt_core::Result;

use crate::output::Csv;

pub struct VerifyOutcome {
    /// Summary lines, one per suite plus a closing total.
    pub lines: Vec<String>,
    /// `(suite, violation)` pairs across all suites.
    pub violations: Vec<(String, Violation)>,
    pub suites: usize,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations_csv(&self) -> String {
        let mut csv = Csv::new();
        csv.comment("report=verify");
        csv.header(&["suite", "property", "detail"]);
        for (suite, violation) in &self.violations {
            csv.row(&[
                suite.clone(),
                violation.property.to_string(),
                // Commas inside details would split the row.
                format!("\"{}\"", violation.detail.replace('"', "\"\"")),
            ]);
        }
        csv.finish()
    }
}

/// Runs every suite with sizes proportional to `samples`.
///
/// Deterministic for a fixed seed: suite seeds derive from the base seed
/// and a fixed suite index, and evaluation order is fixed.
pub fn run(seed: u64, samples: usize) -> Result<VerifyOutcome> {
    let costs = [CostSpec::Quadratic, CostSpec::Shannon];
    let mut outcome = VerifyOutcome {
        lines: Vec::new(),
        violations: Vec::new(),
        suites: 0,
    };
    let mut suite_index = 0u64;

    // Order properties for (w, w') in {(0,1), (1,2)} per cost.
    for cost in &costs {
        for (w_low, w_high) in [(0.0, 1.0), (1.0, 2.0)] {
            let low = Agent::linear(w_low)?;
            let high = Agent::linear(w_high)?;
            let report =
                check_order_properties(&low, &high, cost, samples, seed + suite_index)?;
            suite_index += 1;
            outcome.suites += 1;
            outcome.lines.push(report.summary());
            let suite = format!("order-properties[w={w_low}->{w_high},{}]", cost.label());
            outcome
                .violations
                .extend(report.violations.into_iter().map(|v| (suite.clone(), v)));
        }
    }

    // Threshold/sweep verdict agreement for w in {0, 1, 2} per cost.
    let pair_share = samples.div_ceil(6);
    for cost in &costs {
        for w in [0.0, 1.0, 2.0] {
            let agent = Agent::linear(w)?;
            let rewards = default_reward_grid(&agent);
            let report =
                check_sweep_agreement(&agent, cost, pair_share, seed + suite_index, &rewards)?;
            suite_index += 1;
            outcome.suites += 1;
            outcome.lines.push(report.summary());
            let suite = format!("sweep-agreement[w={w},{}]", cost.label());
            outcome
                .violations
                .extend(report.violations.into_iter().map(|v| (suite.clone(), v)));
        }
    }

    // Constructed more-complex-but-less-effort tasks per cost.
    let dominance_share = samples.div_ceil(10).max(1);
    for cost in &costs {
        let agent = Agent::linear(1.0)?;
        let rewards = default_reward_grid(&agent);
        let report =
            check_effort_dominance(&agent, cost, dominance_share, seed + suite_index, &rewards)?;
        suite_index += 1;
        outcome.suites += 1;
        outcome.lines.push(report.summary());
        let suite = format!("effort-dominance[{}]", cost.label());
        outcome
            .violations
            .extend(report.violations.into_iter().map(|v| (suite.clone(), v)));
    }

    // Effort reversals along the difficulty dimension per cost.
    let reversal_share = samples.div_ceil(40).max(1);
    for cost in &costs {
        let agent = Agent::linear(1.0)?;
        let report =
            check_effort_reversals(&agent, cost, reversal_share, seed + suite_index, 200.0)?;
        suite_index += 1;
        outcome.suites += 1;
        outcome.lines.push(report.summary());
        let suite = format!("effort-reversal[{}]", cost.label());
        outcome
            .violations
            .extend(report.violations.into_iter().map(|v| (suite.clone(), v)));
    }

    outcome.lines.push(format!(
        "verify seed={seed} samples={samples} suites={}: violations={} => {}",
        outcome.suites,
        outcome.violations.len(),
        if outcome.passed() { "pass" } else { "FAIL" }
    ));
    Ok(outcome)
}
