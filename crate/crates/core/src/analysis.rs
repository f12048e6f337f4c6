//! Executable forms of the constructive results and the seeded property
//! harness for the complexity order.
//!
//! The centerpiece is the more-complex-but-less-effort construction: for
//! any task whose uncertainty exceeds the acquisition threshold, lowering
//! the uncertainty to that threshold and raising the difficulty by a
//! calibrated amount yields a strictly more complex task that costs
//! strictly less effort at every reward. The sweep verifier, not the
//! formula, is the arbiter of each constructed instance.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::geometric;
use crate::model::{canonical_prior, Agent, CostSpec, Task};
use crate::order::{compare, compare_by_sweep, Verdict};
use crate::solver::effort;
use crate::thresholds::{kappa_w, phi_w, phi_w_inverse};

/// Margin below which an effort difference counts as zero.
const EFFORT_SIGN_TOL: f64 = 1e-12;

/// Evidence that `constructed` is strictly more complex than `source` yet
/// costs strictly less effort at every sampled reward.
#[derive(Debug, Clone)]
pub struct DominanceCertificate {
    pub source: Task,
    pub constructed: Task,
    /// Uncertainty-driven effort premium between the two priors,
    /// `kappa * (c(p') - c(p))`.
    pub epsilon: f64,
    pub rewards: Vec<f64>,
    /// `effort(source) - effort(constructed)` per reward; all positive.
    pub gaps: Vec<f64>,
    pub verdict: Verdict,
    pub min_gap: f64,
}

/// Why a dominance check failed, with the offending grid points.
#[derive(Debug, Clone)]
pub struct DominanceFailure {
    pub verdict: Verdict,
    pub reason: String,
    /// `(reward, gap)` pairs where the effort gap was not strictly positive.
    pub bad_points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub enum DominanceOutcome {
    Certified(DominanceCertificate),
    Failed(DominanceFailure),
}

impl DominanceOutcome {
    pub fn certificate(&self) -> Option<&DominanceCertificate> {
        match self {
            DominanceOutcome::Certified(c) => Some(c),
            DominanceOutcome::Failed(_) => None,
        }
    }
}

/// Builds the more-complex-but-less-effort task for `task = (phi, kappa)`:
/// `phi' = phi_w(kappa)` and `kappa' = kappa + eps / (c(0) - c(1/2))` with
/// `eps = kappa * (c(p') - c(p))`.
///
/// Requires a non-trivial task with `phi > phi_w(kappa)`, i.e. one against
/// which information is acquired already at the lowest reward.
pub fn construct_dominated_effort_task(
    task: &Task,
    agent: &Agent,
    cost: &CostSpec,
) -> Result<Task> {
    let threshold = kappa_w(agent, cost)?;
    if task.kappa() <= threshold {
        return Err(Error::Precondition(format!(
            "task is trivial: kappa {} <= kappa_w {threshold}",
            task.kappa()
        )));
    }
    let phi_floor = phi_w(agent, task.kappa(), cost)?;
    if task.phi() <= phi_floor {
        return Err(Error::Precondition(format!(
            "phi {} <= phi_w(kappa) = {phi_floor}: no information is acquired at the \
             lowest reward",
            task.phi()
        )));
    }

    let prior = canonical_prior(task.phi())?;
    let new_prior = canonical_prior(phi_floor)?;
    let epsilon = task.kappa() * (cost.value(new_prior)? - cost.value(prior)?);
    let spread = cost.value(0.0)? - cost.value(0.5)?;
    let new_kappa = task.kappa() + epsilon / spread;
    Task::new(phi_floor, new_kappa)
}

/// Checks that `b` is strictly more complex than `a` and costs strictly
/// less effort at every reward of the grid.
pub fn verify_effort_dominance(
    a: &Task,
    b: &Task,
    agent: &Agent,
    cost: &CostSpec,
    rewards: &[f64],
) -> Result<DominanceOutcome> {
    if rewards.is_empty() {
        return Err(Error::Domain("reward grid is empty".into()));
    }
    let comparison = compare(a, b, agent, cost)?;

    let mut gaps = Vec::with_capacity(rewards.len());
    let mut bad_points = Vec::new();
    let mut min_gap = f64::INFINITY;
    for &x in rewards {
        let gap = effort(x, agent, a, cost)? - effort(x, agent, b, cost)?;
        if gap <= 0.0 {
            bad_points.push((x, gap));
        }
        min_gap = min_gap.min(gap);
        gaps.push(gap);
    }

    if comparison.verdict != Verdict::MoreComplex {
        return Ok(DominanceOutcome::Failed(DominanceFailure {
            verdict: comparison.verdict,
            reason: format!(
                "comparison verdict is {}, not more_complex",
                comparison.verdict
            ),
            bad_points,
        }));
    }
    if !bad_points.is_empty() {
        return Ok(DominanceOutcome::Failed(DominanceFailure {
            verdict: comparison.verdict,
            reason: format!(
                "effort gap not strictly positive at {} of {} rewards",
                bad_points.len(),
                rewards.len()
            ),
            bad_points,
        }));
    }

    let prior_a = canonical_prior(a.phi())?;
    let prior_b = canonical_prior(b.phi())?;
    let epsilon = a.kappa() * (cost.value(prior_b)? - cost.value(prior_a)?);
    Ok(DominanceOutcome::Certified(DominanceCertificate {
        source: *a,
        constructed: *b,
        epsilon,
        rewards: rewards.to_vec(),
        gaps,
        verdict: comparison.verdict,
        min_gap,
    }))
}

/// Search grid for effort reversals: geometric in the reward offset,
/// 64 points per decade over the last four decades below `bound`.
pub fn reversal_search_grid(agent: &Agent, bound: f64) -> Vec<f64> {
    let x0 = agent.lowest_reward();
    let span = bound - x0;
    if span <= 0.0 {
        return Vec::new();
    }
    geometric(span * 1e-4, span, 4 * 64 + 1)
        .into_iter()
        .map(|offset| x0 + offset)
        .collect()
}

/// Finds rewards `x < x'` at which the effort ranking of `(phi, kappa)`
/// and `(phi, kappa2)` flips: the easier task costs more at `x` and less
/// at `x'`.
///
/// Requires `kappa2 > kappa > phi_w_inverse(phi)`, so that neither task
/// acquires information at the lowest reward.
pub fn find_effort_reversal_witness(
    phi: f64,
    kappa: f64,
    kappa2: f64,
    agent: &Agent,
    cost: &CostSpec,
    search_bound: f64,
) -> Result<(f64, f64)> {
    let kappa_phi = phi_w_inverse(agent, phi, cost)?;
    if kappa <= kappa_phi {
        return Err(Error::Precondition(format!(
            "kappa {kappa} must exceed phi_w_inverse({phi}) = {kappa_phi}"
        )));
    }
    if kappa2 <= kappa {
        return Err(Error::Precondition(format!(
            "kappa2 {kappa2} must exceed kappa {kappa}"
        )));
    }
    let low_task = Task::new(phi, kappa)?;
    let high_task = Task::new(phi, kappa2)?;
    let grid = reversal_search_grid(agent, search_bound);
    if grid.is_empty() {
        return Err(Error::Domain(format!(
            "search bound {search_bound} is not above the lowest reward {}",
            agent.lowest_reward()
        )));
    }

    let mut first: Option<f64> = None;
    for &x in &grid {
        let diff = effort(x, agent, &low_task, cost)? - effort(x, agent, &high_task, cost)?;
        match first {
            None => {
                if diff > EFFORT_SIGN_TOL {
                    first = Some(x);
                }
            }
            Some(x_low) => {
                if diff < -EFFORT_SIGN_TOL {
                    return Ok((x_low, x));
                }
            }
        }
    }
    Err(Error::SearchFailure(format!(
        "no effort reversal found on {} rewards in [{}, {search_bound}]",
        grid.len(),
        grid[0],
    )))
}

/// One recorded property violation, with its offending tuple.
#[derive(Debug, Clone)]
pub struct Violation {
    pub property: &'static str,
    pub detail: String,
}

fn fmt_task(task: &Task) -> String {
    format!("(phi={}, kappa={})", task.phi(), task.kappa())
}

/// Tally of the seeded order-property harness.
#[derive(Debug, Clone)]
pub struct OrderPropertyReport {
    pub w_low: f64,
    pub w_high: f64,
    pub cost_label: String,
    pub samples: usize,
    pub seed: u64,
    pub incomparable_witnesses: usize,
    pub transitivity_violations: usize,
    pub inclusion_violations: usize,
    pub strict_reversal_violations: usize,
    pub triviality_nesting_violations: usize,
    pub kappa_necessity_violations: usize,
    pub violations: Vec<Violation>,
}

impl OrderPropertyReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty() && (self.samples == 0 || self.incomparable_witnesses >= 1)
    }

    pub fn summary(&self) -> String {
        format!(
            "order-properties w={}->{} cost={} samples={} seed={}: transitivity={} \
             inclusion={} strict_reversal={} triviality_nesting={} kappa_necessity={} \
             incomparable_witnesses={} => {}",
            self.w_low,
            self.w_high,
            self.cost_label,
            self.samples,
            self.seed,
            self.transitivity_violations,
            self.inclusion_violations,
            self.strict_reversal_violations,
            self.triviality_nesting_violations,
            self.kappa_necessity_violations,
            self.incomparable_witnesses,
            if self.passes() { "pass" } else { "FAIL" }
        )
    }
}

fn sample_task(rng: &mut ChaCha8Rng, kappa_hi: f64) -> Task {
    let phi = rng.random_range(0.05..=1.0);
    let kappa = rng.random_range(0.02..kappa_hi);
    Task::new(phi, kappa).expect("sampled parameters are in range")
}

/// Seeded harness for transitivity, incompleteness, the inclusion of the
/// order under stronger incentives, no strict reversal, triviality
/// nesting, and the necessity of higher difficulty.
///
/// Violations are recorded with their offending tuples, never raised.
pub fn check_order_properties(
    agent_low: &Agent,
    agent_high: &Agent,
    cost: &CostSpec,
    sample_size: usize,
    seed: u64,
) -> Result<OrderPropertyReport> {
    let (w_low, w_high) = (agent_low.intrinsic(), agent_high.intrinsic());
    if w_high <= w_low {
        return Err(Error::Precondition(format!(
            "agent pair must satisfy w_high > w_low, got {w_high} <= {w_low}"
        )));
    }
    let mut report = OrderPropertyReport {
        w_low,
        w_high,
        cost_label: cost.label(),
        samples: sample_size,
        seed,
        incomparable_witnesses: 0,
        transitivity_violations: 0,
        inclusion_violations: 0,
        strict_reversal_violations: 0,
        triviality_nesting_violations: 0,
        kappa_necessity_violations: 0,
        violations: Vec::new(),
    };

    let threshold_low = kappa_w(agent_low, cost)?;
    let threshold_high = kappa_w(agent_high, cost)?;
    // Sample both sides of the larger triviality threshold.
    let kappa_hi = threshold_low.max(threshold_high).max(1.0) + 4.0;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_size {
        let a = sample_task(&mut rng, kappa_hi);
        let b = sample_task(&mut rng, kappa_hi);
        let c = sample_task(&mut rng, kappa_hi);

        let ab_low = compare(&a, &b, agent_low, cost)?;
        let ab_high = compare(&a, &b, agent_high, cost)?;

        if ab_low.verdict == Verdict::Incomparable {
            report.incomparable_witnesses += 1;
        }

        // Transitivity under both incentive levels: b >= a and c >= b must
        // give c >= a.
        for (agent, tag) in [(agent_low, "w_low"), (agent_high, "w_high")] {
            let ab = compare(&a, &b, agent, cost)?;
            let bc = compare(&b, &c, agent, cost)?;
            let ac = compare(&a, &c, agent, cost)?;
            if ab.b_dominates_a && bc.b_dominates_a && !ac.b_dominates_a {
                report.transitivity_violations += 1;
                report.violations.push(Violation {
                    property: "transitivity",
                    detail: format!(
                        "{tag}: {} >= {} and {} >= {} but not {} >= {}",
                        fmt_task(&b),
                        fmt_task(&a),
                        fmt_task(&c),
                        fmt_task(&b),
                        fmt_task(&c),
                        fmt_task(&a)
                    ),
                });
            }
        }

        // Inclusion: any weak relation under w_low persists under w_high.
        if ab_low.b_dominates_a && !ab_high.b_dominates_a {
            report.inclusion_violations += 1;
            report.violations.push(Violation {
                property: "inclusion",
                detail: format!(
                    "{} >= {} under w={w_low} but not under w={w_high}",
                    fmt_task(&b),
                    fmt_task(&a)
                ),
            });
        }
        if ab_low.a_dominates_b && !ab_high.a_dominates_b {
            report.inclusion_violations += 1;
            report.violations.push(Violation {
                property: "inclusion",
                detail: format!(
                    "{} >= {} under w={w_low} but not under w={w_high}",
                    fmt_task(&a),
                    fmt_task(&b)
                ),
            });
        }

        // No strict reversal between the two incentive levels.
        let strict_low = ab_low.verdict == Verdict::MoreComplex;
        let reversed_high = ab_high.verdict == Verdict::LessComplex;
        if strict_low && reversed_high {
            report.strict_reversal_violations += 1;
            report.violations.push(Violation {
                property: "strict_reversal",
                detail: format!(
                    "{} > {} under w={w_low} but {} > {} under w={w_high}",
                    fmt_task(&b),
                    fmt_task(&a),
                    fmt_task(&a),
                    fmt_task(&b)
                ),
            });
        }
        if ab_low.verdict == Verdict::LessComplex && ab_high.verdict == Verdict::MoreComplex {
            report.strict_reversal_violations += 1;
            report.violations.push(Violation {
                property: "strict_reversal",
                detail: format!(
                    "{} > {} under w={w_low} but {} > {} under w={w_high}",
                    fmt_task(&a),
                    fmt_task(&b),
                    fmt_task(&b),
                    fmt_task(&a)
                ),
            });
        }

        // Triviality nesting: non-trivial under w_high implies non-trivial
        // under w_low.
        if a.kappa() > threshold_high && a.kappa() <= threshold_low {
            report.triviality_nesting_violations += 1;
            report.violations.push(Violation {
                property: "triviality_nesting",
                detail: format!(
                    "{} non-trivial under w={w_high} but trivial under w={w_low}",
                    fmt_task(&a)
                ),
            });
        }

        // Necessity of difficulty for dominance over a non-trivial task.
        if ab_low.b_dominates_a && a.kappa() > threshold_low && b.kappa() < a.kappa() {
            report.kappa_necessity_violations += 1;
            report.violations.push(Violation {
                property: "kappa_necessity",
                detail: format!(
                    "{} >= {} under w={w_low} with lower difficulty",
                    fmt_task(&b),
                    fmt_task(&a)
                ),
            });
        }
    }
    Ok(report)
}

/// Tally for the threshold-vs-sweep comparison equivalence.
#[derive(Debug, Clone)]
pub struct SweepAgreementReport {
    pub w: f64,
    pub cost_label: String,
    pub samples: usize,
    pub seed: u64,
    pub violations: Vec<Violation>,
}

impl SweepAgreementReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "sweep-agreement w={} cost={} samples={} seed={}: disagreements={} => {}",
            self.w,
            self.cost_label,
            self.samples,
            self.seed,
            self.violations.len(),
            if self.passes() { "pass" } else { "FAIL" }
        )
    }
}

fn sample_nontrivial_task(rng: &mut ChaCha8Rng, threshold: f64) -> Task {
    // Uncertainty bounded away from 0 and difficulty within 4 units of the
    // triviality threshold keep every strictness witness inside the
    // default reward grid.
    let phi = rng.random_range(0.1..=1.0);
    let kappa = threshold + rng.random_range(0.02..4.02);
    Task::new(phi, kappa).expect("sampled parameters are in range")
}

/// Seeded check that the threshold characterization and the accuracy sweep
/// produce identical verdicts on random non-trivial pairs.
pub fn check_sweep_agreement(
    agent: &Agent,
    cost: &CostSpec,
    samples: usize,
    seed: u64,
    rewards: &[f64],
) -> Result<SweepAgreementReport> {
    let mut report = SweepAgreementReport {
        w: agent.intrinsic(),
        cost_label: cost.label(),
        samples,
        seed,
        violations: Vec::new(),
    };
    let threshold = kappa_w(agent, cost)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = sample_nontrivial_task(&mut rng, threshold);
        let b = sample_nontrivial_task(&mut rng, threshold);
        let by_thresholds = compare(&a, &b, agent, cost)?;
        let by_sweep = compare_by_sweep(&a, &b, agent, cost, rewards)?;
        if by_thresholds.verdict != by_sweep.verdict {
            report.violations.push(Violation {
                property: "sweep_agreement",
                detail: format!(
                    "a={} b={}: thresholds say {}, sweep says {}",
                    fmt_task(&a),
                    fmt_task(&b),
                    by_thresholds.verdict,
                    by_sweep.verdict
                ),
            });
        }
    }
    Ok(report)
}

/// Tally for the batch more-complex-but-less-effort check.
#[derive(Debug, Clone)]
pub struct EffortDominanceReport {
    pub w: f64,
    pub cost_label: String,
    pub samples: usize,
    pub seed: u64,
    /// Smallest effort gap certified across all cases.
    pub min_gap: f64,
    pub violations: Vec<Violation>,
}

impl EffortDominanceReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "effort-dominance w={} cost={} samples={} seed={}: failures={} min_gap={:e} => {}",
            self.w,
            self.cost_label,
            self.samples,
            self.seed,
            self.violations.len(),
            self.min_gap,
            if self.passes() { "pass" } else { "FAIL" }
        )
    }
}

/// Samples eligible tasks, runs the construction, and verifies strict
/// complexity dominance with strictly smaller effort on the grid.
pub fn check_effort_dominance(
    agent: &Agent,
    cost: &CostSpec,
    samples: usize,
    seed: u64,
    rewards: &[f64],
) -> Result<EffortDominanceReport> {
    let mut report = EffortDominanceReport {
        w: agent.intrinsic(),
        cost_label: cost.label(),
        samples,
        seed,
        min_gap: f64::INFINITY,
        violations: Vec::new(),
    };
    let threshold = kappa_w(agent, cost)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        // Eligible task: non-trivial with phi strictly above phi_w(kappa).
        let kappa = threshold + rng.random_range(0.05..4.05);
        let floor = phi_w(agent, kappa, cost)?;
        if floor >= 0.999 {
            report.violations.push(Violation {
                property: "effort_dominance",
                detail: format!(
                    "phi_w({kappa}) = {floor}: no eligible uncertainty exists for w={}",
                    agent.intrinsic()
                ),
            });
            continue;
        }
        let phi = floor + (1.0 - floor) * rng.random_range(0.05..=0.95);
        let task = Task::new(phi, kappa)?;

        let constructed = construct_dominated_effort_task(&task, agent, cost)?;
        match verify_effort_dominance(&task, &constructed, agent, cost, rewards)? {
            DominanceOutcome::Certified(cert) => {
                report.min_gap = report.min_gap.min(cert.min_gap);
            }
            DominanceOutcome::Failed(failure) => {
                report.violations.push(Violation {
                    property: "effort_dominance",
                    detail: format!(
                        "source={} constructed={}: {}",
                        fmt_task(&task),
                        fmt_task(&constructed),
                        failure.reason
                    ),
                });
            }
        }
    }
    Ok(report)
}

/// Tally for the batch effort-reversal check.
#[derive(Debug, Clone)]
pub struct EffortReversalReport {
    pub w: f64,
    pub cost_label: String,
    pub samples: usize,
    pub seed: u64,
    pub violations: Vec<Violation>,
}

impl EffortReversalReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "effort-reversal w={} cost={} samples={} seed={}: failures={} => {}",
            self.w,
            self.cost_label,
            self.samples,
            self.seed,
            self.violations.len(),
            if self.passes() { "pass" } else { "FAIL" }
        )
    }
}

/// Counts sign changes of `diffs` along the grid, treating magnitudes
/// below `tol` as zero.
pub fn sign_changes(diffs: &[f64], tol: f64) -> usize {
    let mut flips = 0;
    let mut last = 0i8;
    for &d in diffs {
        let sign = if d > tol {
            1
        } else if d < -tol {
            -1
        } else {
            0
        };
        if sign != 0 {
            if last != 0 && sign != last {
                flips += 1;
            }
            last = sign;
        }
    }
    flips
}

/// Samples difficulty pairs above the acquisition bound for a common
/// uncertainty, finds a reversal witness for each, and checks that the
/// effort difference changes sign exactly once along the search grid.
pub fn check_effort_reversals(
    agent: &Agent,
    cost: &CostSpec,
    samples: usize,
    seed: u64,
    search_bound: f64,
) -> Result<EffortReversalReport> {
    let mut report = EffortReversalReport {
        w: agent.intrinsic(),
        cost_label: cost.label(),
        samples,
        seed,
        violations: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = reversal_search_grid(agent, search_bound);
    for _ in 0..samples {
        let phi = rng.random_range(0.1..=0.9);
        let kappa_floor = phi_w_inverse(agent, phi, cost)?;
        let kappa = kappa_floor + rng.random_range(0.1..2.1);
        let kappa2 = kappa + rng.random_range(0.1..2.1);

        match find_effort_reversal_witness(phi, kappa, kappa2, agent, cost, search_bound) {
            Ok((x_low, x_high)) => {
                let low_task = Task::new(phi, kappa)?;
                let high_task = Task::new(phi, kappa2)?;
                debug_assert!(x_low < x_high);
                let mut diffs = Vec::with_capacity(grid.len());
                for &x in &grid {
                    diffs.push(
                        effort(x, agent, &low_task, cost)? - effort(x, agent, &high_task, cost)?,
                    );
                }
                let flips = sign_changes(&diffs, EFFORT_SIGN_TOL);
                if flips != 1 {
                    report.violations.push(Violation {
                        property: "effort_reversal",
                        detail: format!(
                            "phi={phi} kappa={kappa} kappa2={kappa2}: {flips} sign changes, \
                             expected exactly 1"
                        ),
                    });
                }
            }
            Err(err) => {
                report.violations.push(Violation {
                    property: "effort_reversal",
                    detail: format!("phi={phi} kappa={kappa} kappa2={kappa2}: {err}"),
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::default_reward_grid;

    fn unit_agent() -> Agent {
        Agent::linear(1.0).unwrap()
    }

    fn task(phi: f64, kappa: f64) -> Task {
        Task::new(phi, kappa).unwrap()
    }

    #[test]
    fn construction_on_the_worked_instance() {
        let agent = unit_agent();
        let quad = CostSpec::Quadratic;
        let built = construct_dominated_effort_task(&task(0.75, 2.0), &agent, &quad).unwrap();
        // phi' = phi_w(2) = 1/2; eps = 2 (c(1/4) - c(3/8)) = 3/32;
        // kappa' = 2 + eps / (c(0) - c(1/2)) = 2 + (3/32) / (1/4).
        assert!((built.phi() - 0.5).abs() < 1e-9);
        assert!((built.kappa() - 2.375).abs() < 1e-8);

        let built = construct_dominated_effort_task(&task(1.0, 2.0), &agent, &quad).unwrap();
        assert!((built.phi() - 0.5).abs() < 1e-9);
        assert!((built.kappa() - 2.5).abs() < 1e-8);
    }

    #[test]
    fn construction_requires_acquisition_at_the_lowest_reward() {
        let agent = unit_agent();
        let quad = CostSpec::Quadratic;
        assert!(matches!(
            construct_dominated_effort_task(&task(0.3, 2.0), &agent, &quad),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            construct_dominated_effort_task(&task(0.9, 0.5), &agent, &quad),
            Err(Error::Precondition(_))
        ));
        // With no intrinsic incentive the hypothesis is unsatisfiable.
        let lazy = Agent::linear(0.0).unwrap();
        assert!(construct_dominated_effort_task(&task(0.9, 2.0), &lazy, &quad).is_err());
    }

    #[test]
    fn dominance_certificate_on_the_worked_instance() {
        let agent = unit_agent();
        let quad = CostSpec::Quadratic;
        let source = task(0.75, 2.0);
        let built = construct_dominated_effort_task(&source, &agent, &quad).unwrap();
        let grid = default_reward_grid(&agent);
        let outcome = verify_effort_dominance(&source, &built, &agent, &quad, &grid).unwrap();
        let cert = outcome.certificate().expect("construction must certify");
        assert_eq!(cert.verdict, Verdict::MoreComplex);
        assert!(cert.min_gap > 0.0);
        assert!((cert.epsilon - 0.09375).abs() < 1e-9);
        assert_eq!(cert.gaps.len(), grid.len());

        // Frozen margins at two stakes: at u1 = 1 the constructed task is
        // still passive (gap 3/32 - 0); at u1 = 10 both are at the corner
        // (gap 15/32 - 2.375 * 3/16).
        let eff_src = effort(0.0, &agent, &source, &quad).unwrap();
        let eff_new = effort(0.0, &agent, &built, &quad).unwrap();
        assert!((eff_src - 0.09375).abs() < 1e-9);
        assert_eq!(eff_new, 0.0);
        let eff_src = effort(9.0, &agent, &source, &quad).unwrap();
        let eff_new = effort(9.0, &agent, &built, &quad).unwrap();
        assert!((eff_src - 0.46875).abs() < 1e-9);
        assert!((eff_new - 0.4453125).abs() < 1e-8);
    }

    #[test]
    fn dominance_fails_without_strictness() {
        let agent = unit_agent();
        let quad = CostSpec::Quadratic;
        let a = task(0.75, 2.0);
        let grid = default_reward_grid(&agent);
        let same = verify_effort_dominance(&a, &a, &agent, &quad, &grid).unwrap();
        assert!(same.certificate().is_none());

        // Same uncertainty, higher difficulty: more effort once both are
        // fully informative, so dominance fails at large rewards.
        let a = task(1.0, 2.0);
        let b = task(1.0, 12.0);
        let outcome = verify_effort_dominance(&a, &b, &agent, &quad, &grid).unwrap();
        match outcome {
            DominanceOutcome::Failed(failure) => {
                assert_eq!(failure.verdict, Verdict::MoreComplex);
                assert!(!failure.bad_points.is_empty());
            }
            DominanceOutcome::Certified(_) => panic!("dominance must fail at large rewards"),
        }
        assert!(verify_effort_dominance(&a, &b, &agent, &quad, &[]).is_err());
    }

    #[test]
    fn reversal_witness_on_the_worked_instance() {
        let agent = unit_agent();
        let quad = CostSpec::Quadratic;
        // Frozen effort values behind the witness: at u1 = 1.75 only the
        // easier task acquires; at u1 = 8 both are at the corner.
        let low = task(0.5, 3.0);
        let high = task(0.5, 4.0);
        assert!((effort(0.75, &agent, &low, &quad).unwrap() - 39.0 / 576.0).abs() < 1e-9);
        assert_eq!(effort(0.75, &agent, &high, &quad).unwrap(), 0.0);
        assert!((effort(7.0, &agent, &low, &quad).unwrap() - 0.5625).abs() < 1e-9);
        assert!((effort(7.0, &agent, &high, &quad).unwrap() - 0.75).abs() < 1e-9);

        let (x_low, x_high) =
            find_effort_reversal_witness(0.5, 3.0, 4.0, &agent, &quad, 100.0).unwrap();
        assert!(x_low < x_high);
        let d_low = effort(x_low, &agent, &low, &quad).unwrap()
            - effort(x_low, &agent, &high, &quad).unwrap();
        let d_high = effort(x_high, &agent, &low, &quad).unwrap()
            - effort(x_high, &agent, &high, &quad).unwrap();
        assert!(d_low > 0.0);
        assert!(d_high < 0.0);
    }

    #[test]
    fn reversal_requires_difficulty_above_the_acquisition_bound() {
        let agent = unit_agent();
        // kappa_phi = phi_w_inverse(0.5) = 2 for the quadratic catalog entry.
        assert!(matches!(
            find_effort_reversal_witness(0.5, 1.5, 4.0, &agent, &CostSpec::Quadratic, 100.0),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            find_effort_reversal_witness(0.5, 3.0, 2.5, &agent, &CostSpec::Quadratic, 100.0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reversal_search_reports_an_exhausted_bound() {
        // The flip lives beyond a bound this tight.
        let agent = unit_agent();
        assert!(matches!(
            find_effort_reversal_witness(0.5, 3.0, 4.0, &agent, &CostSpec::Quadratic, 0.01),
            Err(Error::SearchFailure(_))
        ));
    }

    #[test]
    fn reversal_witness_exists_for_entropic_costs() {
        let agent = unit_agent();
        let shannon = CostSpec::Shannon;
        let bound = phi_w_inverse(&agent, 0.5, &shannon).unwrap();
        let (x_low, x_high) = find_effort_reversal_witness(
            0.5,
            bound + 0.6,
            bound + 1.1,
            &agent,
            &shannon,
            200.0,
        )
        .unwrap();
        assert!(x_low < x_high);
    }

    #[test]
    fn sign_change_counting() {
        assert_eq!(sign_changes(&[0.0, 0.0, 1.0, 2.0, -1.0], 1e-12), 1);
        assert_eq!(sign_changes(&[0.0, 1.0, 0.0, -1.0, 1.0], 1e-12), 2);
        assert_eq!(sign_changes(&[0.0, 0.0], 1e-12), 0);
        assert_eq!(sign_changes(&[1e-15, -1e-15], 1e-12), 0);
        assert_eq!(sign_changes(&[], 1e-12), 0);
    }

    #[test]
    fn order_property_harness_passes_on_seeded_runs() {
        let one = unit_agent();
        let two = Agent::linear(2.0).unwrap();
        let report =
            check_order_properties(&one, &two, &CostSpec::Quadratic, 1000, 42).unwrap();
        assert!(report.passes(), "{}", report.summary());
        assert!(report.incomparable_witnesses >= 1);

        let zero = Agent::linear(0.0).unwrap();
        let report = check_order_properties(&zero, &one, &CostSpec::Shannon, 1000, 42).unwrap();
        assert!(report.passes(), "{}", report.summary());

        let report = check_order_properties(&one, &two, &CostSpec::Quadratic, 0, 42).unwrap();
        assert!(report.passes());
        assert_eq!(report.samples, 0);

        assert!(check_order_properties(&two, &one, &CostSpec::Quadratic, 10, 42).is_err());
    }

    #[test]
    fn sweep_agreement_on_a_seeded_run() {
        let agent = unit_agent();
        let grid = default_reward_grid(&agent);
        let report =
            check_sweep_agreement(&agent, &CostSpec::Quadratic, 200, 42, &grid).unwrap();
        assert!(report.passes(), "{}", report.summary());
    }

    #[test]
    fn effort_dominance_batch_on_a_seeded_run() {
        let agent = unit_agent();
        let grid = default_reward_grid(&agent);
        let report =
            check_effort_dominance(&agent, &CostSpec::Quadratic, 50, 42, &grid).unwrap();
        assert!(report.passes(), "{}", report.summary());
        assert!(report.min_gap > 0.0);
    }

    #[test]
    fn effort_reversal_batch_on_a_seeded_run() {
        let agent = unit_agent();
        let report =
            check_effort_reversals(&agent, &CostSpec::Quadratic, 10, 42, 200.0).unwrap();
        assert!(report.passes(), "{}", report.summary());
    }
}
