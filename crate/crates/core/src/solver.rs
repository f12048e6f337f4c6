//! Optimal attention via the concavification structure.
//!
//! With a symmetric strictly convex marginal cost and the kinked payoff of
//! a binary guess, the concave closure of `g(q) - kappa c(q)` is flat on
//! an interval `(cutoff, 1 - cutoff)` and coincides with the payoff
//! outside it. The optimal signal therefore splits the prior between the
//! posteriors `cutoff` and `1 - cutoff` when the prior lies strictly
//! inside that interval, and reveals nothing otherwise.

use crate::error::{Error, Result};
use crate::model::{canonical_prior, Agent, BoundarySlope, CostSpec, Signal, SolveReport, Task};

/// Bisection tolerance on the cutoff posterior.
pub const CUTOFF_TOL: f64 = 1e-12;

const MAX_BISECTION_ITERS: usize = 200;

/// The low posterior of the optimal support: the unique maximizer of
/// `stake * (1 - q) - kappa * c(q)` over `[0, 1/2]`.
///
/// `stake` is the utility gap between a right and a wrong guess at the
/// reward in question. Corners: 0 when the marginal value of sharper
/// beliefs still exceeds their marginal cost at the edge, 1/2 when the
/// stake is zero.
pub fn optimal_cutoff(stake: f64, kappa: f64, cost: &CostSpec) -> Result<f64> {
    if !stake.is_finite() || stake < 0.0 {
        return Err(Error::Domain(format!(
            "stake must be finite and >= 0, got {stake}"
        )));
    }
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::Domain(format!(
            "difficulty must be finite and positive, got {kappa}"
        )));
    }
    if stake == 0.0 {
        return Ok(0.5);
    }
    if let BoundarySlope::Finite(slope0) = cost.slope_at_zero() {
        // Objective slope at 0+ is -stake - kappa * c'(0+).
        if -stake - kappa * slope0 <= 0.0 {
            return Ok(0.0);
        }
    }

    // The objective derivative -stake - kappa c'(q) is strictly decreasing,
    // positive near 0 (corner handled above) and equal to -stake < 0 at 1/2.
    let mut lo = 0.0_f64;
    let mut hi = 0.5_f64;
    for _ in 0..MAX_BISECTION_ITERS {
        if hi - lo <= CUTOFF_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if -stake - kappa * cost.derivative(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solves the attention problem at an arbitrary prior in `[0, 1]`.
///
/// The model is symmetric under `p <-> 1 - p`, so this is the common core
/// behind [`optimal_signal`] (which uses the canonical prior) and the
/// reflection-invariance checks.
pub fn solve_with_prior(stake: f64, kappa: f64, cost: &CostSpec, prior: f64) -> Result<SolveReport> {
    if !(0.0..=1.0).contains(&prior) {
        return Err(Error::Domain(format!("prior {prior} outside [0, 1]")));
    }
    let cutoff = optimal_cutoff(stake, kappa, cost)?;
    let guess_prob = prior.max(1.0 - prior);

    // Ties within the bisection tolerance count as indifference, where the
    // degenerate signal is the chosen convention (both branches pay the
    // same there).
    if cutoff < prior.min(1.0 - prior) - CUTOFF_TOL {
        let effort = kappa * (cost.value(cutoff)? - cost.value(prior)?);
        // Strict convexity makes this positive; the guard only covers
        // floating-point ties when the prior sits on the cutoff.
        if effort > 0.0 {
            let alpha = (1.0 - cutoff - prior) / (1.0 - 2.0 * cutoff);
            let signal = Signal::new(vec![(cutoff, alpha), (1.0 - cutoff, 1.0 - alpha)], prior)?;
            let value =
                stake * (1.0 - cutoff) - kappa * cost.value(cutoff)? + kappa * cost.value(prior)?;
            return Ok(SolveReport {
                cutoff,
                signal,
                value,
                accuracy: 1.0 - cutoff,
                effort,
                informative: true,
            });
        }
    }

    Ok(SolveReport {
        cutoff,
        signal: Signal::degenerate(prior)?,
        value: stake * guess_prob,
        accuracy: guess_prob,
        effort: 0.0,
        informative: false,
    })
}

/// Optimal signal and its value, accuracy, and effort for a task at
/// reward `x`.
pub fn optimal_signal(x: f64, agent: &Agent, task: &Task, cost: &CostSpec) -> Result<SolveReport> {
    let stake = agent.reward_utility(x)?;
    let prior = canonical_prior(task.phi())?;
    solve_with_prior(stake, task.kappa(), cost, prior)
}

/// Ex-ante probability of a correct guess under the optimal signal:
/// `max{1 - phi/2, 1 - cutoff}`.
pub fn expected_accuracy(x: f64, agent: &Agent, task: &Task, cost: &CostSpec) -> Result<f64> {
    let stake = agent.reward_utility(x)?;
    let cutoff = optimal_cutoff(stake, task.kappa(), cost)?;
    Ok((1.0 - task.phi() / 2.0).max(1.0 - cutoff))
}

/// Information cost paid at the optimum: `kappa * (c(cutoff) - c(p))` when
/// the signal is informative, 0 otherwise.
pub fn effort(x: f64, agent: &Agent, task: &Task, cost: &CostSpec) -> Result<f64> {
    let stake = agent.reward_utility(x)?;
    let prior = canonical_prior(task.phi())?;
    let cutoff = optimal_cutoff(stake, task.kappa(), cost)?;
    if cutoff < prior - CUTOFF_TOL {
        let paid = task.kappa() * (cost.value(cutoff)? - cost.value(prior)?);
        if paid > 0.0 {
            return Ok(paid);
        }
    }
    Ok(0.0)
}
