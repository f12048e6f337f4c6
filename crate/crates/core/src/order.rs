//! The robust complexity order over tasks.
//!
//! Task `b` is at least as complex as task `a` when its expected accuracy
//! is weakly lower at every extrinsic reward. On non-degenerate tasks this
//! is equivalent to `kappa_b >= kappa_a` together with
//! `phi_b >= min{phi_w(kappa_a), phi_a}`; tasks that are solved perfectly
//! at every reward (trivial difficulty, or a prior that is already
//! certain) form one equivalence class at the bottom.

use crate::error::{Error, Result};
use crate::grid::log1p_rewards;
use crate::model::{Agent, CostSpec, Task};
use crate::solver::expected_accuracy;
use crate::thresholds::{kappa_w, phi_w};

/// Accuracy tolerance absorbing solver noise in sweep comparisons.
pub const SWEEP_TOL: f64 = 1e-9;

/// Answer to "is `b` more complex than `a`".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    MoreComplex,
    LessComplex,
    Equivalent,
    Incomparable,
}

impl Verdict {
    /// The verdict after swapping the two tasks.
    pub fn swapped(self) -> Self {
        match self {
            Verdict::MoreComplex => Verdict::LessComplex,
            Verdict::LessComplex => Verdict::MoreComplex,
            other => other,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::MoreComplex => "more_complex",
            Verdict::LessComplex => "less_complex",
            Verdict::Equivalent => "equivalent",
            Verdict::Incomparable => "incomparable",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Threshold values supporting a comparison verdict.
#[derive(Debug, Clone, Copy)]
pub struct ComparisonDetails {
    pub kappa_w: f64,
    pub a_trivial: bool,
    pub b_trivial: bool,
    /// `phi_w` evaluated at each task's difficulty.
    pub phi_w_kappa_a: f64,
    pub phi_w_kappa_b: f64,
    /// `min{phi_w(kappa_a), phi_a}`: the uncertainty bar `b` must clear to
    /// dominate `a`, and symmetrically.
    pub bar_vs_a: f64,
    pub bar_vs_b: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ComparisonResult {
    pub verdict: Verdict,
    /// `b` is at least as complex as `a`.
    pub b_dominates_a: bool,
    /// `a` is at least as complex as `b`.
    pub a_dominates_b: bool,
    pub details: ComparisonDetails,
}

fn verdict_from(b_dominates_a: bool, a_dominates_b: bool) -> Verdict {
    match (b_dominates_a, a_dominates_b) {
        (true, true) => Verdict::Equivalent,
        (true, false) => Verdict::MoreComplex,
        (false, true) => Verdict::LessComplex,
        (false, false) => Verdict::Incomparable,
    }
}

/// True when every reward induces a perfectly informative signal, i.e.
/// `kappa <= kappa_w`.
pub fn is_trivial(task: &Task, agent: &Agent, cost: &CostSpec) -> Result<bool> {
    Ok(task.kappa() <= kappa_w(agent, cost)?)
}

/// Accuracy is identically 1: either the task is trivial or the prior is
/// already certain. Such tasks sit at the bottom of the order.
fn is_bottom(task: &Task, threshold: f64) -> bool {
    task.kappa() <= threshold || task.phi() == 0.0
}

/// Compares two tasks by the threshold characterization, answering "is `b`
/// more complex than `a`".
pub fn compare(a: &Task, b: &Task, agent: &Agent, cost: &CostSpec) -> Result<ComparisonResult> {
    let threshold = kappa_w(agent, cost)?;
    let a_bottom = is_bottom(a, threshold);
    let b_bottom = is_bottom(b, threshold);
    let phi_w_kappa_a = phi_w(agent, a.kappa(), cost)?;
    let phi_w_kappa_b = phi_w(agent, b.kappa(), cost)?;
    let bar_vs_a = phi_w_kappa_a.min(a.phi());
    let bar_vs_b = phi_w_kappa_b.min(b.phi());

    let b_dominates_a = if a_bottom {
        true
    } else if b_bottom {
        false
    } else {
        b.kappa() >= a.kappa() && b.phi() >= bar_vs_a
    };
    let a_dominates_b = if b_bottom {
        true
    } else if a_bottom {
        false
    } else {
        a.kappa() >= b.kappa() && a.phi() >= bar_vs_b
    };

    Ok(ComparisonResult {
        verdict: verdict_from(b_dominates_a, a_dominates_b),
        b_dominates_a,
        a_dominates_b,
        details: ComparisonDetails {
            kappa_w: threshold,
            a_trivial: a.kappa() <= threshold,
            b_trivial: b.kappa() <= threshold,
            phi_w_kappa_a,
            phi_w_kappa_b,
            bar_vs_a,
            bar_vs_b,
        },
    })
}

/// Compares two tasks empirically: pointwise accuracy dominance over a
/// reward grid, with tolerance [`SWEEP_TOL`].
///
/// Independent of the threshold characterization; the two must agree.
pub fn compare_by_sweep(
    a: &Task,
    b: &Task,
    agent: &Agent,
    cost: &CostSpec,
    rewards: &[f64],
) -> Result<ComparisonResult> {
    if rewards.is_empty() {
        return Err(Error::Domain("reward grid is empty".into()));
    }
    let mut b_dominates_a = true;
    let mut a_dominates_b = true;
    for &x in rewards {
        let acc_a = expected_accuracy(x, agent, a, cost)?;
        let acc_b = expected_accuracy(x, agent, b, cost)?;
        if acc_b > acc_a + SWEEP_TOL {
            b_dominates_a = false;
        }
        if acc_a > acc_b + SWEEP_TOL {
            a_dominates_b = false;
        }
        if !b_dominates_a && !a_dominates_b {
            break;
        }
    }

    let threshold = kappa_w(agent, cost)?;
    let phi_w_kappa_a = phi_w(agent, a.kappa(), cost)?;
    let phi_w_kappa_b = phi_w(agent, b.kappa(), cost)?;
    Ok(ComparisonResult {
        verdict: verdict_from(b_dominates_a, a_dominates_b),
        b_dominates_a,
        a_dominates_b,
        details: ComparisonDetails {
            kappa_w: threshold,
            a_trivial: a.kappa() <= threshold,
            b_trivial: b.kappa() <= threshold,
            phi_w_kappa_a,
            phi_w_kappa_b,
            bar_vs_a: phi_w_kappa_a.min(a.phi()),
            bar_vs_b: phi_w_kappa_b.min(b.phi()),
        },
    })
}

/// Default sweep grid: 41 rewards spanning `[x0, x0 + 20]`, log-spaced in
/// the offset so both the threshold-sensitive low-reward regime and the
/// corner regime are sampled.
pub fn default_reward_grid(agent: &Agent) -> Vec<f64> {
    log1p_rewards(agent.lowest_reward(), 20.0, 41)
}

/// Two-coordinate representation of the order on non-trivial tasks:
/// `(kappa, min{phi_w(kappa), phi})`. Coordinatewise weak dominance is
/// equivalent to the comparison verdicts.
pub fn vector_utility(task: &Task, agent: &Agent, cost: &CostSpec) -> Result<(f64, f64)> {
    let threshold = kappa_w(agent, cost)?;
    if task.kappa() <= threshold {
        return Err(Error::Precondition(format!(
            "task is trivial: kappa {} <= kappa_w {threshold}; the representation is \
             defined on non-trivial tasks only",
            task.kappa()
        )));
    }
    let cap = phi_w(agent, task.kappa(), cost)?;
    Ok((task.kappa(), cap.min(task.phi())))
}
