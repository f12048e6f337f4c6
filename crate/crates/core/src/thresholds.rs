//! Acquisition thresholds: the triviality bound `kappa_w`, the
//! uncertainty thresholds `phi_w^x` and `phi_w`, and the inverse of
//! `phi_w` in the difficulty.

use crate::error::{Error, Result};
use crate::model::{Agent, BoundarySlope, CostSpec};
use crate::solver::optimal_cutoff;

/// Largest difficulty at which intrinsic incentives alone still induce a
/// perfectly informative signal; 0 when no such difficulty exists.
///
/// Analytic when the catalog cost has a finite edge slope
/// (`kappa_w = w / |c'(0+)|`), 0 when the slope diverges, and located by
/// bisection for tabulated costs.
pub fn kappa_w(agent: &Agent, cost: &CostSpec) -> Result<f64> {
    let w = agent.intrinsic();
    match cost {
        CostSpec::Tabulated(_) => bisect_kappa_w(w, cost),
        _ => match cost.slope_at_zero() {
            BoundarySlope::Finite(slope0) => Ok(w / slope0.abs()),
            BoundarySlope::Unbounded => Ok(0.0),
        },
    }
}

fn bisect_kappa_w(stake: f64, cost: &CostSpec) -> Result<f64> {
    let fully_informative =
        |kappa: f64| -> Result<bool> { Ok(optimal_cutoff(stake, kappa, cost)? == 0.0) };
    if stake == 0.0 || !fully_informative(1e-9)? {
        return Ok(0.0);
    }
    let mut lo = 1e-9;
    let mut hi = 1.0;
    let mut grew = false;
    for _ in 0..200 {
        if !fully_informative(hi)? {
            grew = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
    }
    if !grew {
        return Err(Error::SearchFailure(format!(
            "cutoff stays at 0 for every difficulty up to {hi}"
        )));
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if fully_informative(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Uncertainty threshold at reward `x`: information is acquired iff
/// `phi > phi_w^x(kappa)`. Equals twice the cutoff at that reward.
pub fn phi_w_x(x: f64, agent: &Agent, kappa: f64, cost: &CostSpec) -> Result<f64> {
    let stake = agent.reward_utility(x)?;
    Ok(2.0 * optimal_cutoff(stake, kappa, cost)?)
}

/// Uncertainty threshold at the lowest reward; 0 on `(0, kappa_w]`,
/// strictly increasing in the difficulty beyond it.
pub fn phi_w(agent: &Agent, kappa: f64, cost: &CostSpec) -> Result<f64> {
    phi_w_x(agent.lowest_reward(), agent, kappa, cost)
}

/// The unique difficulty at which `phi_w` reaches `phi`, for
/// `phi` in `(0, 1)`.
pub fn phi_w_inverse(agent: &Agent, phi: f64, cost: &CostSpec) -> Result<f64> {
    if !phi.is_finite() || phi <= 0.0 || phi >= 1.0 {
        return Err(Error::Domain(format!(
            "phi_w_inverse needs phi strictly inside (0, 1), got {phi}"
        )));
    }
    let floor = kappa_w(agent, cost)?;

    // Bracket: phi_w is 0 at kappa_w and increases to 1, so grow the upper
    // end geometrically until the target is enclosed.
    let mut hi = floor.max(1.0);
    let mut enclosed = false;
    for _ in 0..200 {
        if phi_w(agent, hi, cost)? >= phi {
            enclosed = true;
            break;
        }
        hi *= 2.0;
    }
    if !enclosed {
        return Err(Error::SearchFailure(format!(
            "phi_w never reaches {phi} for difficulties up to {hi}"
        )));
    }

    let mut lo = floor;
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if phi_w(agent, mid, cost)? < phi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let kappa = 0.5 * (lo + hi);

    // phi_w can be flat (e.g. identically 1 when the agent has no
    // incentive at x0), in which case bisection converges to a point that
    // is not a root.
    if (phi_w(agent, kappa, cost)? - phi).abs() > 1e-6 {
        return Err(Error::SearchFailure(format!(
            "phi_w has no root at {phi}: nearest value {} at difficulty {kappa}",
            phi_w(agent, kappa, cost)?
        )));
    }
    Ok(kappa)
}
