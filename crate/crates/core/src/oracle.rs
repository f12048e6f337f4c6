//! Brute-force verification route: concavify the net payoff on a posterior
//! grid with an upper-hull scan and read the solution off the envelope.
//!
//! Everything here is independent of the closed-form solver; the two
//! routes must agree within grid resolution.

use crate::error::{Error, Result};
use crate::model::{canonical_prior, Agent, CostSpec, Signal, SolveReport, Task};

/// Relative tolerance deciding whether the envelope touches the function.
pub const CONTACT_TOL: f64 = 1e-9;

/// Least concave majorant of function samples on a uniform grid.
#[derive(Debug, Clone)]
pub struct EnvelopeResult {
    grid: Vec<f64>,
    values: Vec<f64>,
    envelope: Vec<f64>,
    contact: Vec<usize>,
    contact_tol: f64,
}

impl EnvelopeResult {
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn envelope(&self) -> &[f64] {
        &self.envelope
    }

    /// Grid indices where the envelope touches the sampled function.
    pub fn contact(&self) -> &[usize] {
        &self.contact
    }

    /// Absolute tolerance used for the contact set.
    pub fn contact_tol(&self) -> f64 {
        self.contact_tol
    }

    /// Envelope value at an arbitrary point of `[0, 1]`, by linear
    /// interpolation between grid samples (exact: the envelope is
    /// piecewise linear with kinks only at grid points).
    pub fn envelope_at(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain(format!("posterior {q} outside [0, 1]")));
        }
        let n = self.grid.len();
        let step = 1.0 / (n - 1) as f64;
        let i = ((q / step) as usize).min(n - 2);
        let t = (q - self.grid[i]) / step;
        Ok(self.envelope[i] + t * (self.envelope[i + 1] - self.envelope[i]))
    }

    /// Largest contact point `<= q`, as a grid index.
    pub fn contact_floor(&self, q: f64) -> Option<usize> {
        match self.contact.binary_search_by(|&i| {
            self.grid[i]
                .partial_cmp(&q)
                .expect("grid values are finite")
        }) {
            Ok(pos) => Some(self.contact[pos]),
            Err(0) => None,
            Err(pos) => Some(self.contact[pos - 1]),
        }
    }

    /// Smallest contact point `>= q`, as a grid index.
    pub fn contact_ceil(&self, q: f64) -> Option<usize> {
        match self.contact.binary_search_by(|&i| {
            self.grid[i]
                .partial_cmp(&q)
                .expect("grid values are finite")
        }) {
            Ok(pos) => Some(self.contact[pos]),
            Err(pos) if pos < self.contact.len() => Some(self.contact[pos]),
            Err(_) => None,
        }
    }
}

/// Least concave majorant of `values` sampled on the uniform `[0, 1]` grid
/// of matching size, via an upper convex hull (monotone chain), O(N).
pub fn concave_envelope(values: &[f64]) -> Result<EnvelopeResult> {
    let n = values.len();
    if n < 2 {
        return Err(Error::Domain(format!(
            "envelope needs at least 2 samples, got {n}"
        )));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("non-finite sample {bad}")));
    }
    let grid: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();

    // Upper hull: keep indices whose chain turns clockwise (strictly
    // decreasing slopes); collinear middle points are dropped and
    // recovered by the contact scan below.
    let mut hull: Vec<usize> = Vec::with_capacity(16);
    for i in 0..n {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (grid[b] - grid[a]) * (values[i] - values[a])
                - (values[b] - values[a]) * (grid[i] - grid[a]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }

    let mut envelope = vec![0.0; n];
    for pair in hull.windows(2) {
        let (i0, i1) = (pair[0], pair[1]);
        let (q0, v0) = (grid[i0], values[i0]);
        let (q1, v1) = (grid[i1], values[i1]);
        envelope[i0] = v0;
        for i in i0 + 1..i1 {
            let t = (grid[i] - q0) / (q1 - q0);
            envelope[i] = v0 + t * (v1 - v0);
        }
        envelope[i1] = v1;
    }

    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let contact_tol = CONTACT_TOL * scale;
    let contact = (0..n)
        .filter(|&i| envelope[i] - values[i] <= contact_tol)
        .collect();

    Ok(EnvelopeResult {
        grid,
        values: values.to_vec(),
        envelope,
        contact,
        contact_tol,
    })
}

/// Grid-concavification solution at an arbitrary prior; ground truth for
/// the closed-form solver.
///
/// `grid_n` must be odd and at least 101 so the payoff kink at `q = 1/2`
/// is sampled exactly.
pub fn oracle_solve_at_prior(
    stake: f64,
    kappa: f64,
    cost: &CostSpec,
    prior: f64,
    grid_n: usize,
) -> Result<SolveReport> {
    if grid_n < 101 || grid_n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "oracle grid size must be odd and >= 101, got {grid_n}"
        )));
    }
    if !stake.is_finite() || stake < 0.0 {
        return Err(Error::Domain(format!(
            "stake must be finite and >= 0, got {stake}"
        )));
    }
    if !(0.0..=1.0).contains(&prior) {
        return Err(Error::Domain(format!("prior {prior} outside [0, 1]")));
    }

    let net_payoff = |q: f64| -> Result<f64> {
        Ok(stake * q.max(1.0 - q) - kappa * cost.value(q)?)
    };
    let mut values = Vec::with_capacity(grid_n);
    for i in 0..grid_n {
        let q = i as f64 / (grid_n - 1) as f64;
        values.push(net_payoff(q)?);
    }
    let env = concave_envelope(&values)?;

    let value = env.envelope_at(prior)? + kappa * cost.value(prior)?;
    let cutoff = env
        .contact()
        .iter()
        .rev()
        .map(|&i| env.grid()[i])
        .find(|&q| q <= 0.5)
        .unwrap_or(0.0);

    let at_contact = env.envelope_at(prior)? - net_payoff(prior)? <= env.contact_tol();
    if at_contact {
        return Ok(SolveReport {
            cutoff,
            signal: Signal::degenerate(prior)?,
            value,
            accuracy: prior.max(1.0 - prior),
            effort: 0.0,
            informative: false,
        });
    }

    let lo = env
        .contact_floor(prior)
        .expect("endpoints are always contact points");
    let hi = env
        .contact_ceil(prior)
        .expect("endpoints are always contact points");
    let (q_lo, q_hi) = (env.grid()[lo], env.grid()[hi]);
    let alpha = (q_hi - prior) / (q_hi - q_lo);
    let signal = Signal::new(vec![(q_lo, alpha), (q_hi, 1.0 - alpha)], prior)?;
    let accuracy = alpha * q_lo.max(1.0 - q_lo) + (1.0 - alpha) * q_hi.max(1.0 - q_hi);
    let expected_cost = alpha * cost.value(q_lo)? + (1.0 - alpha) * cost.value(q_hi)?;
    let effort = kappa * (expected_cost - cost.value(prior)?);

    Ok(SolveReport {
        cutoff,
        signal,
        value,
        accuracy,
        effort,
        informative: true,
    })
}

/// Grid-concavification solution for a task at reward `x`.
pub fn oracle_solve(
    x: f64,
    agent: &Agent,
    task: &Task,
    cost: &CostSpec,
    grid_n: usize,
) -> Result<SolveReport> {
    let stake = agent.reward_utility(x)?;
    let prior = canonical_prior(task.phi())?;
    oracle_solve_at_prior(stake, task.kappa(), cost, prior, grid_n)
}
