//! Figure data: the concavification picture, the accuracy polyline, and
//! the comparison-region lattices.

use inatt_core::analysis::{construct_dominated_effort_task, verify_effort_dominance};
use inatt_core::model::{Agent, CostSpec, Task};
use inatt_core::oracle::concave_envelope;
use inatt_core::order::{compare, default_reward_grid};
use inatt_core::solver::optimal_cutoff;
use inatt_core::thresholds::{kappa_w, phi_w};
use inatt_core::{grid, Result};

use crate::output::{fmt_f64, Csv};
use crate::parallel::par_map;

/// Net payoff `g - kappa c` and its concave envelope over the posterior
/// grid, with the cutoff and flat level in the header.
pub fn concavification_csv(
    stake: f64,
    kappa: f64,
    cost: &CostSpec,
    grid_n: usize,
) -> Result<String> {
    let mut values = Vec::with_capacity(grid_n);
    for i in 0..grid_n {
        let q = i as f64 / (grid_n - 1) as f64;
        values.push(stake * q.max(1.0 - q) - kappa * cost.value(q)?);
    }
    let env = concave_envelope(&values)?;
    let cutoff = optimal_cutoff(stake, kappa, cost)?;
    let flat_level = stake * (1.0 - cutoff) - kappa * cost.value(cutoff)?;

    let mut csv = Csv::new();
    csv.comment("figure=1")
        .comment(&format!("cost={}", cost.label()))
        .comment(&format!("stake={stake} kappa={kappa} grid_n={grid_n}"))
        .comment(&format!("cutoff={}", fmt_f64(cutoff)))
        .comment(&format!("flat_level={}", fmt_f64(flat_level)))
        .header(&["q", "net_payoff", "envelope"]);
    for (i, (payoff, envelope)) in values.iter().zip(env.envelope()).enumerate() {
        let q = i as f64 / (grid_n - 1) as f64;
        csv.row(&[fmt_f64(q), fmt_f64(*payoff), fmt_f64(*envelope)]);
    }
    Ok(csv.finish())
}

/// Expected accuracy against the prior: the polyline with vertices
/// `(0, 1)`, `(cutoff, 1 - cutoff)`, `(1 - cutoff, 1 - cutoff)`, `(1, 1)`.
pub fn accuracy_polyline_csv(
    stake: f64,
    kappa: f64,
    cost: &CostSpec,
    points: usize,
) -> Result<String> {
    let cutoff = optimal_cutoff(stake, kappa, cost)?;
    let mut csv = Csv::new();
    csv.comment("figure=2")
        .comment(&format!("cost={}", cost.label()))
        .comment(&format!("stake={stake} kappa={kappa}"))
        .comment(&format!("cutoff={}", fmt_f64(cutoff)))
        .header(&["p", "accuracy"]);
    for prior in grid::uniform(0.0, 1.0, points) {
        let accuracy = prior.max(1.0 - prior).max(1.0 - cutoff);
        csv.row(&[fmt_f64(prior), fmt_f64(accuracy)]);
    }
    Ok(csv.finish())
}

/// One cell of a comparison-region lattice.
pub struct RegionCell {
    pub kappa: f64,
    pub phi: f64,
    pub region: &'static str,
}

/// Classifies a `(kappa, phi)` lattice against a reference task.
pub fn region_lattice(
    reference: &Task,
    agent: &Agent,
    cost: &CostSpec,
    kappa_points: usize,
    phi_points: usize,
    threads: usize,
) -> Result<Vec<RegionCell>> {
    let threshold = kappa_w(agent, cost)?;
    let kappa_max = (2.0 * reference.kappa()).max(4.0).max(threshold + 1.0);
    let kappas: Vec<f64> = (1..=kappa_points)
        .map(|i| kappa_max * i as f64 / kappa_points as f64)
        .collect();
    let phis = grid::uniform(0.0, 1.0, phi_points);

    let cells = par_map(kappas.len() * phis.len(), threads, |index| {
        let kappa = kappas[index / phis.len()];
        let phi = phis[index % phis.len()];
        let cell = Task::new(phi, kappa).expect("lattice parameters are in range");
        let region = if kappa <= threshold {
            "trivial"
        } else {
            compare(reference, &cell, agent, cost)
                .expect("lattice comparison cannot fail")
                .verdict
                .label()
        };
        RegionCell { kappa, phi, region }
    });
    Ok(cells)
}

/// Region lattice around a reference task (figures with and without the
/// binding acquisition constraint).
pub fn region_csv(
    figure: u8,
    reference: &Task,
    agent: &Agent,
    cost: &CostSpec,
    threads: usize,
) -> Result<String> {
    let cells = region_lattice(reference, agent, cost, 160, 101, threads)?;
    let threshold = kappa_w(agent, cost)?;
    let boundary = phi_w(agent, reference.kappa(), cost)?;

    let mut csv = Csv::new();
    csv.comment(&format!("figure={figure}"))
        .comment(&format!("cost={}", cost.label()))
        .comment(&format!("w={}", agent.intrinsic()))
        .comment(&format!(
            "reference_phi={} reference_kappa={}",
            fmt_f64(reference.phi()),
            fmt_f64(reference.kappa())
        ))
        .comment(&format!("kappa_w={}", fmt_f64(threshold)))
        .comment(&format!("phi_w_at_reference={}", fmt_f64(boundary)));
    push_region_rows(&mut csv, &cells);
    Ok(csv.finish())
}

/// Region lattice plus the constructed lower-effort task.
pub fn region_with_construction_csv(
    reference: &Task,
    agent: &Agent,
    cost: &CostSpec,
    threads: usize,
) -> Result<String> {
    let constructed = construct_dominated_effort_task(reference, agent, cost)?;
    let rewards = default_reward_grid(agent);
    let outcome = verify_effort_dominance(reference, &constructed, agent, cost, &rewards)?;
    let cells = region_lattice(reference, agent, cost, 160, 101, threads)?;
    let threshold = kappa_w(agent, cost)?;

    let mut csv = Csv::new();
    csv.comment("figure=5")
        .comment(&format!("cost={}", cost.label()))
        .comment(&format!("w={}", agent.intrinsic()))
        .comment(&format!(
            "reference_phi={} reference_kappa={}",
            fmt_f64(reference.phi()),
            fmt_f64(reference.kappa())
        ))
        .comment(&format!(
            "constructed_phi={} constructed_kappa={}",
            fmt_f64(constructed.phi()),
            fmt_f64(constructed.kappa())
        ))
        .comment(&format!("kappa_w={}", fmt_f64(threshold)));
    match outcome.certificate() {
        Some(cert) => {
            csv.comment(&format!("epsilon={}", fmt_f64(cert.epsilon)))
                .comment(&format!("min_effort_gap={}", fmt_f64(cert.min_gap)))
                .comment(&format!("verdict={:?}", cert.verdict));
        }
        None => {
            csv.comment("verdict=unverified");
        }
    }
    push_region_rows(&mut csv, &cells);
    Ok(csv.finish())
}

fn push_region_rows(csv: &mut Csv, cells: &[RegionCell]) {
    csv.header(&["kappa", "phi", "region"]);
    for cell in cells {
        csv.row(&[
            fmt_f64(cell.kappa),
            fmt_f64(cell.phi),
            cell.region.to_string(),
        ]);
    }
}

/// Accuracy or effort over the reward grid for one task.
pub fn curve_csv(
    which: &str,
    task: &Task,
    agent: &Agent,
    cost: &CostSpec,
    rewards: &[f64],
    threads: usize,
) -> Result<String> {
    let rows: Vec<Result<(f64, f64, f64)>> = par_map(rewards.len(), threads, |i| {
        let x = rewards[i];
        let stake = agent.reward_utility(x)?;
        let value = match which {
            "accuracy" => inatt_core::solver::expected_accuracy(x, agent, task, cost)?,
            _ => inatt_core::solver::effort(x, agent, task, cost)?,
        };
        Ok((x, stake, value))
    });

    let mut csv = Csv::new();
    csv.comment(&format!("curve={which}"))
        .comment(&format!("cost={}", cost.label()))
        .comment(&format!("w={}", agent.intrinsic()))
        .comment(&format!(
            "phi={} kappa={}",
            fmt_f64(task.phi()),
            fmt_f64(task.kappa())
        ))
        .header(&["x", "reward_utility", which]);
    for row in rows {
        let (x, stake, value) = row?;
        csv.row(&[fmt_f64(x), fmt_f64(stake), fmt_f64(value)]);
    }
    Ok(csv.finish())
}

/// Thresholds over a difficulty grid: `phi_w(kappa)` with `kappa_w` in the
/// header.
pub fn thresholds_csv(
    kappas: &[f64],
    agent: &Agent,
    cost: &CostSpec,
    threads: usize,
) -> Result<String> {
    let threshold = kappa_w(agent, cost)?;
    let rows: Vec<Result<f64>> =
        par_map(kappas.len(), threads, |i| phi_w(agent, kappas[i], cost));
    let mut csv = Csv::new();
    csv.comment(&format!("cost={}", cost.label()))
        .comment(&format!("w={}", agent.intrinsic()))
        .comment(&format!("kappa_w={}", fmt_f64(threshold)))
        .header(&["kappa", "phi_w"]);
    for (kappa, row) in kappas.iter().zip(rows) {
        csv.row(&[fmt_f64(*kappa), fmt_f64(row?)]);
    }
    Ok(csv.finish())
}

/// Effort-dominance certificate rows for the constructed task.
pub fn certificate_csv(
    source: &Task,
    constructed: &Task,
    agent: &Agent,
    cost: &CostSpec,
    rewards: &[f64],
) -> Result<String> {
    let outcome = verify_effort_dominance(source, constructed, agent, cost, rewards)?;
    let mut csv = Csv::new();
    csv.comment("certificate=effort_dominance")
        .comment(&format!("cost={}", cost.label()))
        .comment(&format!("w={}", agent.intrinsic()))
        .comment(&format!(
            "source_phi={} source_kappa={}",
            fmt_f64(source.phi()),
            fmt_f64(source.kappa())
        ))
        .comment(&format!(
            "constructed_phi={} constructed_kappa={}",
            fmt_f64(constructed.phi()),
            fmt_f64(constructed.kappa())
        ));
    match outcome.certificate() {
        Some(cert) => {
            csv.comment(&format!("epsilon={}", fmt_f64(cert.epsilon)))
                .comment(&format!("min_gap={}", fmt_f64(cert.min_gap)))
                .comment(&format!("verdict={:?}", cert.verdict));
        }
        None => {
            csv.comment("verdict=failed");
        }
    }
    csv.header(&[
        "x",
        "reward_utility",
        "effort_source",
        "effort_constructed",
        "gap",
    ]);
    for &x in rewards {
        let stake = agent.reward_utility(x)?;
        let effort_source = inatt_core::solver::effort(x, agent, source, cost)?;
        let effort_constructed = inatt_core::solver::effort(x, agent, constructed, cost)?;
        csv.row(&[
            fmt_f64(x),
            fmt_f64(stake),
            fmt_f64(effort_source),
            fmt_f64(effort_constructed),
            fmt_f64(effort_source - effort_constructed),
        ]);
    }
    Ok(csv.finish())
}

/// Region label to a fill color for the SVG rendering.
pub fn region_color(region: &str) -> &'static str {
    match region {
        "more_complex" => "#f2b8b5",
        "less_complex" => "#bfe3bf",
        "equivalent" => "#bcd2ee",
        "trivial" => "#d9d9d9",
        _ => "#ffffff",
    }
}
