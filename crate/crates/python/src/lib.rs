//! Python bindings: the main types and operations of the core crate as an
//! in-process extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use inatt_core::{analysis, model, oracle, order, solver, thresholds};

fn to_py_err(err: inatt_core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// Symmetric strictly convex marginal information cost on [0, 1].
#[pyclass(name = "CostSpec", module = "inatt", skip_from_py_object)]
#[derive(Clone)]
struct PyCostSpec {
    inner: model::CostSpec,
}

#[pymethods]
impl PyCostSpec {
    /// c(q) = q^2 - q.
    #[staticmethod]
    fn quadratic() -> Self {
        Self {
            inner: model::CostSpec::Quadratic,
        }
    }

    /// c(q) = q ln q + (1-q) ln(1-q), with c(0) = c(1) = 0.
    #[staticmethod]
    fn shannon() -> Self {
        Self {
            inner: model::CostSpec::Shannon,
        }
    }

    /// Tsallis family with exponent sigma > 0, sigma != 1.
    #[staticmethod]
    fn tsallis(sigma: f64) -> PyResult<Self> {
        Ok(Self {
            inner: model::CostSpec::tsallis(sigma).map_err(to_py_err)?,
        })
    }

    /// Piecewise-linear cost through (q, c) samples spanning [0, 1].
    #[staticmethod]
    fn tabulated(points: Vec<(f64, f64)>) -> PyResult<Self> {
        Ok(Self {
            inner: model::CostSpec::tabulated(points).map_err(to_py_err)?,
        })
    }

    fn value(&self, q: f64) -> PyResult<f64> {
        self.inner.value(q).map_err(to_py_err)
    }

    fn derivative(&self, q: f64) -> PyResult<f64> {
        self.inner.derivative(q).map_err(to_py_err)
    }

    /// One-sided slope at q = 0, or None when it diverges.
    fn slope_at_zero(&self) -> Option<f64> {
        match self.inner.slope_at_zero() {
            model::BoundarySlope::Finite(slope) => Some(slope),
            model::BoundarySlope::Unbounded => None,
        }
    }

    /// Symmetry/convexity validation flags over a grid.
    #[pyo3(signature = (grid_size = 1001))]
    fn validate(&self, grid_size: usize) -> (bool, bool, bool) {
        let report = self.inner.validate(grid_size);
        (report.passed(), report.symmetric, report.strictly_convex)
    }

    fn label(&self) -> String {
        self.inner.label()
    }

    fn __repr__(&self) -> String {
        format!("CostSpec({})", self.inner.label())
    }
}

/// Agent: intrinsic incentive w plus an increasing reward utility.
#[pyclass(name = "Agent", module = "inatt", skip_from_py_object)]
#[derive(Clone)]
struct PyAgent {
    inner: model::Agent,
}

#[pymethods]
impl PyAgent {
    /// Linear reward utility u1(x) = w + beta (x - x0).
    #[new]
    #[pyo3(signature = (w, beta = 1.0, x0 = 0.0))]
    fn new(w: f64, beta: f64, x0: f64) -> PyResult<Self> {
        Ok(Self {
            inner: model::Agent::new(w, x0, model::UtilityFamily::Linear { slope: beta })
                .map_err(to_py_err)?,
        })
    }

    /// Power reward utility u1(x) = w + (x - x0)^gamma.
    #[staticmethod]
    #[pyo3(signature = (w, gamma, x0 = 0.0))]
    fn power(w: f64, gamma: f64, x0: f64) -> PyResult<Self> {
        Ok(Self {
            inner: model::Agent::new(w, x0, model::UtilityFamily::Power { exponent: gamma })
                .map_err(to_py_err)?,
        })
    }

    #[getter]
    fn w(&self) -> f64 {
        self.inner.intrinsic()
    }

    #[getter]
    fn x0(&self) -> f64 {
        self.inner.lowest_reward()
    }

    fn reward_utility(&self, x: f64) -> PyResult<f64> {
        self.inner.reward_utility(x).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("Agent(w={}, x0={})", self.inner.intrinsic(), self.inner.lowest_reward())
    }
}

/// Task: ex-ante uncertainty phi in [0, 1] and difficulty kappa > 0.
#[pyclass(name = "Task", module = "inatt", skip_from_py_object)]
#[derive(Clone)]
struct PyTask {
    inner: model::Task,
}

#[pymethods]
impl PyTask {
    #[new]
    fn new(phi: f64, kappa: f64) -> PyResult<Self> {
        Ok(Self {
            inner: model::Task::new(phi, kappa).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn phi(&self) -> f64 {
        self.inner.phi()
    }

    #[getter]
    fn kappa(&self) -> f64 {
        self.inner.kappa()
    }

    fn __repr__(&self) -> String {
        format!("Task(phi={}, kappa={})", self.inner.phi(), self.inner.kappa())
    }
}

/// Solution of the attention problem at one reward.
#[pyclass(name = "SolveReport", module = "inatt")]
struct PySolveReport {
    #[pyo3(get)]
    cutoff: f64,
    #[pyo3(get)]
    atoms: Vec<(f64, f64)>,
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    accuracy: f64,
    #[pyo3(get)]
    effort: f64,
    #[pyo3(get)]
    informative: bool,
}

#[pymethods]
impl PySolveReport {
    fn __repr__(&self) -> String {
        format!(
            "SolveReport(cutoff={}, accuracy={}, effort={}, informative={})",
            self.cutoff, self.accuracy, self.effort, self.informative
        )
    }
}

impl From<model::SolveReport> for PySolveReport {
    fn from(report: model::SolveReport) -> Self {
        Self {
            cutoff: report.cutoff,
            atoms: report.signal.atoms().to_vec(),
            value: report.value,
            accuracy: report.accuracy,
            effort: report.effort,
            informative: report.informative,
        }
    }
}

/// Outcome of a complexity comparison ("is b more complex than a").
#[pyclass(name = "Comparison", module = "inatt")]
struct PyComparison {
    #[pyo3(get)]
    verdict: String,
    #[pyo3(get)]
    b_dominates_a: bool,
    #[pyo3(get)]
    a_dominates_b: bool,
    #[pyo3(get)]
    kappa_w: f64,
    #[pyo3(get)]
    phi_w_kappa_a: f64,
    #[pyo3(get)]
    phi_w_kappa_b: f64,
    #[pyo3(get)]
    bar_vs_a: f64,
    #[pyo3(get)]
    bar_vs_b: f64,
}

#[pymethods]
impl PyComparison {
    fn __repr__(&self) -> String {
        format!("Comparison(verdict={})", self.verdict)
    }
}

impl From<order::ComparisonResult> for PyComparison {
    fn from(result: order::ComparisonResult) -> Self {
        Self {
            verdict: format!("{:?}", result.verdict),
            b_dominates_a: result.b_dominates_a,
            a_dominates_b: result.a_dominates_b,
            kappa_w: result.details.kappa_w,
            phi_w_kappa_a: result.details.phi_w_kappa_a,
            phi_w_kappa_b: result.details.phi_w_kappa_b,
            bar_vs_a: result.details.bar_vs_a,
            bar_vs_b: result.details.bar_vs_b,
        }
    }
}

/// The prior p <= 1/2 with uncertainty phi.
#[pyfunction]
fn canonical_prior(phi: f64) -> PyResult<f64> {
    model::canonical_prior(phi).map_err(to_py_err)
}

/// Posterior-separable cost of a signal given as (posterior, weight) atoms.
#[pyfunction]
fn signal_cost(cost: &PyCostSpec, kappa: f64, prior: f64, atoms: Vec<(f64, f64)>) -> PyResult<f64> {
    let signal = model::Signal::new(atoms, prior).map_err(to_py_err)?;
    model::signal_cost(&cost.inner, kappa, prior, &signal).map_err(to_py_err)
}

/// Low posterior of the optimal support for a given stake and difficulty.
#[pyfunction]
fn optimal_cutoff(stake: f64, kappa: f64, cost: &PyCostSpec) -> PyResult<f64> {
    solver::optimal_cutoff(stake, kappa, &cost.inner).map_err(to_py_err)
}

/// Optimal signal, value, accuracy, and effort at reward x.
#[pyfunction]
fn solve(x: f64, agent: &PyAgent, task: &PyTask, cost: &PyCostSpec) -> PyResult<PySolveReport> {
    solver::optimal_signal(x, &agent.inner, &task.inner, &cost.inner)
        .map(Into::into)
        .map_err(to_py_err)
}

/// Ex-ante probability of a correct guess at reward x.
#[pyfunction]
fn expected_accuracy(
    x: f64,
    agent: &PyAgent,
    task: &PyTask,
    cost: &PyCostSpec,
) -> PyResult<f64> {
    solver::expected_accuracy(x, &agent.inner, &task.inner, &cost.inner).map_err(to_py_err)
}

/// Information cost paid at the optimum at reward x.
#[pyfunction]
fn effort(x: f64, agent: &PyAgent, task: &PyTask, cost: &PyCostSpec) -> PyResult<f64> {
    solver::effort(x, &agent.inner, &task.inner, &cost.inner).map_err(to_py_err)
}

/// Largest difficulty that intrinsic incentives still solve perfectly.
#[pyfunction]
fn kappa_w(agent: &PyAgent, cost: &PyCostSpec) -> PyResult<f64> {
    thresholds::kappa_w(&agent.inner, &cost.inner).map_err(to_py_err)
}

/// Acquisition threshold at the lowest reward.
#[pyfunction]
fn phi_w(agent: &PyAgent, kappa: f64, cost: &PyCostSpec) -> PyResult<f64> {
    thresholds::phi_w(&agent.inner, kappa, &cost.inner).map_err(to_py_err)
}

/// Acquisition threshold at reward x.
#[pyfunction]
fn phi_w_x(x: f64, agent: &PyAgent, kappa: f64, cost: &PyCostSpec) -> PyResult<f64> {
    thresholds::phi_w_x(x, &agent.inner, kappa, &cost.inner).map_err(to_py_err)
}

/// The difficulty at which phi_w reaches phi.
#[pyfunction]
fn phi_w_inverse(agent: &PyAgent, phi: f64, cost: &PyCostSpec) -> PyResult<f64> {
    thresholds::phi_w_inverse(&agent.inner, phi, &cost.inner).map_err(to_py_err)
}

/// True when every reward induces a perfectly informative signal.
#[pyfunction]
fn is_trivial(task: &PyTask, agent: &PyAgent, cost: &PyCostSpec) -> PyResult<bool> {
    order::is_trivial(&task.inner, &agent.inner, &cost.inner).map_err(to_py_err)
}

/// Threshold-characterization comparison: is b more complex than a?
#[pyfunction]
fn compare(a: &PyTask, b: &PyTask, agent: &PyAgent, cost: &PyCostSpec) -> PyResult<PyComparison> {
    order::compare(&a.inner, &b.inner, &agent.inner, &cost.inner)
        .map(Into::into)
        .map_err(to_py_err)
}

/// Empirical comparison by accuracy sweep over a reward grid.
#[pyfunction]
#[pyo3(signature = (a, b, agent, cost, rewards = None))]
fn compare_by_sweep(
    a: &PyTask,
    b: &PyTask,
    agent: &PyAgent,
    cost: &PyCostSpec,
    rewards: Option<Vec<f64>>,
) -> PyResult<PyComparison> {
    let rewards = rewards.unwrap_or_else(|| order::default_reward_grid(&agent.inner));
    order::compare_by_sweep(&a.inner, &b.inner, &agent.inner, &cost.inner, &rewards)
        .map(Into::into)
        .map_err(to_py_err)
}

/// Default 41-point sweep grid for an agent.
#[pyfunction]
fn default_reward_grid(agent: &PyAgent) -> Vec<f64> {
    order::default_reward_grid(&agent.inner)
}

/// Two-coordinate representation (kappa, min{phi_w(kappa), phi}).
#[pyfunction]
fn vector_utility(task: &PyTask, agent: &PyAgent, cost: &PyCostSpec) -> PyResult<(f64, f64)> {
    order::vector_utility(&task.inner, &agent.inner, &cost.inner).map_err(to_py_err)
}

/// The strictly-more-complex task with strictly smaller effort everywhere.
#[pyfunction]
fn construct_dominated_effort_task(
    task: &PyTask,
    agent: &PyAgent,
    cost: &PyCostSpec,
) -> PyResult<PyTask> {
    analysis::construct_dominated_effort_task(&task.inner, &agent.inner, &cost.inner)
        .map(|inner| PyTask { inner })
        .map_err(to_py_err)
}

/// Checks strict complexity dominance with strictly smaller effort on the
/// grid; returns (certified, verdict, epsilon, min_gap).
#[pyfunction]
#[pyo3(signature = (a, b, agent, cost, rewards = None))]
fn verify_effort_dominance(
    a: &PyTask,
    b: &PyTask,
    agent: &PyAgent,
    cost: &PyCostSpec,
    rewards: Option<Vec<f64>>,
) -> PyResult<(bool, String, Option<f64>, Option<f64>)> {
    let rewards = rewards.unwrap_or_else(|| order::default_reward_grid(&agent.inner));
    let outcome =
        analysis::verify_effort_dominance(&a.inner, &b.inner, &agent.inner, &cost.inner, &rewards)
            .map_err(to_py_err)?;
    Ok(match outcome {
        analysis::DominanceOutcome::Certified(cert) => (
            true,
            format!("{:?}", cert.verdict),
            Some(cert.epsilon),
            Some(cert.min_gap),
        ),
        analysis::DominanceOutcome::Failed(failure) => {
            (false, format!("{:?}", failure.verdict), None, None)
        }
    })
}

/// Rewards (x, x') at which the effort ranking of two difficulties flips.
#[pyfunction]
#[pyo3(signature = (phi, kappa, kappa2, agent, cost, search_bound = 100.0))]
fn find_effort_reversal_witness(
    phi: f64,
    kappa: f64,
    kappa2: f64,
    agent: &PyAgent,
    cost: &PyCostSpec,
    search_bound: f64,
) -> PyResult<(f64, f64)> {
    analysis::find_effort_reversal_witness(
        phi,
        kappa,
        kappa2,
        &agent.inner,
        &cost.inner,
        search_bound,
    )
    .map_err(to_py_err)
}

/// Seeded order-property harness; returns (passed, summary).
#[pyfunction]
fn check_order_properties(
    w_low: f64,
    w_high: f64,
    cost: &PyCostSpec,
    samples: usize,
    seed: u64,
) -> PyResult<(bool, String)> {
    let low = model::Agent::linear(w_low).map_err(to_py_err)?;
    let high = model::Agent::linear(w_high).map_err(to_py_err)?;
    let report = analysis::check_order_properties(&low, &high, &cost.inner, samples, seed)
        .map_err(to_py_err)?;
    Ok((report.passes(), report.summary()))
}

/// Brute-force grid solution; ground truth for the closed forms.
#[pyfunction]
#[pyo3(signature = (x, agent, task, cost, grid_n = 4001))]
fn oracle_solve(
    x: f64,
    agent: &PyAgent,
    task: &PyTask,
    cost: &PyCostSpec,
    grid_n: usize,
) -> PyResult<PySolveReport> {
    oracle::oracle_solve(x, &agent.inner, &task.inner, &cost.inner, grid_n)
        .map(Into::into)
        .map_err(to_py_err)
}

/// Least concave majorant of samples on the uniform [0, 1] grid; returns
/// (envelope, contact_indices).
#[pyfunction]
fn concave_envelope(values: Vec<f64>) -> PyResult<(Vec<f64>, Vec<usize>)> {
    let env = oracle::concave_envelope(&values).map_err(to_py_err)?;
    Ok((env.envelope().to_vec(), env.contact().to_vec()))
}

#[pymodule]
fn inatt(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCostSpec>()?;
    m.add_class::<PyAgent>()?;
    m.add_class::<PyTask>()?;
    m.add_class::<PySolveReport>()?;
    m.add_class::<PyComparison>()?;
    m.add_function(wrap_pyfunction!(canonical_prior, m)?)?;
    m.add_function(wrap_pyfunction!(signal_cost, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_cutoff, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(expected_accuracy, m)?)?;
    m.add_function(wrap_pyfunction!(effort, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_w, m)?)?;
    m.add_function(wrap_pyfunction!(phi_w, m)?)?;
    m.add_function(wrap_pyfunction!(phi_w_x, m)?)?;
    m.add_function(wrap_pyfunction!(phi_w_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(is_trivial, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(compare_by_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(default_reward_grid, m)?)?;
    m.add_function(wrap_pyfunction!(vector_utility, m)?)?;
    m.add_function(wrap_pyfunction!(construct_dominated_effort_task, m)?)?;
    m.add_function(wrap_pyfunction!(verify_effort_dominance, m)?)?;
    m.add_function(wrap_pyfunction!(find_effort_reversal_witness, m)?)?;
    m.add_function(wrap_pyfunction!(check_order_properties, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_solve, m)?)?;
    m.add_function(wrap_pyfunction!(concave_envelope, m)?)?;
    Ok(())
}
