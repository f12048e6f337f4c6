//! Domain types: the marginal-cost catalog, agents, tasks, and signals.
//!
//! The setting is a binary guessing task. A correct guess at extrinsic
//! reward `x` pays utility `u1(x)`, a wrong guess pays the normalization 0,
//! and `u1(x0) = w` is the agent's intrinsic incentive. Attention is a
//! Bayes-plausible distribution over posterior beliefs, priced by a
//! uniformly posterior-separable cost `C = kappa * (E[c(q)] - c(p))` built
//! from a symmetric, strictly convex marginal cost `c` on `[0, 1]`.

use crate::error::{Error, Result};

/// Absolute tolerance on signal weights summing to one and on the posterior
/// mean matching the prior.
pub const PLAUSIBILITY_TOL: f64 = 1e-12;

/// Absolute tolerance for the cost-symmetry validation check.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// One-sided derivative of a marginal cost at the left edge of `[0, 1]`.
///
/// By symmetry the right-edge slope is the negation of the left-edge one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundarySlope {
    Finite(f64),
    /// The slope diverges: `-inf` at 0 (and `+inf` at 1).
    Unbounded,
}

/// Piecewise-linear marginal cost built from `(q, c)` samples.
///
/// Values interpolate the nodes linearly; derivatives interpolate the
/// centered finite differences taken at the nodes (one-sided at the edges).
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedCost {
    nodes: Vec<(f64, f64)>,
    node_slopes: Vec<f64>,
}

impl TabulatedCost {
    /// Builds a tabulated cost from samples covering `[0, 1]`.
    ///
    /// Requires at least 3 nodes with strictly increasing `q`, finite
    /// values, and endpoints at `q = 0` and `q = 1` (within 1e-12).
    pub fn new(mut points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidCost(format!(
                "tabulated cost needs at least 3 nodes, got {}",
                points.len()
            )));
        }
        for &(q, c) in &points {
            if !q.is_finite() || !c.is_finite() {
                return Err(Error::InvalidCost(format!(
                    "non-finite tabulated node ({q}, {c})"
                )));
            }
        }
        // Snap near-exact endpoints so CSV rounding does not reject a grid.
        if points[0].0.abs() <= 1e-12 {
            points[0].0 = 0.0;
        }
        if (points[points.len() - 1].0 - 1.0).abs() <= 1e-12 {
            let last = points.len() - 1;
            points[last].0 = 1.0;
        }
        if points[0].0 != 0.0 || points[points.len() - 1].0 != 1.0 {
            return Err(Error::InvalidCost(
                "tabulated grid must span q = 0 to q = 1".into(),
            ));
        }
        if points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidCost(
                "tabulated nodes must have strictly increasing q".into(),
            ));
        }

        let node_slopes = centered_slopes(&points);
        Ok(Self {
            nodes: points,
            node_slopes,
        })
    }

    /// Parses two-column CSV with header `q,c`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidCost("empty cost CSV".into()))?;
        let normalized: String = header.chars().filter(|c| !c.is_whitespace()).collect();
        if normalized != "q,c" {
            return Err(Error::InvalidCost(format!(
                "cost CSV must start with header `q,c`, got `{header}`"
            )));
        }
        let mut points = Vec::new();
        for (i, line) in lines.enumerate() {
            let mut fields = line.split(',');
            let q = fields.next().map(str::trim);
            let c = fields.next().map(str::trim);
            match (q, c) {
                (Some(q), Some(c)) => {
                    let q: f64 = q.parse().map_err(|_| {
                        Error::InvalidCost(format!("bad q value on data row {}", i + 1))
                    })?;
                    let c: f64 = c.parse().map_err(|_| {
                        Error::InvalidCost(format!("bad c value on data row {}", i + 1))
                    })?;
                    points.push((q, c));
                }
                _ => {
                    return Err(Error::InvalidCost(format!(
                        "malformed cost CSV row {}",
                        i + 1
                    )))
                }
            }
        }
        Self::new(points)
    }

    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    /// Index of the segment `[q_i, q_{i+1}]` containing `q`.
    fn segment(&self, q: f64) -> usize {
        let n = self.nodes.len();
        match self
            .nodes
            .binary_search_by(|&(node, _)| node.partial_cmp(&q).unwrap())
        {
            Ok(i) => i.min(n - 2),
            Err(i) => i.saturating_sub(1).min(n - 2),
        }
    }

    fn value_at(&self, q: f64) -> f64 {
        let i = self.segment(q);
        let (q0, c0) = self.nodes[i];
        let (q1, c1) = self.nodes[i + 1];
        let t = (q - q0) / (q1 - q0);
        c0 + t * (c1 - c0)
    }

    fn derivative_at(&self, q: f64) -> f64 {
        let i = self.segment(q);
        let (q0, _) = self.nodes[i];
        let (q1, _) = self.nodes[i + 1];
        let t = (q - q0) / (q1 - q0);
        self.node_slopes[i] + t * (self.node_slopes[i + 1] - self.node_slopes[i])
    }
}

fn centered_slopes(nodes: &[(f64, f64)]) -> Vec<f64> {
    let n = nodes.len();
    let mut slopes = Vec::with_capacity(n);
    slopes.push((nodes[1].1 - nodes[0].1) / (nodes[1].0 - nodes[0].0));
    for i in 1..n - 1 {
        slopes.push((nodes[i + 1].1 - nodes[i - 1].1) / (nodes[i + 1].0 - nodes[i - 1].0));
    }
    slopes.push((nodes[n - 1].1 - nodes[n - 2].1) / (nodes[n - 1].0 - nodes[n - 2].0));
    slopes
}

/// Symmetric, strictly convex marginal information cost on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum CostSpec {
    /// `c(q) = q^2 - q`.
    Quadratic,
    /// `c(q) = q ln q + (1-q) ln(1-q)`, with `c(0) = c(1) = 0`.
    Shannon,
    /// `c(q) = (q^s + (1-q)^s - 2^(1-s)) / (s(s-1))` for `s > 0`, `s != 1`.
    Tsallis { sigma: f64 },
    /// Piecewise-linear interpolation of user-supplied samples.
    Tabulated(TabulatedCost),
}

impl CostSpec {
    pub fn tsallis(sigma: f64) -> Result<Self> {
        let spec = CostSpec::Tsallis { sigma };
        spec.check_params()?;
        Ok(spec)
    }

    pub fn tabulated(points: Vec<(f64, f64)>) -> Result<Self> {
        Ok(CostSpec::Tabulated(TabulatedCost::new(points)?))
    }

    fn check_params(&self) -> Result<()> {
        if let CostSpec::Tsallis { sigma } = *self {
            if !sigma.is_finite() || sigma <= 0.0 || sigma == 1.0 {
                return Err(Error::InvalidCost(format!(
                    "Tsallis exponent must be positive and != 1, got {sigma}"
                )));
            }
        }
        Ok(())
    }

    /// Short human-readable tag used in CSV comments and reports.
    pub fn label(&self) -> String {
        match self {
            CostSpec::Quadratic => "quadratic".into(),
            CostSpec::Shannon => "shannon".into(),
            CostSpec::Tsallis { sigma } => format!("tsallis({sigma})"),
            CostSpec::Tabulated(t) => format!("tabulated({} nodes)", t.nodes.len()),
        }
    }

    /// Evaluates `c(q)` for `q` in `[0, 1]`.
    pub fn value(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain(format!("posterior {q} outside [0, 1]")));
        }
        self.check_params()?;
        Ok(match self {
            CostSpec::Quadratic => q * q - q,
            CostSpec::Shannon => {
                let side = |t: f64| if t == 0.0 { 0.0 } else { t * t.ln() };
                side(q) + side(1.0 - q)
            }
            CostSpec::Tsallis { sigma } => {
                let s = *sigma;
                (q.powf(s) + (1.0 - q).powf(s) - 2f64.powf(1.0 - s)) / (s * (s - 1.0))
            }
            CostSpec::Tabulated(t) => t.value_at(q),
        })
    }

    /// Evaluates `c'(q)` for `q` strictly inside `(0, 1)`.
    ///
    /// Use [`CostSpec::slope_at_zero`] for the one-sided boundary limits.
    pub fn derivative(&self, q: f64) -> Result<f64> {
        if !q.is_finite() || q <= 0.0 || q >= 1.0 {
            return Err(Error::Domain(format!("posterior {q} outside (0, 1)")));
        }
        self.check_params()?;
        Ok(match self {
            CostSpec::Quadratic => 2.0 * q - 1.0,
            CostSpec::Shannon => (q / (1.0 - q)).ln(),
            CostSpec::Tsallis { sigma } => {
                let s = *sigma;
                (q.powf(s - 1.0) - (1.0 - q).powf(s - 1.0)) / (s - 1.0)
            }
            CostSpec::Tabulated(t) => t.derivative_at(q),
        })
    }

    /// One-sided limit of `c'` at `q = 0` (`Unbounded` means `-inf`).
    pub fn slope_at_zero(&self) -> BoundarySlope {
        match self {
            CostSpec::Quadratic => BoundarySlope::Finite(-1.0),
            CostSpec::Shannon => BoundarySlope::Unbounded,
            CostSpec::Tsallis { sigma } => {
                if *sigma > 1.0 {
                    BoundarySlope::Finite(-1.0 / (sigma - 1.0))
                } else {
                    BoundarySlope::Unbounded
                }
            }
            CostSpec::Tabulated(t) => BoundarySlope::Finite(t.node_slopes[0]),
        }
    }

    /// One-sided limit of `c'` at `q = 1` (`Unbounded` means `+inf`).
    /// Mirrors the slope at 0 for the catalog; tabulated costs use their
    /// own last segment.
    pub fn slope_at_one(&self) -> BoundarySlope {
        match self {
            CostSpec::Tabulated(t) => BoundarySlope::Finite(t.node_slopes[t.nodes.len() - 1]),
            _ => match self.slope_at_zero() {
                BoundarySlope::Finite(slope) => BoundarySlope::Finite(-slope),
                BoundarySlope::Unbounded => BoundarySlope::Unbounded,
            },
        }
    }

    /// Checks symmetry and strict convexity over a validation grid.
    ///
    /// Never fails; problems are reported in the returned record.
    pub fn validate(&self, grid_size: usize) -> CostValidation {
        let n = grid_size.max(3);
        let mut finite = self.check_params().is_ok();
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let q = i as f64 / (n - 1) as f64;
            match self.value(q) {
                Ok(v) if v.is_finite() => values.push(v),
                _ => {
                    finite = false;
                    values.push(f64::NAN);
                }
            }
        }

        let mut max_symmetry_gap: f64 = 0.0;
        if finite {
            for i in 0..n {
                let gap = (values[i] - values[n - 1 - i]).abs();
                max_symmetry_gap = max_symmetry_gap.max(gap);
            }
        } else {
            max_symmetry_gap = f64::NAN;
        }

        // For tabulated costs the convexity test runs on the nodes
        // themselves: midpoints of a foreign grid can land inside a linear
        // segment, where the interpolant is not strictly convex.
        let mut min_convexity_margin = f64::INFINITY;
        if finite {
            match self {
                CostSpec::Tabulated(t) => {
                    for w in t.nodes.windows(3) {
                        let left = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
                        let right = (w[2].1 - w[1].1) / (w[2].0 - w[1].0);
                        min_convexity_margin = min_convexity_margin.min(right - left);
                    }
                }
                _ => {
                    for i in 1..n - 1 {
                        let margin = 0.5 * (values[i - 1] + values[i + 1]) - values[i];
                        min_convexity_margin = min_convexity_margin.min(margin);
                    }
                }
            }
        } else {
            min_convexity_margin = f64::NAN;
        }

        CostValidation {
            grid_size: n,
            finite,
            symmetric: finite && max_symmetry_gap <= SYMMETRY_TOL,
            strictly_convex: finite && min_convexity_margin > 0.0,
            max_symmetry_gap,
            min_convexity_margin,
        }
    }
}

/// Outcome of [`CostSpec::validate`], one flag per checked property.
#[derive(Debug, Clone)]
pub struct CostValidation {
    pub grid_size: usize,
    pub finite: bool,
    pub symmetric: bool,
    pub strictly_convex: bool,
    pub max_symmetry_gap: f64,
    pub min_convexity_margin: f64,
}

impl CostValidation {
    pub fn passed(&self) -> bool {
        self.finite && self.symmetric && self.strictly_convex
    }
}

/// Reward-utility family for correct guesses, anchored at `u1(x0) = w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UtilityFamily {
    /// `u1(x) = w + slope * (x - x0)`.
    Linear { slope: f64 },
    /// `u1(x) = w + (x - x0)^exponent`.
    Power { exponent: f64 },
}

/// An agent: intrinsic incentive `w >= 0` plus an increasing, unbounded
/// reward utility on `[x0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Agent {
    intrinsic: f64,
    x0: f64,
    family: UtilityFamily,
}

impl Agent {
    /// Linear utility with unit slope and `x0 = 0`.
    pub fn linear(intrinsic: f64) -> Result<Self> {
        Self::new(intrinsic, 0.0, UtilityFamily::Linear { slope: 1.0 })
    }

    pub fn new(intrinsic: f64, x0: f64, family: UtilityFamily) -> Result<Self> {
        if !intrinsic.is_finite() || intrinsic < 0.0 {
            return Err(Error::Domain(format!(
                "intrinsic incentive must be finite and >= 0, got {intrinsic}"
            )));
        }
        if !x0.is_finite() {
            return Err(Error::Domain("lowest reward must be finite".into()));
        }
        match family {
            UtilityFamily::Linear { slope } if !slope.is_finite() || slope <= 0.0 => {
                return Err(Error::Domain(format!(
                    "utility slope must be positive, got {slope}"
                )))
            }
            UtilityFamily::Power { exponent } if !exponent.is_finite() || exponent <= 0.0 => {
                return Err(Error::Domain(format!(
                    "utility exponent must be positive, got {exponent}"
                )))
            }
            _ => {}
        }
        Ok(Self {
            intrinsic,
            x0,
            family,
        })
    }

    /// Intrinsic incentive `w = u1(x0)`.
    pub fn intrinsic(&self) -> f64 {
        self.intrinsic
    }

    /// Lowest extrinsic reward `x0`.
    pub fn lowest_reward(&self) -> f64 {
        self.x0
    }

    pub fn family(&self) -> UtilityFamily {
        self.family
    }

    /// Utility `u1(x)` of a correct guess at reward `x >= x0`.
    pub fn reward_utility(&self, x: f64) -> Result<f64> {
        if !x.is_finite() || x < self.x0 {
            return Err(Error::Domain(format!(
                "reward {x} below the lowest reward {}",
                self.x0
            )));
        }
        Ok(match self.family {
            UtilityFamily::Linear { slope } => self.intrinsic + slope * (x - self.x0),
            UtilityFamily::Power { exponent } => self.intrinsic + (x - self.x0).powf(exponent),
        })
    }
}

/// A task: ex-ante uncertainty `phi` in `[0, 1]` and difficulty `kappa > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Task {
    phi: f64,
    kappa: f64,
}

impl Task {
    pub fn new(phi: f64, kappa: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&phi) {
            return Err(Error::Domain(format!(
                "ex-ante uncertainty {phi} outside [0, 1]"
            )));
        }
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(Error::Domain(format!(
                "difficulty must be finite and positive, got {kappa}"
            )));
        }
        Ok(Self { phi, kappa })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }
}

/// The prior `p <= 1/2` representing uncertainty `phi`, i.e. the unique
/// `p` in `[0, 1/2]` with `1 - 2|p - 1/2| = phi`.
pub fn canonical_prior(phi: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&phi) {
        return Err(Error::Domain(format!(
            "ex-ante uncertainty {phi} outside [0, 1]"
        )));
    }
    Ok(phi / 2.0)
}

/// A finite distribution over posteriors with mean equal to the prior.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    atoms: Vec<(f64, f64)>,
}

impl Signal {
    /// Builds a signal from `(posterior, weight)` atoms, checking that the
    /// weights sum to one and the mean matches `prior`.
    pub fn new(atoms: Vec<(f64, f64)>, prior: f64) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Domain("signal needs at least one atom".into()));
        }
        let mut total = 0.0;
        let mut mean = 0.0;
        for &(q, weight) in &atoms {
            if !(0.0..=1.0).contains(&q) {
                return Err(Error::Domain(format!("posterior {q} outside [0, 1]")));
            }
            if !(0.0..=1.0).contains(&weight) {
                return Err(Error::Domain(format!("weight {weight} outside [0, 1]")));
            }
            total += weight;
            mean += weight * q;
        }
        if (total - 1.0).abs() > PLAUSIBILITY_TOL {
            return Err(Error::Domain(format!(
                "signal weights sum to {total}, expected 1"
            )));
        }
        if (mean - prior).abs() > PLAUSIBILITY_TOL {
            return Err(Error::BayesPlausibility { mean, prior });
        }
        Ok(Self { atoms })
    }

    /// The uninformative signal concentrated at the prior.
    pub fn degenerate(prior: f64) -> Result<Self> {
        Self::new(vec![(prior, 1.0)], prior)
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// Posterior mean, equal to the prior by construction.
    pub fn mean(&self) -> f64 {
        self.atoms.iter().map(|&(q, w)| q * w).sum()
    }

    /// True when the signal moves beliefs: at least two distinct posteriors
    /// carry positive weight.
    pub fn is_informative(&self) -> bool {
        let mut first: Option<f64> = None;
        for &(q, w) in &self.atoms {
            if w == 0.0 {
                continue;
            }
            match first {
                None => first = Some(q),
                Some(q0) if q != q0 => return true,
                _ => {}
            }
        }
        false
    }
}

/// Posterior-separable signal cost `kappa * (E[c(q)] - c(p))`.
///
/// Nonnegative for every Bayes-plausible signal, zero exactly when all
/// atoms sit at the prior.
pub fn signal_cost(cost: &CostSpec, kappa: f64, prior: f64, signal: &Signal) -> Result<f64> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::Domain(format!(
            "difficulty must be positive, got {kappa}"
        )));
    }
    if !(0.0..=1.0).contains(&prior) {
        return Err(Error::Domain(format!("prior {prior} outside [0, 1]")));
    }
    let mean = signal.mean();
    if (mean - prior).abs() > PLAUSIBILITY_TOL {
        return Err(Error::BayesPlausibility { mean, prior });
    }
    let mut expected = 0.0;
    for &(q, weight) in signal.atoms() {
        expected += weight * cost.value(q)?;
    }
    Ok(kappa * (expected - cost.value(prior)?))
}

/// Solution of the attention problem at one reward.
#[derive(Debug, Clone)]
pub struct SolveReport {
    /// Low posterior of the optimal support, in `[0, 1/2]`.
    pub cutoff: f64,
    pub signal: Signal,
    /// Optimal net payoff `G - C`.
    pub value: f64,
    /// Ex-ante probability of guessing correctly, in `[1/2, 1]`.
    pub accuracy: f64,
    /// Information cost paid at the optimum.
    pub effort: f64,
    pub informative: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Vec<CostSpec> {
        vec![
            CostSpec::Quadratic,
            CostSpec::Shannon,
            CostSpec::tsallis(0.5).unwrap(),
            CostSpec::tsallis(3.0).unwrap(),
        ]
    }

    #[test]
    fn canonical_prior_inverts_the_uncertainty_map() {
        assert_eq!(canonical_prior(0.75).unwrap(), 0.375);
        assert_eq!(canonical_prior(1.0).unwrap(), 0.5);
        assert_eq!(canonical_prior(0.0).unwrap(), 0.0);
        assert!(canonical_prior(-0.1).is_err());
        assert!(canonical_prior(1.1).is_err());
    }

    #[test]
    fn canonical_prior_round_trip_is_exact() {
        // Exact on dyadic uncertainties, where every step is representable.
        for i in 0..=1024 {
            let phi = i as f64 / 1024.0;
            let p = canonical_prior(phi).unwrap();
            assert_eq!(1.0 - 2.0 * (p - 0.5).abs(), phi);
        }
        // Within one rounding step elsewhere.
        for i in 0..=999 {
            let phi = i as f64 / 999.0;
            let p = canonical_prior(phi).unwrap();
            assert!((1.0 - 2.0 * (p - 0.5).abs() - phi).abs() <= 2.0 * f64::EPSILON);
        }
    }

    #[test]
    fn quadratic_cost_values() {
        let c = CostSpec::Quadratic;
        assert_eq!(c.value(0.25).unwrap(), -0.1875);
        assert_eq!(c.value(0.5).unwrap(), -0.25);
        assert!(c.value(-0.01).is_err());
        assert!(c.value(1.01).is_err());
    }

    #[test]
    fn shannon_cost_boundary_convention() {
        let c = CostSpec::Shannon;
        assert_eq!(c.value(0.0).unwrap(), 0.0);
        assert_eq!(c.value(1.0).unwrap(), 0.0);
        assert!((c.value(0.5).unwrap() + std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn cost_symmetry_on_fine_grid() {
        for c in catalog() {
            for i in 0..=1000 {
                let q = i as f64 / 1000.0;
                let gap = (c.value(q).unwrap() - c.value(1.0 - q).unwrap()).abs();
                assert!(gap <= 1e-10, "{} asymmetric at {q}: {gap}", c.label());
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(CostSpec::Quadratic.derivative(0.25).unwrap(), -0.5);
        let shannon_slope = CostSpec::Shannon.derivative(0.25).unwrap();
        assert!((shannon_slope - (1.0f64 / 3.0).ln()).abs() < 1e-12);
        assert!((shannon_slope + 1.0986122886681098).abs() < 1e-12);
        assert!(CostSpec::Shannon.derivative(0.0).is_err());
        assert_eq!(CostSpec::Shannon.slope_at_zero(), BoundarySlope::Unbounded);
        assert_eq!(CostSpec::Shannon.slope_at_one(), BoundarySlope::Unbounded);
        assert_eq!(
            CostSpec::Quadratic.slope_at_zero(),
            BoundarySlope::Finite(-1.0)
        );
        assert_eq!(
            CostSpec::Quadratic.slope_at_one(),
            BoundarySlope::Finite(1.0)
        );
    }

    #[test]
    fn derivative_matches_centered_differences() {
        let h = 1e-6;
        for c in catalog() {
            for i in 1..100 {
                let q = i as f64 / 100.0;
                let fd = (c.value(q + h).unwrap() - c.value(q - h).unwrap()) / (2.0 * h);
                let exact = c.derivative(q).unwrap();
                assert!(
                    (fd - exact).abs() <= 1e-6,
                    "{} at {q}: fd {fd} vs {exact}",
                    c.label()
                );
            }
        }
    }

    #[test]
    fn tsallis_two_matches_quadratic_up_to_constant() {
        let t = CostSpec::tsallis(2.0).unwrap();
        for i in 0..=100 {
            let q = i as f64 / 100.0;
            let expected = CostSpec::Quadratic.value(q).unwrap() + 0.25;
            assert!((t.value(q).unwrap() - expected).abs() < 1e-14);
        }
        assert_eq!(t.slope_at_zero(), BoundarySlope::Finite(-1.0));
    }

    #[test]
    fn tsallis_rejects_bad_exponents() {
        assert!(CostSpec::tsallis(1.0).is_err());
        assert!(CostSpec::tsallis(0.0).is_err());
        assert!(CostSpec::tsallis(-2.0).is_err());
    }

    #[test]
    fn validate_catalog_passes() {
        for c in catalog() {
            let report = c.validate(101);
            assert!(report.passed(), "{} failed: {report:?}", c.label());
        }
    }

    #[test]
    fn validate_flags_asymmetric_table() {
        // c(q) = q^2 is convex but not symmetric.
        let nodes: Vec<(f64, f64)> = (0..=100)
            .map(|i| {
                let q = i as f64 / 100.0;
                (q, q * q)
            })
            .collect();
        let c = CostSpec::tabulated(nodes).unwrap();
        let report = c.validate(101);
        assert!(!report.symmetric);
        assert!(report.strictly_convex);
        assert!(!report.passed());
    }

    #[test]
    fn validate_flags_linear_table() {
        let nodes = vec![(0.0, 0.0), (0.25, 0.25), (0.5, 0.5), (0.75, 0.75), (1.0, 1.0)];
        let c = CostSpec::tabulated(nodes).unwrap();
        let report = c.validate(101);
        assert!(!report.strictly_convex);
    }

    #[test]
    fn tabulated_interpolates_values_and_slopes() {
        let nodes: Vec<(f64, f64)> = (0..=1000)
            .map(|i| {
                let q = i as f64 / 1000.0;
                (q, q * q - q)
            })
            .collect();
        let c = CostSpec::tabulated(nodes).unwrap();
        assert!((c.value(0.25).unwrap() + 0.1875).abs() < 1e-6);
        assert!((c.derivative(0.25).unwrap() + 0.5).abs() < 1e-5);
        assert!(c.validate(1001).passed());
    }

    #[test]
    fn tabulated_rejects_malformed_grids() {
        assert!(TabulatedCost::new(vec![(0.0, 0.0), (1.0, 0.0)]).is_err());
        assert!(TabulatedCost::new(vec![(0.1, 0.0), (0.5, -0.2), (1.0, 0.0)]).is_err());
        assert!(TabulatedCost::new(vec![(0.0, 0.0), (0.5, f64::NAN), (1.0, 0.0)]).is_err());
        assert!(TabulatedCost::new(vec![(0.0, 0.0), (0.5, -0.2), (0.5, -0.2), (1.0, 0.0)]).is_err());
    }

    #[test]
    fn tabulated_csv_round_trip() {
        let text = "q,c\n0,0\n0.25,-0.1875\n0.5,-0.25\n0.75,-0.1875\n1,0\n";
        let c = TabulatedCost::from_csv(text).unwrap();
        assert_eq!(c.nodes().len(), 5);
        assert!(TabulatedCost::from_csv("posterior,cost\n0,0\n").is_err());
        assert!(TabulatedCost::from_csv("q,c\n0,zero\n1,0\n").is_err());
        assert!(TabulatedCost::from_csv("").is_err());
    }

    #[test]
    fn agent_anchors_utility_at_the_intrinsic_incentive() {
        let agent = Agent::linear(1.5).unwrap();
        assert_eq!(agent.reward_utility(0.0).unwrap(), 1.5);
        assert_eq!(agent.reward_utility(2.0).unwrap(), 3.5);
        assert!(agent.reward_utility(-0.1).is_err());

        let power = Agent::new(2.0, 1.0, UtilityFamily::Power { exponent: 2.0 }).unwrap();
        assert_eq!(power.reward_utility(1.0).unwrap(), 2.0);
        assert_eq!(power.reward_utility(3.0).unwrap(), 6.0);

        assert!(Agent::linear(-0.5).is_err());
        assert!(Agent::new(1.0, 0.0, UtilityFamily::Linear { slope: 0.0 }).is_err());
        assert!(Agent::new(1.0, 0.0, UtilityFamily::Power { exponent: -1.0 }).is_err());
    }

    #[test]
    fn signal_checks_weights_and_plausibility() {
        let signal = Signal::new(vec![(0.25, 0.75), (0.75, 0.25)], 0.375).unwrap();
        assert!((signal.mean() - 0.375).abs() < 1e-15);
        assert!(signal.is_informative());
        assert!(!Signal::degenerate(0.3).unwrap().is_informative());

        assert!(Signal::new(vec![(0.25, 0.6), (0.75, 0.25)], 0.375).is_err());
        assert!(matches!(
            Signal::new(vec![(0.25, 0.75), (0.75, 0.25)], 0.5),
            Err(Error::BayesPlausibility { .. })
        ));
        assert!(Signal::new(vec![], 0.5).is_err());
        assert!(Signal::new(vec![(1.25, 1.0)], 1.25).is_err());
    }

    #[test]
    fn signal_cost_examples() {
        let quad = CostSpec::Quadratic;
        let two_point = Signal::new(vec![(0.25, 0.75), (0.75, 0.25)], 0.375).unwrap();
        // 0.75 c(1/4) + 0.25 c(3/4) - c(3/8), all dyadic and exact.
        let expected = 0.75 * (-0.1875) + 0.25 * (-0.1875) - (0.140625 - 0.375);
        assert_eq!(expected, 0.046875);
        assert_eq!(
            signal_cost(&quad, 1.0, 0.375, &two_point).unwrap(),
            0.046875
        );

        for c in catalog() {
            let degenerate = Signal::degenerate(0.375).unwrap();
            assert_eq!(signal_cost(&c, 3.0, 0.375, &degenerate).unwrap(), 0.0);
        }

        let revealing = Signal::new(vec![(0.0, 0.5), (1.0, 0.5)], 0.5).unwrap();
        assert_eq!(signal_cost(&quad, 1.0, 0.5, &revealing).unwrap(), 0.25);

        let mismatched = Signal::new(vec![(0.25, 0.5), (0.75, 0.5)], 0.5).unwrap();
        assert!(signal_cost(&quad, 1.0, 0.375, &mismatched).is_err());
        assert!(signal_cost(&quad, 0.0, 0.5, &revealing).is_err());
    }

    #[test]
    fn task_validates_its_ranges() {
        assert!(Task::new(0.5, 1.0).is_ok());
        assert!(Task::new(-0.1, 1.0).is_err());
        assert!(Task::new(1.1, 1.0).is_err());
        assert!(Task::new(0.5, 0.0).is_err());
        assert!(Task::new(0.5, f64::INFINITY).is_err());
    }
}
