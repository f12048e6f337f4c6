//! Run configuration: defaults, `key=value` config file, CLI overrides.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use inatt_core::model::{Agent, CostSpec, TabulatedCost, UtilityFamily};
use inatt_core::{grid, Result};

/// Environment variable consulted for a config path when `--config` is
/// absent.
pub const CONFIG_ENV_VAR: &str = "INATT_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewardScale {
    Linear,
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UtilityKind {
    Linear,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostKind {
    Quadratic,
    Shannon,
    Tsallis,
    Tabulated,
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub w: f64,
    pub utility: UtilityKind,
    pub beta: f64,
    pub gamma: f64,
    pub x0: f64,
    pub cost: CostKind,
    pub sigma: f64,
    pub cost_file: Option<PathBuf>,
    pub grid_n: usize,
    pub seed: u64,
    pub threads: usize,
    pub reward_min: Option<f64>,
    pub reward_max: Option<f64>,
    pub reward_count: usize,
    pub reward_scale: RewardScale,
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            w: 1.0,
            utility: UtilityKind::Linear,
            beta: 1.0,
            gamma: 1.0,
            x0: 0.0,
            cost: CostKind::Quadratic,
            sigma: 1.5,
            cost_file: None,
            grid_n: 4001,
            seed: 42,
            threads: 1,
            reward_min: None,
            reward_max: None,
            reward_count: 41,
            reward_scale: RewardScale::Geometric,
            out_dir: PathBuf::from("."),
        }
    }
}

impl RunConfig {
    /// Applies `key=value` pairs from a config file.
    pub fn apply_file(&mut self, path: &Path) -> std::result::Result<(), String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {} is not key=value: `{raw}`", lineno + 1))?;
            self.apply_pair(key.trim(), value.trim())
                .map_err(|e| format!("config line {}: {e}", lineno + 1))?;
        }
        Ok(())
    }

    fn apply_pair(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> std::result::Result<T, String> {
            value
                .parse()
                .map_err(|_| format!("bad value `{value}` for `{key}`"))
        }
        match key {
            "w" => self.w = num(key, value)?,
            "beta" => self.beta = num(key, value)?,
            "gamma" => self.gamma = num(key, value)?,
            "utility" => self.utility = parse_utility(value)?,
            "x0" => self.x0 = num(key, value)?,
            "cost" => self.cost = parse_cost_kind(value)?,
            "sigma" => self.sigma = num(key, value)?,
            "cost-file" => self.cost_file = Some(PathBuf::from(value)),
            "grid-n" => self.grid_n = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            "threads" => self.threads = num(key, value)?,
            "reward-min" => self.reward_min = Some(num(key, value)?),
            "reward-max" => self.reward_max = Some(num(key, value)?),
            "reward-count" => self.reward_count = num(key, value)?,
            "reward-scale" => self.reward_scale = parse_scale(value)?,
            "out-dir" => self.out_dir = PathBuf::from(value),
            other => return Err(format!("unknown config key `{other}`")),
        }
        Ok(())
    }

    /// Invariants that every command relies on.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.grid_n < 101 || self.grid_n.is_multiple_of(2) {
            return Err(format!(
                "grid-n must be odd and >= 101, got {}",
                self.grid_n
            ));
        }
        if self.reward_count == 0 {
            return Err("reward-count must be at least 1".into());
        }
        if self.threads == 0 {
            return Err("threads must be at least 1".into());
        }
        if let (Some(lo), Some(hi)) = (self.reward_min, self.reward_max) {
            if hi <= lo {
                return Err(format!("reward-max {hi} must exceed reward-min {lo}"));
            }
        }
        Ok(())
    }

    pub fn agent(&self) -> Result<Agent> {
        let family = match self.utility {
            UtilityKind::Linear => UtilityFamily::Linear { slope: self.beta },
            UtilityKind::Power => UtilityFamily::Power {
                exponent: self.gamma,
            },
        };
        Agent::new(self.w, self.x0, family)
    }

    pub fn cost(&self) -> std::result::Result<CostSpec, String> {
        match self.cost {
            CostKind::Quadratic => Ok(CostSpec::Quadratic),
            CostKind::Shannon => Ok(CostSpec::Shannon),
            CostKind::Tsallis => CostSpec::tsallis(self.sigma).map_err(|e| e.to_string()),
            CostKind::Tabulated => {
                let path = self
                    .cost_file
                    .as_ref()
                    .ok_or("cost=tabulated needs cost-file")?;
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let table = TabulatedCost::from_csv(&text).map_err(|e| e.to_string())?;
                let spec = CostSpec::Tabulated(table);
                let report = spec.validate(1001);
                if !report.passed() {
                    return Err(format!(
                        "tabulated cost failed validation: symmetric={} strictly_convex={} \
                         (max symmetry gap {:e}, min convexity margin {:e})",
                        report.symmetric,
                        report.strictly_convex,
                        report.max_symmetry_gap,
                        report.min_convexity_margin
                    ));
                }
                Ok(spec)
            }
        }
    }

    /// Resolves a user-supplied output path against `out_dir` when it is
    /// relative.
    pub fn resolve_out(&self, path: &Path) -> PathBuf {
        if path.is_absolute() {
            path.to_path_buf()
        } else {
            self.out_dir.join(path)
        }
    }

    /// Reward grid for curve and sweep commands.
    pub fn reward_grid(&self) -> Vec<f64> {
        let lo = self.reward_min.unwrap_or(self.x0);
        let hi = self.reward_max.unwrap_or(self.x0 + 20.0);
        match self.reward_scale {
            RewardScale::Linear => grid::uniform(lo, hi, self.reward_count),
            RewardScale::Geometric => grid::log1p_rewards(lo, hi - lo, self.reward_count),
        }
    }

    /// Key/value view used to echo the configuration into CSV comments.
    pub fn summary_pairs(&self) -> BTreeMap<&'static str, String> {
        let mut pairs = BTreeMap::new();
        pairs.insert("w", self.w.to_string());
        pairs.insert(
            "utility",
            match self.utility {
                UtilityKind::Linear => format!("linear(beta={})", self.beta),
                UtilityKind::Power => format!("power(gamma={})", self.gamma),
            },
        );
        pairs.insert("x0", self.x0.to_string());
        let cost_label = match self.cost {
            CostKind::Quadratic => "quadratic".to_string(),
            CostKind::Shannon => "shannon".to_string(),
            CostKind::Tsallis => format!("tsallis({})", self.sigma),
            CostKind::Tabulated => match &self.cost_file {
                Some(path) => format!("tabulated({})", path.display()),
                None => "tabulated(?)".to_string(),
            },
        };
        pairs.insert("cost", cost_label);
        pairs.insert("grid_n", self.grid_n.to_string());
        pairs.insert("seed", self.seed.to_string());
        pairs
    }
}

pub fn parse_utility(value: &str) -> std::result::Result<UtilityKind, String> {
    match value {
        "linear" => Ok(UtilityKind::Linear),
        "power" => Ok(UtilityKind::Power),
        other => Err(format!("utility must be linear or power, got `{other}`")),
    }
}

pub fn parse_cost_kind(value: &str) -> std::result::Result<CostKind, String> {
    match value {
        "quadratic" => Ok(CostKind::Quadratic),
        "shannon" => Ok(CostKind::Shannon),
        "tsallis" => Ok(CostKind::Tsallis),
        "tabulated" => Ok(CostKind::Tabulated),
        other => Err(format!(
            "cost must be quadratic, shannon, tsallis, or tabulated, got `{other}`"
        )),
    }
}

pub fn parse_scale(value: &str) -> std::result::Result<RewardScale, String> {
    match value {
        "linear" => Ok(RewardScale::Linear),
        "geometric" => Ok(RewardScale::Geometric),
        other => Err(format!(
            "reward-scale must be linear or geometric, got `{other}`"
        )),
    }
}
