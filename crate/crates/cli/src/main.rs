//! `inatt`: solve binary guessing tasks under costly attention, compare
//! their complexity, regenerate the analytic figures, and run the seeded
//! verification suites.

mod config;
mod figures;
mod output;
mod parallel;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use inatt_core::model::Task;
use inatt_core::oracle::oracle_solve;
use inatt_core::order::{compare, compare_by_sweep};
use inatt_core::solver::optimal_signal;
use inatt_core::thresholds::phi_w_inverse;
use inatt_core::{grid, Error};

use config::{RunConfig, CONFIG_ENV_VAR};
use output::{emit, fmt_f64, Csv};

const EXIT_USAGE: u8 = 2;
const EXIT_FAILURE: u8 = 1;
const EXIT_VIOLATIONS: u8 = 3;

#[derive(Parser)]
#[command(
    name = "inatt",
    version,
    about = "Rational-inattention task solver, complexity comparator, and figure generator"
)]
struct Cli {
    /// Config file (key=value lines); defaults to $INATT_CONFIG when set.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Intrinsic incentive w >= 0.
    #[arg(long, global = true)]
    w: Option<f64>,

    /// Utility family: linear or power.
    #[arg(long, global = true)]
    utility: Option<String>,

    /// Slope of the linear utility family.
    #[arg(long, global = true)]
    beta: Option<f64>,

    /// Exponent of the power utility family.
    #[arg(long, global = true)]
    gamma: Option<f64>,

    /// Lowest extrinsic reward.
    #[arg(long, global = true)]
    x0: Option<f64>,

    /// Marginal cost: quadratic, shannon, tsallis, or tabulated.
    #[arg(long, global = true)]
    cost: Option<String>,

    /// Tsallis exponent (with --cost tsallis).
    #[arg(long, global = true)]
    sigma: Option<f64>,

    /// Two-column CSV `q,c` (with --cost tabulated).
    #[arg(long, global = true)]
    cost_file: Option<PathBuf>,

    /// Posterior grid size for the oracle; odd, >= 101.
    #[arg(long, global = true)]
    grid_n: Option<usize>,

    /// Seed for randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for grid sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true)]
    reward_min: Option<f64>,

    #[arg(long, global = true)]
    reward_max: Option<f64>,

    #[arg(long, global = true)]
    reward_count: Option<usize>,

    /// Reward grid spacing: linear or geometric.
    #[arg(long, global = true)]
    reward_scale: Option<String>,

    /// Directory that relative output paths resolve against.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one task at one reward.
    Solve {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        x: f64,
        /// Cross-check against the grid-concavification oracle.
        #[arg(long)]
        oracle: bool,
        /// Also write the report as one CSV row.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Expected accuracy over the reward grid.
    AccuracyCurve {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal information cost over the reward grid.
    EffortCurve {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide the complexity order between two tasks.
    Compare {
        #[arg(long)]
        a_phi: f64,
        #[arg(long)]
        a_kappa: f64,
        #[arg(long)]
        b_phi: f64,
        #[arg(long)]
        b_kappa: f64,
        /// Decide by accuracy sweep instead of the threshold test.
        #[arg(long)]
        sweep: bool,
    },
    /// phi_w over a difficulty grid (CSV), kappa_w in the header.
    Thresholds {
        /// Difficulty grid as MIN:MAX:COUNT.
        #[arg(long)]
        kappa_grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the more-complex-but-less-effort task and its certificate.
    ConstructDominating {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        kappa: f64,
        /// Certificate CSV path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find rewards where the effort ranking of two difficulties flips.
    ReversalWitness {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        kappa2: f64,
        #[arg(long, default_value_t = 100.0)]
        search_bound: f64,
    },
    /// Regenerate figure data (1: concavification, 2: accuracy polyline,
    /// 3/4: comparison regions, 5: regions plus the constructed task).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        number: u8,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also render the data as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Stake for figures 1-2.
        #[arg(long)]
        u1: Option<f64>,
        /// Task difficulty (figures 1-2: the cost scale; 3-5: the
        /// reference task).
        #[arg(long)]
        kappa: Option<f64>,
        /// Reference uncertainty for figures 3-5.
        #[arg(long)]
        phi: Option<f64>,
    },
    /// Run the seeded property suites; exit 3 on any violation.
    Verify {
        #[arg(long)]
        samples: Option<usize>,
        /// Violations CSV path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match resolve_config(&cli) {
        Ok(config) => config,
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!("run `inatt --help` for usage");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match dispatch(&cli.command, &config) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

/// Defaults, then the config file, then command-line overrides.
fn resolve_config(cli: &Cli) -> Result<RunConfig, String> {
    let mut config = RunConfig::default();
    let path = cli
        .config
        .clone()
        .or_else(|| std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from));
    if let Some(path) = path {
        config.apply_file(&path)?;
    }
    if let Some(w) = cli.w {
        config.w = w;
    }
    if let Some(utility) = &cli.utility {
        config.utility = config::parse_utility(utility)?;
    }
    if let Some(beta) = cli.beta {
        config.beta = beta;
    }
    if let Some(gamma) = cli.gamma {
        config.gamma = gamma;
    }
    if let Some(x0) = cli.x0 {
        config.x0 = x0;
    }
    if let Some(cost) = &cli.cost {
        config.cost = config::parse_cost_kind(cost)?;
    }
    if let Some(sigma) = cli.sigma {
        config.sigma = sigma;
    }
    if let Some(cost_file) = &cli.cost_file {
        config.cost_file = Some(cost_file.clone());
    }
    if let Some(grid_n) = cli.grid_n {
        config.grid_n = grid_n;
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(threads) = cli.threads {
        config.threads = threads;
    }
    if let Some(reward_min) = cli.reward_min {
        config.reward_min = Some(reward_min);
    }
    if let Some(reward_max) = cli.reward_max {
        config.reward_max = Some(reward_max);
    }
    if let Some(reward_count) = cli.reward_count {
        config.reward_count = reward_count;
    }
    if let Some(scale) = &cli.reward_scale {
        config.reward_scale = config::parse_scale(scale)?;
    }
    if let Some(out_dir) = &cli.out_dir {
        config.out_dir = out_dir.clone();
    }
    config.validate()?;
    Ok(config)
}

fn dispatch(command: &Command, config: &RunConfig) -> inatt_core::Result<ExitCode> {
    let agent = config.agent()?;
    let cost = config.cost().map_err(Error::InvalidCost)?;
    match command {
        Command::Solve {
            phi,
            kappa,
            x,
            oracle,
            csv,
        } => {
            let task = Task::new(*phi, *kappa)?;
            let report = optimal_signal(*x, &agent, &task, &cost)?;
            let atoms: Vec<String> = report
                .signal
                .atoms()
                .iter()
                .map(|(q, weight)| format!("{q}:{weight}"))
                .collect();
            println!("cutoff={}", report.cutoff);
            println!("informative={}", report.informative);
            println!("atoms={}", atoms.join(","));
            println!("value={}", report.value);
            println!("accuracy={}", report.accuracy);
            println!("effort={}", report.effort);
            if *oracle {
                let check = oracle_solve(*x, &agent, &task, &cost, config.grid_n)?;
                println!("oracle_cutoff={}", check.cutoff);
                println!("oracle_value={}", check.value);
                println!("oracle_accuracy={}", check.accuracy);
                println!("oracle_effort={}", check.effort);
            }
            if let Some(path) = csv {
                let mut doc = Csv::new();
                for (key, value) in config.summary_pairs() {
                    doc.comment(&format!("{key}={value}"));
                }
                doc.comment(&format!(
                    "phi={} kappa={} x={}",
                    fmt_f64(*phi),
                    fmt_f64(*kappa),
                    fmt_f64(*x)
                ));
                doc.header(&["cutoff", "value", "accuracy", "effort", "informative"]);
                doc.row(&[
                    fmt_f64(report.cutoff),
                    fmt_f64(report.value),
                    fmt_f64(report.accuracy),
                    fmt_f64(report.effort),
                    report.informative.to_string(),
                ]);
                emit(Some(path), &doc.finish()).map_err(io_error)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::AccuracyCurve { phi, kappa, out } | Command::EffortCurve { phi, kappa, out } => {
            let which = match command {
                Command::AccuracyCurve { .. } => "accuracy",
                _ => "effort",
            };
            let task = Task::new(*phi, *kappa)?;
            let rewards = config.reward_grid();
            let csv =
                figures::curve_csv(which, &task, &agent, &cost, &rewards, config.threads)?;
            emit(out.as_deref(), &csv).map_err(io_error)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            a_phi,
            a_kappa,
            b_phi,
            b_kappa,
            sweep,
        } => {
            let a = Task::new(*a_phi, *a_kappa)?;
            let b = Task::new(*b_phi, *b_kappa)?;
            let result = if *sweep {
                let rewards = config.reward_grid();
                compare_by_sweep(&a, &b, &agent, &cost, &rewards)?
            } else {
                compare(&a, &b, &agent, &cost)?
            };
            println!("verdict={:?}", result.verdict);
            println!("method={}", if *sweep { "sweep" } else { "thresholds" });
            println!("b_dominates_a={}", result.b_dominates_a);
            println!("a_dominates_b={}", result.a_dominates_b);
            println!("kappa_w={}", result.details.kappa_w);
            println!("a_trivial={}", result.details.a_trivial);
            println!("b_trivial={}", result.details.b_trivial);
            println!("phi_w_kappa_a={}", result.details.phi_w_kappa_a);
            println!("phi_w_kappa_b={}", result.details.phi_w_kappa_b);
            println!("bar_vs_a={}", result.details.bar_vs_a);
            println!("bar_vs_b={}", result.details.bar_vs_b);
            Ok(ExitCode::SUCCESS)
        }
        Command::Thresholds { kappa_grid, out } => {
            let kappas = parse_kappa_grid(kappa_grid)?;
            let csv = figures::thresholds_csv(&kappas, &agent, &cost, config.threads)?;
            emit(out.as_deref(), &csv).map_err(io_error)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ConstructDominating { phi, kappa, out } => {
            let source = Task::new(*phi, *kappa)?;
            let constructed =
                inatt_core::analysis::construct_dominated_effort_task(&source, &agent, &cost)?;
            let rewards = config.reward_grid();
            println!("source_phi={}", source.phi());
            println!("source_kappa={}", source.kappa());
            println!("constructed_phi={}", constructed.phi());
            println!("constructed_kappa={}", constructed.kappa());
            let outcome = inatt_core::analysis::verify_effort_dominance(
                &source,
                &constructed,
                &agent,
                &cost,
                &rewards,
            )?;
            match outcome.certificate() {
                Some(cert) => {
                    println!("verdict={:?}", cert.verdict);
                    println!("epsilon={}", cert.epsilon);
                    println!("min_gap={}", cert.min_gap);
                }
                None => println!("verdict=unverified"),
            }
            let csv = figures::certificate_csv(&source, &constructed, &agent, &cost, &rewards)?;
            emit(out.as_deref(), &csv).map_err(io_error)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ReversalWitness {
            phi,
            kappa,
            kappa2,
            search_bound,
        } => {
            let bound = phi_w_inverse(&agent, *phi, &cost)?;
            let (x_low, x_high) = inatt_core::analysis::find_effort_reversal_witness(
                *phi,
                *kappa,
                *kappa2,
                &agent,
                &cost,
                *search_bound,
            )?;
            let low_task = Task::new(*phi, *kappa)?;
            let high_task = Task::new(*phi, *kappa2)?;
            println!("kappa_phi={bound}");
            println!("x={x_low}");
            println!("x_prime={x_high}");
            for (label, x) in [("x", x_low), ("x_prime", x_high)] {
                let easy = inatt_core::solver::effort(x, &agent, &low_task, &cost)?;
                let hard = inatt_core::solver::effort(x, &agent, &high_task, &cost)?;
                println!("effort_at_{label}_kappa={easy}");
                println!("effort_at_{label}_kappa2={hard}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Figure {
            number,
            out,
            svg: svg_path,
            u1,
            kappa,
            phi,
        } => {
            let csv = render_figure(*number, config, &agent, &cost, *u1, *kappa, *phi)?;
            emit(out.as_deref(), &csv).map_err(io_error)?;
            if let Some(path) = svg_path {
                let drawing =
                    render_figure_svg(*number, config, &agent, &cost, *u1, *kappa, *phi)?;
                emit(Some(path), &drawing).map_err(io_error)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { samples, out } => {
            let outcome = verify::run(config.seed, samples.unwrap_or(1000))?;
            for line in &outcome.lines {
                println!("{line}");
            }
            if let Some(path) = out {
                emit(Some(path), &outcome.violations_csv()).map_err(io_error)?;
            }
            if outcome.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VIOLATIONS))
            }
        }
    }
}

fn render_figure(
    number: u8,
    config: &RunConfig,
    agent: &inatt_core::Agent,
    cost: &inatt_core::CostSpec,
    u1: Option<f64>,
    kappa: Option<f64>,
    phi: Option<f64>,
) -> inatt_core::Result<String> {
    match number {
        1 => figures::concavification_csv(
            u1.unwrap_or(0.5),
            kappa.unwrap_or(1.0),
            cost,
            config.grid_n,
        ),
        2 => figures::accuracy_polyline_csv(u1.unwrap_or(0.5), kappa.unwrap_or(1.0), cost, 101),
        3 | 4 => {
            let reference = Task::new(
                phi.unwrap_or(if number == 3 { 0.75 } else { 0.25 }),
                kappa.unwrap_or(2.0),
            )?;
            figures::region_csv(number, &reference, agent, cost, config.threads)
        }
        _ => {
            let reference = Task::new(phi.unwrap_or(0.75), kappa.unwrap_or(2.0))?;
            figures::region_with_construction_csv(&reference, agent, cost, config.threads)
        }
    }
}

fn render_figure_svg(
    number: u8,
    config: &RunConfig,
    agent: &inatt_core::Agent,
    cost: &inatt_core::CostSpec,
    u1: Option<f64>,
    kappa: Option<f64>,
    phi: Option<f64>,
) -> inatt_core::Result<String> {
    match number {
        1 => {
            let stake = u1.unwrap_or(0.5);
            let scale = kappa.unwrap_or(1.0);
            let n = config.grid_n;
            let mut payoff = Vec::with_capacity(n);
            for i in 0..n {
                let q = i as f64 / (n - 1) as f64;
                payoff.push((q, stake * q.max(1.0 - q) - scale * cost.value(q)?));
            }
            let env = inatt_core::oracle::concave_envelope(
                &payoff.iter().map(|&(_, v)| v).collect::<Vec<_>>(),
            )?;
            let envelope: Vec<(f64, f64)> = payoff
                .iter()
                .zip(env.envelope())
                .map(|(&(q, _), &e)| (q, e))
                .collect();
            Ok(svg::polyline_svg(
                &[
                    ("net payoff", "#2a9d2a", payoff),
                    ("concave envelope", "#1f5fbf", envelope),
                ],
                "posterior q",
                "value",
            ))
        }
        2 => {
            let stake = u1.unwrap_or(0.5);
            let scale = kappa.unwrap_or(1.0);
            let cutoff = inatt_core::solver::optimal_cutoff(stake, scale, cost)?;
            let points: Vec<(f64, f64)> = grid::uniform(0.0, 1.0, 101)
                .into_iter()
                .map(|p| (p, p.max(1.0 - p).max(1.0 - cutoff)))
                .collect();
            Ok(svg::polyline_svg(
                &[("expected accuracy", "#1f5fbf", points)],
                "prior p",
                "accuracy",
            ))
        }
        3 | 4 => {
            let reference = Task::new(
                phi.unwrap_or(if number == 3 { 0.75 } else { 0.25 }),
                kappa.unwrap_or(2.0),
            )?;
            let cells =
                figures::region_lattice(&reference, agent, cost, 160, 101, config.threads)?;
            Ok(svg::lattice_svg(
                &cells,
                &[("reference", reference.kappa(), reference.phi())],
            ))
        }
        _ => {
            let reference = Task::new(phi.unwrap_or(0.75), kappa.unwrap_or(2.0))?;
            let constructed = inatt_core::analysis::construct_dominated_effort_task(
                &reference, agent, cost,
            )?;
            let cells =
                figures::region_lattice(&reference, agent, cost, 160, 101, config.threads)?;
            Ok(svg::lattice_svg(
                &cells,
                &[
                    ("reference", reference.kappa(), reference.phi()),
                    ("constructed", constructed.kappa(), constructed.phi()),
                ],
            ))
        }
    }
}

fn parse_kappa_grid(spec: &str) -> inatt_core::Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Domain(format!("kappa grid must be MIN:MAX:COUNT, got `{spec}`"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].parse().map_err(|_| bad())?;
    let count: usize = parts[2].parse().map_err(|_| bad())?;
    if !lo.is_finite() || lo <= 0.0 || !hi.is_finite() || hi < lo || count == 0 {
        return Err(Error::Domain(format!(
            "kappa grid needs 0 < MIN <= MAX and COUNT >= 1, got `{spec}`"
        )));
    }
    Ok(grid::uniform(lo, hi, count))
}

fn io_error(err: std::io::Error) -> Error {
    Error::Domain(format!("i/o error: {err}"))
}
