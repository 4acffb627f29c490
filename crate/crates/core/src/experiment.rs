//! Reproducible experiment runners.
//!
//! An [`ExperimentConfig`] is built from defaults, then an optional flat
//! `key = value` file, then explicit overrides (in that order, later wins).
//! Run `i` always uses `split_seed(seed, i)`, and results are collected in
//! run order, so every output is a function of the config alone and not of
//! the worker count.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::explorer::{decompose, explore_given, explore_implicit, implicit_component_sizes};
use crate::hypergraph::{components, sample};
use crate::seed::{mix64, split_seed};
use crate::stats::{
    chi_square_two_sample, critical_compare, default_horizon, histogram, simulate_excursions, standardize,
    ChiSquareOutcome, KsOutcome, NormalityReport, RunSummary, DEFAULT_GRID_STEP,
};
use crate::theory::{critical_alpha, lambda_for_alpha, rho_k, sigma_sq, u_trajectory, ModelParams, TheoryValues};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// First line of every CSV written here.
pub const CSV_SCHEMA_LINE: &str = "# schema=1";

/// Significance level for every pass/fail verdict.
pub const SIGNIFICANCE: f64 = 0.01;

/// Largest `n` accepted by the explicit oracle check.
pub const ORACLE_MAX_N: usize = 200;

/// Stream tags keeping excursion, graph-comparison, and implicit-oracle
/// seeds disjoint from the main run seeds.
const EXCURSION_STREAM: u64 = 0x6578_6375_7273_696f;
const GRAPH_STREAM: u64 = 0x6772_6170_685f_6b32;
const IMPLICIT_STREAM: u64 = 0x696d_706c_6963_6974;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Theory,
    Run,
    Critical,
    OracleCheck,
    Trace,
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Theory => "theory",
            Self::Run => "run",
            Self::Critical => "critical",
            Self::OracleCheck => "oracle-check",
            Self::Trace => "trace",
        })
    }
}

impl std::str::FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theory" => Self::Theory,
            "run" => Self::Run,
            "critical" => Self::Critical,
            "oracle-check" => Self::OracleCheck,
            "trace" => Self::Trace,
            _ => return domain("experiment", s, "unknown experiment"),
        })
    }
}

/// Fully resolved experiment settings; embedded verbatim in every JSON output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub n: usize,
    /// A list only for `theory`; other experiments need exactly one value.
    pub k: Vec<usize>,
    pub lambda: Vec<f64>,
    pub alpha: Option<f64>,
    pub runs: usize,
    pub seed: u64,
    pub workers: usize,
    pub out: PathBuf,
    /// Number of order statistics compared in `critical`.
    pub r: usize,
    pub grid_step: f64,
    pub horizon: Option<f64>,
    /// Also compare `critical` runs against the `k = 2` case.
    pub compare_graph: bool,
    pub bin_width: usize,
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind) -> Self {
        Self {
            experiment,
            n: 10_000,
            k: vec![3],
            lambda: vec![1.5],
            alpha: None,
            runs: 100,
            seed: 1,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            out: PathBuf::from("out"),
            r: 1,
            grid_step: DEFAULT_GRID_STEP,
            horizon: None,
            compare_graph: false,
            bin_width: 2,
        }
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: std::str::FromStr>(key: &'static str, v: &str) -> Result<T> {
            v.trim().parse().or_else(|_| domain(key, v, "not a valid number"))
        }
        fn list<T: std::str::FromStr>(key: &'static str, v: &str) -> Result<Vec<T>> {
            v.split(',').map(|x| num(key, x)).collect()
        }
        let value = value.trim();
        match key.trim() {
            "experiment" => self.experiment = value.parse()?,
            "n" => self.n = num("n", value)?,
            "k" => self.k = list("k", value)?,
            "lambda" => self.lambda = list("lambda", value)?,
            "alpha" => self.alpha = Some(num("alpha", value)?),
            "runs" => self.runs = num("runs", value)?,
            "seed" => self.seed = num("seed", value)?,
            "workers" => self.workers = num("workers", value)?,
            "out" => self.out = PathBuf::from(value),
            "r" => self.r = num("r", value)?,
            "grid_step" => self.grid_step = num("grid_step", value)?,
            "horizon" => self.horizon = Some(num("horizon", value)?),
            "compare_graph" => self.compare_graph = num("compare_graph", value)?,
            "bin_width" => self.bin_width = num("bin_width", value)?,
            _ => return domain("config", key, "unknown key"),
        }
        Ok(())
    }

    /// Applies a flat config file: `key = value` lines, `#` comments.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Parse {
                    path: path.display().to_string(),
                    line: i + 1,
                    reason: "expected `key = value`".into(),
                });
            };
            self.set(key, value).map_err(|e| Error::Parse {
                path: path.display().to_string(),
                line: i + 1,
                reason: e.to_string(),
            })?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return domain("workers", 0, "must be at least 1");
        }
        if self.runs == 0 {
            return domain("runs", 0, "must be at least 1");
        }
        if self.r == 0 {
            return domain("r", 0, "must be at least 1");
        }
        if self.k.is_empty() || self.lambda.is_empty() {
            return domain("k/lambda", "", "must not be empty");
        }
        if !(self.grid_step > 0.0) {
            return domain("grid_step", self.grid_step, "must be positive");
        }
        if self.experiment != ExperimentKind::Theory && (self.k.len() != 1 || self.lambda.len() != 1) {
            return domain("k/lambda", "list", "only `theory` accepts lists");
        }
        Ok(())
    }

    fn single_params(&self) -> Result<ModelParams> {
        ModelParams::new(self.n, self.k[0], self.lambda[0])
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Malformed(format!("thread pool: {e}")))
    }

    /// Runs `f(i, split_seed(seed, i))` for `i in 0..runs` on the worker
    /// pool, returning results in index order.
    fn fan_out<T, F>(&self, stream: u64, runs: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(u64) -> Result<T> + Sync + Send,
    {
        let master = if stream == 0 { self.seed } else { mix64(self.seed ^ stream) };
        self.pool()?
            .install(|| (0..runs as u64).into_par_iter().map(|i| f(split_seed(master, i))).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Too few runs for a statistical verdict.
    Insufficient,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_vec_pretty(value)?;
    text.push(b'\n');
    write_file(path, &text)
}

// ---------------------------------------------------------------- theory

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoryRow {
    pub n: usize,
    pub k: usize,
    pub lambda: f64,
    #[serde(flatten)]
    pub values: TheoryValues,
    /// `σ²/n`, undefined at λ = 1.
    pub sigma_sq_per_n: Option<f64>,
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoryReport {
    pub version: &'static str,
    pub config: ExperimentConfig,
    pub rows: Vec<TheoryRow>,
}

pub fn cmd_theory(config: &ExperimentConfig) -> Result<TheoryReport> {
    config.validate()?;
    let mut rows = Vec::new();
    for &k in &config.k {
        for &lambda in &config.lambda {
            if !(lambda >= 1.0) {
                return domain("lambda", lambda, "theory table needs lambda >= 1");
            }
            let params = ModelParams::new(config.n, k, lambda)?;
            let values = TheoryValues::compute(&params)?;
            rows.push(TheoryRow {
                n: config.n,
                k,
                lambda,
                sigma_sq_per_n: values.sigma_sq.map(|s| s / config.n as f64),
                values,
                alpha: critical_alpha(&params),
            });
        }
    }
    ensure_dir(&config.out)?;
    let mut csv = format!("{CSV_SCHEMA_LINE}\nn,k,lambda,lambda_star,rho_poisson,rho_k,sigma_sq_per_n,alpha\n");
    for r in &rows {
        let sigma = r.sigma_sq_per_n.map_or("undefined".to_string(), |s| format!("{s}"));
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n, r.k, r.lambda, r.values.lambda_star, r.values.rho_poisson, r.values.rho_k, sigma, r.alpha
        ));
    }
    write_file(&config.out.join("theory.csv"), csv.as_bytes())?;
    let report = TheoryReport {
        version: VERSION,
        config: config.clone(),
        rows,
    };
    write_json(&config.out.join("theory.json"), &report)?;
    Ok(report)
}

// ---------------------------------------------------------------- run

/// Report body when there are too few runs for the normality test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InsufficientReport {
    pub m: usize,
    pub sample_mean: f64,
    pub theory_mean: f64,
    pub theory_var: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RunBody {
    Full(NormalityReport),
    Insufficient(InsufficientReport),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub version: &'static str,
    pub config: ExperimentConfig,
    pub verdict: Verdict,
    /// `(λ-1)³ n`; the normal approximation is poor when this is small.
    pub supercriticality: f64,
    pub warnings: Vec<String>,
    /// `(mean - ρ_k n) / (σ/√m)`.
    pub mean_deviation_se: f64,
    pub variance_ratio: Option<f64>,
    /// Largest `L_2 / n` across runs.
    pub max_l2_fraction: f64,
    #[serde(flatten)]
    pub body: RunBody,
    #[serde(skip)]
    pub summaries: Vec<RunSummary>,
}

/// Independent implicit-mode runs, in run order.
pub fn collect_summaries(config: &ExperimentConfig, params: &ModelParams, r: usize) -> Result<Vec<RunSummary>> {
    config.fan_out(0, config.runs, |seed| {
        Ok(RunSummary::from_sizes(seed, &implicit_component_sizes(params, seed)?, r))
    })
}

fn summaries_csv(summaries: &[RunSummary]) -> String {
    let mut csv = format!("{CSV_SCHEMA_LINE}\nseed,L1,L2,n_components\n");
    for s in summaries {
        csv.push_str(&format!("{},{},{},{}\n", s.seed, s.l1(), s.l2(), s.n_components));
    }
    csv
}

pub fn cmd_run(config: &ExperimentConfig) -> Result<RunReport> {
    config.validate()?;
    let params = config.single_params()?;
    let lambda = params.lambda();
    if !(lambda > 1.0) {
        return domain("lambda", lambda, "run needs lambda > 1");
    }
    let supercriticality = (lambda - 1.0).powi(3) * params.n() as f64;
    let mut warnings = Vec::new();
    if supercriticality < 50.0 {
        warnings.push(format!("(lambda-1)^3 n = {supercriticality:.1} < 50: normal limit may be inaccurate"));
    }
    let summaries = collect_summaries(config, &params, config.r.max(2))?;
    let n = params.n() as f64;
    let theory_mean = rho_k(lambda, params.k())? * n;
    let theory_var = sigma_sq(&params)?;
    let m = summaries.len();
    let sample_mean = summaries.iter().map(|s| s.l1() as f64).sum::<f64>() / m as f64;
    let max_l2_fraction = summaries.iter().map(|s| s.l2() as f64 / n).fold(0.0, f64::max);
    let mean_deviation_se = (sample_mean - theory_mean) / (theory_var / m as f64).sqrt();
    let (verdict, body, variance_ratio) = if m < 2 {
        warnings.push("fewer than 2 runs: no normality verdict".into());
        (
            Verdict::Insufficient,
            RunBody::Insufficient(InsufficientReport {
                m,
                sample_mean,
                theory_mean,
                theory_var,
            }),
            None,
        )
    } else {
        let report = standardize(&summaries, &params)?;
        let ratio = report.variance_ratio();
        (Verdict::from_bool(report.ks_p_value > SIGNIFICANCE), RunBody::Full(report), Some(ratio))
    };
    ensure_dir(&config.out)?;
    write_file(&config.out.join("runs.csv"), summaries_csv(&summaries).as_bytes())?;
    let report = RunReport {
        version: VERSION,
        config: config.clone(),
        verdict,
        supercriticality,
        warnings,
        mean_deviation_se,
        variance_ratio,
        max_l2_fraction,
        body,
        summaries,
    };
    write_json(&config.out.join("report.json"), &report)?;
    Ok(report)
}

// ---------------------------------------------------------------- critical

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderComparison {
    /// 1-based order statistic.
    pub order: usize,
    pub vs_excursions: KsOutcome,
    pub vs_graph: Option<KsOutcome>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalReport {
    pub version: &'static str,
    pub config: ExperimentConfig,
    pub verdict: Verdict,
    pub alpha: f64,
    pub lambda: f64,
    pub comparisons: Vec<OrderComparison>,
    /// `rescaled[j][i]`: order `j+1` of run `i`, times `(k-1)^{1/3} n^{-2/3}`.
    #[serde(skip)]
    pub rescaled: Vec<Vec<f64>>,
    #[serde(skip)]
    pub excursions: Vec<Vec<f64>>,
    #[serde(skip)]
    pub graph_rescaled: Option<Vec<Vec<f64>>>,
}

/// Rescaled top-`r` component sizes `(k-1)^{1/3} n^{-2/3} L_j` at critical coordinate α.
pub fn critical_sizes(config: &ExperimentConfig, k: usize, alpha: f64, stream: u64) -> Result<Vec<Vec<f64>>> {
    let n = config.n;
    let params = ModelParams::new(n, k, lambda_for_alpha(n, k, alpha))?;
    let scale = ((k - 1) as f64).cbrt() * (n as f64).powf(-2.0 / 3.0);
    let summaries = config.fan_out(stream, config.runs, |seed| {
        Ok(RunSummary::from_sizes(seed, &implicit_component_sizes(&params, seed)?, config.r))
    })?;
    Ok((1..=config.r)
        .map(|j| summaries.iter().map(|s| s.lr(j) as f64 * scale).collect())
        .collect())
}

/// Top-`r` excursion lengths of `runs` independent paths, by order.
pub fn excursion_lengths(config: &ExperimentConfig, alpha: f64) -> Result<Vec<Vec<f64>>> {
    let horizon = config.horizon.unwrap_or_else(|| default_horizon(alpha));
    let samples = config.fan_out(EXCURSION_STREAM, config.runs, |seed| {
        simulate_excursions(alpha, config.grid_step, horizon, config.r, seed)
    })?;
    Ok((0..config.r)
        .map(|j| samples.iter().map(|s| s.ordered_lengths.get(j).copied().unwrap_or(0.0)).collect())
        .collect())
}

pub fn cmd_critical(config: &ExperimentConfig) -> Result<CriticalReport> {
    config.validate()?;
    let k = config.k[0];
    let alpha = config.alpha.unwrap_or(0.0);
    let lambda = lambda_for_alpha(config.n, k, alpha);
    let rescaled = critical_sizes(config, k, alpha, 0)?;
    let excursions = excursion_lengths(config, alpha)?;
    let graph_rescaled = if config.compare_graph && k != 2 {
        Some(critical_sizes(config, 2, alpha, GRAPH_STREAM)?)
    } else {
        None
    };
    let mut comparisons = Vec::new();
    for j in 0..config.r {
        comparisons.push(OrderComparison {
            order: j + 1,
            vs_excursions: critical_compare(&rescaled[j], &excursions[j])?,
            vs_graph: match &graph_rescaled {
                Some(g) => Some(critical_compare(&rescaled[j], &g[j])?),
                None => None,
            },
        });
    }
    let all_pass = comparisons.iter().all(|c| {
        c.vs_excursions.p_value > SIGNIFICANCE && c.vs_graph.is_none_or(|g| g.p_value > SIGNIFICANCE)
    });
    let verdict = if config.runs < 2 {
        Verdict::Insufficient
    } else {
        Verdict::from_bool(all_pass)
    };

    ensure_dir(&config.out)?;
    let mut csv = format!("{CSV_SCHEMA_LINE}\nrun,order,rescaled_size,excursion_length");
    if graph_rescaled.is_some() {
        csv.push_str(",graph_rescaled_size");
    }
    csv.push('\n');
    for i in 0..config.runs {
        for j in 0..config.r {
            csv.push_str(&format!("{i},{},{},{}", j + 1, rescaled[j][i], excursions[j][i]));
            if let Some(g) = &graph_rescaled {
                csv.push_str(&format!(",{}", g[j][i]));
            }
            csv.push('\n');
        }
    }
    write_file(&config.out.join("critical.csv"), csv.as_bytes())?;
    let report = CriticalReport {
        version: VERSION,
        config: config.clone(),
        verdict,
        alpha,
        lambda,
        comparisons,
        rescaled,
        excursions,
        graph_rescaled,
    };
    write_json(&config.out.join("critical.json"), &report)?;
    Ok(report)
}

// ---------------------------------------------------------------- oracle-check

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub version: &'static str,
    pub config: ExperimentConfig,
    pub verdict: Verdict,
    pub checked: usize,
    pub mismatches: usize,
    pub l1_histogram: ChiSquareOutcome,
    #[serde(skip)]
    pub explicit_l1: Vec<usize>,
    #[serde(skip)]
    pub implicit_l1: Vec<usize>,
}

pub fn cmd_oracle_check(config: &ExperimentConfig) -> Result<OracleReport> {
    config.validate()?;
    if config.n > ORACLE_MAX_N {
        return domain("n", config.n, "oracle check is limited to n <= 200");
    }
    let params = config.single_params()?;
    ensure_dir(&config.out)?;
    let explicit = config.fan_out(0, config.runs, |seed| {
        let h = sample(params.n(), params.k(), params.p(), seed)?;
        let oracle = components(&h).sizes;
        let replay = explore_given(&h).sorted_sizes();
        if oracle != replay {
            let dump = config.out.join(format!("mismatch-{seed}.hg"));
            h.write(&dump)?;
            return Err(Error::OracleMismatch { seed, dump });
        }
        Ok(oracle[0])
    })?;
    let implicit = config.fan_out(IMPLICIT_STREAM, config.runs, |seed| {
        Ok(implicit_component_sizes(&params, seed)?.into_iter().max().unwrap_or(0))
    })?;
    let chi = chi_square_two_sample(
        &histogram(&explicit, config.bin_width),
        &histogram(&implicit, config.bin_width),
    )?;
    let report = OracleReport {
        version: VERSION,
        config: config.clone(),
        verdict: Verdict::from_bool(chi.p_value > SIGNIFICANCE),
        checked: explicit.len(),
        mismatches: 0,
        l1_histogram: chi,
        explicit_l1: explicit,
        implicit_l1: implicit,
    };
    write_json(&config.out.join("oracle.json"), &report)?;
    Ok(report)
}

// ---------------------------------------------------------------- trace

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceReport {
    pub version: &'static str,
    pub config: ExperimentConfig,
    /// `max_{t ≤ ρ_k n} |U_t - u_t|`.
    pub max_unseen_deviation: f64,
    /// Step at which the largest component finishes exploring.
    pub giant_end: usize,
    pub largest: usize,
    /// Largest `|X_t - X̃_t| / (t C_t / n)` over `t ≥ 1`.
    pub wc_ratio: f64,
}

pub fn cmd_trace(config: &ExperimentConfig) -> Result<TraceReport> {
    config.validate()?;
    let params = config.single_params()?;
    let trace = explore_implicit(&params, config.seed)?;
    let dec = decompose(&trace, &params)?;
    let n = params.n();
    let u: Vec<f64> = (0..=n).map(|t| u_trajectory(&params, t)).collect::<Result<_>>()?;

    let mut csv = format!("{CSV_SCHEMA_LINE}\nt,eta,A,U,C,X,x_t,u_t,Xtilde,wc_bound\n");
    for t in 0..=n {
        let eta = if t == 0 { 0 } else { trace.eta[t - 1] };
        csv.push_str(&format!(
            "{t},{eta},{},{},{},{},{},{},{},{}\n",
            trace.active[t], trace.unseen[t], trace.started[t], trace.walk[t], dec.x[t], u[t], dec.approx_walk[t],
            dec.wc_bound[t]
        ));
    }
    ensure_dir(&config.out)?;
    write_file(&config.out.join("trace.csv"), csv.as_bytes())?;

    let rho = if params.lambda() >= 1.0 { rho_k(params.lambda(), params.k())? } else { 0.0 };
    let horizon = (rho * n as f64).floor() as usize;
    let max_unseen_deviation = (0..=horizon)
        .map(|t| (trace.unseen[t] as f64 - u[t]).abs())
        .fold(0.0, f64::max);
    let (largest_idx, &largest) = trace
        .component_sizes
        .iter()
        .enumerate()
        .max_by_key(|&(i, s)| (*s, std::cmp::Reverse(i)))
        .expect("at least one component");
    let giant_end = trace.component_sizes[..=largest_idx].iter().sum();
    let wc_ratio = (1..=n)
        .map(|t| dec.wc_bound[t] / (t as f64 * trace.started[t] as f64 / n as f64))
        .fold(0.0, f64::max);
    let report = TraceReport {
        version: VERSION,
        config: config.clone(),
        max_unseen_deviation,
        giant_end,
        largest,
        wc_ratio,
    };
    write_json(&config.out.join("trace.json"), &report)?;
    Ok(report)
}

/// Dispatches on `config.experiment`, returning the verdict and the JSON report.
pub fn run_experiment(config: &ExperimentConfig) -> Result<(Verdict, String)> {
    fn json<T: Serialize>(v: &T) -> Result<String> {
        Ok(serde_json::to_string_pretty(v)?)
    }
    Ok(match config.experiment {
        ExperimentKind::Theory => (Verdict::Pass, json(&cmd_theory(config)?)?),
        ExperimentKind::Run => {
            let r = cmd_run(config)?;
            (r.verdict, json(&r)?)
        }
        ExperimentKind::Critical => {
            let r = cmd_critical(config)?;
            (r.verdict, json(&r)?)
        }
        ExperimentKind::OracleCheck => {
            let r = cmd_oracle_check(config)?;
            (r.verdict, json(&r)?)
        }
        ExperimentKind::Trace => (Verdict::Pass, json(&cmd_trace(config)?)?),
    })
}
