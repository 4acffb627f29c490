//! Verdicts on the two limit laws.
//!
//! Supercritical runs are standardized by the theoretical centre `ρ_k n`
//! and scale `σ` and tested against N(0, 1); critical-window runs are
//! compared against lengths of excursions of `W(s) + αs - s²/2` above its
//! running minimum.

mod excursion;
mod hypothesis;

pub use excursion::{default_horizon, simulate_excursions, DEFAULT_GRID_STEP, ExcursionDecomposition, ExcursionSample, ExcursionTracker};
pub use hypothesis::{
    chi_square_two_sample, histogram, kolmogorov_sf, ks_test, ks_two_sample, normal_cdf, ChiSquareOutcome,
    KsOutcome,
};

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::theory::{rho_k, sigma_sq, ModelParams};

/// Largest-component statistics of one run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub seed: u64,
    /// Component sizes in descending order, truncated to the top `r`.
    pub top: Vec<usize>,
    pub n_components: usize,
}

impl RunSummary {
    pub fn from_sizes(seed: u64, sizes: &[usize], r: usize) -> Self {
        let mut sorted = sizes.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let n_components = sorted.len();
        sorted.truncate(r.max(2));
        Self {
            seed,
            top: sorted,
            n_components,
        }
    }

    pub fn l1(&self) -> usize {
        self.top.first().copied().unwrap_or(0)
    }

    /// Second largest component, 0 if there is only one.
    pub fn l2(&self) -> usize {
        self.top.get(1).copied().unwrap_or(0)
    }

    /// `r`-th largest (1-based), 0 if fewer components exist.
    pub fn lr(&self, r: usize) -> usize {
        self.top.get(r - 1).copied().unwrap_or(0)
    }
}

/// Standardized largest components and their normality test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalityReport {
    pub m: usize,
    pub sample_mean: f64,
    pub sample_var: f64,
    pub theory_mean: f64,
    pub theory_var: f64,
    pub ks_statistic: f64,
    pub ks_p_value: f64,
    pub standardized: Vec<f64>,
}

impl NormalityReport {
    pub fn variance_ratio(&self) -> f64 {
        self.sample_var / self.theory_var
    }

    /// Standard error of the sample mean under the theoretical variance.
    pub fn mean_tolerance(&self, sigmas: f64) -> f64 {
        sigmas * (self.theory_var / self.m as f64).sqrt()
    }
}

/// Standardizes `L_1` of each run by `(L_1 - ρ_k n) / σ` and tests the result against N(0, 1).
pub fn standardize(summaries: &[RunSummary], params: &ModelParams) -> Result<NormalityReport> {
    if !(params.lambda() > 1.0) {
        return domain("lambda", params.lambda(), "normality needs lambda > 1");
    }
    let mean = rho_k(params.lambda(), params.k())? * params.n() as f64;
    let var = sigma_sq(params)?;
    let values: Vec<f64> = summaries.iter().map(|s| s.l1() as f64).collect();
    standardize_values(&values, mean, var)
}

/// As [`standardize`] with explicit centre and variance.
pub fn standardize_values(values: &[f64], theory_mean: f64, theory_var: f64) -> Result<NormalityReport> {
    let m = values.len();
    if m < 2 {
        return Err(Error::Malformed(format!("need at least 2 runs, got {m}")));
    }
    if !(theory_var > 0.0) {
        return domain("theory_var", theory_var, "must be positive");
    }
    let sd = theory_var.sqrt();
    let standardized: Vec<f64> = values.iter().map(|v| (v - theory_mean) / sd).collect();
    let sample_mean = values.iter().sum::<f64>() / m as f64;
    let sample_var = values.iter().map(|v| (v - sample_mean).powi(2)).sum::<f64>() / (m - 1) as f64;
    let mut sorted = standardized.clone();
    sorted.sort_by(f64::total_cmp);
    let ks = ks_test(&sorted, normal_cdf)?;
    Ok(NormalityReport {
        m,
        sample_mean,
        sample_var,
        theory_mean,
        theory_var,
        ks_statistic: ks.statistic,
        ks_p_value: ks.p_value,
        standardized,
    })
}

/// Two-sample KS comparison of rescaled component sizes (or excursion lengths).
pub fn critical_compare(a: &[f64], b: &[f64]) -> Result<KsOutcome> {
    ks_two_sample(a, b)
}
