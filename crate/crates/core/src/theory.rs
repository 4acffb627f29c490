//! Deterministic limit quantities for the exploration of `H_k(n, p)`.
//!
//! Everything here is a pure function of `(n, k, λ)`: the dual branching
//! parameter, the Poisson and hypergraph survival probabilities, the
//! variance constant of the giant component, and the deterministic
//! trajectories that the exploration walk concentrates around.

use serde::Serialize;

use crate::binom::binomial;
use crate::error::{domain, Result};

/// Largest edge arity accepted; `(k - 2)!` stays exact in `f64` well past this.
pub const MAX_ARITY: usize = 20;

/// Largest λ accepted by [`dual_lambda`].
pub const MAX_LAMBDA: f64 = 100.0;

/// Below this distance from criticality ρ_λ comes from its Taylor series.
pub const SERIES_CROSSOVER: f64 = 1e-6;

/// Model coordinates `(n, k, λ)` with `p = λ (k-2)! n^{-(k-1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    n: usize,
    k: usize,
    lambda: f64,
    p: f64,
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|i| i as f64).product()
}

impl ModelParams {
    pub fn new(n: usize, k: usize, lambda: f64) -> Result<Self> {
        Self::check_shape(n, k)?;
        if !lambda.is_finite() || lambda < 0.0 {
            return domain("lambda", lambda, "must be finite and nonnegative");
        }
        let p = lambda * factorial(k - 2) / (n as f64).powi(k as i32 - 1);
        if p > 1.0 {
            return domain("lambda", lambda, "implies edge probability p > 1");
        }
        Ok(Self { n, k, lambda, p })
    }

    /// Builds parameters from the edge probability directly; λ is derived.
    pub fn from_edge_probability(n: usize, k: usize, p: f64) -> Result<Self> {
        Self::check_shape(n, k)?;
        if !(0.0..=1.0).contains(&p) {
            return domain("p", p, "must lie in [0, 1]");
        }
        let lambda = p * (n as f64).powi(k as i32 - 1) / factorial(k - 2);
        Ok(Self { n, k, lambda, p })
    }

    fn check_shape(n: usize, k: usize) -> Result<()> {
        if !(2..=MAX_ARITY).contains(&k) {
            return domain("k", k, "edge arity must lie in 2..=20");
        }
        if n < k {
            return domain("n", n, "need at least k vertices");
        }
        if n > u32::MAX as usize {
            return domain("n", n, "vertex count exceeds 32-bit labels");
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn epsilon(&self) -> f64 {
        self.lambda - 1.0
    }
}

/// The constants attached to a supercritical (or critical) parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TheoryValues {
    pub lambda_star: f64,
    pub rho_poisson: f64,
    pub rho_k: f64,
    /// `None` at λ = 1, where the variance constant is undefined.
    pub sigma_sq: Option<f64>,
    pub epsilon: f64,
}

impl TheoryValues {
    pub fn compute(params: &ModelParams) -> Result<Self> {
        let lambda = params.lambda();
        let d = duality(lambda)?;
        let sigma_sq = if lambda > 1.0 { Some(sigma_sq(params)?) } else { None };
        Ok(Self {
            lambda_star: d.dual,
            rho_poisson: d.rho,
            rho_k: rho_k_from_poisson(d.rho, params.k()),
            sigma_sq,
            epsilon: lambda - 1.0,
        })
    }
}

/// Solution of the duality / survival equations at one λ.
#[derive(Debug, Clone, Copy)]
struct Duality {
    dual: f64,
    rho: f64,
    /// `1 - λ*`, computed without cancellation near criticality.
    one_minus_dual: f64,
}

/// `-ln(1-ρ)/ρ - 1`, accurate to full relative precision for small ρ.
fn survival_excess(rho: f64) -> f64 {
    if rho < 0.05 {
        // Σ_{j≥1} ρ^j / (j+1)
        let mut sum = 0.0f64;
        let mut pow = rho;
        let mut j = 1.0;
        while pow > 1e-18 * sum.max(f64::MIN_POSITIVE) {
            sum += pow / (j + 1.0);
            pow *= rho;
            j += 1.0;
        }
        sum
    } else {
        -(-rho).ln_1p() / rho - 1.0
    }
}

/// Bisection until the bracket stops shrinking in floating point.
fn bisect(mut lo: f64, mut hi: f64, increasing: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if increasing(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn duality(lambda: f64) -> Result<Duality> {
    if !lambda.is_finite() || lambda < 1.0 {
        return domain("lambda", lambda, "must be finite and at least 1");
    }
    let eps = lambda - 1.0;
    if eps == 0.0 {
        return Ok(Duality {
            dual: 1.0,
            rho: 0.0,
            one_minus_dual: 0.0,
        });
    }
    if eps < 2.0 {
        // Near criticality solve for ρ: -ln(1-ρ)/ρ = λ, i.e. survival_excess(ρ) = ε.
        // λ* = λ(1-ρ) then satisfies the duality equation identically.
        let rho = if eps < SERIES_CROSSOVER {
            rho_near_critical(eps)
        } else {
            bisect(0.0, 1.0, |r| survival_excess(r) - eps)
        };
        Ok(Duality {
            dual: lambda * (1.0 - rho),
            rho,
            one_minus_dual: lambda * rho - eps,
        })
    } else {
        // Away from criticality solve ln λ* - λ* = ln λ - λ for y = ln λ*.
        let target = lambda.ln() - lambda;
        let y = bisect(target - 1.0, 0.0, |y| y - y.exp() - target);
        let dual = y.exp();
        Ok(Duality {
            dual,
            rho: -(y - lambda.ln()).exp_m1(),
            one_minus_dual: 1.0 - dual,
        })
    }
}

/// `ρ_λ ≈ 2ε - (8/3)ε²` for tiny ε.
fn rho_near_critical(eps: f64) -> f64 {
    eps * (2.0 - 8.0 / 3.0 * eps)
}

/// The dual parameter λ* < 1 with `λ* e^{-λ*} = λ e^{-λ}`.
pub fn dual_lambda(lambda: f64) -> Result<f64> {
    if lambda.is_finite() && lambda > MAX_LAMBDA {
        return domain("lambda", lambda, "must not exceed 100");
    }
    Ok(duality(lambda)?.dual)
}

/// Survival probability of a Poisson(λ) Galton–Watson tree.
pub fn rho_poisson(lambda: f64) -> Result<f64> {
    Ok(duality(lambda)?.rho)
}

fn rho_k_from_poisson(rho: f64, k: usize) -> f64 {
    if k == 2 {
        return rho;
    }
    -((-rho).ln_1p() / (k - 1) as f64).exp_m1()
}

/// Survival probability of the branching process attached to `H_k(n, p)`:
/// `1 - ρ_k = (1 - ρ_λ)^{1/(k-1)}`.
pub fn rho_k(lambda: f64, k: usize) -> Result<f64> {
    if k < 2 {
        return domain("k", k, "edge arity must be at least 2");
    }
    Ok(rho_k_from_poisson(rho_poisson(lambda)?, k))
}

/// Variance of the giant component size (absolute, proportional to n).
pub fn sigma_sq(params: &ModelParams) -> Result<f64> {
    let lambda = params.lambda();
    if !(lambda > 1.0) {
        return domain("lambda", lambda, "variance constant needs lambda > 1");
    }
    let d = duality(lambda)?;
    let rho = rho_k_from_poisson(d.rho, params.k());
    let q = 1.0 - rho;
    let num = lambda * q * q - d.dual * q + rho * q;
    Ok(num / (d.one_minus_dual * d.one_minus_dual) * params.n() as f64)
}

fn check_tau(tau: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&tau) {
        return domain("tau", tau, "must lie in [0, 1]");
    }
    Ok(())
}

/// `exp(-(λ/(k-1)) (1 - (1-τ)^{k-1}))`, the limiting unseen fraction.
fn unseen_fraction(tau: f64, k: usize, lambda: f64) -> f64 {
    let km1 = (k - 1) as f64;
    (-(lambda / km1) * (1.0 - (1.0 - tau).powi(k as i32 - 1))).exp()
}

/// The rescaled deterministic walk `g(τ) = 1 - τ - exp(-(λ/(k-1))(1 - (1-τ)^{k-1}))`.
pub fn g(tau: f64, k: usize, lambda: f64) -> Result<f64> {
    check_tau(tau)?;
    Ok(1.0 - tau - unseen_fraction(tau, k, lambda))
}

/// Closed-form `(g'(τ), g''(τ))`.
pub fn g_derivatives(tau: f64, k: usize, lambda: f64) -> Result<(f64, f64)> {
    check_tau(tau)?;
    let e = unseen_fraction(tau, k, lambda);
    let q = 1.0 - tau;
    let lead = lambda * q.powi(k as i32 - 2);
    let first = -1.0 + lead * e;
    // (k-2)(1-τ)^{k-3} vanishes identically for k = 2.
    let curvature = if k == 2 {
        0.0
    } else {
        lambda * (k - 2) as f64 * q.powi(k as i32 - 3)
    };
    let second = -(curvature + lead * lead) * e;
    Ok((first, second))
}

/// Per-step coefficients `α_i = p C(n-i-1, k-2)` for `i = 1..=n` (index 0 unused).
pub fn alpha_sequence(params: &ModelParams) -> Result<Vec<f64>> {
    let (n, k) = (params.n(), params.k());
    // C(n-2, k-2) is the largest count; probe it once so overflow is reported up front.
    binomial(n as i64 - 2, k as u64 - 2)?;
    let mut alpha = vec![0.0; n + 1];
    for (i, a) in alpha.iter_mut().enumerate().skip(1) {
        *a = params.p() * binomial(n as i64 - i as i64 - 1, k as u64 - 2)? as f64;
    }
    Ok(alpha)
}

/// `β_t = Π_{i≤t} (1 - α_i)` for `t = 0..=n`.
pub fn beta_trajectory(params: &ModelParams) -> Result<Vec<f64>> {
    let alpha = alpha_sequence(params)?;
    let mut beta = Vec::with_capacity(alpha.len());
    let mut acc = 1.0;
    beta.push(acc);
    for a in &alpha[1..] {
        acc *= 1.0 - a;
        beta.push(acc);
    }
    Ok(beta)
}

/// Deterministic trajectory `x_t = n - t - n β_t` for `t = 0..=n`.
pub fn x_trajectory(params: &ModelParams) -> Result<Vec<f64>> {
    let n = params.n() as f64;
    Ok(beta_trajectory(params)?
        .iter()
        .enumerate()
        .map(|(t, b)| n - t as f64 - n * b)
        .collect())
}

/// Limiting unseen count `u_t = n exp(-(λ/(k-1))(1 - (1-t/n)^{k-1}))`.
pub fn u_trajectory(params: &ModelParams, t: usize) -> Result<f64> {
    if t > params.n() {
        return domain("t", t, "must not exceed n");
    }
    let n = params.n() as f64;
    Ok(n * unseen_fraction(t as f64 / n, params.k(), params.lambda()))
}

/// Critical-window coordinate `α = (λ-1) n^{1/3} (k-1)^{-2/3}`.
pub fn critical_alpha(params: &ModelParams) -> f64 {
    let km1 = (params.k() - 1) as f64;
    params.epsilon() * (params.n() as f64).cbrt() / km1.powf(2.0 / 3.0)
}

/// Inverse of [`critical_alpha`]: `λ = 1 + (k-1)^{2/3} α n^{-1/3}`.
pub fn lambda_for_alpha(n: usize, k: usize, alpha: f64) -> f64 {
    1.0 + ((k - 1) as f64).powf(2.0 / 3.0) * alpha / (n as f64).cbrt()
}
