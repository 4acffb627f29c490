//! Normal CDF, Kolmogorov–Smirnov and chi-square homogeneity tests.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};

/// Standard normal CDF via `Φ(x) = erfc(-x/√2) / 2` (statrs `erfc`,
/// accurate to near machine precision).
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KsOutcome {
    pub statistic: f64,
    pub p_value: f64,
}

/// Survival function of the Kolmogorov distribution, `P(K > x)`.
///
/// Series are truncated once terms fall below 1e-10 of the running sum.
pub fn kolmogorov_sf(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    if x < 1.18 {
        // P(K ≤ x) = √(2π)/x Σ_{j≥1} exp(-(2j-1)²π²/(8x²))
        let c = -std::f64::consts::PI.powi(2) / (8.0 * x * x);
        let mut sum = 0.0;
        for j in 1.. {
            let odd = (2 * j - 1) as f64;
            let term = (c * odd * odd).exp();
            sum += term;
            if term < 1e-10 * sum || j > 100 {
                break;
            }
        }
        (1.0 - (2.0 * std::f64::consts::PI).sqrt() / x * sum).clamp(0.0, 1.0)
    } else {
        // P(K > x) = 2 Σ_{j≥1} (-1)^{j-1} exp(-2j²x²)
        let mut sum = 0.0;
        for j in 1..=100 {
            let term = (-2.0 * (j * j) as f64 * x * x).exp();
            sum += if j % 2 == 1 { term } else { -term };
            if term < 1e-10 * sum.abs() {
                break;
            }
        }
        (2.0 * sum).clamp(0.0, 1.0)
    }
}

/// One-sample KS test of an ascending sample against `cdf`.
pub fn ks_test(sorted: &[f64], cdf: impl Fn(f64) -> f64) -> Result<KsOutcome> {
    if sorted.is_empty() {
        return Err(Error::Malformed("empty sample".into()));
    }
    if sorted.windows(2).any(|w| w[1] < w[0]) || sorted.iter().any(|x| x.is_nan()) {
        return Err(Error::Malformed("sample must be sorted ascending".into()));
    }
    let m = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i + 1) as f64 / m - f).max(f - i as f64 / m);
    }
    Ok(KsOutcome {
        statistic: d,
        p_value: kolmogorov_sf(m.sqrt() * d),
    })
}

/// Two-sample KS test with the asymptotic p-value at `√(nm/(n+m)) D`.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<KsOutcome> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Malformed("two-sample KS needs two nonempty samples".into()));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    let en = (na * nb / (na + nb)).sqrt();
    Ok(KsOutcome {
        statistic: d,
        p_value: kolmogorov_sf(en * d),
    })
}

/// Counts of `values` in bins `[j·width, (j+1)·width)`.
pub fn histogram(values: &[usize], width: usize) -> Vec<u64> {
    let width = width.max(1);
    let bins = values.iter().max().map_or(0, |m| m / width + 1);
    let mut h = vec![0u64; bins];
    for &v in values {
        h[v / width] += 1;
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquareOutcome {
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
}

/// Minimum combined count per bin after merging.
const MIN_BIN_COUNT: u64 = 10;

/// Chi-square test that two histograms come from the same distribution
/// (2×B contingency table, `B - 1` degrees of freedom).
///
/// Adjacent bins are merged left to right until each holds at least
/// ten observations in total; a short remainder joins the last bin.
pub fn chi_square_two_sample(a: &[u64], b: &[u64]) -> Result<ChiSquareOutcome> {
    let len = a.len().max(b.len());
    let at = |h: &[u64], i: usize| h.get(i).copied().unwrap_or(0);
    let mut merged: Vec<(u64, u64)> = Vec::new();
    let mut acc = (0u64, 0u64);
    for i in 0..len {
        acc.0 += at(a, i);
        acc.1 += at(b, i);
        if acc.0 + acc.1 >= MIN_BIN_COUNT {
            merged.push(acc);
            acc = (0, 0);
        }
    }
    if acc.0 + acc.1 > 0 {
        match merged.last_mut() {
            Some(last) => {
                last.0 += acc.0;
                last.1 += acc.1;
            }
            None => merged.push(acc),
        }
    }
    let na: u64 = merged.iter().map(|c| c.0).sum();
    let nb: u64 = merged.iter().map(|c| c.1).sum();
    if na == 0 || nb == 0 {
        return Err(Error::Malformed("chi-square needs two nonempty histograms".into()));
    }
    if merged.len() < 2 {
        return Ok(ChiSquareOutcome {
            statistic: 0.0,
            df: 0,
            p_value: 1.0,
        });
    }
    let total = (na + nb) as f64;
    let mut stat = 0.0;
    for &(ca, cb) in &merged {
        let col = (ca + cb) as f64;
        let ea = na as f64 * col / total;
        let eb = nb as f64 * col / total;
        stat += (ca as f64 - ea).powi(2) / ea + (cb as f64 - eb).powi(2) / eb;
    }
    let df = merged.len() - 1;
    let dist = ChiSquared::new(df as f64).expect("positive degrees of freedom");
    Ok(ChiSquareOutcome {
        statistic: stat,
        df,
        p_value: dist.sf(stat),
    })
}
