//! Exact binomial coefficients and binomial random variates.

use rand::Rng;
use rand_distr::Distribution;

use crate::error::{Error, Result};

/// `C(m, j)` in exact 64-bit arithmetic.
///
/// Negative `m` is allowed and yields 0 unless `j == 0` (the empty choice).
pub fn binomial(m: i64, j: u64) -> Result<u64> {
    if j == 0 {
        return Ok(1);
    }
    if m < 0 || (m as u64) < j {
        return Ok(0);
    }
    let m = m as u64;
    let j = j.min(m - j);
    let mut acc: u64 = 1;
    for i in 1..=j {
        // acc * (m - j + i) / i is exact at every step; widen to avoid
        // spurious overflow in the intermediate product.
        let wide = acc as u128 * (m - j + i) as u128 / i as u128;
        acc = u64::try_from(wide).map_err(|_| Error::Overflow { m, j })?;
    }
    Ok(acc)
}

/// Mean above which the inversion sampler hands off to BTPE.
const INVERSION_MAX_MEAN: f64 = 30.0;

/// Draws from Binomial(`trials`, `p`).
///
/// Small means use sequential inversion with the zero-term computed in
/// log space, which stays exact for trial counts near 2^64 and
/// probabilities near 1e-15. Larger means defer to `rand_distr`.
pub fn sample_binomial<R: Rng + ?Sized>(rng: &mut R, trials: u64, p: f64) -> u64 {
    debug_assert!((0.0..=1.0).contains(&p));
    if trials == 0 || p <= 0.0 {
        return 0;
    }
    if p >= 1.0 {
        return trials;
    }
    if p > 0.5 {
        return trials - sample_binomial(rng, trials, 1.0 - p);
    }
    let mean = trials as f64 * p;
    if mean > INVERSION_MAX_MEAN {
        return rand_distr::Binomial::new(trials, p)
            .expect("valid binomial parameters")
            .sample(rng);
    }
    let odds = p / (1.0 - p);
    let mut term = (trials as f64 * (-p).ln_1p()).exp();
    let mut cdf = term;
    let u: f64 = rng.random();
    let mut k = 0u64;
    while u > cdf && k < trials {
        term *= (trials - k) as f64 / (k + 1) as f64 * odds;
        k += 1;
        cdf += term;
        if term == 0.0 {
            break;
        }
    }
    k
}
