//! Rescaled largest components at the critical point against excursion
//! lengths of Brownian motion with parabolic drift.
//!
//! cargo run --release --example critical_window -- 0.0

use hypergiant::experiment::{critical_sizes, excursion_lengths, ExperimentConfig, ExperimentKind};
use hypergiant::stats::ks_two_sample;

fn main() -> hypergiant::Result<()> {
    let alpha: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.0);
    let mut config = ExperimentConfig::new(ExperimentKind::Critical);
    config.n = 50_000;
    config.runs = 500;
    config.r = 2;
    let exc = excursion_lengths(&config, alpha)?;
    for k in [2, 3, 4] {
        let sizes = critical_sizes(&config, k, alpha, k as u64)?;
        for j in 0..config.r {
            let ks = ks_two_sample(&sizes[j], &exc[j])?;
            let mean = sizes[j].iter().sum::<f64>() / sizes[j].len() as f64;
            println!("k={k} L{}: mean rescaled {mean:.3}, KS vs excursions p = {:.3}", j + 1, ks.p_value);
        }
    }
    Ok(())
}
