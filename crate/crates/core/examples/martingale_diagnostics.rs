//! Decompose one walk into drift and martingale parts and compare it with
//! the deterministic trajectory.

use hypergiant::explorer::{decompose, explore_implicit};
use hypergiant::theory::rho_k;
use hypergiant::ModelParams;

fn main() -> hypergiant::Result<()> {
    let params = ModelParams::new(20_000, 3, 1.5)?;
    let trace = explore_implicit(&params, 3)?;
    let dec = decompose(&trace, &params)?;
    let n = params.n();
    let giant_end = (rho_k(1.5, 3)? * n as f64) as usize;
    println!("{:>6} {:>8} {:>10} {:>10} {:>10}", "t", "X_t", "x_t", "Xtilde_t", "|X-Xt|");
    for t in (0..=n).step_by(n / 10) {
        println!(
            "{t:>6} {:>8} {:>10.1} {:>10.1} {:>10.2}",
            trace.walk[t], dec.x[t], dec.approx_walk[t], dec.wc_bound[t]
        );
    }
    let worst = (1..=n)
        .map(|t| dec.wc_bound[t] / (t as f64 * trace.started[t] as f64 / n as f64))
        .fold(0.0, f64::max);
    println!("worst |X - Xtilde| / (t C_t / n) = {worst:.3}; giant ends near t = {giant_end}");
    Ok(())
}
