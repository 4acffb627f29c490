//! Print λ*, ρ_λ, ρ_k and σ²/n for a few arities and λ values.
//!
//! cargo run --example theory_constants -- 1.1 1.5 2.0

use hypergiant::{ModelParams, TheoryValues};

fn main() -> hypergiant::Result<()> {
    let mut lambdas: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if lambdas.is_empty() {
        lambdas = vec![1.0, 1.1, 1.5, 2.0, 3.0];
    }
    let n = 1_000_000;
    println!("{:>3} {:>6} {:>10} {:>10} {:>10} {:>12}", "k", "lambda", "lambda*", "rho_l", "rho_k", "sigma^2/n");
    for k in [2, 3, 4] {
        for &lambda in &lambdas {
            let v = TheoryValues::compute(&ModelParams::new(n, k, lambda)?)?;
            let sigma = v.sigma_sq.map_or("undefined".into(), |s| format!("{:.6}", s / n as f64));
            println!(
                "{k:>3} {lambda:>6} {:>10.6} {:>10.6} {:>10.6} {sigma:>12}",
                v.lambda_star, v.rho_poisson, v.rho_k
            );
        }
    }
    Ok(())
}
