//! Standardize the largest component over many runs and test it against N(0, 1).
//!
//! cargo run --release --example supercritical_normality -- 50000 1.3 300

use hypergiant::experiment::{cmd_run, ExperimentConfig, ExperimentKind, RunBody};

fn main() -> hypergiant::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut config = ExperimentConfig::new(ExperimentKind::Run);
    config.n = args.first().and_then(|a| a.parse().ok()).unwrap_or(50_000);
    config.lambda = vec![args.get(1).and_then(|a| a.parse().ok()).unwrap_or(1.3)];
    config.runs = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(300);
    config.out = std::env::temp_dir().join("hypergiant-run");
    let report = cmd_run(&config)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if let RunBody::Full(r) = &report.body {
        println!("mean L1 {:.1} vs {:.1}", r.sample_mean, r.theory_mean);
        println!("variance ratio {:.3}", r.variance_ratio());
        println!("KS D = {:.4}, p = {:.3}", r.ks_statistic, r.ks_p_value);
    }
    println!("verdict {:?}; runs.csv and report.json in {}", report.verdict, config.out.display());
    Ok(())
}
