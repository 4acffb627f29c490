//! Check implicit exploration against explicit hypergraphs at small n.

use hypergiant::experiment::{cmd_oracle_check, ExperimentConfig, ExperimentKind};

fn main() -> hypergiant::Result<()> {
    let mut config = ExperimentConfig::new(ExperimentKind::OracleCheck);
    config.n = 40;
    config.k = vec![3];
    config.lambda = vec![1.5];
    config.runs = 2000;
    config.out = std::env::temp_dir().join("hypergiant-oracle");
    let report = cmd_oracle_check(&config)?;
    println!(
        "{} explicit hypergraphs replayed without mismatch; L1 histogram chi2 = {:.2} (df {}), p = {:.3}, verdict {:?}",
        report.checked, report.l1_histogram.statistic, report.l1_histogram.df, report.l1_histogram.p_value,
        report.verdict
    );
    Ok(())
}
