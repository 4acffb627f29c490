//! Step the implicit explorer by hand, then dump the walk as CSV.
//!
//! cargo run --example exploration_walk > walk.csv

use hypergiant::explorer::{explore_implicit, ImplicitExplorer};
use hypergiant::ModelParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ModelParams::new(2000, 3, 1.5)?;
    let mut explorer = ImplicitExplorer::new(params, 7)?;
    while let Some(step) = explorer.step() {
        if step.t <= 5 {
            eprintln!(
                "t={} vertex={} new_component={} eta={} A={} U={}",
                step.t,
                step.vertex,
                step.new_component,
                step.eta,
                explorer.active(),
                explorer.unseen()
            );
        }
    }
    let mut sizes = explorer.component_sizes().to_vec();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    eprintln!("largest components: {:?}", &sizes[..3]);

    let trace = explore_implicit(&params, 7)?;
    trace.write_csv(std::io::stdout().lock())?;
    Ok(())
}
