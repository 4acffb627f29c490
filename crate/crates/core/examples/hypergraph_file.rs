//! Sample an explicit hypergraph, round-trip it through the text format,
//! and list its largest components.
//!
//! cargo run --example hypergraph_file -- /tmp/h.hg

use std::path::PathBuf;

use hypergiant::hypergraph::{components, sample, Hypergraph};
use hypergiant::ModelParams;

fn main() -> hypergiant::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("hypergiant-example.hg"));
    let params = ModelParams::new(60, 3, 1.5)?;
    let h = sample(params.n(), params.k(), params.p(), 42)?;
    h.write(&path)?;
    let back = Hypergraph::read(&path)?;
    assert_eq!(back.edges().count(), h.edge_count());
    let comps = components(&back);
    println!("{} edges written to {}", h.edge_count(), path.display());
    println!("largest components: {:?}", &comps.sizes[..comps.sizes.len().min(5)]);
    Ok(())
}
