//! The all-pairs baseline next to the fast construction on the same samples.

use additive_spanner::spanner::{chechik_baseline_with_samples, fast_plus4_with_samples};
use additive_spanner::{default_params, fast_plus4, random_graph, verify_additive_stretch};

fn main() -> additive_spanner::Result<()> {
    let g = random_graph(300, 6000, 11)?;
    let params = default_params(g.n()).seed(11);
    let samples =
        fast_plus4(&g, &params).map(|b| additive_spanner::Samples { s1: b.s1, s2: b.s2 })?;

    let fast = fast_plus4_with_samples(&g, &params, &samples)?;
    let base = chechik_baseline_with_samples(&g, &params, &samples)?;
    for (name, build) in [("fast", &fast), ("baseline", &base)] {
        let r = verify_additive_stretch(&g, &build.spanner_edges, 4)?;
        println!(
            "{name:>8}: {:5} edges, {:4} paths, pair-path insertions {:6}, max surplus {}",
            build.edge_count(),
            build.paths_added,
            build.stage_counts.pair_paths,
            r.max_surplus
        );
    }
    let shared = fast
        .spanner_edges
        .iter()
        .filter(|&e| base.spanner_edges.contains(e))
        .count();
    println!("edges in both: {shared}");
    Ok(())
}
