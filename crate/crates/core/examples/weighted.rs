//! Weighted spanner with additive error 4W(s,t) + eps*W.
//!
//! cargo run --release --example weighted -- [eps]

use additive_spanner::verify::{verify_weighted_stretch_with, PairWeightMode, VerifyOptions};
use additive_spanner::{default_params, random_weighted_graph, size_report, weighted_plus4};

fn main() -> additive_spanner::Result<()> {
    let eps: f64 = std::env::args()
        .nth(1)
        .map_or(0.5, |a| a.parse().expect("epsilon"));
    let g = random_weighted_graph(300, 6000, 1.0, 10.0, 3)?;
    let params = default_params(g.n()).epsilon(eps).seed(3);
    let build = weighted_plus4(&g, &params)?;
    let size = size_report(&build, &g);
    println!(
        "mu={} g={} eps={eps}: kept {} of {} edges",
        params.mu,
        params.g,
        size.edges,
        g.m()
    );
    println!(
        "gray edges during the path stage: {}",
        build.gray_frozen.count()
    );

    for (label, mode) in [
        ("minimax W(s,t)", PairWeightMode::Strict),
        ("canonical-path W(s,t)", PairWeightMode::Canonical),
    ] {
        let opts = VerifyOptions {
            pair_weight: mode,
            ..VerifyOptions::default()
        };
        let r = verify_weighted_stretch_with(&g, &build.spanner_edges, eps, &opts)?;
        println!(
            "{label}: {} pairs, max surplus {:.3}, violations {}",
            r.pairs_checked, r.max_surplus, r.violations
        );
    }
    Ok(())
}
