//! Build a +4 spanner of a dense random graph and check its stretch.
//!
//! cargo run --release --example fast_plus4 -- [n] [m] [seed]

use additive_spanner::{
    default_params, fast_plus4, random_graph, size_report, verify_additive_stretch,
};

fn main() -> additive_spanner::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let n = args.first().copied().unwrap_or(400) as usize;
    let m = args.get(1).copied().unwrap_or(12_000) as usize;
    let seed = args.get(2).copied().unwrap_or(1);

    let g = random_graph(n, m, seed)?;
    let params = default_params(n).seed(seed);
    let build = fast_plus4(&g, &params)?;
    let size = size_report(&build, &g);
    println!("G: n={n} m={m}; mu={} g={}", params.mu, params.g);
    println!("|S1|={} |S2|={}", build.s1.len(), build.s2.len());
    println!(
        "H: {} edges ({:.1}% of G), |E(H)|/(n mu) = {:.3}",
        size.edges,
        100.0 * size.edges as f64 / m as f64,
        size.ratio_n_mu
    );
    println!("stage insertions: {:?}", build.stage_counts);
    println!(
        "center paths: {}, most gray edges on one path: {}",
        build.paths_added, build.max_path_gray
    );

    let report = verify_additive_stretch(&g, &build.spanner_edges, 4)?;
    println!(
        "stretch: {} pairs checked, max dH-dG-4 = {}, violations = {}",
        report.pairs_checked, report.max_surplus, report.violations
    );
    Ok(())
}
