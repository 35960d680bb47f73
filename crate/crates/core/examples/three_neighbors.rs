//! On a BFS shortest path no outside node touches more than three path
//! nodes, which bounds how many heavy nodes a path can pass.

use additive_spanner::sssp::bfs_tree;
use additive_spanner::{check_three_neighbors_lemma, heavy_dist, random_graph};

fn main() -> additive_spanner::Result<()> {
    let g = random_graph(500, 4000, 2)?;
    let check = check_three_neighbors_lemma(&g, 500, 9);
    println!(
        "{} trials, {} paths, counterexample: {:?}",
        check.trials, check.paths_checked, check.counterexample
    );

    let tree = bfs_tree(&g, 0);
    let far = g.nodes().max_by_key(|&t| tree.dist[t]).unwrap();
    let path = tree.path_nodes(&g, far).unwrap();
    for mu in [8, 16, 24] {
        println!(
            "mu={mu}: path 0 -> {far} of {} hops passes {} heavy nodes",
            path.len() - 1,
            heavy_dist(&g, &path, mu)?
        );
    }
    Ok(())
}
