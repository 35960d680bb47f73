//! Weak CSSSP against the exact budgeted solver on one small instance.

use additive_spanner::{oracle_budgeted_csssp, random_graph, weak_csssp, EdgeSet, GShortOracle};

fn main() -> additive_spanner::Result<()> {
    let g = random_graph(40, 120, 5)?;
    // every third edge is gray
    let gray = EdgeSet::from_ids(g.m(), (0..g.m()).step_by(3));
    let budget = 2;
    let tree = weak_csssp(&g, 0, &gray, budget)?;
    let exact = oracle_budgeted_csssp(&g, 0, &gray, budget - 1);
    let shape = GShortOracle::new(&g, 0, &gray);

    println!(" t  punished  length  gray  best(<{budget} gray)  g-short");
    for t in g.nodes().skip(1).take(15) {
        println!(
            "{t:2}  {:8.2}  {:6}  {:4}  {:14}  {}",
            tree.punished_dist[t],
            tree.true_length[t],
            tree.gray_count[t],
            exact[t],
            shape.exists(t, budget)
        );
    }
    if let Some(path) = tree.path_nodes(&g, 10) {
        println!("path to 10: {path:?}");
    }
    Ok(())
}
