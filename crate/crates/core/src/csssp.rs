//! Weak constrained single-source shortest paths by edge punishing.
//!
//! Gray edges get a surcharge: `1/g` per gray edge on unit-weight graphs and
//! `epsilon * W / g` on weighted ones. A plain Dijkstra under the punished
//! weights then returns, for every target that admits a g-short path, a path
//! with at most `5g` (resp. `5g/epsilon`) gray edges that is no longer than
//! any path using fewer than `g` gray edges (up to `epsilon * W` when
//! weighted).
//!
//! On unit-weight graphs the weights are scaled by `g` (plain edge `g`, gray
//! edge `g + 1`) so all arithmetic is exact.

use ordered_float::OrderedFloat;

use crate::edgeset::GrayEdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, NodeId};
use crate::sssp::{self, dijkstra};

/// Single-source result of a CSSSP solve.
#[derive(Debug, Clone)]
pub struct PathTree {
    pub source: NodeId,
    /// Edge to the predecessor; `None` for the source and unreachable nodes.
    pub parent: Vec<Option<EdgeId>>,
    /// Distance under the punished weights (`inf` if unreachable).
    pub punished_dist: Vec<f64>,
    /// Hop count or summed original weight of the tree path.
    pub true_length: Vec<f64>,
    /// Gray edges on the tree path.
    pub gray_count: Vec<u32>,
    /// Exact punished distances times `g`; unit-weight solves only.
    scaled: Option<Vec<u64>>,
}

impl PathTree {
    #[inline]
    pub fn is_reachable(&self, t: NodeId) -> bool {
        self.punished_dist[t].is_finite()
    }

    /// Punished distance times `g`, exact. `None` for weighted solves or
    /// unreachable targets.
    pub fn punished_scaled(&self, t: NodeId) -> Option<u64> {
        self.scaled
            .as_ref()
            .and_then(|d| (d[t] != u64::MAX).then_some(d[t]))
    }

    /// Edge ids of `P(source, t)` from `t` back to the source.
    pub fn path_edges(&self, g: &Graph, t: NodeId) -> Option<Vec<EdgeId>> {
        sssp::walk_parents(g, &self.parent, self.source, t)
    }

    /// Nodes of `P(source, t)`, source first.
    pub fn path_nodes(&self, g: &Graph, t: NodeId) -> Option<Vec<NodeId>> {
        sssp::parent_path_nodes(g, &self.parent, self.source, t)
    }

    fn from_tree(
        g: &Graph,
        gray: &GrayEdgeSet,
        tree: &sssp::SpTree<impl Copy>,
        dist: Vec<f64>,
    ) -> Self {
        let n = g.n();
        let mut true_length = vec![f64::INFINITY; n];
        let mut gray_count = vec![0u32; n];
        for &x in &tree.order {
            match tree.parent[x] {
                None => true_length[x] = 0.0,
                Some(e) => {
                    let p = g.edge(e).other(x);
                    true_length[x] = true_length[p] + g.weight(e);
                    gray_count[x] = gray_count[p] + gray.contains(e) as u32;
                }
            }
        }
        PathTree {
            source: tree.source,
            parent: tree.parent.clone(),
            punished_dist: dist,
            true_length,
            gray_count,
            scaled: None,
        }
    }
}

fn check_inputs(g: &Graph, s: NodeId, gray: &GrayEdgeSet, budget: usize) -> Result<()> {
    if s >= g.n() {
        return Err(Error::NodeOutOfRange { node: s, n: g.n() });
    }
    if budget == 0 {
        return Err(Error::InvalidParams(
            "gray budget g must be at least 1".into(),
        ));
    }
    gray.check_universe(g)
}

/// Weak CSSSP on a unit-weight graph.
pub fn weak_csssp(g: &Graph, s: NodeId, gray: &GrayEdgeSet, budget: usize) -> Result<PathTree> {
    check_inputs(g, s, gray, budget)?;
    if !g.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    let plain = budget as u64;
    let tree = bucket_dijkstra(g, s, gray, plain);
    let scaled: Vec<u64> = tree.dist.iter().map(|d| d.unwrap_or(u64::MAX)).collect();
    let dist = tree
        .dist
        .iter()
        .map(|d| d.map_or(f64::INFINITY, |d| d as f64 / plain as f64))
        .collect();
    let mut out = PathTree::from_tree(g, gray, &tree, dist);
    out.scaled = Some(scaled);
    Ok(out)
}

/// Dial's algorithm for the two integer costs `plain` and `plain + 1`.
/// Distances and parents (lowest tight predecessor) match [`dijkstra`].
fn bucket_dijkstra(g: &Graph, s: NodeId, gray: &GrayEdgeSet, plain: u64) -> sssp::SpTree<u64> {
    let n = g.n();
    let width = plain as usize + 2;
    let cost = |e: EdgeId| if gray.contains(e) { plain + 1 } else { plain };
    let mut dist = vec![u64::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut buckets: Vec<Vec<NodeId>> = vec![Vec::new(); width];
    dist[s] = 0;
    buckets[0].push(s);
    let mut pending = 1usize;
    let mut cur = 0u64;
    let mut batch = Vec::new();
    while pending > 0 {
        std::mem::swap(&mut batch, &mut buckets[(cur % width as u64) as usize]);
        pending -= batch.len();
        for &u in &batch {
            // stale entry; a node is queued once per strict improvement
            if dist[u] != cur {
                continue;
            }
            order.push(u);
            for arc in g.neighbors(u) {
                let nd = cur + cost(arc.edge);
                if nd < dist[arc.to] {
                    dist[arc.to] = nd;
                    buckets[(nd % width as u64) as usize].push(arc.to);
                    pending += 1;
                }
            }
        }
        batch.clear();
        cur += 1;
    }
    let mut parent = vec![None; n];
    for &v in &order[1..] {
        parent[v] = g
            .neighbors(v)
            .iter()
            .find(|a| dist[a.to] != u64::MAX && dist[a.to] + cost(a.edge) == dist[v])
            .map(|a| a.edge);
    }
    sssp::SpTree {
        source: s,
        dist: dist
            .into_iter()
            .map(|d| (d != u64::MAX).then_some(d))
            .collect(),
        parent,
        order,
    }
}

/// Weighted weak CSSSP with additive error `epsilon * W`.
pub fn weighted_weak_csssp(
    g: &Graph,
    s: NodeId,
    gray: &GrayEdgeSet,
    budget: usize,
    epsilon: f64,
) -> Result<PathTree> {
    check_inputs(g, s, gray, budget)?;
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParams(format!(
            "epsilon={epsilon} not in (0,1)"
        )));
    }
    let surcharge = epsilon * g.max_weight() / budget as f64;
    let tree = dijkstra(g, s, |e| {
        let w = g.weight(e);
        OrderedFloat(if gray.contains(e) { w + surcharge } else { w })
    });
    let dist = tree
        .dist
        .iter()
        .map(|d| d.map_or(f64::INFINITY, |d| d.0))
        .collect();
    Ok(PathTree::from_tree(g, gray, &tree, dist))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgeset::EdgeSet;
    use crate::generate::random_graph;
    use crate::sssp::bfs_distances;

    #[test]
    fn bucket_queue_matches_heap() {
        for seed in 0..20 {
            let g = random_graph(80, 300, seed).unwrap();
            let gray = EdgeSet::from_ids(
                g.m(),
                (0..g.m()).filter(|e| (e * 7 + seed as usize).is_multiple_of(3)),
            );
            for budget in 1..5u64 {
                let fast = bucket_dijkstra(&g, 0, &gray, budget);
                let slow = dijkstra(
                    &g,
                    0,
                    |e| if gray.contains(e) { budget + 1 } else { budget },
                );
                assert_eq!(fast.dist, slow.dist);
                assert_eq!(fast.parent, slow.parent);
            }
        }
    }

    #[test]
    fn path_with_one_gray_edge() {
        // s=0 - a=1 - b=2 - t=3, (a,b) gray
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let gray = EdgeSet::from_ids(3, [1]);
        let tree = weak_csssp(&g, 0, &gray, 2).unwrap();
        assert_eq!(tree.true_length[3], 3.0);
        assert_eq!(tree.gray_count[3], 1);
        assert_eq!(tree.punished_dist[3], 3.5);
        assert_eq!(tree.punished_scaled(3), Some(7));
        assert_eq!(tree.path_nodes(&g, 3).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn no_gray_edges_is_bfs() {
        let g = crate::generate::random_graph(40, 90, 4).unwrap();
        let gray = EdgeSet::empty(g.m());
        let tree = weak_csssp(&g, 5, &gray, 3).unwrap();
        let bfs = bfs_distances(&g, 5);
        for t in g.nodes() {
            if bfs[t] == crate::sssp::UNREACHED {
                assert!(!tree.is_reachable(t));
                assert!(tree.true_length[t].is_infinite());
            } else {
                assert_eq!(tree.true_length[t], bfs[t] as f64);
                assert_eq!(tree.punished_dist[t], bfs[t] as f64);
                assert_eq!(tree.gray_count[t], 0);
            }
        }
    }

    #[test]
    fn triangle_prefers_cheap_budget_path() {
        // s=0, t=1, u=2; (s,t) gray, g=1
        let g = Graph::from_pairs(3, &[(0, 1), (0, 2), (2, 1)]).unwrap();
        let gray = EdgeSet::from_ids(3, [0]);
        let tree = weak_csssp(&g, 0, &gray, 1).unwrap();
        assert!(tree.true_length[1] <= 2.0);
        assert_eq!(tree.punished_dist[1], 2.0);
    }

    #[test]
    fn weighted_single_gray_edge() {
        let g = Graph::from_triples(2, &[(0, 1, 2.0)]).unwrap();
        let gray = EdgeSet::full(1);
        let tree = weighted_weak_csssp(&g, 0, &gray, 4, 0.5).unwrap();
        assert_eq!(tree.punished_dist[1], 2.25);
        assert_eq!(tree.gray_count[1], 1);
        assert_eq!(tree.true_length[1], 2.0);
        assert_eq!(tree.punished_scaled(1), None);
    }

    #[test]
    fn weighted_no_gray_is_dijkstra() {
        let g = crate::generate::random_weighted_graph(40, 120, 1.0, 10.0, 8).unwrap();
        let gray = EdgeSet::empty(g.m());
        let tree = weighted_weak_csssp(&g, 0, &gray, 2, 0.3).unwrap();
        let plain = crate::sssp::weighted_distances(&g, 0);
        for t in g.nodes() {
            assert_eq!(tree.punished_dist[t], plain[t]);
            if plain[t].is_finite() {
                assert!((tree.true_length[t] - plain[t]).abs() <= 1e-9 * g.max_weight());
            }
        }
    }

    #[test]
    fn weighted_two_routes() {
        // s=0, a=1, b=2, t=3: s-a-t weight 1+1 gray, s-b-t 1.2+1.2 plain
        let g =
            Graph::from_triples(4, &[(0, 1, 1.0), (1, 3, 1.0), (0, 2, 1.2), (2, 3, 1.2)]).unwrap();
        let gray = EdgeSet::from_ids(4, [0, 1]);
        let tree = weighted_weak_csssp(&g, 0, &gray, 2, 0.5).unwrap();
        assert_eq!(tree.path_nodes(&g, 3).unwrap(), vec![0, 2, 3]);
        assert!((tree.true_length[3] - 2.4).abs() < 1e-12);
        assert!(tree.true_length[3] < 2.0 + 0.5 * g.max_weight());
    }

    #[test]
    fn input_errors() {
        let g = Graph::from_pairs(3, &[(0, 1)]).unwrap();
        let gray = EdgeSet::empty(1);
        assert!(matches!(
            weak_csssp(&g, 3, &gray, 2),
            Err(Error::NodeOutOfRange { .. })
        ));
        assert!(weak_csssp(&g, 0, &gray, 0).is_err());
        assert!(weak_csssp(&g, 0, &EdgeSet::empty(5), 2).is_err());
        let w = Graph::from_triples(2, &[(0, 1, 2.0)]).unwrap();
        assert!(matches!(
            weak_csssp(&w, 0, &gray, 2),
            Err(Error::WeightedInput)
        ));
        assert!(weighted_weak_csssp(&w, 0, &gray, 2, 1.0).is_err());
    }
}
