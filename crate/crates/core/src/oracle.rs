//! Exact reference solvers for checking the CSSSP contracts.
//!
//! These are deliberately separate from the production Dijkstra in
//! [`crate::sssp`]: they run on an explicit (node, gray-count) product graph
//! or on lexicographic (distance, gray-count) keys. Cost grows with the gray
//! budget, so they are meant for small test instances.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use ordered_float::OrderedFloat;

use crate::edgeset::GrayEdgeSet;
use crate::graph::{Graph, NodeId};

/// For every node, the minimum weight of a path from `s` that uses at most
/// `budget` gray edges (`f64::INFINITY` if there is none).
///
/// Dijkstra over `budget + 1` layers; crossing a gray edge moves one layer
/// up. Budgets above `m` are clamped since no simple path can exceed it.
pub fn oracle_budgeted_csssp(g: &Graph, s: NodeId, gray: &GrayEdgeSet, budget: usize) -> Vec<f64> {
    let n = g.n();
    let layers = budget.min(g.m()) + 1;
    let idx = |v: NodeId, k: usize| k * n + v;
    let mut dist = vec![f64::INFINITY; n * layers];
    let mut done = vec![false; n * layers];
    let mut heap = BinaryHeap::new();
    dist[idx(s, 0)] = 0.0;
    heap.push(Reverse((OrderedFloat(0.0), s, 0usize)));
    while let Some(Reverse((OrderedFloat(d), u, k))) = heap.pop() {
        if done[idx(u, k)] {
            continue;
        }
        done[idx(u, k)] = true;
        for arc in g.neighbors(u) {
            let nk = k + gray.contains(arc.edge) as usize;
            if nk >= layers {
                continue;
            }
            let nd = d + g.weight(arc.edge);
            let slot = idx(arc.to, nk);
            if nd < dist[slot] {
                dist[slot] = nd;
                heap.push(Reverse((OrderedFloat(nd), arc.to, nk)));
            }
        }
    }
    (0..n)
        .map(|v| {
            (0..layers)
                .map(|k| dist[idx(v, k)])
                .fold(f64::INFINITY, f64::min)
        })
        .collect()
}

/// Shortest distances from `s` together with the fewest gray edges on any
/// shortest path, by Dijkstra on lexicographic `(distance, gray)` keys.
pub fn lexicographic_gray_distances(
    g: &Graph,
    s: NodeId,
    gray: &GrayEdgeSet,
) -> Vec<Option<(f64, usize)>> {
    let n = g.n();
    let mut best: Vec<Option<(OrderedFloat<f64>, usize)>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    best[s] = Some((OrderedFloat(0.0), 0));
    heap.push(Reverse((OrderedFloat(0.0), 0usize, s)));
    while let Some(Reverse((d, k, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for arc in g.neighbors(u) {
            let key = (
                OrderedFloat(d.0 + g.weight(arc.edge)),
                k + gray.contains(arc.edge) as usize,
            );
            if best[arc.to].is_none_or(|old| key < old) {
                best[arc.to] = Some(key);
                heap.push(Reverse((key.0, key.1, arc.to)));
            }
        }
    }
    best.into_iter().map(|b| b.map(|(d, k)| (d.0, k))).collect()
}

/// Per target: (distance, fewest gray edges) from one start node.
type LexDistances = Vec<Option<(f64, usize)>>;

/// Precomputed g-short path test for a fixed source.
///
/// A g-short `s ~> t` path has the form `(s,s') . pi(s',t') . (t',t)` with
/// `s'` in `{s} + N(s)`, `t'` in `{t} + N(t)`, `pi` a shortest path, and
/// fewer than `g` gray edges overall. For each candidate `s'` this keeps the
/// minimum gray count over shortest `s' ~> x` paths for every `x`.
pub struct GShortOracle<'a> {
    g: &'a Graph,
    gray: &'a GrayEdgeSet,
    starts: Vec<(usize, LexDistances)>,
}

impl<'a> GShortOracle<'a> {
    pub fn new(g: &'a Graph, s: NodeId, gray: &'a GrayEdgeSet) -> Self {
        let mut starts = vec![(0, lexicographic_gray_distances(g, s, gray))];
        for arc in g.neighbors(s) {
            let prefix = gray.contains(arc.edge) as usize;
            starts.push((prefix, lexicographic_gray_distances(g, arc.to, gray)));
        }
        GShortOracle { g, gray, starts }
    }

    /// Fewest gray edges over all paths of the g-short form to `t`, or
    /// `None` if `t` is unreachable.
    pub fn min_gray(&self, t: NodeId) -> Option<usize> {
        let mut ends = vec![(t, 0usize)];
        for arc in self.g.neighbors(t) {
            ends.push((arc.to, self.gray.contains(arc.edge) as usize));
        }
        let mut best: Option<usize> = None;
        for (prefix, table) in &self.starts {
            for &(end, suffix) in &ends {
                if let Some((_, k)) = table[end] {
                    let total = prefix + k + suffix;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
            }
        }
        best
    }

    pub fn exists(&self, t: NodeId, budget: usize) -> bool {
        self.min_gray(t).is_some_and(|k| k < budget)
    }
}

/// True iff a g-short `s ~> t` path exists.
pub fn oracle_gshort_exists(
    g: &Graph,
    s: NodeId,
    t: NodeId,
    gray: &GrayEdgeSet,
    budget: usize,
) -> bool {
    GShortOracle::new(g, s, gray).exists(t, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgeset::EdgeSet;

    #[test]
    fn budget_excludes_gray() {
        // s=0 - a=1 - t=2, (a,t) gray
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let gray = EdgeSet::from_ids(2, [1]);
        let d0 = oracle_budgeted_csssp(&g, 0, &gray, 0);
        assert_eq!(d0, vec![0.0, 1.0, f64::INFINITY]);
        let d1 = oracle_budgeted_csssp(&g, 0, &gray, 1);
        assert_eq!(d1[2], 2.0);
    }

    #[test]
    fn budget_prefers_longer_clean_route() {
        // 0-1 gray (short), 0-2-3-1 clean
        let g = Graph::from_pairs(4, &[(0, 1), (0, 2), (2, 3), (3, 1)]).unwrap();
        let gray = EdgeSet::from_ids(4, [0]);
        assert_eq!(oracle_budgeted_csssp(&g, 0, &gray, 0)[1], 3.0);
        assert_eq!(oracle_budgeted_csssp(&g, 0, &gray, 1)[1], 1.0);
    }

    #[test]
    fn gshort_all_gray_budget_one() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let gray = EdgeSet::full(2);
        assert!(!oracle_gshort_exists(&g, 0, 2, &gray, 1));
        assert!(!oracle_gshort_exists(&g, 0, 1, &gray, 1));
        assert!(oracle_gshort_exists(&g, 0, 0, &gray, 1));
    }

    #[test]
    fn gshort_large_budget() {
        let g = Graph::from_pairs(5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let gray = EdgeSet::full(3);
        assert!(oracle_gshort_exists(&g, 0, 3, &gray, g.m() + 3));
        assert!(!oracle_gshort_exists(&g, 0, 4, &gray, 100));
    }

    #[test]
    fn gshort_through_neighbors() {
        // s=0 - a=1 - b=2 - t=3, only (a,b) gray
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let gray = EdgeSet::from_ids(3, [1]);
        let oracle = GShortOracle::new(&g, 0, &gray);
        assert_eq!(oracle.min_gray(3), Some(1));
        assert!(oracle.exists(3, 2));
        assert!(!oracle.exists(3, 1));
    }

    #[test]
    fn lexicographic_prefers_fewer_gray_among_shortest() {
        // two shortest 0->3 routes: via 1 (gray) and via 2 (clean)
        let g = Graph::from_pairs(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let gray = EdgeSet::from_ids(4, [0]);
        let d = lexicographic_gray_distances(&g, 0, &gray);
        assert_eq!(d[3], Some((2.0, 0)));
        assert_eq!(d[1], Some((1.0, 1)));
    }
}
