//! Canonical single-source shortest-path trees.
//!
//! Both the BFS and the Dijkstra tree pick, among all predecessors that lie
//! on some shortest path, the one with the lowest node id. The heap pops the
//! lowest `(distance, node id)` first.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::ops::Add;

use ordered_float::OrderedFloat;

use crate::graph::{EdgeId, Graph, NodeId};

pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct BfsTree {
    pub source: NodeId,
    pub dist: Vec<u32>,
    pub parent: Vec<Option<EdgeId>>,
    /// Nodes in the order they were reached.
    pub order: Vec<NodeId>,
}

/// Hop distances from `s`; `UNREACHED` for nodes in other components.
pub fn bfs_distances(g: &Graph, s: NodeId) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for arc in g.neighbors(u) {
            if dist[arc.to] == UNREACHED {
                dist[arc.to] = du;
                queue.push_back(arc.to);
            }
        }
    }
    dist
}

pub fn bfs_tree(g: &Graph, s: NodeId) -> BfsTree {
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut order = Vec::with_capacity(n);
    dist[s] = 0;
    order.push(s);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let du = dist[u] + 1;
        for arc in g.neighbors(u) {
            if dist[arc.to] == UNREACHED {
                dist[arc.to] = du;
                order.push(arc.to);
            }
        }
    }
    // first tight neighbor in sorted adjacency is the lowest-id parent
    let mut parent = vec![None; n];
    for &v in &order[1..] {
        let want = dist[v] - 1;
        parent[v] = g
            .neighbors(v)
            .iter()
            .find(|a| dist[a.to] == want)
            .map(|a| a.edge);
    }
    BfsTree {
        source: s,
        dist,
        parent,
        order,
    }
}

/// Edge costs usable by [`dijkstra`]: totally ordered, additive, with zero.
pub trait Cost: Copy + Ord + Add<Output = Self> {
    const ZERO: Self;
}

impl Cost for u64 {
    const ZERO: Self = 0;
}

impl Cost for OrderedFloat<f64> {
    const ZERO: Self = OrderedFloat(0.0);
}

#[derive(Debug, Clone)]
pub struct SpTree<C> {
    pub source: NodeId,
    pub dist: Vec<Option<C>>,
    pub parent: Vec<Option<EdgeId>>,
    /// Nodes in settle order (non-decreasing distance).
    pub order: Vec<NodeId>,
}

impl<C> SpTree<C> {
    /// Edge ids on the tree path from the source to `t`, listed from `t`
    /// backwards.
    pub fn path_edges(&self, g: &Graph, t: NodeId) -> Option<Vec<EdgeId>> {
        walk_parents(g, &self.parent, self.source, t)
    }
}

impl BfsTree {
    pub fn path_edges(&self, g: &Graph, t: NodeId) -> Option<Vec<EdgeId>> {
        walk_parents(g, &self.parent, self.source, t)
    }

    /// Nodes of the tree path from the source to `t`, source first.
    pub fn path_nodes(&self, g: &Graph, t: NodeId) -> Option<Vec<NodeId>> {
        parent_path_nodes(g, &self.parent, self.source, t)
    }
}

pub(crate) fn walk_parents(
    g: &Graph,
    parent: &[Option<EdgeId>],
    source: NodeId,
    t: NodeId,
) -> Option<Vec<EdgeId>> {
    if t != source && parent[t].is_none() {
        return None;
    }
    let mut out = Vec::new();
    let mut x = t;
    while x != source {
        let e = parent[x]?;
        out.push(e);
        x = g.edge(e).other(x);
    }
    Some(out)
}

pub(crate) fn parent_path_nodes(
    g: &Graph,
    parent: &[Option<EdgeId>],
    source: NodeId,
    t: NodeId,
) -> Option<Vec<NodeId>> {
    let edges = walk_parents(g, parent, source, t)?;
    let mut nodes = Vec::with_capacity(edges.len() + 1);
    let mut x = t;
    nodes.push(x);
    for e in edges {
        x = g.edge(e).other(x);
        nodes.push(x);
    }
    nodes.reverse();
    Some(nodes)
}

/// Dijkstra from `s` under `cost`, with canonical lowest-parent-id ties.
pub fn dijkstra<C: Cost>(g: &Graph, s: NodeId, cost: impl Fn(EdgeId) -> C) -> SpTree<C> {
    let n = g.n();
    let mut dist: Vec<Option<C>> = vec![None; n];
    let mut parent = vec![None; n];
    let mut parent_node = vec![usize::MAX; n];
    let mut settled = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();
    dist[s] = Some(C::ZERO);
    heap.push(Reverse((C::ZERO, s)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if settled[u] {
            continue;
        }
        settled[u] = true;
        order.push(u);
        for arc in g.neighbors(u) {
            let v = arc.to;
            if settled[v] {
                continue;
            }
            let nd = d + cost(arc.edge);
            match dist[v] {
                Some(old) if nd > old => {}
                Some(old) if nd == old => {
                    if u < parent_node[v] {
                        parent_node[v] = u;
                        parent[v] = Some(arc.edge);
                    }
                }
                _ => {
                    dist[v] = Some(nd);
                    parent_node[v] = u;
                    parent[v] = Some(arc.edge);
                    heap.push(Reverse((nd, v)));
                }
            }
        }
    }
    SpTree {
        source: s,
        dist,
        parent,
        order,
    }
}

/// Dijkstra under the graph's own weights.
pub fn weighted_tree(g: &Graph, s: NodeId) -> SpTree<OrderedFloat<f64>> {
    dijkstra(g, s, |e| OrderedFloat(g.weight(e)))
}

/// Plain weighted distances from `s`; `f64::INFINITY` when unreachable.
pub fn weighted_distances(g: &Graph, s: NodeId) -> Vec<f64> {
    weighted_tree(g, s)
        .dist
        .into_iter()
        .map(|d| d.map_or(f64::INFINITY, |d| d.0))
        .collect()
}
