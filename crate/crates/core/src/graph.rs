//! Immutable undirected graph with CSR adjacency.
//!
//! Edges keep the orientation they were given in, so an edge list round-trips
//! unchanged. Adjacency lists are sorted by neighbor id; every "pick any"
//! choice downstream resolves to the lowest id because of that.

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: NodeId,
    pub v: NodeId,
    pub w: f64,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: NodeId) -> NodeId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub to: NodeId,
    pub edge: EdgeId,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    first_out: Vec<usize>,
    arcs: Vec<Arc>,
    max_weight: f64,
    unit_weights: bool,
}

impl Graph {
    /// Builds a simple undirected graph on nodes `0..n`.
    ///
    /// Self-loops, parallel edges (in either orientation) and non-positive
    /// weights are rejected rather than normalized.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut degree = vec![0usize; n];
        for e in &edges {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::NodeOutOfRange { node: x, n });
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if e.w <= 0.0 || !e.w.is_finite() {
                return Err(Error::NonPositiveWeight {
                    u: e.u,
                    v: e.v,
                    w: e.w,
                });
            }
            degree[e.u] += 1;
            degree[e.v] += 1;
        }

        let mut first_out = Vec::with_capacity(n + 1);
        first_out.push(0);
        for d in &degree {
            first_out.push(first_out.last().unwrap() + d);
        }
        let mut fill = first_out[..n].to_vec();
        let mut arcs = vec![Arc { to: 0, edge: 0 }; 2 * edges.len()];
        for (id, e) in edges.iter().enumerate() {
            arcs[fill[e.u]] = Arc { to: e.v, edge: id };
            fill[e.u] += 1;
            arcs[fill[e.v]] = Arc { to: e.u, edge: id };
            fill[e.v] += 1;
        }
        for x in 0..n {
            let list = &mut arcs[first_out[x]..first_out[x + 1]];
            list.sort_unstable_by_key(|a| a.to);
            if let Some(pair) = list.windows(2).find(|p| p[0].to == p[1].to) {
                let (a, b) = (x.min(pair[0].to), x.max(pair[0].to));
                return Err(Error::ParallelEdge(a, b));
            }
        }

        let max_weight = edges.iter().map(|e| e.w).fold(0.0, f64::max);
        let unit_weights = edges.iter().all(|e| e.w == 1.0);
        Ok(Graph {
            n,
            edges,
            first_out,
            arcs,
            max_weight: if unit_weights { 1.0 } else { max_weight },
            unit_weights,
        })
    }

    /// Convenience constructor over `(u, v, w)` triples.
    pub fn from_triples(n: usize, triples: &[(NodeId, NodeId, f64)]) -> Result<Self> {
        Self::new(
            n,
            triples.iter().map(|&(u, v, w)| Edge { u, v, w }).collect(),
        )
    }

    /// Unit-weight graph over `(u, v)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(NodeId, NodeId)]) -> Result<Self> {
        Self::new(
            n,
            pairs.iter().map(|&(u, v)| Edge { u, v, w: 1.0 }).collect(),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Maximum edge weight `W`; 1 for unweighted (and empty) graphs.
    #[inline]
    pub fn max_weight(&self) -> f64 {
        self.max_weight
    }

    /// True when every edge has weight exactly 1.
    #[inline]
    pub fn is_unweighted(&self) -> bool {
        self.unit_weights
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    #[inline]
    pub fn weight(&self, id: EdgeId) -> f64 {
        self.edges[id].w
    }

    #[inline]
    pub fn neighbors(&self, x: NodeId) -> &[Arc] {
        &self.arcs[self.first_out[x]..self.first_out[x + 1]]
    }

    #[inline]
    pub fn degree(&self, x: NodeId) -> usize {
        self.first_out[x + 1] - self.first_out[x]
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.n
    }

    pub fn edge_between(&self, a: NodeId, b: NodeId) -> Option<EdgeId> {
        if a >= self.n || b >= self.n {
            return None;
        }
        let list = self.neighbors(a);
        list.binary_search_by_key(&b, |arc| arc.to)
            .ok()
            .map(|i| list[i].edge)
    }

    /// The subgraph on the same node set containing the selected edges, in
    /// edge-id order.
    pub fn subgraph<I>(&self, ids: I) -> Graph
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let edges = ids.into_iter().map(|id| self.edges[id]).collect();
        Graph::new(self.n, edges).expect("subgraph of a valid graph is valid")
    }
}

/// Builds a graph from `(u, v, w)` triples; see [`Graph::new`].
pub fn build_graph(n: usize, triples: &[(NodeId, NodeId, f64)]) -> Result<Graph> {
    Graph::from_triples(n, triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph() {
        let g = Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.max_weight(), 1.0);
        assert!(g.is_unweighted());
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.edge_between(2, 1), Some(1));
        assert_eq!(g.edge_between(0, 2), None);
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::from_triples(2, &[(0, 0, 1.0)]).unwrap_err();
        assert!(err.to_string().contains("self-loop"), "{err}");
    }

    #[test]
    fn rejects_parallel_edge() {
        let err = Graph::from_triples(3, &[(0, 1, 2.5), (0, 1, 3.0)]).unwrap_err();
        assert!(err.to_string().contains("parallel edge"), "{err}");
        let err = Graph::from_triples(3, &[(0, 1, 1.0), (1, 0, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::ParallelEdge(0, 1)));
    }

    #[test]
    fn rejects_bad_weights_and_ids() {
        assert!(matches!(
            Graph::from_triples(2, &[(0, 1, 0.0)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            Graph::from_triples(2, &[(0, 1, f64::NAN)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            Graph::from_triples(2, &[(0, 2, 1.0)]),
            Err(Error::NodeOutOfRange { node: 2, n: 2 })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_pairs(5, &[(3, 0), (0, 4), (1, 0), (2, 3)]).unwrap();
        let ids: Vec<_> = g.neighbors(0).iter().map(|a| a.to).collect();
        assert_eq!(ids, vec![1, 3, 4]);
        let total: usize = g.nodes().map(|x| g.degree(x)).sum();
        assert_eq!(total, 2 * g.m());
        for (id, e) in g.edges().iter().enumerate() {
            assert!(g.neighbors(e.u).iter().any(|a| a.edge == id && a.to == e.v));
            assert!(g.neighbors(e.v).iter().any(|a| a.edge == id && a.to == e.u));
        }
    }

    #[test]
    fn weighted_max() {
        let g = Graph::from_triples(3, &[(0, 1, 2.5), (1, 2, 0.5)]).unwrap();
        assert_eq!(g.max_weight(), 2.5);
        assert!(!g.is_unweighted());
    }
}
