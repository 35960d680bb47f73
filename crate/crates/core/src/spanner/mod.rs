//! Spanner constructions.
//!
//! * [`fast_plus4`]: +4 spanner of an unweighted graph, with weak CSSSP
//!   between the sampled cluster centers.
//! * [`chechik_baseline`]: the same guarantee via all-pairs BFS; desk scale.
//! * [`weighted_plus4`]: +4W(s,t)+eps*W spanner of a weighted graph.
//!
//! A node is heavy when its degree is at least `mu`. An edge is heavy (gray
//! in the CSSSP stage) when *both* endpoints are heavy.

mod baseline;
mod fast;
mod init;
mod weighted;

pub use baseline::{
    apsp_cap, chechik_baseline, chechik_baseline_with_samples, ClusterAssignment, DEFAULT_APSP_CAP,
};
pub use fast::{fast_plus4, fast_plus4_with_samples};
pub use init::lightweight_init;
pub use weighted::{weighted_plus4, weighted_plus4_with_samples};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::csssp::PathTree;
use crate::edgeset::{EdgeSet, GrayEdgeSet};
use crate::graph::{EdgeId, Graph, NodeId};
use crate::params::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Baseline,
    Fast,
    Weighted,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::Baseline => "baseline",
            Algorithm::Fast => "fast",
            Algorithm::Weighted => "weighted",
        })
    }
}

/// Edge insertions attempted per stage. Stages may insert edges that are
/// already present, so the sum can exceed the final edge count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCounts {
    /// Edges incident to light nodes (unweighted) or the lightweight
    /// initialization (weighted).
    pub light_init: u64,
    pub s1_trees: u64,
    /// Incident edges of nodes with no sampled center in their neighborhood.
    pub coverage: u64,
    pub cluster_links: u64,
    /// Edges of the paths joining pairs of centers.
    pub pair_paths: u64,
}

impl StageCounts {
    pub fn total(&self) -> u64 {
        self.light_init + self.s1_trees + self.coverage + self.cluster_links + self.pair_paths
    }
}

/// Result of one spanner construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SpannerBuild {
    pub algorithm: Algorithm,
    pub spanner_edges: EdgeSet,
    pub s1: Vec<NodeId>,
    pub s2: Vec<NodeId>,
    pub stage_counts: StageCounts,
    pub params: Params,
    /// Gray edges handed to the path stage (empty for the baseline).
    pub gray_frozen: GrayEdgeSet,
    /// Largest gray count over all added center-to-center paths.
    pub max_path_gray: u32,
    /// Number of center pairs whose path was added.
    pub paths_added: u64,
}

impl SpannerBuild {
    pub fn edge_count(&self) -> usize {
        self.spanner_edges.count()
    }

    /// The spanner as a graph on the same node set.
    pub fn to_graph(&self, g: &Graph) -> Graph {
        g.subgraph(self.spanner_edges.iter())
    }
}

/// The two sampled node sets. Constructions draw them from the seed in
/// [`Params`]; the `*_with_samples` entry points take them explicitly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Samples {
    pub s1: Vec<NodeId>,
    pub s2: Vec<NodeId>,
}

/// Nodes with degree at least `mu`, ascending.
pub fn heavy_nodes(g: &Graph, mu: usize) -> Vec<NodeId> {
    g.nodes().filter(|&x| g.degree(x) >= mu).collect()
}

pub(crate) fn heavy_mask(g: &Graph, mu: usize) -> Vec<bool> {
    g.nodes().map(|x| g.degree(x) >= mu).collect()
}

/// Edges whose endpoints are both heavy.
pub fn heavy_edge_set(g: &Graph, mu: usize) -> GrayEdgeSet {
    let heavy = heavy_mask(g, mu);
    EdgeSet::from_ids(
        g.m(),
        g.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| heavy[e.u] && heavy[e.v])
            .map(|(id, _)| id),
    )
}

/// Probability `9 mu / n` clamped to 1.
pub(crate) fn s1_probability(n: usize, mu: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (9.0 * mu as f64 / n as f64).min(1.0)
}

pub(crate) fn s2_probability(mu: usize) -> f64 {
    1.0 / mu as f64
}

pub(crate) fn sample_nodes(n: usize, p: f64, rng: &mut impl Rng) -> Vec<NodeId> {
    let p = p.clamp(0.0, 1.0);
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

pub(crate) fn membership(n: usize, nodes: &[NodeId]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &x in nodes {
        mask[x] = true;
    }
    mask
}

/// Accumulates spanner edges together with per-stage insertion counts.
pub(crate) struct EdgeAccumulator {
    pub edges: EdgeSet,
    pub counts: StageCounts,
}

impl EdgeAccumulator {
    pub fn new(m: usize) -> Self {
        EdgeAccumulator {
            edges: EdgeSet::empty(m),
            counts: StageCounts::default(),
        }
    }

    pub fn add_incident(&mut self, g: &Graph, x: NodeId) -> u64 {
        for arc in g.neighbors(x) {
            self.edges.insert(arc.edge);
        }
        g.degree(x) as u64
    }

    /// Adds the shortest-path tree of every root; returns the insertion
    /// count. Trees are folded straight into per-thread edge sets.
    pub fn add_trees<F>(&mut self, roots: &[NodeId], tree: F) -> u64
    where
        F: Fn(NodeId) -> Vec<Option<EdgeId>> + Sync,
    {
        let m = self.edges.universe();
        let (edges, count) = roots
            .par_iter()
            .fold(
                || (EdgeSet::empty(m), 0u64),
                |(mut set, mut count), &x| {
                    for e in tree(x).into_iter().flatten() {
                        set.insert(e);
                        count += 1;
                    }
                    (set, count)
                },
            )
            .reduce(
                || (EdgeSet::empty(m), 0u64),
                |(mut a, ca), (b, cb)| {
                    a.union_with(&b);
                    (a, ca + cb)
                },
            );
        self.edges.union_with(&edges);
        count
    }
}

/// Output of the center-to-center path stage.
pub(crate) struct PathStage {
    pub edges: EdgeSet,
    pub insertions: u64,
    pub paths: u64,
    pub max_gray: u32,
}

/// Runs `solve` from every center and adds the tree path to every other
/// reachable center. Sources are independent and solved in parallel; the
/// merge is a set union, so the result does not depend on scheduling.
pub(crate) fn center_paths<F>(g: &Graph, centers: &[NodeId], solve: F) -> PathStage
where
    F: Fn(NodeId) -> PathTree + Sync,
{
    let partials: Vec<PathStage> = centers
        .par_iter()
        .map(|&x1| {
            let tree = solve(x1);
            let mut local = PathStage {
                edges: EdgeSet::empty(g.m()),
                insertions: 0,
                paths: 0,
                max_gray: 0,
            };
            for &x2 in centers {
                if x2 == x1 || !tree.is_reachable(x2) {
                    continue;
                }
                let mut x = x2;
                while let Some(e) = tree.parent[x] {
                    local.edges.insert(e);
                    local.insertions += 1;
                    x = g.edge(e).other(x);
                }
                local.paths += 1;
                local.max_gray = local.max_gray.max(tree.gray_count[x2]);
            }
            local
        })
        .collect();
    let mut out = PathStage {
        edges: EdgeSet::empty(g.m()),
        insertions: 0,
        paths: 0,
        max_gray: 0,
    };
    for p in partials {
        out.edges.union_with(&p.edges);
        out.insertions += p.insertions;
        out.paths += p.paths;
        out.max_gray = out.max_gray.max(p.max_gray);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph;
    use crate::params::default_params;

    #[test]
    fn heavy_nodes_star() {
        let g = Graph::from_pairs(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(heavy_nodes(&g, 3), vec![0]);
    }

    #[test]
    fn mu_one_is_every_non_isolated_node() {
        let g = Graph::from_pairs(5, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(heavy_nodes(&g, 1), vec![0, 1, 2]);
    }

    #[test]
    fn heavy_nodes_match_degree_recount() {
        let g = random_graph(200, 2000, 3).unwrap();
        let mu = default_params(200).mu;
        let mut deg = vec![0usize; 200];
        for e in g.edges() {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        let expected: Vec<_> = (0..200).filter(|&x| deg[x] >= mu).collect();
        assert_eq!(heavy_nodes(&g, mu), expected);
    }

    #[test]
    fn heavy_edges() {
        let path = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(heavy_edge_set(&path, 2).is_empty());

        let k4 = random_graph(4, 6, 0).unwrap();
        assert_eq!(heavy_edge_set(&k4, 3).count(), 6);

        // triangle 0-1-2 plus pendant 0-3: degrees 3,2,2,1
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let gray = heavy_edge_set(&g, 2);
        assert_eq!(gray.iter().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn probabilities_clamp() {
        assert_eq!(s1_probability(10, 5), 1.0);
        assert!((s1_probability(1000, 10) - 0.09).abs() < 1e-12);
        assert_eq!(s1_probability(0, 1), 0.0);
    }
}
