//! All-pairs baseline: clusters around `S2`, then for every pair of clusters
//! the shortest `(x1,s) . pi(s,t) . (t,x2)` whose canonical shortest path
//! `pi(s,t)` has at most `mu^3/n` heavy nodes.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{
    heavy_mask, membership, s1_probability, s2_probability, sample_nodes, Algorithm,
    EdgeAccumulator, Samples, SpannerBuild,
};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::generate::rng_from_seed;
use crate::graph::{Graph, NodeId};
use crate::params::Params;
use crate::sssp::{bfs_tree, UNREACHED};

/// Default node cap for all-pairs work.
pub const DEFAULT_APSP_CAP: usize = 5000;

/// The node cap for all-pairs work: `SPANNER_APSP_CAP` if set, otherwise
/// [`DEFAULT_APSP_CAP`].
pub fn apsp_cap() -> usize {
    std::env::var("SPANNER_APSP_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_APSP_CAP)
}

/// Cluster centers of the baseline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterAssignment {
    /// `S2` nodes are their own center; a heavy node outside `S2` with an
    /// `S2` neighbor is assigned the lowest-id such neighbor.
    pub center: Vec<Option<NodeId>>,
    /// Members per center, ascending, center included.
    pub members: BTreeMap<NodeId, Vec<NodeId>>,
}

impl ClusterAssignment {
    pub fn build(g: &Graph, heavy: &[bool], s2: &[NodeId]) -> Self {
        let in_s2 = membership(g.n(), s2);
        let mut center = vec![None; g.n()];
        let mut members: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for &x in s2 {
            center[x] = Some(x);
            members.entry(x).or_default();
        }
        for v in g.nodes() {
            if in_s2[v] {
                members.get_mut(&v).unwrap().push(v);
            } else if heavy[v] {
                if let Some(a) = g.neighbors(v).iter().find(|a| in_s2[a.to]) {
                    center[v] = Some(a.to);
                    members.get_mut(&a.to).unwrap().push(v);
                }
            }
        }
        ClusterAssignment { center, members }
    }

    pub fn clustered(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.center
            .iter()
            .enumerate()
            .filter_map(|(x, c)| c.map(|_| x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    len: u32,
    s: NodeId,
    t: NodeId,
}

pub fn chechik_baseline(g: &Graph, params: &Params) -> Result<SpannerBuild> {
    params.validate()?;
    let mut rng = rng_from_seed(params.seed);
    let s1 = sample_nodes(g.n(), s1_probability(g.n(), params.mu), &mut rng);
    let s2 = sample_nodes(g.n(), s2_probability(params.mu), &mut rng);
    chechik_baseline_with_samples(g, params, &Samples { s1, s2 })
}

pub fn chechik_baseline_with_samples(
    g: &Graph,
    params: &Params,
    samples: &Samples,
) -> Result<SpannerBuild> {
    params.validate()?;
    if !g.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    let cap = apsp_cap();
    if g.n() > cap {
        return Err(Error::ApspCap { n: g.n(), cap });
    }
    let heavy = heavy_mask(g, params.mu);
    let in_s2 = membership(g.n(), &samples.s2);
    let mut acc = EdgeAccumulator::new(g.m());

    for (id, e) in g.edges().iter().enumerate() {
        if !heavy[e.u] || !heavy[e.v] {
            acc.edges.insert(id);
            acc.counts.light_init += 1;
        }
    }

    acc.counts.s1_trees = acc.add_trees(&samples.s1, |x| bfs_tree(g, x).parent);

    for x in g.nodes().filter(|&x| heavy[x]) {
        let near_s2 = in_s2[x] || g.neighbors(x).iter().any(|a| in_s2[a.to]);
        if !near_s2 {
            acc.counts.coverage += acc.add_incident(g, x);
        }
    }

    let clusters = ClusterAssignment::build(g, &heavy, &samples.s2);
    for v in g.nodes() {
        if let Some(c) = clusters.center[v] {
            if c != v {
                acc.edges.insert(g.edge_between(v, c).unwrap());
                acc.counts.cluster_links += 1;
            }
        }
    }

    let clustered: Vec<NodeId> = clusters.clustered().collect();
    let center = |x: NodeId| clusters.center[x].unwrap();

    // best candidate per unordered center pair, scanning sources in parallel
    let per_source: Vec<HashMap<(NodeId, NodeId), Candidate>> = clustered
        .par_iter()
        .map(|&s| {
            let tree = bfs_tree(g, s);
            let mut heavy_on_path = vec![0usize; g.n()];
            for &x in &tree.order {
                let above = tree.parent[x].map_or(0, |e| heavy_on_path[g.edge(e).other(x)]);
                heavy_on_path[x] = above + heavy[x] as usize;
            }
            let cs = center(s);
            let mut best = HashMap::new();
            for &t in &clustered {
                let ct = center(t);
                if ct == cs || tree.dist[t] == UNREACHED {
                    continue;
                }
                if !params.within_heavy_budget(g.n(), heavy_on_path[t]) {
                    continue;
                }
                let len = tree.dist[t] + (s != cs) as u32 + (t != ct) as u32;
                let cand = Candidate { len, s, t };
                let key = (cs.min(ct), cs.max(ct));
                best.entry(key)
                    .and_modify(|c: &mut Candidate| *c = (*c).min(cand))
                    .or_insert(cand);
            }
            best
        })
        .collect();
    let mut chosen: HashMap<(NodeId, NodeId), Candidate> = HashMap::new();
    for map in per_source {
        for (key, cand) in map {
            chosen
                .entry(key)
                .and_modify(|c| *c = (*c).min(cand))
                .or_insert(cand);
        }
    }

    let mut by_source: BTreeMap<NodeId, Vec<Candidate>> = BTreeMap::new();
    for cand in chosen.values() {
        by_source.entry(cand.s).or_default().push(*cand);
    }
    let mut paths = EdgeSet::empty(g.m());
    for (s, cands) in &by_source {
        let tree = bfs_tree(g, *s);
        for cand in cands {
            let (cs, ct) = (center(cand.s), center(cand.t));
            if cs != cand.s {
                paths.insert(g.edge_between(cs, cand.s).unwrap());
                acc.counts.pair_paths += 1;
            }
            for e in tree
                .path_edges(g, cand.t)
                .expect("candidate target is reachable")
            {
                paths.insert(e);
                acc.counts.pair_paths += 1;
            }
            if ct != cand.t {
                paths.insert(g.edge_between(cand.t, ct).unwrap());
                acc.counts.pair_paths += 1;
            }
        }
    }
    acc.edges.union_with(&paths);

    Ok(SpannerBuild {
        algorithm: Algorithm::Baseline,
        spanner_edges: acc.edges,
        s1: samples.s1.clone(),
        s2: samples.s2.clone(),
        stage_counts: acc.counts,
        params: *params,
        gray_frozen: EdgeSet::empty(g.m()),
        max_path_gray: 0,
        paths_added: chosen.len() as u64,
    })
}
