//! Brute-force checks of stretch, size and structural properties.
//!
//! Everything here runs a full BFS or Dijkstra per source, so it is meant
//! for graphs up to a few thousand nodes. Above the APSP cap (or when a pair
//! sample is requested) the stretch checks fall back to uniformly sampled
//! pairs.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::generate::rng_from_seed;
use crate::graph::{Graph, NodeId};
use crate::spanner::{apsp_cap, SpannerBuild, StageCounts};
use crate::sssp::{bfs_distances, bfs_tree, weighted_distances, weighted_tree, UNREACHED};

/// At most this many violating pairs are listed in a report.
pub const MAX_LISTED_VIOLATIONS: usize = 100;

/// Pairs drawn in sampled mode when none is specified.
pub const DEFAULT_PAIR_SAMPLE: usize = 1000;

/// How `W(s,t)` is read for the weighted bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairWeightMode {
    /// Minimum over all shortest `s ~> t` paths of the heaviest edge.
    #[default]
    Strict,
    /// Heaviest edge on the verifier's canonical shortest path.
    Canonical,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub apsp_cap: usize,
    /// Check this many uniformly random pairs instead of all pairs.
    pub pair_sample: Option<usize>,
    pub seed: u64,
    pub pair_weight: PairWeightMode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            apsp_cap: apsp_cap(),
            pair_sample: None,
            seed: 0,
            pair_weight: PairWeightMode::Strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub s: NodeId,
    pub t: NodeId,
    pub dist_g: f64,
    pub dist_h: f64,
    pub allowed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StretchReport {
    /// `"+k"` or `"+4W(s,t)+epsW"`.
    pub bound_kind: String,
    /// Max over checked pairs of `dist_H - (dist_G + bound)`; `-inf` when no
    /// pair was checked, `+inf` when some pair is disconnected in `H` only.
    pub max_surplus: f64,
    pub worst_pair: Option<(NodeId, NodeId)>,
    pub violations: u64,
    /// Pairs connected in `G` (unordered; sampled pairs may repeat).
    pub pairs_checked: u64,
    pub sampled: bool,
    pub violating_pairs: Vec<Violation>,
}

impl StretchReport {
    fn empty(bound_kind: String, sampled: bool) -> Self {
        StretchReport {
            bound_kind,
            max_surplus: f64::NEG_INFINITY,
            worst_pair: None,
            violations: 0,
            pairs_checked: 0,
            sampled,
            violating_pairs: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn record(&mut self, s: NodeId, t: NodeId, dist_g: f64, dist_h: f64, allowed: f64, tol: f64) {
        self.pairs_checked += 1;
        let surplus = dist_h - allowed;
        if surplus > self.max_surplus {
            self.max_surplus = surplus;
            self.worst_pair = Some((s, t));
        }
        if surplus > tol {
            self.violations += 1;
            if self.violating_pairs.len() < MAX_LISTED_VIOLATIONS {
                self.violating_pairs.push(Violation {
                    s,
                    t,
                    dist_g,
                    dist_h,
                    allowed,
                });
            }
        }
    }

    fn merge(mut self, other: StretchReport) -> Self {
        if other.max_surplus > self.max_surplus {
            self.max_surplus = other.max_surplus;
            self.worst_pair = other.worst_pair;
        }
        self.violations += other.violations;
        self.pairs_checked += other.pairs_checked;
        let room = MAX_LISTED_VIOLATIONS - self.violating_pairs.len();
        self.violating_pairs
            .extend(other.violating_pairs.into_iter().take(room));
        self
    }
}

/// Targets per source: all `t > s`, or a sample grouped by source.
fn pair_plan(n: usize, opts: &VerifyOptions) -> (bool, Vec<(NodeId, Vec<NodeId>)>) {
    let sample = match opts.pair_sample {
        Some(k) => Some(k),
        None if n > opts.apsp_cap => Some(DEFAULT_PAIR_SAMPLE),
        None => None,
    };
    match sample {
        None => (false, (0..n).map(|s| (s, (s + 1..n).collect())).collect()),
        Some(k) => {
            let mut grouped: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
            if n >= 2 {
                let mut rng = rng_from_seed(opts.seed);
                for _ in 0..k {
                    let s = rng.gen_range(0..n);
                    let mut t = rng.gen_range(0..n - 1);
                    if t >= s {
                        t += 1;
                    }
                    grouped.entry(s).or_default().push(t);
                }
            }
            (true, grouped.into_iter().collect())
        }
    }
}

fn spanner_graph(g: &Graph, h: &EdgeSet) -> Result<Graph> {
    h.check_universe(g)?;
    Ok(g.subgraph(h.iter()))
}

pub fn verify_additive_stretch(g: &Graph, h: &EdgeSet, k: u32) -> Result<StretchReport> {
    verify_additive_stretch_with(g, h, k, &VerifyOptions::default())
}

/// Checks `dist_H(s,t) <= dist_G(s,t) + k` over all (or sampled) pairs
/// connected in `G`. `G` must be unweighted; `H` is a set of `G`'s edge ids.
pub fn verify_additive_stretch_with(
    g: &Graph,
    h: &EdgeSet,
    k: u32,
    opts: &VerifyOptions,
) -> Result<StretchReport> {
    if !g.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    let hg = spanner_graph(g, h)?;
    let (sampled, plan) = pair_plan(g.n(), opts);
    let kind = format!("+{k}");
    let partials: Vec<StretchReport> = plan
        .par_iter()
        .map(|(s, targets)| {
            let mut rep = StretchReport::empty(kind.clone(), sampled);
            let dg = bfs_distances(g, *s);
            let dh = bfs_distances(&hg, *s);
            for &t in targets {
                if dg[t] == UNREACHED {
                    continue;
                }
                let dist_h = if dh[t] == UNREACHED {
                    f64::INFINITY
                } else {
                    dh[t] as f64
                };
                let dist_g = dg[t] as f64;
                rep.record(*s, t, dist_g, dist_h, dist_g + k as f64, 0.0);
            }
            rep
        })
        .collect();
    Ok(partials
        .into_iter()
        .fold(StretchReport::empty(kind, sampled), StretchReport::merge))
}

pub fn verify_weighted_stretch(g: &Graph, h: &EdgeSet, epsilon: f64) -> Result<StretchReport> {
    verify_weighted_stretch_with(g, h, epsilon, &VerifyOptions::default())
}

/// Per-target `W(s,t)` from source `s` under the given reading, with the
/// `G`-distances. Predecessors within `tol` of tight count as tight.
pub fn pair_weights(g: &Graph, s: NodeId, mode: PairWeightMode, tol: f64) -> (Vec<f64>, Vec<f64>) {
    let tree = weighted_tree(g, s);
    let dist: Vec<f64> = tree
        .dist
        .iter()
        .map(|d| d.map_or(f64::INFINITY, |d| d.0))
        .collect();
    let mut bottleneck = vec![f64::INFINITY; g.n()];
    bottleneck[s] = 0.0;
    for &v in tree.order.iter().skip(1) {
        bottleneck[v] = match mode {
            PairWeightMode::Canonical => {
                let e = tree.parent[v].expect("settled non-source node has a parent");
                let u = g.edge(e).other(v);
                bottleneck[u].max(g.weight(e))
            }
            PairWeightMode::Strict => g
                .neighbors(v)
                .iter()
                .filter(|a| {
                    let du = dist[a.to];
                    du < dist[v] && (du + g.weight(a.edge) - dist[v]).abs() <= tol
                })
                .map(|a| bottleneck[a.to].max(g.weight(a.edge)))
                .fold(f64::INFINITY, f64::min),
        };
    }
    (dist, bottleneck)
}

/// Checks `dist_H(s,t) <= dist_G(s,t) + 4 W(s,t) + epsilon W` with `W` the
/// global maximum weight. Comparisons allow `1e-9 * W` of rounding slack.
pub fn verify_weighted_stretch_with(
    g: &Graph,
    h: &EdgeSet,
    epsilon: f64,
    opts: &VerifyOptions,
) -> Result<StretchReport> {
    let hg = spanner_graph(g, h)?;
    let (sampled, plan) = pair_plan(g.n(), opts);
    let global = g.max_weight();
    let tol = 1e-9 * global;
    let kind = format!("+4W(s,t)+{epsilon}W");
    let partials: Vec<StretchReport> = plan
        .par_iter()
        .map(|(s, targets)| {
            let mut rep = StretchReport::empty(kind.clone(), sampled);
            let (dg, pair_w) = pair_weights(g, *s, opts.pair_weight, tol);
            let dh = weighted_distances(&hg, *s);
            for &t in targets {
                if dg[t].is_infinite() {
                    continue;
                }
                let allowed = dg[t] + 4.0 * pair_w[t] + epsilon * global;
                rep.record(*s, t, dg[t], dh[t], allowed, tol);
            }
            rep
        })
        .collect();
    Ok(partials
        .into_iter()
        .fold(StretchReport::empty(kind, sampled), StretchReport::merge))
}

/// Number of nodes on `path` with degree at least `mu`.
pub fn heavy_dist(g: &Graph, path: &[NodeId], mu: usize) -> Result<usize> {
    for &x in path {
        if x >= g.n() {
            return Err(Error::NodeOutOfRange { node: x, n: g.n() });
        }
    }
    for w in path.windows(2) {
        if g.edge_between(w[0], w[1]).is_none() {
            return Err(Error::NotAdjacent(w[0], w[1]));
        }
    }
    Ok(path.iter().filter(|&&x| g.degree(x) >= mu).count())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborWitness {
    pub s: NodeId,
    pub t: NodeId,
    pub node: NodeId,
    pub neighbors_on_path: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub trials: usize,
    /// Trials where `t` was reachable and a path was examined.
    pub paths_checked: usize,
    pub counterexample: Option<NeighborWitness>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Samples `(s,t)` pairs and checks that no node has more than three
/// neighbors on the canonical BFS path from `s` to `t`.
pub fn check_three_neighbors_lemma(g: &Graph, trials: usize, seed: u64) -> LemmaCheck {
    let mut out = LemmaCheck {
        trials,
        paths_checked: 0,
        counterexample: None,
    };
    if g.n() == 0 {
        return out;
    }
    let mut rng = rng_from_seed(seed);
    let mut count = vec![0usize; g.n()];
    let mut touched = Vec::new();
    for _ in 0..trials {
        let s = rng.gen_range(0..g.n());
        let t = rng.gen_range(0..g.n());
        let Some(path) = bfs_tree(g, s).path_nodes(g, t) else {
            continue;
        };
        out.paths_checked += 1;
        for &p in &path {
            for a in g.neighbors(p) {
                if count[a.to] == 0 {
                    touched.push(a.to);
                }
                count[a.to] += 1;
            }
        }
        let worst = touched
            .iter()
            .copied()
            .max_by_key(|&v| (count[v], std::cmp::Reverse(v)));
        if let Some(v) = worst {
            if count[v] > 3 && out.counterexample.is_none() {
                out.counterexample = Some(NeighborWitness {
                    s,
                    t,
                    node: v,
                    neighbors_on_path: count[v],
                });
            }
        }
        for v in touched.drain(..) {
            count[v] = 0;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeReport {
    pub n: usize,
    pub mu: usize,
    pub edges: usize,
    /// `|E(H)| / (n * mu)`; 0 for an empty graph.
    pub ratio_n_mu: f64,
    pub stage_counts: StageCounts,
}

pub fn size_report(build: &SpannerBuild, g: &Graph) -> SizeReport {
    let edges = build.edge_count();
    let denom = g.n() as f64 * build.params.mu as f64;
    SizeReport {
        n: g.n(),
        mu: build.params.mu,
        edges,
        ratio_n_mu: if denom > 0.0 {
            edges as f64 / denom
        } else {
            0.0
        },
        stage_counts: build.stage_counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn identity_spanner() {
        let g = crate::generate::random_graph(30, 60, 1).unwrap();
        let r = verify_additive_stretch(&g, &EdgeSet::full(g.m()), 4).unwrap();
        assert!(r.passed());
        assert_eq!(r.max_surplus, -4.0);
        let r = verify_additive_stretch(&g, &EdgeSet::full(g.m()), 0).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn c5_minus_edge() {
        let g = cycle(5);
        let h = EdgeSet::from_ids(5, 0..4);
        let r = verify_additive_stretch(&g, &h, 4).unwrap();
        assert_eq!(r.max_surplus, -1.0);
        assert_eq!(r.worst_pair, Some((0, 4)));
        assert_eq!(r.violations, 0);
        assert_eq!(r.pairs_checked, 10);
    }

    #[test]
    fn c7_minus_edge() {
        let g = cycle(7);
        let h = EdgeSet::from_ids(7, 0..6);
        let r = verify_additive_stretch(&g, &h, 4).unwrap();
        assert_eq!(r.max_surplus, 1.0);
        assert_eq!(r.worst_pair, Some((0, 6)));
        assert_eq!(r.violations, 1);
        assert_eq!(r.violating_pairs[0].dist_h, 6.0);
    }

    #[test]
    fn disconnected_pairs_are_skipped_or_infinite() {
        let g = Graph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let r = verify_additive_stretch(&g, &EdgeSet::full(2), 4).unwrap();
        assert_eq!(r.pairs_checked, 2);
        let r = verify_additive_stretch(&g, &EdgeSet::from_ids(2, [0]), 4).unwrap();
        assert_eq!(r.violations, 1);
        assert!(r.max_surplus.is_infinite());
    }

    #[test]
    fn wrong_universe_rejected() {
        let g = cycle(5);
        assert!(matches!(
            verify_additive_stretch(&g, &EdgeSet::full(4), 4),
            Err(Error::NotSubgraph(_))
        ));
    }

    #[test]
    fn sampled_mode() {
        let g = cycle(7);
        let opts = VerifyOptions {
            pair_sample: Some(50),
            seed: 3,
            ..VerifyOptions::default()
        };
        let r = verify_additive_stretch_with(&g, &EdgeSet::full(7), 4, &opts).unwrap();
        assert!(r.sampled);
        assert_eq!(r.pairs_checked, 50);
        let capped = VerifyOptions {
            apsp_cap: 5,
            ..VerifyOptions::default()
        };
        let r = verify_additive_stretch_with(&g, &EdgeSet::full(7), 4, &capped).unwrap();
        assert!(r.sampled);
        assert_eq!(r.pairs_checked, DEFAULT_PAIR_SAMPLE as u64);
    }

    #[test]
    fn weighted_two_nodes() {
        let g = Graph::from_triples(2, &[(0, 1, 5.0)]).unwrap();
        let r = verify_weighted_stretch(&g, &EdgeSet::full(1), 0.1).unwrap();
        assert!(r.passed());
        assert!((r.max_surplus + (4.0 * 5.0 + 0.5)).abs() < 1e-12);
    }

    #[test]
    fn diamond_minimax() {
        // s=0, t=3: 0-1 (9), 1-3 (1) vs 0-2 (2), 2-3 (8); both weigh 10
        let g =
            Graph::from_triples(4, &[(0, 1, 9.0), (1, 3, 1.0), (0, 2, 2.0), (2, 3, 8.0)]).unwrap();
        let (d, w) = pair_weights(&g, 0, PairWeightMode::Strict, 1e-9);
        assert_eq!(d[3], 10.0);
        assert_eq!(w[3], 8.0);
        // variant from the examples: max edges 9 vs 2
        let g =
            Graph::from_triples(4, &[(0, 1, 9.0), (1, 3, 1.0), (0, 2, 2.0), (2, 3, 2.0)]).unwrap();
        let (d, w) = pair_weights(&g, 0, PairWeightMode::Strict, 1e-9);
        assert_eq!(d[3], 4.0);
        assert_eq!(w[3], 2.0);
        let g =
            Graph::from_triples(4, &[(0, 1, 1.0), (1, 3, 3.0), (0, 2, 2.0), (2, 3, 2.0)]).unwrap();
        let (_, strict) = pair_weights(&g, 0, PairWeightMode::Strict, 1e-9);
        let (_, canon) = pair_weights(&g, 0, PairWeightMode::Canonical, 1e-9);
        assert_eq!(strict[3], 2.0);
        // canonical parent of 3 is the lower id 1
        assert_eq!(canon[3], 3.0);
    }

    #[test]
    fn heavy_dist_counts() {
        let path = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(heavy_dist(&path, &[0, 1, 2, 3], 3).unwrap(), 0);
        let k5 = crate::generate::random_graph(5, 10, 0).unwrap();
        assert_eq!(heavy_dist(&k5, &[0, 1, 2, 3, 4], 3).unwrap(), 5);
        assert!(matches!(
            heavy_dist(&path, &[0, 2], 1),
            Err(Error::NotAdjacent(0, 2))
        ));
    }

    #[test]
    fn heavy_dist_hand_built() {
        // path 0-1-2-3-4-5 with hubs: 2 and 3 get three extra leaves each
        let mut pairs = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)];
        for leaf in 6..9 {
            pairs.push((2, leaf));
        }
        for leaf in 9..12 {
            pairs.push((3, leaf));
        }
        let g = Graph::from_pairs(12, &pairs).unwrap();
        assert_eq!(heavy_dist(&g, &[0, 1, 2, 3, 4, 5], 4).unwrap(), 2);
    }

    #[test]
    fn lemma_on_small_graphs() {
        let path = Graph::from_pairs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(check_three_neighbors_lemma(&path, 100, 1).passed());
        let k4 = crate::generate::random_graph(4, 6, 0).unwrap();
        let r = check_three_neighbors_lemma(&k4, 100, 1);
        assert!(r.passed());
        assert_eq!(r.paths_checked, 100);
    }

    #[test]
    fn size_report_empty() {
        let g = Graph::from_pairs(0, &[]).unwrap();
        let b = crate::spanner::fast_plus4(&g, &crate::params::default_params(0)).unwrap();
        let r = size_report(&b, &g);
        assert_eq!((r.edges, r.ratio_n_mu), (0, 0.0));
    }
}
