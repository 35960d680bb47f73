use super::{
    center_paths, heavy_edge_set, heavy_mask, membership, s1_probability, s2_probability,
    sample_nodes, Algorithm, EdgeAccumulator, Samples, SpannerBuild,
};
use crate::csssp::weak_csssp;
use crate::error::{Error, Result};
use crate::generate::rng_from_seed;
use crate::graph::Graph;
use crate::params::Params;
use crate::sssp::bfs_tree;

/// +4 additive spanner of an unweighted graph.
///
/// 1. every edge incident to a light node;
/// 2. a BFS tree from each node of `S1` (sampled with probability `9mu/n`);
/// 3. all edges of heavy nodes with no `S2` node (probability `1/mu`) in
///    their closed neighborhood;
/// 4. for other heavy nodes outside `S2`, one edge to their lowest-id `S2`
///    neighbor;
/// 5. weak CSSSP from every `x1` in `S2` with the heavy edges gray, adding
///    the path to every other `x2` in `S2`.
pub fn fast_plus4(g: &Graph, params: &Params) -> Result<SpannerBuild> {
    params.validate()?;
    let mut rng = rng_from_seed(params.seed);
    let s1 = sample_nodes(g.n(), s1_probability(g.n(), params.mu), &mut rng);
    let s2 = sample_nodes(g.n(), s2_probability(params.mu), &mut rng);
    fast_plus4_with_samples(g, params, &Samples { s1, s2 })
}

/// [`fast_plus4`] with caller-chosen `S1` and `S2`.
pub fn fast_plus4_with_samples(
    g: &Graph,
    params: &Params,
    samples: &Samples,
) -> Result<SpannerBuild> {
    params.validate()?;
    if !g.is_unweighted() {
        return Err(Error::WeightedInput);
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
        } else if !in_s2[x] {
            // adjacency is sorted, so this is the lowest-id S2 neighbor
            let link = g.neighbors(x).iter().find(|a| in_s2[a.to]).unwrap();
            acc.edges.insert(link.edge);
            acc.counts.cluster_links += 1;
        }
    }

    let gray = heavy_edge_set(g, params.mu);
    let stage = center_paths(g, &samples.s2, |x1| {
        weak_csssp(g, x1, &gray, params.g).expect("inputs validated above")
    });
    acc.edges.union_with(&stage.edges);
    acc.counts.pair_paths = stage.insertions;

    Ok(SpannerBuild {
        algorithm: Algorithm::Fast,
        spanner_edges: acc.edges,
        s1: samples.s1.clone(),
        s2: samples.s2.clone(),
        stage_counts: acc.counts,
        params: *params,
        gray_frozen: gray,
        max_path_gray: stage.max_gray,
        paths_added: stage.paths,
    })
}
