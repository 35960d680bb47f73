use super::{
    center_paths, lightweight_init, membership, s1_probability, s2_probability, sample_nodes,
    Algorithm, EdgeAccumulator, Samples, SpannerBuild,
};
use crate::csssp::weighted_weak_csssp;
use crate::error::{Error, Result};
use crate::generate::rng_from_seed;
use crate::graph::Graph;
use crate::params::Params;
use crate::sssp::weighted_tree;

/// +4W(s,t)+eps*W spanner of a weighted graph.
///
/// 1. `H0`: each node's `mu` lightest edges;
/// 2. sample `S2` (probability `1/mu`) and add all edges of every node with
///    no `S2` node in its closed `H0`-neighborhood;
/// 3. sample `S1` (probability `9mu/n`) and add a shortest-path tree from
///    each;
/// 4. freeze the gray set as the edges still missing, then run weighted weak
///    CSSSP from every `x1` in `S2` and add the path to every other `x2`.
///
/// `params.epsilon` must be set.
pub fn weighted_plus4(g: &Graph, params: &Params) -> Result<SpannerBuild> {
    params.validate()?;
    let mut rng = rng_from_seed(params.seed);
    let s2 = sample_nodes(g.n(), s2_probability(params.mu), &mut rng);
    let s1 = sample_nodes(g.n(), s1_probability(g.n(), params.mu), &mut rng);
    weighted_plus4_with_samples(g, params, &Samples { s1, s2 })
}

pub fn weighted_plus4_with_samples(
    g: &Graph,
    params: &Params,
    samples: &Samples,
) -> Result<SpannerBuild> {
    params.validate()?;
    let epsilon = params
        .epsilon
        .ok_or_else(|| Error::InvalidParams("weighted construction requires epsilon".into()))?;

    let mut acc = EdgeAccumulator::new(g.m());
    let init = lightweight_init(g, params.mu);
    acc.counts.light_init = init.count() as u64;
    acc.edges.union_with(&init);

    let in_s2 = membership(g.n(), &samples.s2);
    for x in g.nodes() {
        let near_s2 = in_s2[x]
            || g.neighbors(x)
                .iter()
                .any(|a| init.contains(a.edge) && in_s2[a.to]);
        if !near_s2 {
            acc.counts.coverage += acc.add_incident(g, x);
        }
    }

    acc.counts.s1_trees = acc.add_trees(&samples.s1, |x| weighted_tree(g, x).parent);

    let gray = acc.edges.complement();
    let stage = center_paths(g, &samples.s2, |x1| {
        weighted_weak_csssp(g, x1, &gray, params.g, epsilon).expect("inputs validated above")
    });
    acc.edges.union_with(&stage.edges);
    acc.counts.pair_paths = stage.insertions;

    Ok(SpannerBuild {
        algorithm: Algorithm::Weighted,
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
