//! Seeded uniform random simple graphs (the G(n, m) model).

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn max_edges(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Inverse of `k = v(v-1)/2 + u` for `u < v`.
fn pair_from_index(k: u64) -> (usize, usize) {
    let mut v = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    let u = k - v * (v - 1) / 2;
    (u as usize, v as usize)
}

/// A uniformly random simple graph with exactly `m` unit-weight edges.
///
/// Edges are listed in lexicographic `(u, v)` order with `u < v`; the same
/// `(n, m, seed)` always produces the same graph.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    let edges = sample_edges(n, m, &mut rng)?;
    Graph::new(n, edges)
}

/// Like [`random_graph`], with weights drawn uniformly from `[lo, hi]`.
pub fn random_weighted_graph(n: usize, m: usize, lo: f64, hi: f64, seed: u64) -> Result<Graph> {
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return Err(Error::InvalidWeightRange { lo, hi });
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = sample_edges(n, m, &mut rng)?;
    for e in &mut edges {
        e.w = rng.gen_range(lo..=hi);
    }
    Graph::new(n, edges)
}

fn sample_edges(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Edge>> {
    let max = max_edges(n);
    if m as u64 > max {
        return Err(Error::TooManyEdges { n, m, max });
    }
    let mut picks: Vec<u64> = index::sample(rng, max as usize, m)
        .into_iter()
        .map(|k| k as u64)
        .collect();
    picks.sort_unstable();
    let mut edges: Vec<Edge> = picks
        .into_iter()
        .map(|k| {
            let (u, v) = pair_from_index(k);
            Edge { u, v, w: 1.0 }
        })
        .collect();
    edges.sort_unstable_by_key(|e| (e.u, e.v));
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_roundtrip() {
        let mut k = 0u64;
        for v in 1..60u64 {
            for u in 0..v {
                assert_eq!(pair_from_index(k), (u as usize, v as usize));
                k += 1;
            }
        }
        // large indices near the f64 precision boundary
        let v = 3_000_000u64;
        for u in [0, 1, v / 2, v - 1] {
            assert_eq!(
                pair_from_index(v * (v - 1) / 2 + u),
                (u as usize, v as usize)
            );
        }
    }

    #[test]
    fn complete_graph_when_forced() {
        let g = random_graph(4, 6, 7).unwrap();
        assert_eq!(g.m(), 6);
        for x in g.nodes() {
            assert_eq!(g.degree(x), 3);
        }
    }

    #[test]
    fn too_many_edges() {
        assert!(matches!(
            random_graph(4, 7, 0),
            Err(Error::TooManyEdges { .. })
        ));
        assert!(random_graph(1, 0, 0).unwrap().m() == 0);
        assert!(random_graph(0, 0, 0).unwrap().n() == 0);
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_graph(100, 300, 1).unwrap();
        let b = random_graph(100, 300, 1).unwrap();
        let c = random_graph(100, 300, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn weights_in_range() {
        let g = random_weighted_graph(50, 200, 1.0, 10.0, 3).unwrap();
        assert!(g.edges().iter().all(|e| (1.0..=10.0).contains(&e.w)));
        assert!(!g.is_unweighted());
        assert!(random_weighted_graph(5, 3, 0.0, 1.0, 0).is_err());
        assert!(random_weighted_graph(5, 3, 2.0, 1.0, 0).is_err());
    }
}
