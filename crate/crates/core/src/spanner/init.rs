use crate::edgeset::EdgeSet;
use crate::graph::{EdgeId, Graph};

/// Union over all nodes of each node's `d` lightest incident edges; equal
/// weights go to the lower edge id.
pub fn lightweight_init(g: &Graph, d: usize) -> EdgeSet {
    let mut set = EdgeSet::empty(g.m());
    let mut scratch: Vec<EdgeId> = Vec::new();
    for x in g.nodes() {
        let arcs = g.neighbors(x);
        if arcs.len() <= d {
            for arc in arcs {
                set.insert(arc.edge);
            }
            continue;
        }
        scratch.clear();
        scratch.extend(arcs.iter().map(|a| a.edge));
        let key = |e: &EdgeId| (ordered_float::OrderedFloat(g.weight(*e)), *e);
        scratch.select_nth_unstable_by_key(d - 1, key);
        for &e in &scratch[..d] {
            set.insert(e);
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_d1() {
        // A=0, B=1, C=2: AB(1) id 0, BC(2) id 1, AC(3) id 2
        let g = Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]).unwrap();
        let s = lightweight_init(&g, 1);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn low_degree_takes_everything() {
        let g = crate::generate::random_weighted_graph(30, 40, 1.0, 5.0, 2).unwrap();
        let maxdeg = g.nodes().map(|x| g.degree(x)).max().unwrap();
        assert_eq!(lightweight_init(&g, maxdeg).count(), g.m());
    }

    #[test]
    fn star_union_semantics() {
        let g = Graph::from_pairs(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(lightweight_init(&g, 2).count(), 5);
        // with only the center choosing, its two lowest-id spokes would win
        let sub = Graph::from_pairs(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (2, 3),
            ],
        )
        .unwrap();
        let s = lightweight_init(&sub, 1);
        // 0 keeps edge 0 (0-1); 1 keeps 0; 2 keeps 1 (0-2); 3 keeps 2 (0-3); 4, 5 keep their spokes
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn ties_break_by_edge_id() {
        let g = Graph::from_triples(4, &[(0, 3, 2.0), (0, 1, 1.0), (0, 2, 1.0)]).unwrap();
        let s = lightweight_init(&g, 1);
        // node 0 picks edge 1 (weight 1, lower id than edge 2); leaves pick their only edge
        assert!(s.contains(1));
        assert_eq!(s.count(), 3);
    }
}
