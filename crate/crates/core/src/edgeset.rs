use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// A set of edge ids of one particular graph.
///
/// Used both for spanner edge sets and for the gray (constrained) edges the
/// CSSSP solvers count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

/// Gray edges: the constrained edges a CSSSP path budget is charged for.
pub type GrayEdgeSet = EdgeSet;

impl EdgeSet {
    pub fn empty(m: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(m),
        }
    }

    pub fn full(m: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(m);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(m: usize, ids: I) -> Self {
        let mut set = Self::empty(m);
        for id in ids {
            set.insert(id);
        }
        set
    }

    /// Maps the edges of `sub` (a graph on the same node set) onto edge ids of
    /// `g`. Fails if `sub` has an edge that `g` lacks.
    pub fn from_subgraph(g: &Graph, sub: &Graph) -> Result<Self> {
        if sub.n() != g.n() {
            return Err(Error::NotSubgraph(format!(
                "node counts differ ({} vs {})",
                sub.n(),
                g.n()
            )));
        }
        let mut set = Self::empty(g.m());
        for e in sub.edges() {
            let id = g.edge_between(e.u, e.v).ok_or_else(|| {
                Error::NotSubgraph(format!("edge ({},{}) is not in the graph", e.u, e.v))
            })?;
            set.insert(id);
        }
        Ok(set)
    }

    /// Number of edge ids this set ranges over (the `m` of its graph).
    #[inline]
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, id: EdgeId) -> bool {
        self.bits.contains(id)
    }

    /// Inserts `id`, returning true if it was not already present.
    #[inline]
    pub fn insert(&mut self, id: EdgeId) -> bool {
        !self.bits.put(id)
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones()
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.bits.union_with(&other.bits);
    }

    /// Edges of the universe not in this set.
    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSet { bits }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub(crate) fn check_universe(&self, g: &Graph) -> Result<()> {
        if self.universe() != g.m() {
            return Err(Error::NotSubgraph(format!(
                "edge set ranges over {} ids but the graph has {} edges",
                self.universe(),
                g.m()
            )));
        }
        Ok(())
    }
}
