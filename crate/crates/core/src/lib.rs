//! Additive graph spanners.
//!
//! Builds +4 additive spanners of unweighted graphs and +4W(s,t)+eps*W
//! spanners of weighted graphs. The path stage of both constructions uses
//! *weak CSSSP*: Dijkstra with a surcharge on constrained ("gray") edges,
//! which returns paths that use few gray edges and are never longer than
//! any path with fewer than `g` gray edges, whenever a short path of the
//! right shape exists.
//!
//! Every guarantee can be checked with the brute-force tools in [`verify`]
//! and the exact reference solvers in [`oracle`].
//!
//! ```
//! use additive_spanner::{default_params, fast_plus4, random_graph, verify_additive_stretch};
//!
//! let g = random_graph(200, 3000, 7).unwrap();
//! let params = default_params(g.n()).seed(7);
//! let build = fast_plus4(&g, &params).unwrap();
//! let report = verify_additive_stretch(&g, &build.spanner_edges, 4).unwrap();
//! assert!(build.edge_count() <= g.m());
//! assert!(report.passed());
//! ```

pub mod cli;
pub mod csssp;
pub mod edgeset;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod params;
pub mod spanner;
pub mod sssp;
pub mod verify;

pub use csssp::{weak_csssp, weighted_weak_csssp, PathTree};
pub use edgeset::{EdgeSet, GrayEdgeSet};
pub use error::{Error, Result};
pub use generate::{random_graph, random_weighted_graph};
pub use graph::{build_graph, Edge, EdgeId, Graph, NodeId};
pub use io::{parse_edge_list, read_edge_list, serialize_edge_list, write_edge_list};
pub use oracle::{oracle_budgeted_csssp, oracle_gshort_exists, GShortOracle};
pub use params::{default_params, Params};
pub use spanner::{
    chechik_baseline, fast_plus4, heavy_edge_set, heavy_nodes, lightweight_init, weighted_plus4,
    Algorithm, Samples, SpannerBuild, StageCounts,
};
pub use verify::{
    check_three_neighbors_lemma, heavy_dist, size_report, verify_additive_stretch,
    verify_weighted_stretch, StretchReport,
};
