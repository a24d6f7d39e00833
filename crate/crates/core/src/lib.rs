//! Exact rainbow vertex-connection numbers for small graphs.
//!
//! A vertex-colored graph is rainbow vertex-connected when every pair of
//! vertices is joined by a path whose internal vertices carry distinct
//! colors; `rvc(G)` is the fewest colors that achieve this. This crate
//! computes `rvc` exactly, builds the graph families that make
//! `2 <= rvc(G) + rvc(complement G) <= n - 1` tight, and sweeps every small
//! graph to check those bounds.
//!
//! ```
//! use rvc_core::{constructions::path_graph, rvc_exact};
//!
//! let p6 = path_graph(6).unwrap();
//! assert_eq!(rvc_exact(&p6).unwrap().value, 4);
//! assert_eq!(rvc_exact(&p6.complement()).unwrap().value, 1);
//! ```

pub mod canon;
pub mod census;
pub mod constructions;
pub mod graph;
pub mod graph6;
pub mod rainbow;
pub mod rgs;
pub mod solver;

pub use canon::{canonical_form, CanonicalForm};
pub use census::{census_run, enumerate_graphs, ingest_graph6, CensusRecord, CensusSummary};
pub use constructions::{lower_bound_pair, path_complement_pair, theorem2_graph, verify_lemma1_instance, NgPair};
pub use graph::{Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use rainbow::{
    exists_rainbow_path, exists_rainbow_path_oracle, first_failing_pair, is_rainbow_vertex_connected, VertexColoring,
};
pub use solver::{find_rainbow_coloring, rvc, rvc_exact, LowerBound, RvcError, RvcResult};
