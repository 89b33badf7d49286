// SPDX-License-Identifier: Apache-2.0

//! Densest connected subgraph mining on dual networks.
//!
//! A dual network pairs a weighted *conceptual* graph with an unweighted
//! *physical* graph over corresponding nodes. The goal is a node set that is
//! dense in the conceptual graph and connected in the physical one. The
//! pipeline merges both graphs into a weighted alignment graph
//! ([`aligner`]), peels it greedily ([`densest`]), and then checks or repairs
//! physical connectivity of the selected component ([`pipeline`]).
//!
//! ```
//! use dnalign::{DualNetwork, DcsOptions, GraphBuilder, extract_dcs};
//!
//! let mut c = GraphBuilder::new();
//! c.add_edge("a", "b", 1.0).unwrap();
//! c.add_edge("b", "c", 1.0).unwrap();
//! c.add_edge("a", "c", 1.0).unwrap();
//! let mut p = GraphBuilder::new();
//! p.add_edge("a", "b", 1.0).unwrap();
//! p.add_edge("b", "c", 1.0).unwrap();
//!
//! let dn = DualNetwork::with_identity(c.build(), p.build()).unwrap();
//! let dcs = extract_dcs(&dn, &DcsOptions::default()).unwrap();
//! assert_eq!(dcs.nodes.len(), 3);
//! assert!(dcs.physically_connected);
//! ```

pub mod aligner;
pub mod densest;
pub mod dualnet;
pub mod error;
pub mod graph;
pub mod ingest;
pub mod oracle;
pub mod pipeline;
pub mod report;

pub use aligner::{
    build_alignment_graph, gap_weight, AlignmentEdge, AlignmentGraph, AlignmentSummary, CompositeNode,
    EdgeKind, GapWeightRule,
};
pub use densest::{exact_densest, peel, peel_observed, DensestResult, PeelStep, PeelTrace};
pub use dualnet::{validate, Correspondence, DualNetwork, ValidationReport};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, HopLimit, HopPath, NodeId, NodeSet};
pub use oracle::{brute_force_dcs, OracleResult, ORACLE_NODE_CAP};
pub use pipeline::{
    extract_dcs, repair_connectivity, verify_physical_connectivity, Connectivity, DcsOptions, DcsResult,
};

/// Relative tolerance for density comparisons.
pub const REL_TOL: f64 = 1e-9;

/// `a` and `b` agree to relative tolerance `tol` (absolute near zero).
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
