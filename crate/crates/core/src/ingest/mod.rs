// SPDX-License-Identifier: Apache-2.0

//! Reading and writing networks, building conceptual networks from raw
//! case-study data, and generating synthetic instances.

mod edgelist;
mod export;
mod geo;
mod synthetic;
mod text;

pub use edgelist::{
    parse_correspondence, parse_edge_list, parse_edge_list_with_summary, write_correspondence, write_edge_list,
    ParseSummary,
};
pub use export::{export_alignment, export_graph, graph_from_json, highlight_dot, ExportFormat};
pub use geo::{geo_conceptual, haversine_km, parse_checkins, CheckinRecord, EARTH_RADIUS_KM};
pub use synthetic::{
    generate_planted, generate_planted_with, random_dual_network, PlantedInstance, PlantedParams, RandomDualParams,
};
pub use text::{jaccard, jaccard_conceptual, parse_documents, tokenize};

use crate::graph::{BfsScratch, Graph, HopLimit, NodeId};

/// Which node pairs a conceptual-network builder scores.
///
/// Scoring every pair is quadratic, so by default only pairs within a few
/// hops of each other in a reference (usually the physical) graph are
/// considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingPolicy {
    WithinHops(u32),
    AllPairs,
}

impl Default for PairingPolicy {
    fn default() -> Self {
        PairingPolicy::WithinHops(2)
    }
}

impl PairingPolicy {
    /// Candidate pairs `(u, v)` with `u < v` over `reference`, in id order.
    pub(crate) fn pairs(self, reference: &Graph) -> Vec<(NodeId, NodeId)> {
        let n = reference.node_count();
        match self {
            PairingPolicy::AllPairs => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (NodeId::from(u), NodeId::from(v))))
                .collect(),
            PairingPolicy::WithinHops(hops) => {
                let mut scratch = BfsScratch::new(n);
                let mut out = Vec::new();
                for u in reference.nodes() {
                    let mut near: Vec<NodeId> = scratch
                        .ball(reference, u, HopLimit::Finite(hops))
                        .iter()
                        .copied()
                        .filter(|&v| v > u)
                        .collect();
                    near.sort_unstable();
                    out.extend(near.into_iter().map(|v| (u, v)));
                }
                out
            }
        }
    }
}
