// SPDX-License-Identifier: Apache-2.0

//! JSON result documents with a fixed field order.
//!
//! The CLI prints exactly these serializations, so a report built in process
//! is byte-identical to the command-line output for the same inputs.

use serde::Serialize;

use crate::aligner::AlignmentSummary;
use crate::densest::{DensestResult, PeelTrace};
use crate::dualnet::DualNetwork;
use crate::graph::{Graph, HopLimit, NodeSet};
use crate::oracle::OracleResult;
use crate::pipeline::DcsResult;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairLabel {
    pub conceptual: String,
    pub physical: String,
}

fn pair_labels(dn: &DualNetwork, s: &NodeSet) -> Vec<PairLabel> {
    s.iter()
        .map(|v| PairLabel {
            conceptual: dn.conceptual_label(v).to_owned(),
            physical: dn.physical_label(v).to_owned(),
        })
        .collect()
}

/// Density-vs-prefix profile of a peeling run. `density_curve[i]` is the
/// density after removing the first `i` nodes of `removal_order`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveReport {
    pub removal_order: Vec<String>,
    pub density_curve: Vec<f64>,
    pub best_prefix_index: usize,
    pub tied_prefix_sizes: Vec<usize>,
}

impl CurveReport {
    fn new(labels: impl Fn(usize) -> String, trace: &PeelTrace) -> Self {
        CurveReport {
            removal_order: trace.removal_order.iter().map(|v| labels(v.index())).collect(),
            density_curve: trace.density_at_prefix.clone(),
            best_prefix_index: trace.best_prefix_index,
            tied_prefix_sizes: trace.tied_prefix_sizes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DcsReport {
    pub nodes: Vec<PairLabel>,
    pub connectors: Vec<PairLabel>,
    pub size: usize,
    pub conceptual_density: f64,
    pub core_density: f64,
    pub alignment_density: f64,
    pub physically_connected: bool,
    pub connectivity: &'static str,
    pub repair: bool,
    pub delta: HopLimit,
    pub gap_mode: &'static str,
    pub alignment: AlignmentSummary,
    pub peel: CurveReport,
    pub warnings: Vec<String>,
}

impl DcsReport {
    pub fn new(dn: &DualNetwork, result: &DcsResult) -> Self {
        // Composite node i is pair i, so pair labels name the peel order too.
        let peel = CurveReport::new(|i| dn.conceptual_label(i.into()).to_owned(), &result.trace);
        DcsReport {
            nodes: pair_labels(dn, &result.nodes),
            connectors: pair_labels(dn, &result.connectors),
            size: result.nodes.len() + result.connectors.len(),
            conceptual_density: result.conceptual_density,
            core_density: result.core_density,
            alignment_density: result.alignment_density,
            physically_connected: result.physically_connected,
            connectivity: result.options.connectivity.as_str(),
            repair: result.options.repair,
            delta: result.options.delta,
            gap_mode: result.options.gap_rule.as_str(),
            alignment: result.alignment,
            peel,
            warnings: result.warnings.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeelReport {
    pub nodes: Vec<String>,
    pub density: f64,
    pub exact: bool,
    pub peel: CurveReport,
}

impl PeelReport {
    pub fn new(g: &Graph, result: &DensestResult, trace: &PeelTrace) -> Self {
        PeelReport {
            nodes: result.nodes.iter().map(|v| g.label(v).to_owned()).collect(),
            density: result.density,
            exact: result.exact,
            peel: CurveReport::new(|i| g.label(i.into()).to_owned(), trace),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub nodes: Vec<PairLabel>,
    pub density: f64,
    pub explored: u64,
    pub max_nodes: usize,
}

impl OracleReport {
    pub fn new(dn: &DualNetwork, result: &OracleResult, max_nodes: usize) -> Self {
        OracleReport {
            nodes: pair_labels(dn, &result.nodes),
            density: result.density,
            explored: result.explored,
            max_nodes,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// Size and density diagnostics of one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
    pub total_weight: f64,
    pub unit_weighted: bool,
    /// `2 W / |V|`, the density the miner optimizes.
    pub density: f64,
    /// `|E| / |V|`.
    pub edge_ratio_density: f64,
    /// `2 |E| / (|V| (|V| - 1))`.
    pub edge_fraction: f64,
    pub components: usize,
    pub largest_component: usize,
    pub max_degree: usize,
}

impl GraphStats {
    pub fn new(g: &Graph) -> Self {
        let all = g.all_nodes();
        let components = g.connected_components(&all).unwrap_or_default();
        GraphStats {
            nodes: g.node_count(),
            edges: g.edge_count(),
            total_weight: g.total_weight(),
            unit_weighted: g.is_unit_weighted(),
            density: g.density(&all).unwrap_or(0.0),
            edge_ratio_density: g.edge_ratio_density(),
            edge_fraction: g.edge_fraction(),
            components: components.len(),
            largest_component: components.iter().map(NodeSet::len).max().unwrap_or(0),
            max_degree: g.nodes().map(|v| g.degree(v)).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsReport {
    pub conceptual: GraphStats,
    pub physical: GraphStats,
    pub pairs: usize,
    pub unmatched_conceptual: usize,
    pub unmatched_physical: usize,
}

impl StatsReport {
    pub fn new(dn: &DualNetwork) -> Self {
        let v = dn.validation();
        StatsReport {
            conceptual: GraphStats::new(dn.conceptual()),
            physical: GraphStats::new(dn.physical()),
            pairs: dn.pair_count(),
            unmatched_conceptual: v.unmatched_conceptual,
            unmatched_physical: v.unmatched_physical,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports always serialize");
    out.push('\n');
    out
}
