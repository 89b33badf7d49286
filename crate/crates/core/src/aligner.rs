// SPDX-License-Identifier: Apache-2.0

//! Weighted alignment graph construction.
//!
//! One composite node is created per correspondence pair, numbered in pair
//! order. Two composite nodes are joined when their conceptual refs are
//! adjacent and their physical refs are either adjacent (a match edge,
//! carrying the conceptual weight) or within the gap threshold in the full
//! physical graph (a gap edge, weighted by a [`GapWeightRule`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::dualnet::DualNetwork;
use crate::error::{Error, Result};
use crate::graph::{BfsScratch, Graph, GraphBuilder, HopLimit, NodeId};

/// How a gap edge converts the conceptual weight into an alignment weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GapWeightRule {
    /// Keep the conceptual weight unchanged.
    ConceptualWeight,
    /// Spread the conceptual weight over the physical detour: `w / d`.
    #[default]
    PerHopAverage,
}

impl GapWeightRule {
    pub fn as_str(self) -> &'static str {
        match self {
            GapWeightRule::ConceptualWeight => "conceptual",
            GapWeightRule::PerHopAverage => "per-hop",
        }
    }
}

impl fmt::Display for GapWeightRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GapWeightRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conceptual" | "conceptual-weight" => Ok(GapWeightRule::ConceptualWeight),
            "per-hop" | "per-hop-average" => Ok(GapWeightRule::PerHopAverage),
            other => Err(Error::Config(format!(
                "unknown gap weight rule `{other}` (expected `conceptual` or `per-hop`)"
            ))),
        }
    }
}

impl Serialize for GapWeightRule {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Weight of a gap edge whose conceptual weight is `conceptual` and whose
/// physical refs are `distance` hops apart.
pub fn gap_weight(rule: GapWeightRule, conceptual: f64, distance: u32) -> Result<f64> {
    if distance < 2 {
        return Err(Error::Config(format!("gap distance must be at least 2, got {distance}")));
    }
    if !(conceptual.is_finite() && conceptual > 0.0) {
        return Err(Error::InvalidWeight(conceptual));
    }
    Ok(match rule {
        GapWeightRule::ConceptualWeight => conceptual,
        GapWeightRule::PerHopAverage => conceptual / distance as f64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Match,
    /// Physical hop distance between the refs, at least 2.
    Gap(u32),
}

impl EdgeKind {
    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::Match => "match",
            EdgeKind::Gap(_) => "gap",
        }
    }

    pub fn gap_distance(self) -> Option<u32> {
        match self {
            EdgeKind::Match => None,
            EdgeKind::Gap(d) => Some(d),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositeNode {
    pub id: NodeId,
    pub conceptual_ref: NodeId,
    pub physical_ref: NodeId,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlignmentEdge {
    pub source: NodeId,
    pub target: NodeId,
    pub weight: f64,
    pub kind: EdgeKind,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AlignmentSummary {
    pub nodes: usize,
    pub edges: usize,
    pub match_edges: usize,
    pub gap_edges: usize,
}

#[derive(Clone, Debug)]
pub struct AlignmentGraph {
    graph: Graph,
    composites: Vec<CompositeNode>,
    edges: Vec<AlignmentEdge>,
    delta: HopLimit,
    gap_rule: GapWeightRule,
}

impl AlignmentGraph {
    /// The weighted graph over composite nodes. Node `i` is pair `i`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn composites(&self) -> &[CompositeNode] {
        &self.composites
    }

    /// Edges sorted by `(source, target)` with `source < target`.
    pub fn edges(&self) -> &[AlignmentEdge] {
        &self.edges
    }

    pub fn edge_kind(&self, u: NodeId, v: NodeId) -> Option<EdgeKind> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|e| (e.source, e.target).cmp(&key))
            .ok()
            .map(|i| self.edges[i].kind)
    }

    pub fn delta(&self) -> HopLimit {
        self.delta
    }

    pub fn gap_rule(&self) -> GapWeightRule {
        self.gap_rule
    }

    pub fn summary(&self) -> AlignmentSummary {
        let match_edges = self.edges.iter().filter(|e| e.kind == EdgeKind::Match).count();
        AlignmentSummary {
            nodes: self.composites.len(),
            edges: self.edges.len(),
            match_edges,
            gap_edges: self.edges.len() - match_edges,
        }
    }
}

/// Builds the alignment graph of `dn` under gap threshold `delta`.
///
/// Distance queries for gap candidates run on the rayon pool, grouped by
/// physical source. Results are assembled in conceptual edge order, so the
/// output does not depend on the number of threads.
pub fn build_alignment_graph(
    dn: &DualNetwork,
    delta: HopLimit,
    gap_rule: GapWeightRule,
) -> Result<AlignmentGraph> {
    if delta == HopLimit::Finite(0) {
        return Err(Error::InvalidDelta);
    }
    let physical = dn.physical();
    let candidates: Vec<(NodeId, NodeId, f64)> = dn.conceptual_on_pairs().edges().collect();

    // Physical hop distance per candidate; None when beyond delta.
    let mut distance: Vec<Option<u32>> = vec![None; candidates.len()];
    let mut queries: BTreeMap<NodeId, Vec<(usize, NodeId)>> = BTreeMap::new();
    for (i, &(u, v, _)) in candidates.iter().enumerate() {
        let (pu, pv) = (dn.physical_ref(u), dn.physical_ref(v));
        if physical.has_edge(pu, pv) {
            distance[i] = Some(1);
        } else if delta.allows(2) {
            queries.entry(pu).or_default().push((i, pv));
        }
    }

    let groups: Vec<(NodeId, Vec<(usize, NodeId)>)> = queries.into_iter().collect();
    let resolved: Vec<Vec<(usize, Option<u32>)>> = groups
        .par_iter()
        .map_init(
            || BfsScratch::new(physical.node_count()),
            |scratch, (source, targets)| {
                let ids: Vec<NodeId> = targets.iter().map(|&(_, t)| t).collect();
                let found = scratch.distances_to(physical, *source, &ids, delta);
                targets.iter().map(|&(i, _)| i).zip(found).collect()
            },
        )
        .collect();
    for (i, d) in resolved.into_iter().flatten() {
        distance[i] = d;
    }

    let mut edges = Vec::new();
    for (&(u, v, w), d) in candidates.iter().zip(&distance) {
        match *d {
            Some(1) => edges.push(AlignmentEdge { source: u, target: v, weight: w, kind: EdgeKind::Match }),
            Some(d) if d >= 2 && delta.allows(d) => edges.push(AlignmentEdge {
                source: u,
                target: v,
                weight: gap_weight(gap_rule, w, d)?,
                kind: EdgeKind::Gap(d),
            }),
            _ => {}
        }
    }

    let mut builder = GraphBuilder::new();
    let mut composites = Vec::with_capacity(dn.pair_count());
    for pair in dn.all_pairs().iter() {
        let (c, p) = (dn.conceptual_label(pair), dn.physical_label(pair));
        let id = if c == p {
            builder.add_node(c)
        } else {
            builder.add_node(&format!("{c}|{p}"))
        };
        debug_assert_eq!(id, pair);
        composites.push(CompositeNode {
            id,
            conceptual_ref: dn.conceptual_ref(pair),
            physical_ref: dn.physical_ref(pair),
        });
    }
    for e in &edges {
        builder.add_edge_ids(e.source, e.target, e.weight)?;
    }

    Ok(AlignmentGraph {
        graph: builder.build(),
        composites,
        edges,
        delta,
        gap_rule,
    })
}
