// SPDX-License-Identifier: Apache-2.0

//! End-to-end extraction: alignment graph, peeling, component selection, and
//! physical connectivity verification with optional repair.
//!
//! All node sets here live in pair space (see [`crate::dualnet`]).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::aligner::{build_alignment_graph, AlignmentSummary, GapWeightRule};
use crate::densest::{peel, PeelTrace};
use crate::dualnet::DualNetwork;
use crate::error::{Error, Result};
use crate::graph::{components_masked, BfsScratch, HopLimit, NodeId, NodeSet};
use crate::{approx_eq, REL_TOL};

pub const DEFAULT_DELTA: HopLimit = HopLimit::Finite(4);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Connectivity {
    /// The physical subgraph induced by the selection must be connected.
    #[default]
    Strict,
    /// Members only need to be chained by physical paths of at most delta
    /// hops in the full physical graph.
    Relaxed,
}

impl Connectivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Connectivity::Strict => "strict",
            Connectivity::Relaxed => "relaxed",
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Connectivity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Connectivity::Strict),
            "relaxed" => Ok(Connectivity::Relaxed),
            other => Err(Error::Config(format!(
                "unknown connectivity mode `{other}` (expected `strict` or `relaxed`)"
            ))),
        }
    }
}

impl Serialize for Connectivity {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DcsOptions {
    pub delta: HopLimit,
    pub gap_rule: GapWeightRule,
    pub connectivity: Connectivity,
    /// Add connector nodes when the strict check fails. Ignored in relaxed
    /// mode.
    pub repair: bool,
}

impl Default for DcsOptions {
    fn default() -> Self {
        DcsOptions {
            delta: DEFAULT_DELTA,
            gap_rule: GapWeightRule::PerHopAverage,
            connectivity: Connectivity::Strict,
            repair: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DcsResult {
    /// Selected component of the peeled alignment subgraph.
    pub nodes: NodeSet,
    /// Nodes added by connectivity repair; disjoint from `nodes`.
    pub connectors: NodeSet,
    /// Conceptual density of `nodes` alone.
    pub core_density: f64,
    /// Conceptual density of `nodes` together with `connectors`.
    pub conceptual_density: f64,
    /// Density of `nodes` in the alignment graph.
    pub alignment_density: f64,
    pub physically_connected: bool,
    pub options: DcsOptions,
    pub alignment: AlignmentSummary,
    pub trace: PeelTrace,
    pub warnings: Vec<String>,
}

impl DcsResult {
    pub fn all_nodes(&self) -> NodeSet {
        self.nodes.union(&self.connectors)
    }
}

/// Runs the full extraction on `dn`.
pub fn extract_dcs(dn: &DualNetwork, opts: &DcsOptions) -> Result<DcsResult> {
    let al = build_alignment_graph(dn, opts.delta, opts.gap_rule)?;
    if al.edges().is_empty() {
        return Err(Error::NoFeasibleSubgraph);
    }
    let (peeled, trace) = peel(al.graph())?;

    let mut best: Option<(NodeSet, f64)> = None;
    for component in al.graph().connected_components(&peeled.nodes)? {
        let density = dn.conceptual_density(&component)?;
        let better = match &best {
            None => true,
            Some((incumbent, d)) if approx_eq(density, *d, REL_TOL) => {
                (component.len(), component.as_slice()) < (incumbent.len(), incumbent.as_slice())
            }
            Some((_, d)) => density > *d,
        };
        if better {
            best = Some((component, density));
        }
    }
    let (nodes, core_density) = best.expect("peeling never returns an empty set");

    let mut warnings = Vec::new();
    if nodes.len() == 1 {
        warnings.push("best component is a single node; density is 0".to_owned());
        log::warn!("best component is a single node");
    }

    let mut result = DcsResult {
        alignment_density: al.graph().density(&nodes)?,
        nodes,
        connectors: NodeSet::new(),
        core_density,
        conceptual_density: core_density,
        physically_connected: false,
        options: *opts,
        alignment: al.summary(),
        trace,
        warnings,
    };

    match opts.connectivity {
        Connectivity::Relaxed => {
            result.physically_connected =
                verify_physical_connectivity(dn, &result.nodes, Connectivity::Relaxed, opts.delta)?;
        }
        Connectivity::Strict => {
            result.physically_connected =
                verify_physical_connectivity(dn, &result.nodes, Connectivity::Strict, opts.delta)?;
            if !result.physically_connected && opts.repair {
                match repair_connectivity(dn, &result.nodes) {
                    Ok(connectors) => {
                        result.connectors = connectors;
                        result.conceptual_density = dn.conceptual_density(&result.all_nodes())?;
                        result.physically_connected = verify_physical_connectivity(
                            dn,
                            &result.all_nodes(),
                            Connectivity::Strict,
                            opts.delta,
                        )?;
                    }
                    Err(Error::IrreparableDisconnection { .. }) => {
                        return Err(Error::IrreparableDisconnection { partial: Some(Box::new(result)) });
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(result)
}

/// Whether the pairs in `s` are physically connected under `mode`.
///
/// Strict mode tests the physical subgraph induced by `s`. Relaxed mode joins
/// two members whenever their physical refs are within `delta` hops in the
/// full physical graph and tests connectivity of that auxiliary graph.
pub fn verify_physical_connectivity(
    dn: &DualNetwork,
    s: &NodeSet,
    mode: Connectivity,
    delta: HopLimit,
) -> Result<bool> {
    let mask = s.mask(dn.pair_count())?;
    if s.len() <= 1 {
        return Ok(true);
    }
    match mode {
        Connectivity::Strict => Ok(components_masked(dn.physical_on_pairs(), &mask, s.iter()).len() == 1),
        Connectivity::Relaxed => {
            let physical = dn.physical();
            let mut scratch = BfsScratch::new(physical.node_count());
            let mut uf = UnionFind::new(dn.pair_count());
            for u in s.iter() {
                for &x in scratch.ball(physical, dn.physical_ref(u), delta) {
                    if let Some(v) = dn.pair_of_physical(x) {
                        if mask[v.index()] {
                            uf.union(u.index(), v.index());
                        }
                    }
                }
            }
            let root = uf.find(s.as_slice()[0].index());
            Ok(s.iter().all(|v| uf.find(v.index()) == root))
        }
    }
}

/// Connector pairs that make the strict physical subgraph on `s` connected.
///
/// Repeatedly joins the two closest induced components through a shortest
/// path in the physical graph over covered nodes; among equally short paths
/// the lexicographically smallest found is used. Returns an empty set when
/// `s` is already connected.
pub fn repair_connectivity(dn: &DualNetwork, s: &NodeSet) -> Result<NodeSet> {
    let g = dn.physical_on_pairs();
    let n = g.node_count();
    let mut member = s.mask(n)?;
    let mut connectors = Vec::new();

    loop {
        let components = components_masked(g, &member, (0..n).map(NodeId::from).filter(|v| member[v.index()]));
        if components.len() <= 1 {
            break;
        }
        let mut owner = vec![u32::MAX; n];
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        for (c, component) in components.iter().enumerate() {
            for v in component.iter() {
                owner[v.index()] = c as u32;
                dist[v.index()] = 0;
            }
        }
        for v in (0..n).filter(|&v| member[v]) {
            queue.push_back(NodeId::from(v));
        }
        while let Some(x) = queue.pop_front() {
            for &(y, _) in g.neighbors(x) {
                if dist[y.index()] == u32::MAX {
                    dist[y.index()] = dist[x.index()] + 1;
                    owner[y.index()] = owner[x.index()];
                    parent[y.index()] = x.0;
                    queue.push_back(y);
                }
            }
        }

        let mut best: Option<(u32, Vec<NodeId>)> = None;
        for x in g.nodes() {
            if owner[x.index()] == u32::MAX {
                continue;
            }
            for &(y, _) in g.neighbors(x) {
                if y < x || owner[y.index()] == owner[x.index()] {
                    continue;
                }
                let length = dist[x.index()] + dist[y.index()] + 1;
                if best.as_ref().is_some_and(|(l, _)| length > *l) {
                    continue;
                }
                let path = bridge_path(&parent, x, y);
                let replace = match &best {
                    None => true,
                    Some((l, p)) => length < *l || path < *p,
                };
                if replace {
                    best = Some((length, path));
                }
            }
        }

        let Some((_, path)) = best else {
            return Err(Error::IrreparableDisconnection { partial: None });
        };
        for &v in &path[1..path.len() - 1] {
            member[v.index()] = true;
            connectors.push(v);
        }
    }
    Ok(connectors.into_iter().collect())
}

/// Path from the source owning `x` through the edge `x - y` to the source
/// owning `y`, oriented to start at the smaller endpoint.
fn bridge_path(parent: &[u32], x: NodeId, y: NodeId) -> Vec<NodeId> {
    let chain = |mut v: NodeId| {
        let mut out = vec![v];
        while parent[v.index()] != u32::MAX {
            v = NodeId(parent[v.index()]);
            out.push(v);
        }
        out
    };
    let mut path = chain(x);
    path.reverse();
    path.extend(chain(y));
    if path.last() < path.first() {
        path.reverse();
    }
    path
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
