// SPDX-License-Identifier: Apache-2.0

//! Dual networks: a weighted conceptual graph and a unit-weight physical
//! graph bound by a one-to-one node correspondence.
//!
//! Algorithms downstream work in *pair space*: node `i` of a dual network is
//! the `i`-th correspondence pair. Nodes of either input graph that no pair
//! covers stay in their graph but never enter pair space.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, NodeId, NodeSet};

/// Unscored `(conceptual label, physical label)` pairs in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Correspondence {
    pairs: Vec<(String, String)>,
}

impl Correspondence {
    pub fn new(pairs: Vec<(String, String)>) -> Self {
        Correspondence { pairs }
    }

    /// Pairs every label with itself, in the graph's id order.
    pub fn identity(g: &Graph) -> Self {
        Correspondence {
            pairs: g.labels().iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub unmatched_conceptual: usize,
    pub unmatched_physical: usize,
    pub duplicate_pairs: usize,
    pub dangling_labels: Vec<String>,
    pub ok: bool,
}

impl ValidationReport {
    fn summary(&self) -> String {
        let mut parts = Vec::new();
        if self.duplicate_pairs > 0 {
            parts.push(format!("{} pair(s) reuse a label", self.duplicate_pairs));
        }
        if !self.dangling_labels.is_empty() {
            parts.push(format!("labels missing from their graph: {}", self.dangling_labels.join(", ")));
        }
        parts.join("; ")
    }
}

/// Checks that `corr` is one-to-one and references only existing labels.
pub fn validate(conceptual: &Graph, physical: &Graph, corr: &Correspondence) -> ValidationReport {
    let mut seen_c = HashSet::new();
    let mut seen_p = HashSet::new();
    let mut report = ValidationReport::default();
    for (c, p) in corr.pairs() {
        let fresh_c = seen_c.insert(c.as_str());
        let fresh_p = seen_p.insert(p.as_str());
        if !(fresh_c && fresh_p) {
            report.duplicate_pairs += 1;
        }
        if fresh_c && conceptual.id(c).is_none() {
            report.dangling_labels.push(c.clone());
        }
        if fresh_p && physical.id(p).is_none() {
            report.dangling_labels.push(p.clone());
        }
    }
    report.unmatched_conceptual = conceptual
        .labels()
        .iter()
        .filter(|l| !seen_c.contains(l.as_str()))
        .count();
    report.unmatched_physical = physical
        .labels()
        .iter()
        .filter(|l| !seen_p.contains(l.as_str()))
        .count();
    report.ok = report.duplicate_pairs == 0 && report.dangling_labels.is_empty();
    report
}

#[derive(Clone, Debug)]
pub struct DualNetwork {
    conceptual: Graph,
    physical: Graph,
    correspondence: Correspondence,
    report: ValidationReport,
    refs: Vec<(NodeId, NodeId)>,
    pair_of_conceptual: HashMap<NodeId, NodeId>,
    pair_of_physical: HashMap<NodeId, NodeId>,
    conceptual_pairs: Graph,
    physical_pairs: Graph,
}

impl DualNetwork {
    pub fn new(conceptual: Graph, physical: Graph, correspondence: Correspondence) -> Result<Self> {
        let report = validate(&conceptual, &physical, &correspondence);
        if !report.ok {
            return Err(Error::InvalidCorrespondence(report.summary()));
        }
        if correspondence.is_empty() {
            return Err(Error::InvalidCorrespondence("no node pairs".into()));
        }
        if let Some((u, v, w)) = physical.edges().find(|&(_, _, w)| w != 1.0) {
            return Err(Error::NonUnitPhysicalWeight {
                source_label: physical.label(u).to_owned(),
                target_label: physical.label(v).to_owned(),
                weight: w,
            });
        }

        let refs: Vec<(NodeId, NodeId)> = correspondence
            .pairs()
            .iter()
            .map(|(c, p)| (conceptual.id(c).unwrap(), physical.id(p).unwrap()))
            .collect();
        let pair_of_conceptual = refs
            .iter()
            .enumerate()
            .map(|(i, &(c, _))| (c, NodeId::from(i)))
            .collect();
        let pair_of_physical = refs
            .iter()
            .enumerate()
            .map(|(i, &(_, p))| (p, NodeId::from(i)))
            .collect();
        let conceptual_pairs = project(&conceptual, &refs, |&(c, _)| c, &pair_of_conceptual);
        let physical_pairs = project(&physical, &refs, |&(_, p)| p, &pair_of_physical);

        Ok(DualNetwork {
            conceptual,
            physical,
            correspondence,
            report,
            refs,
            pair_of_conceptual,
            pair_of_physical,
            conceptual_pairs,
            physical_pairs,
        })
    }

    /// Dual network over one shared label set, paired by identity.
    pub fn with_identity(conceptual: Graph, physical: Graph) -> Result<Self> {
        let corr = Correspondence::new(
            conceptual
                .labels()
                .iter()
                .filter(|l| physical.id(l).is_some())
                .map(|l| (l.clone(), l.clone()))
                .collect(),
        );
        Self::new(conceptual, physical, corr)
    }

    pub fn conceptual(&self) -> &Graph {
        &self.conceptual
    }

    pub fn physical(&self) -> &Graph {
        &self.physical
    }

    pub fn correspondence(&self) -> &Correspondence {
        &self.correspondence
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.report
    }

    /// Number of covered nodes (correspondence pairs).
    pub fn pair_count(&self) -> usize {
        self.refs.len()
    }

    pub fn all_pairs(&self) -> NodeSet {
        (0..self.refs.len()).map(NodeId::from).collect()
    }

    pub fn conceptual_ref(&self, pair: NodeId) -> NodeId {
        self.refs[pair.index()].0
    }

    pub fn physical_ref(&self, pair: NodeId) -> NodeId {
        self.refs[pair.index()].1
    }

    pub fn pair_of_conceptual(&self, v: NodeId) -> Option<NodeId> {
        self.pair_of_conceptual.get(&v).copied()
    }

    pub fn pair_of_physical(&self, v: NodeId) -> Option<NodeId> {
        self.pair_of_physical.get(&v).copied()
    }

    pub fn conceptual_label(&self, pair: NodeId) -> &str {
        &self.correspondence.pairs[pair.index()].0
    }

    pub fn physical_label(&self, pair: NodeId) -> &str {
        &self.correspondence.pairs[pair.index()].1
    }

    /// Conceptual graph restricted to covered nodes, indexed by pair.
    pub fn conceptual_on_pairs(&self) -> &Graph {
        &self.conceptual_pairs
    }

    /// Physical graph restricted to covered nodes, indexed by pair.
    pub fn physical_on_pairs(&self) -> &Graph {
        &self.physical_pairs
    }

    fn check_pairs(&self, s: &NodeSet) -> Result<()> {
        match s.iter().find(|v| v.index() >= self.refs.len()) {
            Some(v) => Err(Error::NodeOutOfRange { index: v.index(), len: self.refs.len() }),
            None => Ok(()),
        }
    }

    pub fn conceptual_set(&self, s: &NodeSet) -> Result<NodeSet> {
        self.check_pairs(s)?;
        Ok(s.iter().map(|v| self.conceptual_ref(v)).collect())
    }

    pub fn physical_set(&self, s: &NodeSet) -> Result<NodeSet> {
        self.check_pairs(s)?;
        Ok(s.iter().map(|v| self.physical_ref(v)).collect())
    }

    /// Volume-based density of `s` in the full conceptual network.
    pub fn conceptual_density(&self, s: &NodeSet) -> Result<f64> {
        self.conceptual.density(&self.conceptual_set(s)?)
    }

    /// The conceptual and physical subgraphs induced by the pairs in `s`.
    pub fn induced(&self, s: &NodeSet) -> Result<(Graph, Graph)> {
        let conceptual = self.conceptual.induced_subgraph(&self.conceptual_set(s)?)?;
        let physical = self.physical.induced_subgraph(&self.physical_set(s)?)?;
        Ok((conceptual, physical))
    }
}

fn project(
    g: &Graph,
    refs: &[(NodeId, NodeId)],
    side: impl Fn(&(NodeId, NodeId)) -> NodeId,
    pair_of: &HashMap<NodeId, NodeId>,
) -> Graph {
    let mut builder = GraphBuilder::new();
    for r in refs {
        builder.add_node(g.label(side(r)));
    }
    for (i, r) in refs.iter().enumerate() {
        let u = NodeId::from(i);
        for &(w, weight) in g.neighbors(side(r)) {
            if let Some(&v) = pair_of.get(&w) {
                if u < v {
                    builder
                        .add_edge_ids(u, v, weight)
                        .expect("projection preserves graph invariants");
                }
            }
        }
    }
    builder.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[(&str, &str, f64)], extra: &[&str]) -> Graph {
        let mut b = GraphBuilder::new();
        for (u, v, w) in edges {
            b.add_edge(u, v, *w).unwrap();
        }
        for l in extra {
            b.add_node(l);
        }
        b.build()
    }

    fn pairs(p: &[(&str, &str)]) -> Correspondence {
        Correspondence::new(p.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect())
    }

    #[test]
    fn identity_pairs_validate() {
        let c = graph(&[("a", "b", 0.5)], &["c"]);
        let p = graph(&[("a", "b", 1.0), ("b", "c", 1.0)], &[]);
        let report = validate(&c, &p, &pairs(&[("a", "a"), ("b", "b"), ("c", "c")]));
        assert_eq!(
            report,
            ValidationReport {
                unmatched_conceptual: 0,
                unmatched_physical: 0,
                duplicate_pairs: 0,
                dangling_labels: vec![],
                ok: true
            }
        );
    }

    #[test]
    fn duplicate_conceptual_label_is_reported() {
        let c = graph(&[("a", "b", 0.5)], &[]);
        let p = graph(&[("x", "y", 1.0)], &[]);
        let report = validate(&c, &p, &pairs(&[("a", "x"), ("a", "y")]));
        assert_eq!(report.duplicate_pairs, 1);
        assert!(!report.ok);
    }

    #[test]
    fn dangling_label_is_reported() {
        let c = graph(&[("a", "b", 0.5)], &[]);
        let p = graph(&[("x", "y", 1.0)], &[]);
        let report = validate(&c, &p, &pairs(&[("a", "x"), ("b", "zz")]));
        assert_eq!(report.dangling_labels, vec!["zz".to_string()]);
        assert!(!report.ok);
        assert!(DualNetwork::new(c, p, pairs(&[("a", "x"), ("b", "zz")])).is_err());
    }

    #[test]
    fn unmatched_nodes_are_counted_not_rejected() {
        let c = graph(&[("a", "b", 0.5), ("b", "q", 0.1)], &[]);
        let p = graph(&[("a", "b", 1.0)], &["r", "s"]);
        let dn = DualNetwork::new(c, p, pairs(&[("a", "a"), ("b", "b")])).unwrap();
        assert_eq!(dn.validation().unmatched_conceptual, 1);
        assert_eq!(dn.validation().unmatched_physical, 2);
        assert_eq!(dn.pair_count(), 2);
        assert_eq!(dn.conceptual_on_pairs().edge_count(), 1);
    }

    #[test]
    fn rejects_empty_or_weighted_physical() {
        let c = graph(&[("a", "b", 0.5)], &[]);
        let p = graph(&[("a", "b", 2.0)], &[]);
        assert!(matches!(
            DualNetwork::new(c.clone(), p, pairs(&[("a", "a")])),
            Err(Error::NonUnitPhysicalWeight { .. })
        ));
        let p = graph(&[("a", "b", 1.0)], &[]);
        assert!(matches!(
            DualNetwork::new(c, p, Correspondence::default()),
            Err(Error::InvalidCorrespondence(_))
        ));
    }

    #[test]
    fn induced_examples() {
        let c = graph(&[("a", "b", 0.7), ("b", "c", 0.2)], &[]);
        let p = graph(&[("b", "c", 1.0)], &["a"]);
        let dn = DualNetwork::with_identity(c, p).unwrap();
        let ab: NodeSet = [dn.pair_of_conceptual(dn.conceptual().id("a").unwrap()).unwrap(),
            dn.pair_of_conceptual(dn.conceptual().id("b").unwrap()).unwrap()]
            .into_iter()
            .collect();
        let (ci, pi) = dn.induced(&ab).unwrap();
        assert_eq!(ci.edge_count(), 1);
        assert_eq!(pi.edge_count(), 0);

        let (ci, pi) = dn.induced(&[NodeId(0)].into_iter().collect()).unwrap();
        assert_eq!((ci.node_count(), ci.edge_count()), (1, 0));
        assert_eq!((pi.node_count(), pi.edge_count()), (1, 0));

        let (ci, pi) = dn.induced(&dn.all_pairs()).unwrap();
        assert_eq!(ci.edge_count(), 2);
        assert_eq!(pi.edge_count(), 1);

        assert!(dn.induced(&[NodeId(9)].into_iter().collect()).is_err());
    }
}
