// SPDX-License-Identifier: Apache-2.0

//! Undirected weighted graphs, node subsets, and the volume/density metrics
//! every other module is built on.
//!
//! Node ids are dense (`0..n`) and assigned in insertion order. Adjacency
//! lists are sorted by neighbor index, which makes every traversal here
//! deterministic.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("node index exceeds u32"))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Upper bound on a hop distance. `Unbounded` stands for an infinite cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopLimit {
    Finite(u32),
    Unbounded,
}

impl HopLimit {
    #[inline]
    pub fn allows(self, hops: u32) -> bool {
        match self {
            HopLimit::Finite(cap) => hops <= cap,
            HopLimit::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            HopLimit::Finite(cap) => Some(cap),
            HopLimit::Unbounded => None,
        }
    }
}

impl fmt::Display for HopLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopLimit::Finite(cap) => write!(f, "{cap}"),
            HopLimit::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for HopLimit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(HopLimit::Unbounded);
        }
        s.parse::<u32>()
            .map(HopLimit::Finite)
            .map_err(|_| Error::Config(format!("expected a non-negative integer or `inf`, got `{s}`")))
    }
}

impl Serialize for HopLimit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HopLimit::Finite(cap) => serializer.serialize_u32(*cap),
            HopLimit::Unbounded => serializer.serialize_str("inf"),
        }
    }
}

/// A sorted, duplicate-free set of node ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct NodeSet(Vec<NodeId>);

impl NodeSet {
    pub fn new() -> Self {
        NodeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[NodeId] {
        &self.0
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        !self.iter().any(|v| other.contains(v))
    }

    pub fn is_superset(&self, other: &NodeSet) -> bool {
        other.iter().all(|v| self.contains(v))
    }

    /// Membership mask over a universe of `n` nodes. Members outside the
    /// universe are reported as an error.
    pub fn mask(&self, n: usize) -> Result<Vec<bool>> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            *mask
                .get_mut(v.index())
                .ok_or(Error::NodeOutOfRange { index: v.index(), len: n })? = true;
        }
        Ok(mask)
    }
}

impl FromIterator<NodeId> for NodeSet {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        let mut members: Vec<NodeId> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        NodeSet(members)
    }
}

impl<'a> IntoIterator for &'a NodeSet {
    type Item = NodeId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, NodeId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// An immutable undirected graph with strictly positive edge weights.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    adjacency: Vec<Vec<(NodeId, f64)>>,
    edge_count: usize,
    collapsed_duplicates: usize,
}

/// Incremental constructor for [`Graph`].
///
/// Duplicate edges collapse to the maximum weight seen; the number of
/// collapsed records is kept on the finished graph.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    edges: HashMap<(u32, u32), f64>,
    collapsed_duplicates: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `label`, returning its id.
    pub fn add_node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = NodeId::from(self.labels.len());
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    pub fn add_edge(&mut self, source: &str, target: &str, weight: f64) -> Result<()> {
        if source == target {
            return Err(Error::SelfLoop(source.to_owned()));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidWeight(weight));
        }
        let u = self.add_node(source);
        let v = self.add_node(target);
        self.insert(u, v, weight);
        Ok(())
    }

    /// Adds an edge between already-interned ids.
    pub fn add_edge_ids(&mut self, u: NodeId, v: NodeId, weight: f64) -> Result<()> {
        let n = self.labels.len();
        for x in [u, v] {
            if x.index() >= n {
                return Err(Error::NodeOutOfRange { index: x.index(), len: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(self.labels[u.index()].clone()));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidWeight(weight));
        }
        self.insert(u, v, weight);
        Ok(())
    }

    fn insert(&mut self, u: NodeId, v: NodeId, weight: f64) {
        let key = if u < v { (u.0, v.0) } else { (v.0, u.0) };
        match self.edges.get_mut(&key) {
            Some(existing) => {
                self.collapsed_duplicates += 1;
                if weight > *existing {
                    *existing = weight;
                }
            }
            None => {
                self.edges.insert(key, weight);
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut adjacency: Vec<Vec<(NodeId, f64)>> = vec![Vec::new(); n];
        for (&(u, v), &w) in &self.edges {
            adjacency[u as usize].push((NodeId(v), w));
            adjacency[v as usize].push((NodeId(u), w));
        }
        for list in &mut adjacency {
            list.sort_unstable_by_key(|&(v, _)| v);
        }
        Graph {
            labels: self.labels,
            index: self.index,
            adjacency,
            edge_count: self.edges.len(),
            collapsed_duplicates: self.collapsed_duplicates,
        }
    }
}

impl Graph {
    /// Graph over nodes labelled `"0".."n-1"` with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Graph> {
        let mut builder = GraphBuilder::new();
        for i in 0..n {
            builder.add_node(&i.to_string());
        }
        for &(u, v, w) in edges {
            builder.add_edge_ids(NodeId::from(u), NodeId::from(v), w)?;
        }
        Ok(builder.build())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of duplicate edge records collapsed during construction.
    pub fn collapsed_duplicates(&self) -> usize {
        self.collapsed_duplicates
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.labels.len()).map(NodeId::from)
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet(self.nodes().collect())
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        v.index() < self.labels.len()
    }

    /// Neighbors of `v` with edge weights, sorted by neighbor id.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[(NodeId, f64)] {
        &self.adjacency[v.index()]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v.index()].len()
    }

    pub fn weighted_degree(&self, v: NodeId) -> f64 {
        self.adjacency[v.index()].iter().map(|&(_, w)| w).sum()
    }

    pub fn edge_weight(&self, u: NodeId, v: NodeId) -> Option<f64> {
        let list = self.adjacency.get(u.index())?;
        list.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edge_weight(u, v).is_some()
    }

    /// Each undirected edge once, as `(u, v, w)` with `u < v`, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = NodeId::from(u);
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn total_weight(&self) -> f64 {
        self.edges().map(|(_, _, w)| w).sum()
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.edges().all(|(_, _, w)| w == 1.0)
    }

    fn check_subset(&self, s: &NodeSet) -> Result<Vec<bool>> {
        s.mask(self.node_count())
    }

    /// Sum of weights of edges from `v` to other members of `s`.
    pub fn vol(&self, s: &NodeSet, v: NodeId) -> Result<f64> {
        let mask = self.check_subset(s)?;
        if !s.contains(v) {
            return Err(Error::NotInSubset { index: v.index() });
        }
        Ok(vol_masked(self, &mask, v))
    }

    /// Average induced volume over `s`, i.e. twice the induced edge weight
    /// divided by `|s|`.
    pub fn density(&self, s: &NodeSet) -> Result<f64> {
        if s.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        let mask = self.check_subset(s)?;
        let total: f64 = s.iter().map(|v| vol_masked(self, &mask, v)).sum();
        Ok(total / s.len() as f64)
    }

    /// `|E| / |V|` over the whole graph: the unit-weight edge ratio, half of
    /// the volume-based density on unweighted graphs.
    pub fn edge_ratio_density(&self) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        self.edge_count as f64 / self.node_count() as f64
    }

    /// Fraction of possible node pairs that are adjacent.
    pub fn edge_fraction(&self) -> f64 {
        let n = self.node_count() as f64;
        if n < 2.0 {
            return 0.0;
        }
        2.0 * self.edge_count as f64 / (n * (n - 1.0))
    }

    /// Breadth-first shortest path from `u` to `v`, ignoring weights. Returns
    /// `None` when `v` is unreachable within `cap` hops. Among shortest paths
    /// the one found by expanding lower neighbor ids first is returned.
    pub fn shortest_path_hops(&self, u: NodeId, v: NodeId, cap: HopLimit) -> Result<Option<HopPath>> {
        let n = self.node_count();
        for x in [u, v] {
            if x.index() >= n {
                return Err(Error::NodeOutOfRange { index: x.index(), len: n });
            }
        }
        if u == v {
            return Ok(Some(HopPath { distance: 0, path: vec![u] }));
        }
        let mut parent = vec![u32::MAX; n];
        let mut depth = vec![0u32; n];
        parent[u.index()] = u.0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let next = depth[x.index()] + 1;
            if !cap.allows(next) {
                break;
            }
            for &(y, _) in self.neighbors(x) {
                if parent[y.index()] != u32::MAX {
                    continue;
                }
                parent[y.index()] = x.0;
                depth[y.index()] = next;
                if y == v {
                    let mut path = vec![v];
                    let mut cur = v;
                    while cur != u {
                        cur = NodeId(parent[cur.index()]);
                        path.push(cur);
                    }
                    path.reverse();
                    return Ok(Some(HopPath { distance: next, path }));
                }
                queue.push_back(y);
            }
        }
        Ok(None)
    }

    /// Partition of `s` into components of the subgraph induced by `s`,
    /// ordered by smallest member.
    pub fn connected_components(&self, s: &NodeSet) -> Result<Vec<NodeSet>> {
        let mask = self.check_subset(s)?;
        Ok(components_masked(self, &mask, s.iter()))
    }

    pub fn is_connected_on(&self, s: &NodeSet) -> Result<bool> {
        Ok(self.connected_components(s)?.len() <= 1)
    }

    /// Subgraph induced by `s`. Labels are preserved; ids are renumbered in
    /// the order of `s`.
    pub fn induced_subgraph(&self, s: &NodeSet) -> Result<Graph> {
        let mask = self.check_subset(s)?;
        let mut builder = GraphBuilder::new();
        for v in s.iter() {
            builder.add_node(self.label(v));
        }
        for v in s.iter() {
            for &(w, weight) in self.neighbors(v) {
                if v < w && mask[w.index()] {
                    builder.add_edge(self.label(v), self.label(w), weight)?;
                }
            }
        }
        Ok(builder.build())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopPath {
    pub distance: u32,
    pub path: Vec<NodeId>,
}

#[inline]
pub(crate) fn vol_masked(g: &Graph, mask: &[bool], v: NodeId) -> f64 {
    g.neighbors(v)
        .iter()
        .filter(|&&(w, _)| mask[w.index()])
        .map(|&(_, w)| w)
        .sum()
}

pub(crate) fn components_masked(
    g: &Graph,
    mask: &[bool],
    members: impl Iterator<Item = NodeId>,
) -> Vec<NodeSet> {
    let mut seen = vec![false; g.node_count()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in members {
        if seen[start.index()] {
            continue;
        }
        seen[start.index()] = true;
        stack.push(start);
        let mut block = Vec::new();
        while let Some(x) = stack.pop() {
            block.push(x);
            for &(y, _) in g.neighbors(x) {
                if mask[y.index()] && !seen[y.index()] {
                    seen[y.index()] = true;
                    stack.push(y);
                }
            }
        }
        out.push(block.into_iter().collect());
    }
    out.sort_by_key(|c: &NodeSet| c.as_slice()[0]);
    out
}

/// Reusable scratch space for repeated depth-bounded BFS runs over one graph.
/// Resets in time proportional to the nodes touched, not the graph size.
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    touched: Vec<NodeId>,
    queue: VecDeque<NodeId>,
}

impl BfsScratch {
    pub(crate) const UNSEEN: u32 = u32::MAX;

    pub(crate) fn new(n: usize) -> Self {
        BfsScratch {
            dist: vec![Self::UNSEEN; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for v in self.touched.drain(..) {
            self.dist[v.index()] = Self::UNSEEN;
        }
        self.queue.clear();
    }

    /// Hop distances from `source` to each of `targets`, explored up to `cap`
    /// and stopping early once every target is settled. Unreached targets get
    /// `None`.
    pub(crate) fn distances_to(
        &mut self,
        g: &Graph,
        source: NodeId,
        targets: &[NodeId],
        cap: HopLimit,
    ) -> Vec<Option<u32>> {
        self.reset();
        let mut pending: HashMap<NodeId, usize> = HashMap::with_capacity(targets.len());
        for &t in targets {
            *pending.entry(t).or_default() += 1;
        }
        let mut remaining = pending.len();
        self.dist[source.index()] = 0;
        self.touched.push(source);
        self.queue.push_back(source);
        if pending.contains_key(&source) {
            remaining -= 1;
        }
        while remaining > 0 {
            let Some(x) = self.queue.pop_front() else { break };
            let next = self.dist[x.index()] + 1;
            if !cap.allows(next) {
                break;
            }
            for &(y, _) in g.neighbors(x) {
                if self.dist[y.index()] != Self::UNSEEN {
                    continue;
                }
                self.dist[y.index()] = next;
                self.touched.push(y);
                self.queue.push_back(y);
                if pending.contains_key(&y) {
                    remaining -= 1;
                }
            }
        }
        targets
            .iter()
            .map(|t| match self.dist[t.index()] {
                Self::UNSEEN => None,
                d => Some(d),
            })
            .collect()
    }

    /// Every node within `cap` hops of `source`, with its distance.
    pub(crate) fn ball(&mut self, g: &Graph, source: NodeId, cap: HopLimit) -> &[NodeId] {
        self.reset();
        self.dist[source.index()] = 0;
        self.touched.push(source);
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            let next = self.dist[x.index()] + 1;
            if !cap.allows(next) {
                break;
            }
            for &(y, _) in g.neighbors(x) {
                if self.dist[y.index()] == Self::UNSEEN {
                    self.dist[y.index()] = next;
                    self.touched.push(y);
                    self.queue.push_back(y);
                }
            }
        }
        &self.touched
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> NodeSet {
        ids.iter().map(|&i| NodeId::from(i)).collect()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn vol_sums_in_subset_weights() {
        let g = Graph::from_edges(4, &[(0, 1, 0.5), (0, 2, 0.2), (0, 3, 9.0)]).unwrap();
        assert!((g.vol(&set(&[0, 1, 2]), NodeId(0)).unwrap() - 0.7).abs() < 1e-12);
        assert_eq!(g.vol(&set(&[0]), NodeId(0)).unwrap(), 0.0);
        let t = triangle();
        for v in 0..3 {
            assert_eq!(t.vol(&set(&[0, 1, 2]), NodeId::from(v)).unwrap(), 2.0);
        }
    }

    #[test]
    fn vol_rejects_bad_membership() {
        let g = triangle();
        assert!(matches!(g.vol(&set(&[0, 1]), NodeId(2)), Err(Error::NotInSubset { index: 2 })));
        assert!(matches!(g.vol(&set(&[0, 7]), NodeId(0)), Err(Error::NodeOutOfRange { .. })));
    }

    #[test]
    fn density_examples() {
        let pair = Graph::from_edges(2, &[(0, 1, 3.0)]).unwrap();
        assert_eq!(pair.density(&pair.all_nodes()).unwrap(), 3.0);
        assert_eq!(triangle().density(&set(&[0, 1, 2])).unwrap(), 2.0);
        let k4 = Graph::from_edges(
            4,
            &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)],
        )
        .unwrap();
        assert_eq!(k4.density(&k4.all_nodes()).unwrap(), 3.0);
        assert_eq!(k4.density(&set(&[2])).unwrap(), 0.0);
        assert!(matches!(k4.density(&NodeSet::new()), Err(Error::EmptyNodeSet)));
    }

    #[test]
    fn density_diagnostics() {
        let t = triangle();
        assert_eq!(t.edge_ratio_density(), 1.0);
        assert_eq!(t.edge_fraction(), 1.0);
    }

    #[test]
    fn builder_rejects_invalid_edges() {
        let mut b = GraphBuilder::new();
        assert!(matches!(b.add_edge("a", "a", 1.0), Err(Error::SelfLoop(_))));
        assert!(matches!(b.add_edge("a", "b", 0.0), Err(Error::InvalidWeight(_))));
        assert!(matches!(b.add_edge("a", "b", -2.0), Err(Error::InvalidWeight(_))));
        assert!(matches!(b.add_edge("a", "b", f64::NAN), Err(Error::InvalidWeight(_))));
    }

    #[test]
    fn duplicates_keep_maximum() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b", 0.3).unwrap();
        b.add_edge("b", "a", 0.9).unwrap();
        b.add_edge("a", "b", 0.1).unwrap();
        let g = b.build();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.collapsed_duplicates(), 2);
        assert_eq!(g.edge_weight(NodeId(0), NodeId(1)), Some(0.9));
        assert_eq!(g.edge_weight(NodeId(1), NodeId(0)), Some(0.9));
    }

    #[test]
    fn labels_are_case_sensitive() {
        let mut b = GraphBuilder::new();
        b.add_edge("A", "a", 1.0).unwrap();
        let g = b.build();
        assert_eq!(g.node_count(), 2);
        assert_ne!(g.id("A"), g.id("a"));
    }

    #[test]
    fn shortest_path_examples() {
        let g = Graph::from_edges(5, &[(0, 1, 1.0), (1, 2, 1.0), (0, 3, 1.0), (3, 2, 1.0)]).unwrap();
        let adj = g.shortest_path_hops(NodeId(0), NodeId(1), HopLimit::Unbounded).unwrap().unwrap();
        assert_eq!(adj, HopPath { distance: 1, path: vec![NodeId(0), NodeId(1)] });
        let same = g.shortest_path_hops(NodeId(2), NodeId(2), HopLimit::Finite(0)).unwrap().unwrap();
        assert_eq!(same, HopPath { distance: 0, path: vec![NodeId(2)] });
        // Two shortest routes 0-1-2 and 0-3-2: lower neighbor id wins.
        let tie = g.shortest_path_hops(NodeId(0), NodeId(2), HopLimit::Unbounded).unwrap().unwrap();
        assert_eq!(tie.path, vec![NodeId(0), NodeId(1), NodeId(2)]);
        assert!(g.shortest_path_hops(NodeId(0), NodeId(2), HopLimit::Finite(1)).unwrap().is_none());
        assert!(g.shortest_path_hops(NodeId(0), NodeId(4), HopLimit::Unbounded).unwrap().is_none());
    }

    #[test]
    fn component_examples() {
        let t = triangle();
        assert_eq!(t.connected_components(&t.all_nodes()).unwrap(), vec![set(&[0, 1, 2])]);
        let g = Graph::from_edges(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        assert_eq!(
            g.connected_components(&set(&[0, 1, 3])).unwrap(),
            vec![set(&[0, 1]), set(&[3])]
        );
        assert!(g.connected_components(&NodeSet::new()).unwrap().is_empty());
    }

    #[test]
    fn hop_limit_parsing() {
        assert_eq!("inf".parse::<HopLimit>().unwrap(), HopLimit::Unbounded);
        assert_eq!("4".parse::<HopLimit>().unwrap(), HopLimit::Finite(4));
        assert!("-1".parse::<HopLimit>().is_err());
        assert!("four".parse::<HopLimit>().is_err());
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = Graph::from_edges(4, &[(0, 1, 0.5), (1, 2, 0.25), (2, 3, 2.0)]).unwrap();
        let sub = g.induced_subgraph(&set(&[1, 2, 3])).unwrap();
        assert_eq!(sub.labels(), &["1", "2", "3"]);
        assert_eq!(sub.edge_count(), 2);
        assert_eq!(sub.edge_weight(sub.id("2").unwrap(), sub.id("3").unwrap()), Some(2.0));
    }

    #[test]
    fn bfs_scratch_distances() {
        let g = Graph::from_edges(5, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        let mut scratch = BfsScratch::new(5);
        let d = scratch.distances_to(&g, NodeId(0), &[NodeId(3), NodeId(2), NodeId(4)], HopLimit::Finite(2));
        assert_eq!(d, vec![None, Some(2), None]);
        let d = scratch.distances_to(&g, NodeId(0), &[NodeId(3)], HopLimit::Unbounded);
        assert_eq!(d, vec![Some(3)]);
        assert_eq!(scratch.ball(&g, NodeId(1), HopLimit::Finite(1)).len(), 3);
    }
}
