// SPDX-License-Identifier: Apache-2.0

//! Exact densest connected subgraph by exhaustive enumeration.
//!
//! Every physically connected pair subset up to a size bound is visited
//! exactly once with the ESU scheme: subsets are grown from an anchor using
//! only neighbors with a larger id than the anchor, and a node enters the
//! extension set only through the first member that exposes it.

use rayon::prelude::*;
use serde::Serialize;

use crate::dualnet::DualNetwork;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};
use crate::{approx_eq, REL_TOL};

/// Largest subset size the oracle will enumerate up to.
pub const ORACLE_NODE_CAP: usize = 25;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    pub nodes: NodeSet,
    pub density: f64,
    /// Connected subsets scored, singletons included.
    pub explored: u64,
}

/// Densest physically connected pair subset of at most `max_nodes` members
/// (all covered nodes when `None`). Singletons are returned only when no
/// connected pair exists. Ties prefer the smaller set, then the
/// lexicographically smaller one.
pub fn brute_force_dcs(dn: &DualNetwork, max_nodes: Option<usize>) -> Result<OracleResult> {
    let n = dn.pair_count();
    let bound = max_nodes.unwrap_or(n).min(n);
    if bound > ORACLE_NODE_CAP {
        return Err(Error::TooLarge { size: bound, limit: ORACLE_NODE_CAP });
    }
    if bound == 0 {
        return Err(Error::Config("oracle size bound must be at least 1".into()));
    }
    let physical = dn.physical_on_pairs();
    let conceptual = dn.conceptual_on_pairs();

    let per_anchor: Vec<Search> = (0..n)
        .into_par_iter()
        .map(|anchor| {
            let mut search = Search::new(physical, conceptual, bound);
            search.grow_from(NodeId::from(anchor));
            search
        })
        .collect();

    let mut explored = 0;
    let mut best: Option<Candidate> = None;
    for search in per_anchor {
        explored += search.explored;
        if let Some(c) = search.best {
            if best.as_ref().is_none_or(|b| c.beats(b)) {
                best = Some(c);
            }
        }
    }

    let nodes: NodeSet = match best {
        Some(c) => c.members.into_iter().collect(),
        // No physical edge among covered nodes.
        None => [NodeId(0)].into_iter().collect(),
    };
    let density = dn.conceptual_density(&nodes)?;
    Ok(OracleResult { nodes, density, explored })
}

#[derive(Clone, Debug)]
struct Candidate {
    density: f64,
    members: Vec<NodeId>,
}

impl Candidate {
    fn beats(&self, other: &Candidate) -> bool {
        if approx_eq(self.density, other.density, REL_TOL) {
            (self.members.len(), &self.members) < (other.members.len(), &other.members)
        } else {
            self.density > other.density
        }
    }
}

struct Search<'a> {
    physical: &'a Graph,
    conceptual: &'a Graph,
    bound: usize,
    in_sub: Vec<bool>,
    // members of the current subset equal to or adjacent to each node
    cover: Vec<u32>,
    sub: Vec<NodeId>,
    // induced conceptual weight of each prefix of `sub`
    weights: Vec<f64>,
    explored: u64,
    best: Option<Candidate>,
}

impl<'a> Search<'a> {
    fn new(physical: &'a Graph, conceptual: &'a Graph, bound: usize) -> Self {
        let n = physical.node_count();
        Search {
            physical,
            conceptual,
            bound,
            in_sub: vec![false; n],
            cover: vec![0; n],
            sub: Vec::with_capacity(bound),
            weights: Vec::with_capacity(bound),
            explored: 0,
            best: None,
        }
    }

    fn grow_from(&mut self, anchor: NodeId) {
        let ext: Vec<NodeId> = self
            .physical
            .neighbors(anchor)
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| u > anchor)
            .collect();
        self.push(anchor);
        self.extend(ext, anchor);
        self.pop(anchor);
    }

    fn extend(&mut self, mut ext: Vec<NodeId>, anchor: NodeId) {
        self.explored += 1;
        self.score();
        if self.sub.len() == self.bound {
            return;
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            next.extend(
                self.physical
                    .neighbors(w)
                    .iter()
                    .map(|&(u, _)| u)
                    .filter(|&u| u > anchor && self.cover[u.index()] == 0),
            );
            self.push(w);
            self.extend(next, anchor);
            self.pop(w);
        }
    }

    fn push(&mut self, v: NodeId) {
        let gained: f64 = self
            .conceptual
            .neighbors(v)
            .iter()
            .filter(|&&(u, _)| self.in_sub[u.index()])
            .map(|&(_, w)| w)
            .sum();
        self.weights.push(self.weights.last().copied().unwrap_or(0.0) + gained);
        self.in_sub[v.index()] = true;
        self.sub.push(v);
        self.cover[v.index()] += 1;
        for &(u, _) in self.physical.neighbors(v) {
            self.cover[u.index()] += 1;
        }
    }

    fn pop(&mut self, v: NodeId) {
        self.sub.pop();
        self.in_sub[v.index()] = false;
        self.cover[v.index()] -= 1;
        for &(u, _) in self.physical.neighbors(v) {
            self.cover[u.index()] -= 1;
        }
        self.weights.pop();
    }

    fn score(&mut self) {
        if self.sub.len() < 2 {
            return;
        }
        let density = 2.0 * self.weights.last().copied().unwrap_or(0.0) / self.sub.len() as f64;
        let dominated = self.best.as_ref().is_some_and(|b| {
            !approx_eq(density, b.density, REL_TOL) && density < b.density
                || approx_eq(density, b.density, REL_TOL) && self.sub.len() > b.members.len()
        });
        if dominated {
            return;
        }
        let mut members = self.sub.clone();
        members.sort_unstable();
        let candidate = Candidate { density, members };
        if self.best.as_ref().is_none_or(|b| candidate.beats(b)) {
            self.best = Some(candidate);
        }
    }
}
