// SPDX-License-Identifier: Apache-2.0

//! Densest-subgraph extraction on weighted graphs.
//!
//! [`peel`] is the weighted greedy peeling heuristic: repeatedly remove the
//! node of minimum remaining volume and keep the densest intermediate graph.
//! It is a 2-approximation of the optimum volume density. [`exact_densest`]
//! enumerates every subset and is meant for small instances and tests.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};
use crate::{approx_eq, REL_TOL};

pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Enumeration above this many nodes is refused regardless of the caller's
/// limit.
pub const EXACT_HARD_LIMIT: usize = 30;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeelTrace {
    pub removal_order: Vec<NodeId>,
    /// Density of the remaining graph just before each removal.
    pub density_at_prefix: Vec<f64>,
    pub best_prefix_index: usize,
    /// Sizes of every remaining graph whose density ties the best.
    pub tied_prefix_sizes: Vec<usize>,
}

impl PeelTrace {
    /// Nodes still present before removal step `index`.
    pub fn remaining_at(&self, index: usize) -> NodeSet {
        self.removal_order[index..].iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensestResult {
    pub nodes: NodeSet,
    pub density: f64,
    pub exact: bool,
}

/// State handed to a [`peel_observed`] callback just before a removal.
pub struct PeelStep<'a> {
    pub step: usize,
    pub removing: NodeId,
    /// Current volume of every node; entries of removed nodes are stale.
    pub vols: &'a [f64],
    pub removed: &'a [bool],
}

#[derive(Clone, Copy, Debug)]
struct HeapEntry {
    vol: f64,
    node: NodeId,
    version: u32,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    // Reversed so that `BinaryHeap` pops the smallest (vol, node) first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .vol
            .total_cmp(&self.vol)
            .then_with(|| other.node.cmp(&self.node))
    }
}

/// Greedy peeling. Ties on volume remove the lowest node id first; ties on
/// prefix density report the smallest tied prefix.
pub fn peel(g: &Graph) -> Result<(DensestResult, PeelTrace)> {
    peel_observed(g, |_| {})
}

/// [`peel`] with a callback invoked before every removal.
pub fn peel_observed(g: &Graph, mut observe: impl FnMut(&PeelStep<'_>)) -> Result<(DensestResult, PeelTrace)> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut vols: Vec<f64> = g.nodes().map(|v| g.weighted_degree(v)).collect();
    let mut live_degree: Vec<usize> = g.nodes().map(|v| g.degree(v)).collect();
    let mut version = vec![0u32; n];
    let mut removed = vec![false; n];
    let mut total = g.total_weight();
    let mut live_edges = g.edge_count();

    let mut heap: BinaryHeap<HeapEntry> = g
        .nodes()
        .map(|v| HeapEntry { vol: vols[v.index()], node: v, version: 0 })
        .collect();

    let mut removal_order = Vec::with_capacity(n);
    let mut density_at_prefix = Vec::with_capacity(n);

    for step in 0..n {
        density_at_prefix.push(2.0 * total / (n - step) as f64);
        let v = loop {
            let entry = heap.pop().expect("heap holds every live node");
            let i = entry.node.index();
            if !removed[i] && entry.version == version[i] {
                break entry.node;
            }
        };
        observe(&PeelStep { step, removing: v, vols: &vols, removed: &removed });

        removed[v.index()] = true;
        removal_order.push(v);
        live_edges -= live_degree[v.index()];
        total = if live_edges == 0 { 0.0 } else { (total - vols[v.index()]).max(0.0) };
        for &(u, w) in g.neighbors(v) {
            let i = u.index();
            if removed[i] {
                continue;
            }
            live_degree[i] -= 1;
            vols[i] = if live_degree[i] == 0 { 0.0 } else { vols[i] - w };
            version[i] += 1;
            heap.push(HeapEntry { vol: vols[i], node: u, version: version[i] });
        }
    }

    let best = density_at_prefix
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<usize> = (0..n)
        .filter(|&i| approx_eq(density_at_prefix[i], best, REL_TOL))
        .collect();
    let best_prefix_index = *tied.last().expect("the maximum is attained");
    let tied_prefix_sizes = tied.iter().map(|&i| n - i).collect();

    let trace = PeelTrace {
        removal_order,
        density_at_prefix,
        best_prefix_index,
        tied_prefix_sizes,
    };
    let nodes = trace.remaining_at(best_prefix_index);
    let density = g.density(&nodes)?;
    debug_assert!(
        approx_eq(density, trace.density_at_prefix[best_prefix_index], 1e-6),
        "incremental density drifted: {density} vs {}",
        trace.density_at_prefix[best_prefix_index]
    );
    Ok((DensestResult { nodes, density, exact: false }, trace))
}

/// Exact densest subgraph by exhaustive subset enumeration. Ties are broken
/// by the lexicographically smallest sorted id sequence.
pub fn exact_densest(g: &Graph, limit: usize) -> Result<DensestResult> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = limit.min(EXACT_HARD_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }

    // lower[v]: neighbors with smaller id, as (bit, weight)
    let lower: Vec<Vec<(u32, f64)>> = g
        .nodes()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&(u, _)| u < v)
                .map(|&(u, w)| (u.0, w))
                .collect()
        })
        .collect();
    let subset_density = |mask: u64| -> f64 {
        let mut weight = 0.0;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            for &(u, w) in &lower[v] {
                if mask >> u & 1 == 1 {
                    weight += w;
                }
            }
        }
        2.0 * weight / mask.count_ones() as f64
    };

    let full: u64 = (1u64 << n) - 1;
    const CHUNK: u64 = 1 << 14;
    let best = (0..=full / CHUNK)
        .into_par_iter()
        .filter_map(|chunk| {
            let lo = (chunk * CHUNK).max(1);
            let hi = ((chunk + 1) * CHUNK - 1).min(full);
            (lo..=hi).map(|m| (m, subset_density(m))).reduce(pick_better)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(pick_better)
        .expect("at least one non-empty subset");

    let nodes: NodeSet = (0..n)
        .filter(|&i| best.0 >> i & 1 == 1)
        .map(NodeId::from)
        .collect();
    let density = g.density(&nodes)?;
    Ok(DensestResult { nodes, density, exact: true })
}

fn pick_better(a: (u64, f64), b: (u64, f64)) -> (u64, f64) {
    if approx_eq(a.1, b.1, REL_TOL) {
        if mask_lex_less(b.0, a.0) {
            b
        } else {
            a
        }
    } else if b.1 > a.1 {
        b
    } else {
        a
    }
}

/// Lexicographic comparison of the ascending member sequences of two masks.
fn mask_lex_less(a: u64, b: u64) -> bool {
    let (mut x, mut y) = (a, b);
    loop {
        match (x, y) {
            (0, 0) => return false,
            (0, _) => return true,
            (_, 0) => return false,
            _ => {
                let (i, j) = (x.trailing_zeros(), y.trailing_zeros());
                if i != j {
                    return i < j;
                }
                x &= x - 1;
                y &= y - 1;
            }
        }
    }
}
