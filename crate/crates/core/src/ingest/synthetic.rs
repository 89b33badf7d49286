// SPDX-License-Identifier: Apache-2.0

//! Seeded synthetic dual networks.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dualnet::DualNetwork;
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, NodeId, NodeSet};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlantedParams {
    pub nodes: usize,
    pub planted: usize,
    pub seed: u64,
    /// Background conceptual weights are drawn uniformly from `(0, cap]`.
    pub background_weight_cap: f64,
    /// Probability of a background physical edge and, independently, of a
    /// background conceptual edge, for each node pair not inside the
    /// planted set.
    pub background_edge_prob: f64,
    /// Probability of a physical edge between planted nodes beyond those of
    /// their spanning tree.
    pub planted_edge_prob: f64,
}

impl PlantedParams {
    pub fn new(nodes: usize, planted: usize, seed: u64) -> Self {
        PlantedParams {
            nodes,
            planted,
            seed,
            background_weight_cap: 0.1,
            background_edge_prob: 0.15,
            planted_edge_prob: 0.5,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub dual: DualNetwork,
    /// Planted pairs (pair ids equal node ids in both graphs).
    pub planted: NodeSet,
    pub seed: u64,
}

/// Planted instance with default contrast.
pub fn generate_planted(nodes: usize, planted: usize, seed: u64) -> Result<PlantedInstance> {
    generate_planted_with(&PlantedParams::new(nodes, planted, seed))
}

/// A dual network over nodes `n0..n{N-1}` hiding a dense connected set.
///
/// Planted pairs are joined conceptually with weight 1 and physically by a
/// random spanning tree plus extra edges. The remaining pairs get sparse
/// random physical edges on top of a spanning tree that keeps the physical
/// graph connected, and sparse conceptual edges lighter than the planted
/// ones.
pub fn generate_planted_with(params: &PlantedParams) -> Result<PlantedInstance> {
    let &PlantedParams {
        nodes: n,
        planted: k,
        seed,
        background_weight_cap: cap,
        background_edge_prob: p,
        planted_edge_prob: q,
    } = params;
    if k < 2 || k > n {
        return Err(Error::Config(format!("planted size must satisfy 2 <= k <= n, got k={k}, n={n}")));
    }
    if !(cap > 0.0 && cap < 1.0) {
        return Err(Error::Config(format!("background weight cap must lie in (0, 1), got {cap}")));
    }
    for (name, prob) in [("background edge", p), ("planted edge", q)] {
        if !(0.0..=1.0).contains(&prob) {
            return Err(Error::Config(format!("{name} probability must lie in [0, 1], got {prob}")));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut is_planted = vec![false; n];
    for &v in &order[..k] {
        is_planted[v] = true;
    }

    let mut physical = GraphBuilder::new();
    let mut conceptual = GraphBuilder::new();
    for i in 0..n {
        physical.add_node(&format!("n{i}"));
        conceptual.add_node(&format!("n{i}"));
    }
    let id = NodeId::from;

    // Random spanning tree in shuffled order. The planted nodes come first,
    // so their prefix of the tree is itself a tree.
    for i in 1..n {
        let j = rng.gen_range(0..i);
        physical.add_edge_ids(id(order[i]), id(order[j]), 1.0)?;
    }
    for u in 0..n {
        for v in u + 1..n {
            if is_planted[u] && is_planted[v] {
                conceptual.add_edge_ids(id(u), id(v), 1.0)?;
                if rng.gen_bool(q) {
                    physical.add_edge_ids(id(u), id(v), 1.0)?;
                }
            } else {
                if rng.gen_bool(p) {
                    physical.add_edge_ids(id(u), id(v), 1.0)?;
                }
                if rng.gen_bool(p) {
                    let w = cap * (1.0 - rng.gen::<f64>());
                    conceptual.add_edge_ids(id(u), id(v), w)?;
                }
            }
        }
    }

    let dual = DualNetwork::with_identity(conceptual.build(), physical.build())?;
    let planted = (0..n).filter(|&v| is_planted[v]).map(id).collect();
    Ok(PlantedInstance { dual, planted, seed })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomDualParams {
    pub nodes: usize,
    pub physical_edges: usize,
    pub conceptual_edges: usize,
    /// Share of conceptual edges drawn between nodes one or two physical hops
    /// apart; the rest join uniformly random pairs.
    pub local_fraction: f64,
    pub seed: u64,
}

/// Large random dual network with uniform `(0, 1]` conceptual weights.
pub fn random_dual_network(params: &RandomDualParams) -> Result<DualNetwork> {
    let &RandomDualParams {
        nodes: n,
        physical_edges,
        conceptual_edges,
        local_fraction,
        seed,
    } = params;
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    if n < 2 || physical_edges > max_edges || conceptual_edges > max_edges {
        return Err(Error::Config(format!(
            "cannot place {physical_edges}/{conceptual_edges} edges on {n} nodes"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let key = |u: usize, v: usize| if u < v { (u, v) } else { (v, u) };

    let mut phys: HashSet<(usize, usize)> = HashSet::with_capacity(physical_edges);
    let mut phys_list = Vec::with_capacity(physical_edges);
    while phys_list.len() < physical_edges {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && phys.insert(key(u, v)) {
            phys_list.push(key(u, v));
        }
    }
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &phys_list {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }

    let mut conc: HashSet<(usize, usize)> = HashSet::with_capacity(conceptual_edges);
    let mut conc_list = Vec::with_capacity(conceptual_edges);
    let mut attempts = 0usize;
    while conc_list.len() < conceptual_edges {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let local = attempts < 50 * conceptual_edges.max(1) && rng.gen_bool(local_fraction);
        let v = if local {
            let Some(&mid) = adjacency[u].choose(&mut rng) else { continue };
            if rng.gen_bool(0.5) {
                mid
            } else {
                match adjacency[mid].choose(&mut rng) {
                    Some(&far) => far,
                    None => continue,
                }
            }
        } else {
            rng.gen_range(0..n)
        };
        if u != v && conc.insert(key(u, v)) {
            let w = 1.0 - rng.gen::<f64>();
            conc_list.push((key(u, v), w));
        }
    }

    let mut physical = GraphBuilder::new();
    let mut conceptual = GraphBuilder::new();
    for i in 0..n {
        physical.add_node(&format!("n{i}"));
        conceptual.add_node(&format!("n{i}"));
    }
    for (u, v) in phys_list {
        physical.add_edge_ids(NodeId::from(u), NodeId::from(v), 1.0)?;
    }
    for ((u, v), w) in conc_list {
        conceptual.add_edge_ids(NodeId::from(u), NodeId::from(v), w)?;
    }
    DualNetwork::with_identity(conceptual.build(), physical.build())
}
