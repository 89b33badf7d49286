// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use dnalign::{Graph, GraphBuilder, DualNetwork, NodeId, NodeSet};
use proptest::prelude::*;

/// Undirected weighted edge list on `n` nodes, self-loops dropped.
pub type Edges = Vec<(usize, usize, f64)>;

pub fn edges(max_n: usize, max_w: f64) -> impl Strategy<Value = (usize, Edges)> {
    (1..=max_n).prop_flat_map(move |n| {
        let m = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec((0..n, 0..n, 0.001f64..max_w), 0..=m.max(1)),
        )
    })
}

pub fn graph(n: usize, edges: &Edges) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_node(&i.to_string());
    }
    for &(u, v, w) in edges {
        if u != v {
            b.add_edge_ids(NodeId::from(u), NodeId::from(v), w).unwrap();
        }
    }
    b.build()
}

pub fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    edges(max_n, 1.0).prop_map(|(n, e)| graph(n, &e))
}

/// Dual network over labels `0..n` with identity correspondence.
pub fn dual(n: usize, conceptual: &Edges, physical: &[(usize, usize)]) -> DualNetwork {
    let c = graph(n, conceptual);
    let p = graph(n, &physical.iter().map(|&(u, v)| (u, v, 1.0)).collect());
    DualNetwork::with_identity(c, p).unwrap()
}

pub fn random_dual(max_n: usize) -> impl Strategy<Value = DualNetwork> {
    (2..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec((0..n, 0..n, 0.001f64..1.0), 0..=m),
            prop::collection::vec((0..n, 0..n), 0..=m),
        )
            .prop_map(|(n, c, p)| dual(n, &c, &p))
    })
}

pub fn subset(n: usize) -> impl Strategy<Value = NodeSet> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| NodeId::from(i))
            .collect()
    })
}

/// All-pairs hop distances by Floyd-Warshall; `None` when unreachable.
pub fn hop_matrix(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (u, v, _) in g.edges() {
        d[u.index()][v.index()] = Some(1);
        d[v.index()][u.index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Sum of weights of edges with both endpoints in `s`, by scanning the edge
/// list.
pub fn induced_weight(g: &Graph, s: &NodeSet) -> f64 {
    g.edges()
        .filter(|&(u, v, _)| s.contains(u) && s.contains(v))
        .map(|(_, _, w)| w)
        .sum()
}

/// Maximum of `2 W(S) / |S|` over all nonempty subsets.
pub fn brute_densest(g: &Graph) -> f64 {
    let n = g.node_count();
    let edges: Vec<_> = g.edges().collect();
    let mut best = 0.0f64;
    for mask in 1u64..(1 << n) {
        let w: f64 = edges
            .iter()
            .filter(|(u, v, _)| mask >> u.index() & 1 == 1 && mask >> v.index() & 1 == 1)
            .map(|e| e.2)
            .sum();
        best = best.max(2.0 * w / mask.count_ones() as f64);
    }
    best
}

/// Connectivity of `s` in `g` by repeated relaxation, independent of the
/// library's BFS.
pub fn connected_by_closure(g: &Graph, s: &NodeSet) -> bool {
    let Some(first) = s.iter().next() else { return true };
    let mut reached = vec![first];
    loop {
        let before = reached.len();
        for (u, v, _) in g.edges() {
            if s.contains(u) && s.contains(v) {
                if reached.contains(&u) && !reached.contains(&v) {
                    reached.push(v);
                } else if reached.contains(&v) && !reached.contains(&u) {
                    reached.push(u);
                }
            }
        }
        if reached.len() == before {
            return reached.len() == s.len();
        }
    }
}
