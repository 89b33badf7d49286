// SPDX-License-Identifier: Apache-2.0

//! Research-interest conceptual networks from per-author title text.

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use super::PairingPolicy;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Lowercased alphanumeric tokens of `text`, as a set.
pub fn tokenize(text: &str) -> BTreeSet<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Jaccard index of two token sets; 0 when both are empty.
pub fn jaccard(a: &BTreeSet<String>, b: &BTreeSet<String>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        return 0.0;
    }
    a.intersection(b).count() as f64 / union as f64
}

/// Reads `label<TAB>text` lines. Repeated labels have their text
/// concatenated.
pub fn parse_documents(reader: impl BufRead) -> Result<BTreeMap<String, String>> {
    let mut docs: BTreeMap<String, String> = BTreeMap::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((label, text)) = line.split_once('\t') else {
            return Err(Error::parse(i + 1, "expected `label<TAB>text`"));
        };
        let entry = docs.entry(label.trim().to_owned()).or_default();
        if !entry.is_empty() {
            entry.push(' ');
        }
        entry.push_str(text);
    }
    Ok(docs)
}

/// Conceptual network over the nodes of `reference`, weighting scored pairs
/// by the Jaccard index of their documents' token sets. Nodes without a
/// document get no edges.
pub fn jaccard_conceptual(
    documents: &BTreeMap<String, String>,
    reference: &Graph,
    policy: PairingPolicy,
) -> Result<Graph> {
    let tokens: Vec<Option<BTreeSet<String>>> = reference
        .labels()
        .iter()
        .map(|l| documents.get(l).map(|text| tokenize(text)))
        .collect();
    let mut builder = GraphBuilder::new();
    for label in reference.labels() {
        builder.add_node(label);
    }
    for (u, v) in policy.pairs(reference) {
        if let (Some(a), Some(b)) = (&tokens[u.index()], &tokens[v.index()]) {
            let w = jaccard(a, b);
            if w > 0.0 {
                builder.add_edge_ids(u, v, w)?;
            }
        }
    }
    Ok(builder.build())
}
