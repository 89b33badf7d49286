// SPDX-License-Identifier: Apache-2.0

//! DOT, GraphML and canonical JSON writers.
//!
//! Every format lists nodes by sorted label and edges by sorted label pair,
//! so identical graphs always serialize to identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::aligner::{AlignmentGraph, EdgeKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, NodeSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExportFormat {
    #[default]
    Json,
    Dot,
    GraphMl,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            "graphml" => Ok(ExportFormat::GraphMl),
            other => Err(Error::Config(format!(
                "unknown format `{other}` (expected json, dot or graphml)"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    nodes: Vec<String>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    source: String,
    target: String,
    weight: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    distance: Option<u32>,
}

struct Canonical {
    nodes: Vec<String>,
    edges: Vec<(String, String, f64, Option<EdgeKind>)>,
}

fn canonical(g: &Graph, kind: impl Fn(crate::graph::NodeId, crate::graph::NodeId) -> Option<EdgeKind>) -> Canonical {
    let mut nodes: Vec<String> = g.labels().to_vec();
    nodes.sort();
    let mut edges: Vec<_> = g
        .edges()
        .map(|(u, v, w)| {
            let (a, b) = (g.label(u), g.label(v));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            (a.to_owned(), b.to_owned(), w, kind(u, v))
        })
        .collect();
    edges.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    Canonical { nodes, edges }
}

pub fn export_graph(g: &Graph, format: ExportFormat) -> String {
    render(&canonical(g, |_, _| None), format)
}

/// Exports an alignment graph with per-edge `kind` and gap `distance`.
pub fn export_alignment(al: &AlignmentGraph, format: ExportFormat) -> String {
    render(&canonical(al.graph(), |u, v| al.edge_kind(u, v)), format)
}

fn render(c: &Canonical, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => to_json(c),
        ExportFormat::Dot => to_dot(c),
        ExportFormat::GraphMl => to_graphml(c),
    }
}

fn to_json(c: &Canonical) -> String {
    let doc = JsonGraph {
        nodes: c.nodes.clone(),
        edges: c
            .edges
            .iter()
            .map(|(s, t, w, k)| JsonEdge {
                source: s.clone(),
                target: t.clone(),
                weight: *w,
                kind: k.map(|k| k.name().to_owned()),
                distance: k.and_then(EdgeKind::gap_distance),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph documents always serialize");
    out.push('\n');
    out
}

/// Parses a document produced by the JSON exporter. Edge kinds are ignored.
pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: JsonGraph = serde_json::from_str(text)?;
    let mut builder = GraphBuilder::new();
    for label in &doc.nodes {
        builder.add_node(label);
    }
    for e in &doc.edges {
        for label in [&e.source, &e.target] {
            if builder.node_count() > 0 && doc.nodes.iter().all(|n| n != label) {
                return Err(Error::UnknownLabel(label.clone()));
            }
        }
        builder.add_edge(&e.source, &e.target, e.weight)?;
    }
    Ok(builder.build())
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

fn to_dot(c: &Canonical) -> String {
    let mut out = String::from("graph G {\n");
    for n in &c.nodes {
        let _ = writeln!(out, "  {};", dot_id(n));
    }
    for (s, t, w, k) in &c.edges {
        let mut attrs = format!("weight={w}");
        if let Some(k) = k {
            let _ = write!(attrs, ", kind=\"{}\"", k.name());
            if let Some(d) = k.gap_distance() {
                let _ = write!(attrs, ", distance={d}");
            }
        }
        let _ = writeln!(out, "  {} -- {} [{attrs}];", dot_id(s), dot_id(t));
    }
    out.push_str("}\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}

fn to_graphml(c: &Canonical) -> String {
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n",
        "  <key id=\"kind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n",
        "  <key id=\"distance\" for=\"edge\" attr.name=\"distance\" attr.type=\"int\"/>\n",
        "  <graph id=\"G\" edgedefault=\"undirected\">\n",
    ));
    for n in &c.nodes {
        let _ = writeln!(out, "    <node id=\"{}\"/>", xml_escape(n));
    }
    for (s, t, w, k) in &c.edges {
        let _ = writeln!(out, "    <edge source=\"{}\" target=\"{}\">", xml_escape(s), xml_escape(t));
        let _ = writeln!(out, "      <data key=\"weight\">{w}</data>");
        if let Some(k) = k {
            let _ = writeln!(out, "      <data key=\"kind\">{}</data>", k.name());
            if let Some(d) = k.gap_distance() {
                let _ = writeln!(out, "      <data key=\"distance\">{d}</data>");
            }
        }
        out.push_str("    </edge>\n");
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

/// DOT rendering of `g` with `selected` nodes filled and `connectors`
/// outlined.
pub fn highlight_dot(g: &Graph, selected: &NodeSet, connectors: &NodeSet) -> String {
    let mut out = String::from("graph G {\n  node [style=filled, fillcolor=white];\n");
    for v in g.nodes() {
        let style = if selected.contains(v) {
            " [fillcolor=\"#e4572e\"]"
        } else if connectors.contains(v) {
            " [fillcolor=\"#f3a712\"]"
        } else {
            ""
        };
        let _ = writeln!(out, "  {}{style};", dot_id(g.label(v)));
    }
    for (u, v, w) in g.edges() {
        let inside = |x| selected.contains(x) || connectors.contains(x);
        let pen = if inside(u) && inside(v) { ", penwidth=2" } else { "" };
        let _ = writeln!(out, "  {} -- {} [weight={w}{pen}];", dot_id(g.label(u)), dot_id(g.label(v)));
    }
    out.push_str("}\n");
    out
}
