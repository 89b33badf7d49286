// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;
use std::io::{BufRead, Write};

use crate::dualnet::Correspondence;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Line accounting for one parsed edge list. Every input line lands in
/// exactly one of `records`, `comments` or `blank`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseSummary {
    pub records: usize,
    pub comments: usize,
    pub blank: usize,
    /// Records that repeated an existing edge (kept at maximum weight).
    pub duplicates: usize,
}

/// Parses `src dst [weight]` records separated by spaces or tabs. Lines
/// starting with `#` are comments. Unweighted lists get unit weights.
pub fn parse_edge_list(reader: impl BufRead, weighted: bool) -> Result<Graph> {
    parse_edge_list_with_summary(reader, weighted).map(|(g, _)| g)
}

pub fn parse_edge_list_with_summary(reader: impl BufRead, weighted: bool) -> Result<(Graph, ParseSummary)> {
    let mut builder = GraphBuilder::new();
    let mut summary = ParseSummary::default();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            summary.blank += 1;
            continue;
        }
        if trimmed.starts_with('#') {
            summary.comments += 1;
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let weight = match (weighted, fields.len()) {
            (false, 2) => 1.0,
            (true, 3) => {
                let w: f64 = fields[2]
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("invalid weight `{}`", fields[2])))?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(Error::parse(line_no, format!("weight must be positive, got {w}")));
                }
                w
            }
            (false, 3) => return Err(Error::parse(line_no, "unexpected weight column in unweighted edge list")),
            (true, 2) => return Err(Error::parse(line_no, "missing weight column in weighted edge list")),
            (_, k) => return Err(Error::parse(line_no, format!("expected 2 or 3 fields, found {k}"))),
        };
        if fields[0] == fields[1] {
            return Err(Error::parse(line_no, format!("self-loop on `{}`", fields[0])));
        }
        builder
            .add_edge(fields[0], fields[1], weight)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
        summary.records += 1;
    }
    let graph = builder.build();
    summary.duplicates = graph.collapsed_duplicates();
    if summary.duplicates > 0 {
        log::warn!("collapsed {} duplicate edge record(s)", summary.duplicates);
    }
    Ok((graph, summary))
}

/// Parses `conceptual_label physical_label` pairs, one per line. Either label
/// repeating is an error.
pub fn parse_correspondence(reader: impl BufRead) -> Result<Correspondence> {
    let mut pairs = Vec::new();
    let mut seen_c = HashSet::new();
    let mut seen_p = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let [c, p] = fields[..] else {
            return Err(Error::parse(
                line_no,
                format!("expected `conceptual physical`, found {} field(s)", fields.len()),
            ));
        };
        if !seen_c.insert(c.to_owned()) {
            return Err(Error::parse(line_no, format!("duplicate conceptual label `{c}`")));
        }
        if !seen_p.insert(p.to_owned()) {
            return Err(Error::parse(line_no, format!("duplicate physical label `{p}`")));
        }
        pairs.push((c.to_owned(), p.to_owned()));
    }
    Ok(Correspondence::new(pairs))
}

pub fn write_edge_list(g: &Graph, weighted: bool, mut out: impl Write) -> Result<()> {
    for (u, v, w) in g.edges() {
        if weighted {
            writeln!(out, "{}\t{}\t{}", g.label(u), g.label(v), w)?;
        } else {
            writeln!(out, "{}\t{}", g.label(u), g.label(v))?;
        }
    }
    Ok(())
}

pub fn write_correspondence(corr: &Correspondence, mut out: impl Write) -> Result<()> {
    for (c, p) in corr.pairs() {
        writeln!(out, "{c}\t{p}")?;
    }
    Ok(())
}
