//! Text formats: edge lists, minor models, g-tables, traces.
//!
//! Edge list: one `u v` pair per line. Model: one `B<i>: v1 v2 ...` line
//! per branch set. g-table: one `t value` line per entry, value an integer
//! or `p/q`. In all three, blank lines and `#` comments are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::MinorModel;
use crate::driver::TraceEvent;
use crate::graph::{BuildStats, Graph, VertexId};
use crate::numeric::{parse_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Yields `(line number, content)` for lines that carry data.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

fn parse_id(token: &str, line: usize) -> Result<VertexId, ParseError> {
    token
        .parse::<VertexId>()
        .ok()
        .filter(|&v| v != VertexId::MAX)
        .ok_or_else(|| ParseError::new(line, format!("expected a non-negative vertex id, found {token:?}")))
}

/// Parses an edge list. The vertex set is `0..=max id`; duplicate edges and
/// self-loops are dropped and counted.
pub fn parse_edge_list(text: &str) -> Result<(Graph, BuildStats), ParseError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (line, content) in data_lines(text) {
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(ParseError::new(line, "expected exactly two vertex ids"));
        };
        let u = parse_id(a, line)?;
        let v = parse_id(b, line)?;
        n = n.max(u as usize + 1).max(v as usize + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Writes the live edges of `g` as `u v` lines (`u < v`, sorted) after a
/// comment header with the vertex and edge counts.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "# n={} m={}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_model(text: &str) -> Result<MinorModel, ParseError> {
    let mut sets = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, content) in data_lines(text) {
        let Some((label, ids)) = content.split_once(':') else {
            return Err(ParseError::new(line, "expected `B<i>: ids`"));
        };
        let index = label
            .trim()
            .strip_prefix('B')
            .and_then(|i| i.parse::<usize>().ok())
            .ok_or_else(|| ParseError::new(line, format!("bad branch set label {label:?}")))?;
        if !seen.insert(index) {
            return Err(ParseError::new(line, format!("branch set B{index} appears twice")));
        }
        let set = ids.split_whitespace().map(|tok| parse_id(tok, line)).collect::<Result<Vec<_>, _>>()?;
        sets.push(set);
    }
    Ok(MinorModel::new(sets))
}

/// One `B<i>: ...` line per set, numbered from 1, ids ascending.
pub fn serialize_model(model: &MinorModel) -> String {
    let mut out = String::new();
    for (i, set) in model.branch_sets.iter().enumerate() {
        write!(out, "B{}:", i + 1).unwrap();
        for v in set {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_g_table(text: &str) -> Result<BTreeMap<usize, Rational>, ParseError> {
    let mut table = BTreeMap::new();
    for (line, content) in data_lines(text) {
        let mut tokens = content.split_whitespace();
        let (Some(t), Some(value), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(ParseError::new(line, "expected `t value`"));
        };
        let t: usize = t.parse().map_err(|_| ParseError::new(line, format!("bad t {t:?}")))?;
        let value = parse_rational(value).ok_or_else(|| ParseError::new(line, format!("bad value {value:?}")))?;
        if table.insert(t, value).is_some() {
            return Err(ParseError::new(line, format!("t = {t} appears twice")));
        }
    }
    Ok(table)
}

pub fn serialize_trace(events: &[TraceEvent]) -> String {
    let mut out = String::new();
    for ev in events {
        writeln!(out, "{ev}").unwrap();
    }
    out
}
