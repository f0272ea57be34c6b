//! Plain-text graph format.
//!
//! ```text
//! # comment lines start with '#'
//! n 4
//! w 0 1/2 -1 0
//! e 0 1
//! e 1 2
//! e 2 3
//! ```
//!
//! The `n` line comes first. The `w` line is optional (all weights zero when
//! absent) and may appear at most once. Each `e` line is one edge with
//! 0-based endpoints.

use thiserror::Error;

use crate::graph::{GraphError, WeightedGraph};
use crate::rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad weight: {source}")]
    Weight {
        line: usize,
        #[source]
        source: ParseRationalError,
    },
    #[error("missing `n <vertex_count>` line")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut order: Option<usize> = None;
    let mut weights: Option<Vec<Rational>> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().expect("non-empty line has a field");
        if order.is_none() && tag != "n" {
            return Err(ParseError::MissingHeader);
        }
        match tag {
            "n" => {
                if order.is_some() {
                    return Err(syntax(line, "duplicate `n` line"));
                }
                let count = fields
                    .next()
                    .ok_or_else(|| syntax(line, "`n` needs a vertex count"))?;
                let count = count
                    .parse::<usize>()
                    .map_err(|_| syntax(line, format!("invalid vertex count `{count}`")))?;
                if fields.next().is_some() {
                    return Err(syntax(line, "trailing fields after vertex count"));
                }
                order = Some(count);
            }
            "w" => {
                if weights.is_some() {
                    return Err(syntax(line, "duplicate `w` line"));
                }
                let parsed = fields
                    .map(|f| f.parse::<Rational>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|source| ParseError::Weight { line, source })?;
                let n = order.expect("header checked above");
                if parsed.len() != n {
                    return Err(syntax(
                        line,
                        format!("expected {n} weights, found {}", parsed.len()),
                    ));
                }
                weights = Some(parsed);
            }
            "e" => {
                let ends: Vec<&str> = fields.collect();
                if ends.len() != 2 {
                    return Err(syntax(line, "`e` needs exactly two endpoints"));
                }
                let parse_end = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| syntax(line, format!("invalid vertex id `{s}`")))
                };
                edges.push((parse_end(ends[0])?, parse_end(ends[1])?));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }

    let n = order.ok_or(ParseError::MissingHeader)?;
    Ok(WeightedGraph::new(n, &edges, weights.unwrap_or_default())?)
}

/// Serializes `g`. The `w` line is always written so the output is
/// self-describing; edges appear as `u < v` in lexicographic order.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    out.push('w');
    for w in g.weights() {
        out.push(' ');
        out.push_str(&w.to_string());
    }
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
