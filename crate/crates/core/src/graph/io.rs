use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format.
///
/// Lines starting with `#` and blank lines are ignored. The first remaining
/// line is `n m`, followed by exactly `m` lines `u v` with 0-based ids.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        reason: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: pairs.len(),
        });
    }
    Graph::new(n, &pairs)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            reason: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            reason: format!("invalid integer {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            reason: "trailing fields".into(),
        });
    }
    Ok((a, b))
}

/// Canonical text: header, then edges with `u < v` in lexicographic order.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}
