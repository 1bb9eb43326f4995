//! Plain edge lists: one `u v` pair per line, 0-indexed.
//!
//! Blank lines and lines starting with `#` are ignored. The first line may be
//! an `n m` header; it is taken as a header exactly when `m` equals the number
//! of remaining pair lines and every endpoint is below `n`. Without a header
//! the vertex count is one more than the largest endpoint.

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::EdgeList {
            line: lineno,
            reason: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::EdgeList {
            line: lineno,
            reason: format!("not a vertex index: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::EdgeList {
            line: lineno,
            reason: "more than two fields".into(),
        });
    }
    Ok(pair)
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        pairs.push(parse_pair(line, i + 1)?);
    }
    let Some(&(h0, h1)) = pairs.first() else {
        return Ok(Graph::empty(0));
    };
    let rest = &pairs[1..];
    let is_header = h1 == rest.len() && rest.iter().all(|&(u, v)| u < h0 && v < h0);
    if is_header {
        Graph::from_edges(h0, rest.iter().copied())
    } else {
        let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::from_edges(n, pairs)
    }
}

/// Writes `n m` followed by one line per edge.
pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
