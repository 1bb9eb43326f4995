//! graph6 encoding (Brendan McKay's format, as written by nauty's `geng`).
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per
//! byte, each byte offset by 63. `N(n)` is one byte for `n <= 62`, `126` plus
//! three bytes for `n <= 258047`, and `126 126` plus six bytes beyond that.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn size_prefix(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    size_prefix(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(b: u8, at: usize) -> Result<u64> {
    if !(OFFSET..=126).contains(&b) {
        return Err(Error::Graph6(format!("byte {b} at offset {at} outside 63..=126")));
    }
    Ok((b - OFFSET) as u64)
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// newline are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let s = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    let (n, body) = if first != 126 {
        (sextet(first, 0)? as usize, &bytes[1..])
    } else if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte size header".into()));
        }
        let mut n = 0u64;
        for (i, &b) in bytes[2..8].iter().enumerate() {
            n = (n << 6) | sextet(b, i + 2)?;
        }
        (n as usize, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 4-byte size header".into()));
        }
        let mut n = 0u64;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | sextet(b, i + 1)?;
        }
        (n as usize, &bytes[4..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated bit vector: {} bytes, need {need}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after bit vector",
            body.len() - need
        )));
    }

    let mut adj = vec![VertexSet::new(n); n];
    let mut idx = 0usize;
    let header_len = bytes.len() - body.len();
    for (bi, &b) in body.iter().enumerate() {
        let v = sextet(b, header_len + bi)?;
        for k in 0..6 {
            let bit = (v >> (5 - k)) & 1 == 1;
            if idx >= bits {
                if bit {
                    return Err(Error::Graph6("padding bits set beyond n(n-1)/2".into()));
                }
                continue;
            }
            if bit {
                let (i, j) = pair_of(idx);
                adj[i].insert(j);
                adj[j].insert(i);
            }
            idx += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Inverse of the column-major pair index `j(j-1)/2 + i` for `i < j`.
pub(crate) fn pair_of(idx: usize) -> (usize, usize) {
    let mut j = ((((8 * idx + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while j * (j - 1) / 2 > idx {
        j -= 1;
    }
    while (j + 1) * j / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}
