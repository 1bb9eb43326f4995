//! Brute-force reference for `α_{k-reg}`: every subset of every degree class
//! is tested directly against the adjacency matrix.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_CLASS_CAP: usize = 22;

pub fn oracle_alpha_kreg(g: &Graph, k: usize, class_cap: usize) -> Result<usize> {
    let cap = class_cap.min(30);
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut seen = vec![false; g.n()];
    let mut best = 0;
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let class: Vec<usize> = (start..g.n()).filter(|&v| degrees[v] == degrees[start]).collect();
        for &v in &class {
            seen[v] = true;
        }
        if class.len() > cap {
            return Err(Error::CapExceeded {
                what: "degree class size",
                value: class.len(),
                cap,
            });
        }
        let local: Vec<u64> = class
            .iter()
            .map(|&u| {
                class
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| g.has_edge(u, w))
                    .fold(0u64, |m, (i, _)| m | (1 << i))
            })
            .collect();
        for mask in 1u64..(1u64 << class.len()) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let ok = (0..class.len())
                .filter(|&i| mask >> i & 1 == 1)
                .all(|i| (local[i] & mask).count_ones() as usize <= k);
            if ok {
                best = size;
            }
        }
    }
    Ok(best)
}
