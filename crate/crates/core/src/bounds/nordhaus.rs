//! `α_{k-reg}(G)` against `α_{k-reg}(Ḡ)`: the sum and product bounds
//! `3 <= a + ā <= 2n`, `2 <= a·ā <= n²` for `n >= 2`, and the graphs that reach
//! them, checked over every labeled graph of a given order.
//!
//! Lower extreme: `a + ā = 3` (equivalently `a·ā = 2`, or `{a, ā} = {1, 2}`)
//! iff `k = 0`, every degree class of `G` and of `Ḡ` has at most two vertices,
//! and either all classes of `G` or all classes of `Ḡ` induce connected graphs.
//!
//! Upper extreme: `a + ā = 2n` iff `a·ā = n²` iff `G` is `h`-regular with
//! `k >= max(h, n - 1 - h)`.

use rayon::prelude::*;
use serde::Serialize;

use super::extremal::check_extremal_with;
use crate::error::{Error, Result};
use crate::families::{enumerate_labeled_graphs, graph_from_mask, labeled_graph_count};
use crate::graph::Graph;
use crate::solver::alpha_kreg;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NgRecord {
    pub graph_id: String,
    pub k: usize,
    pub a_g: usize,
    pub a_gbar: usize,
    pub sum: usize,
    pub product: usize,
}

impl NgRecord {
    pub fn new(g: &Graph, k: usize) -> Self {
        let a_g = alpha_kreg(g, k).value;
        let a_gbar = alpha_kreg(&g.complement(), k).value;
        Self {
            graph_id: g.to_graph6(),
            k,
            a_g,
            a_gbar,
            sum: a_g + a_gbar,
            product: a_g * a_gbar,
        }
    }
}

/// Conditions of the lower-extreme characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SumThreeCheck {
    pub reaches: bool,
    pub k_is_zero: bool,
    pub classes_small: bool,
    pub classes_connected: bool,
    pub agrees: bool,
}

pub fn check_sum_three(g: &Graph, rec: &NgRecord) -> SumThreeCheck {
    let gbar = g.complement();
    let small = |h: &Graph| h.degree_profile().classes.values().all(|c| c.len() <= 2);
    let connected = |h: &Graph| {
        h.degree_profile()
            .classes
            .keys()
            .all(|&j| h.degree_class_subgraph(j).graph.is_connected())
    };
    let reaches = rec.sum == 3 || rec.product == 2;
    let k_is_zero = rec.k == 0;
    let classes_small = small(g) && small(&gbar);
    let classes_connected = connected(g) || connected(&gbar);
    SumThreeCheck {
        reaches,
        k_is_zero,
        classes_small,
        classes_connected,
        agrees: reaches == (k_is_zero && classes_small && classes_connected),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SumTwoNCheck {
    pub sum_is_2n: bool,
    pub product_is_n2: bool,
    pub regular_within_k: bool,
    pub agrees: bool,
}

pub fn check_sum_2n(g: &Graph, rec: &NgRecord) -> SumTwoNCheck {
    let n = g.n();
    let sum_is_2n = rec.sum == 2 * n;
    let product_is_n2 = rec.product == n * n;
    let regular_within_k = g.regular_degree().is_some_and(|h| rec.k >= h.max(n - 1 - h));
    SumTwoNCheck {
        sum_is_2n,
        product_is_n2,
        regular_within_k,
        agrees: sum_is_2n == product_is_n2 && product_is_n2 == regular_within_k,
    }
}

/// One failed check in a scan.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub graph_id: String,
    pub k: usize,
    pub check: &'static str,
}

/// Names of the checks a scan runs on every `(G, k)`.
pub const SCAN_CHECKS: [&str; 8] = [
    "sum-range",
    "product-range",
    "sum-three-equivalence",
    "sum-2n-equivalence",
    "alpha-one-iff",
    "alpha-n-iff",
    "sum-three-characterization",
    "sum-2n-characterization",
];

/// Runs every check on `(g, k)`; returns the record and the names that failed.
pub fn check_pair(g: &Graph, k: usize) -> Result<(NgRecord, Vec<&'static str>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(format!("complement bounds need n >= 2, got {n}")));
    }
    let rec = NgRecord::new(g, k);
    let mut failed = Vec::new();
    let pair = (rec.a_g.min(rec.a_gbar), rec.a_g.max(rec.a_gbar));
    if !(3..=2 * n).contains(&rec.sum) {
        failed.push("sum-range");
    }
    if !(2..=n * n).contains(&rec.product) {
        failed.push("product-range");
    }
    if (rec.sum == 3) != (rec.product == 2) || (rec.sum == 3) != (pair == (1, 2)) {
        failed.push("sum-three-equivalence");
    }
    if (rec.sum == 2 * n) != (rec.product == n * n) || (rec.sum == 2 * n) != (pair == (n, n)) {
        failed.push("sum-2n-equivalence");
    }
    let ext = check_extremal_with(g, k, rec.a_g)?;
    if !ext.min_agrees {
        failed.push("alpha-one-iff");
    }
    if !ext.max_agrees {
        failed.push("alpha-n-iff");
    }
    if !check_sum_three(g, &rec).agrees {
        failed.push("sum-three-characterization");
    }
    if !check_sum_2n(g, &rec).agrees {
        failed.push("sum-2n-characterization");
    }
    Ok((rec, failed))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub n: usize,
    pub ks: Vec<usize>,
    pub graphs: u64,
    /// Sorted by `(graphId, k)`.
    pub records: Vec<NgRecord>,
    /// Sorted by `(graphId, k, check)`.
    pub violations: Vec<Violation>,
}

/// Every labeled graph on `n` vertices and every `k` in `ks`. Work is split
/// across the rayon pool by edge bitmask; output order does not depend on it.
pub fn ng_scan(n: usize, ks: &[usize], cap: usize) -> Result<ScanReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("scan needs n >= 2, got {n}")));
    }
    enumerate_labeled_graphs(n, cap).map(drop)?;
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let per_graph: Vec<(Vec<NgRecord>, Vec<Violation>)> = (0..labeled_graph_count(n))
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(n, mask);
            let mut recs = Vec::with_capacity(ks.len());
            let mut bad = Vec::new();
            for &k in &ks {
                let (rec, failed) = check_pair(&g, k)?;
                bad.extend(failed.into_iter().map(|check| Violation {
                    graph_id: rec.graph_id.clone(),
                    k,
                    check,
                }));
                recs.push(rec);
            }
            Ok((recs, bad))
        })
        .collect::<Result<_>>()?;
    let (mut records, mut violations): (Vec<_>, Vec<_>) = (Vec::new(), Vec::new());
    for (r, v) in per_graph {
        records.extend(r);
        violations.extend(v);
    }
    records.sort_unstable_by(|a, b| (&a.graph_id, a.k).cmp(&(&b.graph_id, b.k)));
    violations.sort_unstable();
    Ok(ScanReport {
        n,
        ks,
        graphs: labeled_graph_count(n),
        records,
        violations,
    })
}
