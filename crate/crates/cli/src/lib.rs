//! Commands behind the `regindep` binary. Each returns a [`Report`]; rendering
//! and exit codes live here too so tests can drive the same paths as the binary.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Map, Value};

use regindep::bounds::{applicable_forms, certify_all, ng_scan, BoundCertificate, Form, Verdict};
use regindep::closed_forms::{
    cf_complete, cf_cycle, cf_multipartite, cf_path, cf_spider, cf_star, Allowlist, FormulaResult,
};
use regindep::families::{
    make_complete, make_complete_multipartite, make_cycle, make_named, make_path, make_spider, make_star,
    NamedGraph, SpiderSpec,
};
use regindep::graph::{edgelist, graph6};
use regindep::solver::{alpha_kreg, oracle_alpha_kreg};
use regindep::trees::{sample_trees, verify_diameter_bounds};
use regindep::{Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Graph6(_)
            | Error::EdgeList { .. }
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::VertexOutOfRange { .. } => EXIT_PARSE,
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_OTHER,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_PARSE,
        message: message.into(),
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Rows plus a summary object. `violations` decides the exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub summary: Value,
    pub rows: Vec<Value>,
    pub violations: usize,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.violations == 0 {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Tsv,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Main output and, for the line formats, a summary line meant for stderr.
pub fn render(report: &Report, format: Format) -> (String, Option<String>) {
    match format {
        Format::Json => {
            let doc = json!({ "summary": report.summary, "rows": report.rows });
            (serde_json::to_string_pretty(&doc).expect("json") + "\n", None)
        }
        Format::Jsonl => {
            let mut out = String::new();
            for r in &report.rows {
                out.push_str(&serde_json::to_string(r).expect("json"));
                out.push('\n');
            }
            (out, Some(serde_json::to_string(&report.summary).expect("json")))
        }
        Format::Tsv => (tsv(&report.rows), Some(serde_json::to_string(&report.summary).expect("json"))),
    }
}

/// Columns are the keys of the first row; nested values are written as JSON.
fn tsv(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return String::new();
    };
    let cols: Vec<&String> = first.keys().collect();
    let mut out = cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("\t");
    out.push('\n');
    for r in rows {
        let cells: Vec<String> = cols
            .iter()
            .map(|c| match r.get(c.as_str()) {
                None | Some(Value::Null) => String::new(),
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            })
            .collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// `"3"`, `"0..7"` (inclusive), `"0,1,2,5"` or a mix such as `"0..2,5"`.
/// Sorted and deduplicated.
pub fn parse_range(text: &str) -> CliResult<Vec<usize>> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("not a non-negative integer: {s:?}")))
    };
    let mut out = BTreeSet::new();
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        match piece.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(usage(format!("empty range {piece:?}")));
                }
                out.extend(a..=b);
            }
            None => {
                out.insert(num(piece)?);
            }
        }
    }
    if out.is_empty() {
        return Err(usage(format!("no values in {text:?}")));
    }
    Ok(out.into_iter().collect())
}

/// Comma-separated sizes such as `"2,2,3"`.
pub fn parse_list(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| usage(format!("not a non-negative integer: {s:?}")))
        })
        .collect()
}

/// Graphs in a file: one graph6 string per line when every content line is a
/// single token, otherwise a single edge list.
pub fn parse_graphs(text: &str) -> CliResult<Vec<Graph>> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if !lines.is_empty() && lines.iter().all(|l| !l.contains(char::is_whitespace)) {
        return lines.iter().map(|l| graph6::decode(l).map_err(CliError::from)).collect();
    }
    Ok(vec![edgelist::parse(text)?])
}

pub fn read_graphs(path: &str) -> CliResult<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_OTHER,
        message: format!("{path}: {e}"),
    })?;
    parse_graphs(&text)
}

/// A graph family instance whose closed form can be compared with the solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Multipartite(Vec<usize>),
    Spider(Vec<usize>),
}

impl Instance {
    pub fn family(&self) -> &'static str {
        match self {
            Instance::Complete(_) => "complete",
            Instance::Path(_) => "path",
            Instance::Cycle(_) => "cycle",
            Instance::Star(_) => "star",
            Instance::Multipartite(_) => "multipartite",
            Instance::Spider(_) => "spider",
        }
    }

    pub fn label(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            Instance::Complete(n) | Instance::Path(n) | Instance::Cycle(n) | Instance::Star(n) => {
                format!("{}({n})", self.family())
            }
            Instance::Multipartite(p) | Instance::Spider(p) => format!("{}({})", self.family(), join(p)),
        }
    }

    pub fn build(&self) -> CliResult<Graph> {
        Ok(match self {
            Instance::Complete(n) => make_complete(*n)?,
            Instance::Path(n) => make_path(*n)?,
            Instance::Cycle(n) => make_cycle(*n)?,
            Instance::Star(n) => make_star(*n)?,
            Instance::Multipartite(p) => make_complete_multipartite(p)?,
            Instance::Spider(legs) => make_spider(&SpiderSpec::new(legs.clone())?),
        })
    }

    pub fn formula(&self, k: usize) -> regindep::Result<FormulaResult> {
        match self {
            Instance::Complete(n) => cf_complete(*n, k),
            Instance::Path(n) => cf_path(*n, k),
            Instance::Cycle(n) => cf_cycle(*n, k),
            Instance::Star(n) => cf_star(*n, k),
            Instance::Multipartite(p) => cf_multipartite(p, k),
            Instance::Spider(legs) => cf_spider(&SpiderSpec::new(legs.clone())?, k),
        }
    }
}

/// Every part multiset with at least two parts and total at most `max_total`
/// that the multipartite formula covers, sizes ascending.
pub fn supported_part_multisets(max_total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                let mut p = cur.clone();
                p.reverse();
                out.push(p);
            }
            return;
        }
        for s in (1..=cap.min(rest)).rev() {
            cur.push(s);
            go(rest - s, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 2..=max_total {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out.retain(|p| !matches!(cf_multipartite(p, 0), Err(Error::UnsupportedShape(_))));
    out.sort();
    out
}

/// Every spider (at least three legs) of order at most `max_order`, legs descending.
pub fn spiders_up_to(max_order: usize) -> Vec<Vec<usize>> {
    // legs of order l >= 2 add l - 1 >= 1 vertices; partition n - 1 into >= 3 parts
    let mut out = Vec::new();
    for total in 3..max_order {
        let mut parts = Vec::new();
        partitions(total, total, &mut parts, &mut |p| {
            if p.len() >= 3 {
                out.push(p.iter().map(|x| x + 1).collect());
            }
        });
    }
    out.sort();
    out
}

fn partitions(rest: usize, cap: usize, cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if rest == 0 {
        emit(cur);
        return;
    }
    for s in (1..=cap.min(rest)).rev() {
        cur.push(s);
        partitions(rest - s, s, cur, emit);
        cur.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityStatus {
    Match,
    /// Published value differs, the difference is on the allowlist, and the
    /// corrected value agrees with solver and oracle.
    Documented,
    Mismatch,
    /// The closed form does not cover this `(instance, k)`.
    NoFormula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParityRow {
    pub family: &'static str,
    pub instance: String,
    pub n: usize,
    pub k: usize,
    pub paper_value: Option<usize>,
    pub formula_tag: Option<&'static str>,
    pub corrected_value: Option<usize>,
    pub discrepancy_family: Option<&'static str>,
    pub discrepancy_note: Option<String>,
    pub solver: usize,
    pub oracle: usize,
    pub status: ParityStatus,
}

pub fn parity_row(inst: &Instance, k: usize, allow: &Allowlist, class_cap: usize) -> CliResult<ParityRow> {
    let g = inst.build()?;
    let solver = alpha_kreg(&g, k).value;
    let oracle = oracle_alpha_kreg(&g, k, class_cap)?;
    let formula = match inst.formula(k) {
        Ok(f) => Some(f),
        Err(Error::InvalidParameter(_) | Error::UnsupportedShape(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let d = formula.as_ref().and_then(|f| f.discrepancy_note.as_ref());
    let status = match &formula {
        _ if solver != oracle => ParityStatus::Mismatch,
        None => ParityStatus::NoFormula,
        Some(f) if f.value == solver => ParityStatus::Match,
        Some(f) => match &f.discrepancy_note {
            Some(d) if d.corrected_value == solver && allow.contains(d.family) => ParityStatus::Documented,
            _ => ParityStatus::Mismatch,
        },
    };
    Ok(ParityRow {
        family: inst.family(),
        instance: inst.label(),
        n: g.n(),
        k,
        paper_value: formula.as_ref().map(|f| f.value),
        formula_tag: formula.as_ref().map(|f| f.formula_tag),
        corrected_value: d.map(|d| d.corrected_value),
        discrepancy_family: d.filter(|_| status == ParityStatus::Documented).map(|d| d.family),
        discrepancy_note: d.map(|d| d.note.clone()),
        solver,
        oracle,
        status,
    })
}

/// Closed form vs solver vs oracle for every instance and every `k` in `ks`
/// (or `0..=n` per instance when `ks` is `None`).
pub fn cmd_family(instances: &[Instance], ks: Option<&[usize]>, class_cap: usize) -> CliResult<Report> {
    use rayon::prelude::*;
    let allow = Allowlist::shipped();
    let jobs: Vec<(&Instance, usize)> = instances
        .iter()
        .map(|inst| Ok((inst, inst.build()?.n())))
        .collect::<CliResult<Vec<_>>>()?
        .into_iter()
        .flat_map(|(inst, n)| {
            let ks: Vec<usize> = ks.map_or_else(|| (0..=n).collect(), <[usize]>::to_vec);
            ks.into_iter().map(move |k| (inst, k))
        })
        .collect();
    let rows: Vec<ParityRow> = jobs
        .par_iter()
        .map(|&(inst, k)| parity_row(inst, k, &allow, class_cap))
        .collect::<CliResult<_>>()?;
    let count = |s: ParityStatus| rows.iter().filter(|r| r.status == s).count();
    let families: BTreeSet<&str> = rows.iter().filter_map(|r| r.discrepancy_family).collect();
    let mismatches = count(ParityStatus::Mismatch);
    Ok(Report {
        summary: json!({
            "instances": instances.len(),
            "rows": rows.len(),
            "matches": count(ParityStatus::Match),
            "documented": count(ParityStatus::Documented),
            "noFormula": count(ParityStatus::NoFormula),
            "mismatches": mismatches,
            "discrepancyFamilies": families,
        }),
        rows: rows.iter().map(to_value).collect(),
        violations: mismatches,
    })
}

fn with_graph_id(g: &Graph, v: Value) -> Value {
    let mut m = Map::new();
    m.insert("graphId".into(), Value::String(g.to_graph6()));
    if let Value::Object(rest) = v {
        m.extend(rest);
    }
    Value::Object(m)
}

pub fn cmd_compute(graphs: &[Graph], ks: &[usize]) -> Report {
    let rows: Vec<Value> = graphs
        .iter()
        .flat_map(|g| ks.iter().map(move |&k| with_graph_id(g, to_value(&alpha_kreg(g, k)))))
        .collect();
    Report {
        summary: json!({ "graphs": graphs.len(), "ks": ks }),
        rows,
        violations: 0,
    }
}

/// Brute-force oracle next to the solver; disagreements are violations.
pub fn cmd_oracle(graphs: &[Graph], ks: &[usize], class_cap: usize) -> CliResult<Report> {
    let mut rows = Vec::new();
    let mut bad = 0;
    for g in graphs {
        for &k in ks {
            let oracle = oracle_alpha_kreg(g, k, class_cap)?;
            let solver = alpha_kreg(g, k).value;
            bad += usize::from(oracle != solver);
            rows.push(json!({
                "graphId": g.to_graph6(),
                "k": k,
                "oracle": oracle,
                "solver": solver,
                "agrees": oracle == solver,
            }));
        }
    }
    Ok(Report {
        summary: json!({ "graphs": graphs.len(), "ks": ks, "disagreements": bad }),
        rows,
        violations: bad,
    })
}

/// With `(n, t)`: random trees of that order and diameter. Without: the full
/// sweep over all four regimes plus the example trees.
pub fn cmd_tree_bounds(nt: Option<(usize, usize)>, samples: usize, seed: u64) -> CliResult<Report> {
    if let Some((n, t)) = nt {
        let checks = sample_trees(n, t, samples, seed)?;
        let failures = checks.iter().filter(|c| !c.pass).count();
        return Ok(Report {
            summary: json!({ "n": n, "t": t, "samples": samples, "firstSeed": seed, "violations": failures }),
            rows: checks.iter().map(to_value).collect(),
            violations: failures,
        });
    }
    let r = verify_diameter_bounds(samples, seed)?;
    let mut rows = Vec::new();
    for e in &r.endpoints {
        let mut v = to_value(e);
        v["kind"] = json!("endpoint");
        rows.push(v);
    }
    for sweep in &r.regimes {
        for c in &sweep.checks {
            let mut v = to_value(c);
            v["kind"] = json!("sample");
            v["regime"] = to_value(&sweep.regime);
            rows.push(v);
        }
    }
    let per_regime: Vec<Value> = r
        .regimes
        .iter()
        .map(|s| json!({ "regime": s.regime, "samples": s.checks.len(), "failures": s.failures }))
        .collect();
    Ok(Report {
        summary: json!({
            "samplesPerRegime": r.samples_per_regime,
            "firstSeed": r.first_seed,
            "regimes": per_regime,
            "endpointsPassed": r.endpoints.iter().filter(|e| e.pass).count(),
            "endpoints": r.endpoints.len(),
            "violations": r.violations,
        }),
        rows,
        violations: r.violations,
    })
}

/// Groups of line-graph bounds selectable with `--theorem`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BoundGroup {
    All,
    CubeRoot,
    AverageDegree,
    /// The square-root bounds for trees and triangulations.
    Sparse,
    /// The linear bounds for the structured classes.
    Linear,
    /// The linear bounds that only assume a minimum degree.
    MinDegree,
}

impl BoundGroup {
    pub fn selects(self, f: Form) -> bool {
        match self {
            BoundGroup::All => true,
            BoundGroup::CubeRoot => f == Form::CubeRoot,
            BoundGroup::AverageDegree => f == Form::AverageDegree,
            BoundGroup::Sparse => matches!(f, Form::TreeSqrt | Form::PlanarSqrt),
            BoundGroup::Linear => matches!(f, Form::Linear(_)),
            BoundGroup::MinDegree => matches!(f, Form::Linear(s) if s.is_min_degree_only()),
        }
    }
}

/// Certificates for every `(graph, k)`, restricted to `group`. A graph none of
/// whose applicable bounds fall in `group` is a shape error.
pub fn lg_certificates(g: &Graph, ks: &[usize], group: BoundGroup, budget: u64) -> CliResult<Vec<BoundCertificate>> {
    let names: BTreeSet<String> = applicable_forms(g)?
        .into_iter()
        .filter(|&f| group.selects(f))
        .map(Form::name)
        .collect();
    if names.is_empty() {
        return Err(Error::ShapeMismatch(format!("no {group:?} bound applies to {}", g.to_graph6())).into());
    }
    let mut out = Vec::new();
    for &k in ks {
        out.extend(
            certify_all(g, k, budget)?
                .into_iter()
                .filter(|c| c.theorem_tag.split_once('.').is_some_and(|(_, f)| names.contains(f))),
        );
    }
    Ok(out)
}

pub fn cmd_lg_bounds(graphs: &[Graph], ks: &[usize], group: BoundGroup, budget: u64) -> CliResult<Report> {
    use rayon::prelude::*;
    let per: Vec<Vec<BoundCertificate>> = graphs
        .par_iter()
        .map(|g| lg_certificates(g, ks, group, budget))
        .collect::<CliResult<_>>()?;
    let mut certs: Vec<BoundCertificate> = per.into_iter().flatten().collect();
    certs.sort_by(|a, b| (&a.graph_id, a.k, &a.theorem_tag).cmp(&(&b.graph_id, b.k, &b.theorem_tag)));
    let count = |v: Verdict| certs.iter().filter(|c| c.verdict == v).count();
    let fails = count(Verdict::Fails);
    Ok(Report {
        summary: json!({
            "graphs": graphs.len(),
            "ks": ks,
            "certificates": certs.len(),
            "holds": count(Verdict::Holds),
            "inconclusive": count(Verdict::Inconclusive),
            "notApplicable": count(Verdict::NotApplicable),
            "fails": fails,
        }),
        rows: certs.iter().map(to_value).collect(),
        violations: fails,
    })
}

pub fn cmd_ng_scan(n: usize, ks: &[usize], cap: usize) -> CliResult<Report> {
    let r = ng_scan(n, ks, cap)?;
    Ok(Report {
        summary: json!({
            "n": r.n,
            "ks": r.ks,
            "graphs": r.graphs,
            "records": r.records.len(),
            "violations": r.violations,
        }),
        rows: r.records.iter().map(to_value).collect(),
        violations: r.violations.len(),
    })
}

/// `octahedron`, `icosahedron`, `triangle-pendant`, `fan` (needs `n`) or `apollonian`
/// (needs `depth`).
pub fn named_graph(name: &str, n: Option<usize>, depth: Option<usize>) -> CliResult<Graph> {
    let id = match name {
        "octahedron" => NamedGraph::Octahedron,
        "icosahedron" => NamedGraph::Icosahedron,
        "triangle-pendant" => NamedGraph::TrianglePendant,
        "fan" => NamedGraph::Fan(n.ok_or_else(|| usage("fan needs --n"))?),
        "apollonian" => NamedGraph::Apollonian(depth.ok_or_else(|| usage("apollonian needs --depth"))?),
        other => return Err(usage(format!("unknown named graph {other:?}"))),
    };
    Ok(make_named(id)?)
}
