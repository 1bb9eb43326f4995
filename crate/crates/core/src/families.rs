//! Deterministic constructors for the graph families used throughout the
//! crate: classical families, spiders, the extremal trees `T(n, t)` and their
//! companions, branch-moving tree surgery, random trees of fixed diameter, a
//! few named planar graphs, and an exhaustive labeled-graph enumerator.
//!
//! Labeling conventions are part of each constructor's contract so that
//! results are reproducible vertex by vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{graph6::pair_of, Diameter, Graph, VertexSet};

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `K_n` on `0..n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    need(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Graph> {
    need(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// `C_n`: the path plus the edge `(n-1) - 0`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `S_{1,n-1}` with center 0.
pub fn make_star(n: usize) -> Result<Graph> {
    need(n >= 2, || format!("star needs n >= 2, got {n}"))?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// Complete multipartite graph. Parts occupy consecutive vertex ranges in the
/// given order.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(parts.len() >= 2, || format!("need at least 2 parts, got {}", parts.len()))?;
    need(parts.iter().all(|&p| p > 0), || format!("empty part in {parts:?}"))?;
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let n = part_of.len();
    let part_of = &part_of;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))),
    )
}

/// Leg orders of a spider `K_{1,r}(l_1, ..., l_r)`.
///
/// A leg of order `l` is a path of `l` vertices that includes the center, so it
/// contributes `l - 1` new vertices. Orders are kept sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpiderSpec {
    legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn new(mut legs: Vec<usize>) -> Result<Self> {
        need(legs.len() >= 3, || format!("spider needs at least 3 legs, got {}", legs.len()))?;
        // a leg of order 1 adds no vertex and silently lowers the center degree
        need(legs.iter().all(|&l| l >= 2), || format!("leg orders must be >= 2: {legs:?}"))?;
        legs.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn order(&self) -> usize {
        1 + self.legs.iter().map(|l| l - 1).sum::<usize>()
    }

    pub fn diameter(&self) -> usize {
        self.legs[0] + self.legs[1] - 2
    }
}

/// Center is vertex 0; each leg in turn (longest first) is numbered outward
/// from the center.
pub fn make_spider(spec: &SpiderSpec) -> Graph {
    let mut edges = Vec::with_capacity(spec.order() - 1);
    let mut next = 1;
    for &l in spec.legs() {
        let mut prev = 0;
        for _ in 1..l {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("spider edges are well formed")
}

/// Parameters of the extremal tree `T(n, t)`: `h = floor((n - t) / 2)` and the
/// decomposition `n - 1 = q h + r` with `1 <= r <= h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TntSpec {
    pub n: usize,
    pub t: usize,
    pub h: usize,
    pub q: usize,
    pub r: usize,
}

/// Writes `total = q h + r` with `1 <= r <= h`.
fn split_with_positive_remainder(total: usize, h: usize) -> (usize, usize) {
    let r = (total - 1) % h + 1;
    ((total - r) / h, r)
}

impl TntSpec {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        need(t >= 2 && t + 3 <= n, || format!("T(n,t) needs 2 <= t <= n-3, got n={n}, t={t}"))?;
        let h = (n - t) / 2;
        let (q, r) = split_with_positive_remainder(n - 1, h);
        Ok(Self { n, t, h, q, r })
    }

    pub fn diameter(&self) -> usize {
        self.n - self.t
    }

    /// Leg orders exactly as the defining recipe lists them.
    pub fn recipe_legs(&self) -> Vec<usize> {
        let h = self.h;
        let first = if self.diameter().is_multiple_of(2) { h + 1 } else { h + 2 };
        let mut legs = vec![first, h + 1];
        legs.extend(std::iter::repeat_n(h + 1, self.q - 2));
        legs.push(self.r + 1);
        legs
    }
}

/// Records where the literal `T(n, t)` recipe does not produce a tree of
/// order `n`, and what was built instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecipeNote {
    pub recipe_legs: Vec<usize>,
    pub recipe_order: usize,
    pub used_legs: Vec<usize>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct TntTree {
    pub spec: TntSpec,
    pub graph: Graph,
    /// The unique vertex of maximum degree (the spider center).
    pub z0: usize,
    /// Leaf count of the built tree.
    pub leaves: usize,
    pub legs: Vec<usize>,
    pub note: Option<RecipeNote>,
}

/// Builds `T(n, t)`, the spider with the fewest leaves among trees of order
/// `n` and diameter `n - t`.
///
/// For even `n - t` the recipe is used as is. For odd `n - t` the recipe's
/// first leg of order `h + 2` adds one vertex the decomposition of `n - 1`
/// does not account for, so the recipe always yields `n + 1` vertices. In that
/// case the decomposition is taken over `n - 2` instead, which restores order
/// `n` and diameter `n - t` and attains the leaf count `f(n, t)`; the
/// mismatch is reported in [`TntTree::note`].
pub fn make_tnt(spec: TntSpec) -> Result<TntTree> {
    let recipe = spec.recipe_legs();
    let recipe_order = 1 + recipe.iter().map(|l| l - 1).sum::<usize>();
    let (legs, note) = if recipe_order == spec.n {
        (recipe, None)
    } else {
        let h = spec.h;
        let (q, r) = split_with_positive_remainder(spec.n - 2, h);
        let mut legs = vec![h + 2, h + 1];
        legs.extend(std::iter::repeat_n(h + 1, q - 2));
        legs.push(r + 1);
        let note = RecipeNote {
            recipe_legs: recipe,
            recipe_order,
            used_legs: legs.clone(),
            reason: format!(
                "recipe yields order {recipe_order} != {}; decomposed n-2 = {q}*{h} + {r} instead",
                spec.n
            ),
        };
        (legs, Some(note))
    };
    let spider = SpiderSpec::new(legs)?;
    let graph = make_spider(&spider);
    let leaves = spider.leg_count();
    if graph.n() != spec.n || graph.diameter() != Diameter::Finite(spec.diameter()) {
        return Err(Error::ProfileMismatch(format!(
            "T({}, {}) built with legs {:?} has order {} and diameter {:?}",
            spec.n,
            spec.t,
            spider.legs(),
            graph.n(),
            graph.diameter()
        )));
    }
    Ok(TntTree {
        spec,
        graph,
        z0: 0,
        leaves,
        legs: spider.legs().to_vec(),
        note,
    })
}

/// The example trees that witness the endpoints of the diameter bounds for
/// trees. Each has a stated profile that the constructor enforces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "id")]
pub enum ExtremalTree {
    /// Path `v_1..v_{n-t+1}` with one leaf hung on each of `v_2..v_t`.
    /// Needs `n >= 2t`; attains `n - 2t` once `n >= 3t + 1`.
    LeafyPath { n: usize, t: usize },
    /// Path plus a pendant path of `t - 1` vertices at `v_{floor((n-t)/2)+1}`.
    /// Needs `t - 1 <= floor((n - t) / 2)`; attains `n - 4`.
    PendantPath { n: usize, t: usize },
    /// `n = 3t - 2`: path `v_1..v_{2t-1}`, leaves `v'_j` on `v_{j+1}` for
    /// `j <= t - 2`, and `v'_{t-1}` hung on `v'_{t-2}`. Attains `t = (n+2)/3`.
    BalancedCaterpillar { t: usize },
    /// Spider with leg orders (5, 5, 4); this is `T(12, 4)`. Attains 8.
    SpiderTwelve,
    /// Spider with leg orders (5, 4, 4), `n = 11`, `t = 4`. Attains 7.
    SpiderEleven,
    /// Path `a..f` with one leaf on each of `b, c, d`; `n = 9`, `t = 4`. Attains 5.
    BranchedPath,
    /// Spider with leg orders (3, 3, 3, 3, 2), `n = 10`, `t = 6`. Attains 5.
    SpiderTenInterior,
    /// Spider with leg orders (3, 3, 2, 2, 2, 2, 2), `n = 10`, `t = 6`. Attains 7.
    SpiderTenLeaves,
}

/// Degree profile and regular 2-independence value an [`ExtremalTree`] must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatedProfile {
    pub n: usize,
    pub t: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub alpha: usize,
}

impl ExtremalTree {
    /// The parameter-free members.
    pub const FIXED: [ExtremalTree; 6] = [
        ExtremalTree::SpiderTwelve,
        ExtremalTree::SpiderEleven,
        ExtremalTree::BranchedPath,
        ExtremalTree::SpiderTenInterior,
        ExtremalTree::SpiderTenLeaves,
        ExtremalTree::BalancedCaterpillar { t: 4 },
    ];

    pub fn stated_profile(self) -> StatedProfile {
        use ExtremalTree::*;
        let p = |n, t, n1, n2, n3, alpha| StatedProfile { n, t, n1, n2, n3, alpha };
        match self {
            LeafyPath { n, t } => p(n, t, t + 1, n - 2 * t, t - 1, (n - 2 * t).max(t + 1)),
            PendantPath { n, t } => p(n, t, 3, n - 4, 1, (n - 4).max(3)),
            BalancedCaterpillar { t } => p(3 * t - 2, t, t, t, t - 2, t),
            SpiderTwelve => p(12, 4, 3, 8, 1, 8),
            SpiderEleven => p(11, 4, 3, 7, 1, 7),
            BranchedPath => p(9, 4, 5, 1, 3, 5),
            SpiderTenInterior => p(10, 6, 5, 4, 1, 5),
            SpiderTenLeaves => p(10, 6, 7, 2, 1, 7),
        }
    }

    fn edges(self) -> Result<(usize, Vec<(usize, usize)>)> {
        use ExtremalTree::*;
        let spider = |legs: &[usize]| {
            let g = make_spider(&SpiderSpec::new(legs.to_vec()).expect("valid legs"));
            (g.n(), g.edges().collect())
        };
        // path v_1..v_len as vertices 0..len
        let path = |len: usize| (1..len).map(|v| (v - 1, v)).collect::<Vec<_>>();
        Ok(match self {
            LeafyPath { n, t } => {
                need(t >= 2 && n >= 2 * t, || format!("leafy path needs t >= 2, n >= 2t; got n={n}, t={t}"))?;
                let len = n - t + 1;
                let mut e = path(len);
                // leaf j (vertex len + j - 1) on v_{j+1} (vertex j)
                e.extend((1..t).map(|j| (j, len + j - 1)));
                (n, e)
            }
            PendantPath { n, t } => {
                need(t >= 2 && t < n, || format!("pendant path needs 2 <= t < n; got n={n}, t={t}"))?;
                let h = (n - t) / 2;
                need(t - 1 <= h, || format!("pendant of {} vertices would exceed diameter {}", t - 1, n - t))?;
                let len = n - t + 1;
                let mut e = path(len);
                let mut prev = h; // v_{h+1}
                for w in len..n {
                    e.push((prev, w));
                    prev = w;
                }
                (n, e)
            }
            BalancedCaterpillar { t } => {
                need(t >= 4, || format!("balanced caterpillar needs t >= 4, got {t}"))?;
                let len = 2 * t - 1;
                let n = 3 * t - 2;
                let prime = |j: usize| len + j - 1; // v'_j
                let mut e = path(len);
                e.extend((1..=t - 2).map(|j| (j, prime(j))));
                e.push((prime(t - 2), prime(t - 1)));
                (n, e)
            }
            SpiderTwelve => spider(&[5, 5, 4]),
            SpiderEleven => spider(&[5, 4, 4]),
            BranchedPath => {
                let mut e = path(6);
                e.extend([(1, 6), (2, 7), (3, 8)]);
                (9, e)
            }
            SpiderTenInterior => spider(&[3, 3, 3, 3, 2]),
            SpiderTenLeaves => spider(&[3, 3, 2, 2, 2, 2, 2]),
        })
    }
}

/// Builds an [`ExtremalTree`] and checks it against its stated profile.
pub fn make_extremal_tree(id: ExtremalTree) -> Result<Graph> {
    let (n, edges) = id.edges()?;
    let g = Graph::from_edges(n, edges)?;
    let want = id.stated_profile();
    let prof = g.degree_profile();
    let got = (
        g.n(),
        g.diameter().finite(),
        prof.count(1),
        prof.count(2),
        prof.big_degree_count,
    );
    let expected = (want.n, Some(want.n - want.t), want.n1, want.n2, want.n3);
    if !g.is_tree() || got != expected {
        return Err(Error::ProfileMismatch(format!(
            "{id:?}: (n, diameter, n1, n2, N3) = {got:?}, expected {expected:?}"
        )));
    }
    Ok(g)
}

/// Result of moving branches from `from` to `to`.
#[derive(Clone, Debug)]
pub struct Surgery {
    pub tree: Graph,
    pub from: usize,
    pub to: usize,
    /// Roots of the branches that were re-hung (neighbors of `from` in the input).
    pub moved_roots: Vec<usize>,
}

/// Detaches all but two branches at `zprime` and re-hangs them at `z`.
///
/// `zprime` keeps the branch leading to `z` and its lowest-labelled other
/// branch, so it ends with degree 2. Order and leaf count are preserved and
/// `|D_{>=3}|` drops by one. Vertex labels are unchanged.
pub fn tree_surgery(t: &Graph, z: usize, zprime: usize) -> Result<Surgery> {
    if !t.is_tree() {
        return Err(Error::NotATree("surgery input".into()));
    }
    for v in [z, zprime] {
        if v >= t.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: t.n() });
        }
        if t.degree(v) < 3 {
            return Err(Error::Precondition(format!("vertex {v} has degree {} < 3", t.degree(v))));
        }
    }
    if z == zprime {
        return Err(Error::Precondition("z and z' must differ".into()));
    }
    let dz = t.distances_from(z);
    let toward = t
        .neighbors(zprime)
        .iter()
        .find(|&w| dz[w].unwrap() + 1 == dz[zprime].unwrap())
        .expect("tree path to z exists");
    let mut others = t.neighbors(zprime).iter().filter(|&w| w != toward);
    others.next(); // stays at zprime
    let moved_roots: Vec<usize> = others.collect();
    let tree = rehang(t, zprime, z, &moved_roots);
    Ok(Surgery {
        tree,
        from: zprime,
        to: z,
        moved_roots,
    })
}

/// Undoes [`tree_surgery`].
pub fn reverse_surgery(s: &Surgery) -> Graph {
    rehang(&s.tree, s.to, s.from, &s.moved_roots)
}

fn rehang(t: &Graph, from: usize, to: usize, roots: &[usize]) -> Graph {
    let edges = t.edges().map(|(u, v)| {
        if u == from && roots.contains(&v) {
            (to, v)
        } else if v == from && roots.contains(&u) {
            (u, to)
        } else {
            (u, v)
        }
    });
    Graph::from_edges(t.n(), edges).expect("rehanging keeps a simple graph")
}

/// Random tree on `n` vertices with diameter exactly `d`.
///
/// Vertices `0..=d` form a spine path; each later vertex is attached to a
/// uniformly chosen existing vertex whose eccentricity is below `d`, so the
/// spine stays a longest path. Not uniform over such trees. Deterministic for
/// a given seed (ChaCha8).
pub fn random_tree_with_diameter(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n < 2 || d == 0 || d > n - 1 || (d == 1 && n > 2) {
        return Err(Error::Infeasible(format!("no tree on {n} vertices has diameter {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|v| (v - 1, v)).collect();
    // distances to the two spine ends; in a tree one of them realizes the eccentricity
    let mut to_start: Vec<usize> = (0..=d).collect();
    let mut to_end: Vec<usize> = (0..=d).map(|v| d - v).collect();
    for w in d + 1..n {
        let eligible: Vec<usize> = (0..w).filter(|&v| to_start[v].max(to_end[v]) < d).collect();
        let v = eligible[rng.gen_range(0..eligible.len())];
        edges.push((v, w));
        to_start.push(to_start[v] + 1);
        to_end.push(to_end[v] + 1);
    }
    Graph::from_edges(n, edges)
}

/// Named instances used for the line-graph bounds and the complement results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NamedGraph {
    /// `K_{2,2,2}`.
    Octahedron,
    Icosahedron,
    /// `P_{n-1}` on `1..n` plus apex 0.
    Fan(usize),
    /// Outer triangle `0,1,2`; depth 0 stacks one vertex in it (`K_4`), each
    /// further level stacks a vertex into every face created by the previous one.
    Apollonian(usize),
    /// Triangle `0,1,2`, pendant vertex 3 on 2, isolated vertex 4.
    TrianglePendant,
}

pub fn make_named(id: NamedGraph) -> Result<Graph> {
    match id {
        NamedGraph::Octahedron => make_complete_multipartite(&[2, 2, 2]),
        NamedGraph::Icosahedron => {
            // 0 top, 1..=5 upper ring, 6..=10 lower ring, 11 bottom
            let mut e = Vec::with_capacity(30);
            for i in 0..5 {
                let up = 1 + i;
                let up_next = 1 + (i + 1) % 5;
                let lo = 6 + i;
                let lo_next = 6 + (i + 1) % 5;
                e.extend([(0, up), (up, up_next), (lo, lo_next), (lo, 11), (up, lo), (up_next, lo)]);
            }
            Graph::from_edges(12, e)
        }
        NamedGraph::Fan(n) => {
            need(n >= 3, || format!("fan needs n >= 3, got {n}"))?;
            let e = (1..n).map(|v| (0, v)).chain((2..n).map(|v| (v - 1, v)));
            Graph::from_edges(n, e)
        }
        NamedGraph::Apollonian(depth) => {
            let mut e = vec![(0, 1), (0, 2), (1, 2)];
            let mut faces = vec![[0usize, 1, 2]];
            let mut n = 3;
            for _ in 0..=depth {
                let mut next = Vec::with_capacity(faces.len() * 3);
                for [a, b, c] in faces {
                    let v = n;
                    n += 1;
                    e.extend([(a, v), (b, v), (c, v)]);
                    next.extend([[a, b, v], [b, c, v], [a, c, v]]);
                }
                faces = next;
            }
            Graph::from_edges(n, e)
        }
        NamedGraph::TrianglePendant => Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    }
}

/// Labeled graph on `n` vertices whose edge set is the bitmask `mask` over
/// pairs in graph6 order (`(0,1), (0,2), (1,2), (0,3), ...`).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![VertexSet::new(n); n];
    let mut bits = mask;
    while bits != 0 {
        let (i, j) = pair_of(bits.trailing_zeros() as usize);
        adj[i].insert(j);
        adj[j].insert(i);
        bits &= bits - 1;
    }
    Graph::from_rows(adj)
}

/// Number of labeled graphs on `n` vertices, `2^{n(n-1)/2}`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// All labeled graphs on `n` vertices in increasing bitmask order.
pub fn enumerate_labeled_graphs(n: usize, cap: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > cap || n > 11 {
        return Err(Error::CapExceeded {
            what: "enumeration order",
            value: n,
            cap: cap.min(11),
        });
    }
    Ok((0..labeled_graph_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(g: &Graph) -> (usize, usize, usize) {
        let p = g.degree_profile();
        (p.count(1), p.count(2), p.big_degree_count)
    }

    #[test]
    fn small_families() {
        assert_eq!(make_path(2).unwrap().m(), 1);
        let s = make_star(6).unwrap().degree_profile();
        assert_eq!((s.count(1), s.count(5)), (5, 1));
        let c = make_cycle(7).unwrap();
        assert_eq!((c.regular_degree(), c.diameter()), (Some(2), Diameter::Finite(3)));
        assert!(make_cycle(2).is_err());
        assert!(make_star(1).is_err());
        assert!(make_complete(0).is_err());
    }

    #[test]
    fn multipartite() {
        let g = make_complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!((g.n(), g.regular_degree()), (6, Some(4)));
        let p = make_complete_multipartite(&[1, 2, 3]).unwrap().degree_profile();
        assert_eq!((p.count(5), p.count(4), p.count(3)), (1, 2, 3));
        assert!(make_complete_multipartite(&[2, 0]).is_err());
        assert!(make_complete_multipartite(&[4]).is_err());
    }

    #[test]
    fn spiders() {
        for (legs, n, diam, n1, n2) in [
            (vec![5, 4, 4], 11, 7, 3, 7),
            (vec![3, 3, 3, 3, 2], 10, 4, 5, 4),
            (vec![3, 3, 2, 2, 2, 2, 2], 10, 4, 7, 2),
        ] {
            let spec = SpiderSpec::new(legs).unwrap();
            let g = make_spider(&spec);
            assert_eq!(g.n(), n);
            assert_eq!(spec.order(), n);
            assert_eq!(g.diameter(), Diameter::Finite(diam));
            assert_eq!(profile(&g), (n1, n2, 1));
        }
        assert!(SpiderSpec::new(vec![3, 3]).is_err());
        assert!(SpiderSpec::new(vec![3, 3, 1]).is_err());
    }

    #[test]
    fn tnt_even_case_follows_recipe() {
        let spec = TntSpec::new(12, 4).unwrap();
        assert_eq!((spec.h, spec.q, spec.r), (4, 2, 3));
        let t = make_tnt(spec).unwrap();
        assert_eq!(t.legs, vec![5, 5, 4]);
        assert!(t.note.is_none());
        assert_eq!(profile(&t.graph), (3, 8, 1));
        assert_eq!(t.graph.diameter(), Diameter::Finite(8));
    }

    #[test]
    fn tnt_odd_case_reports_recipe_overshoot() {
        let spec = TntSpec::new(9, 4).unwrap();
        assert_eq!((spec.h, spec.q, spec.r), (2, 3, 2));
        assert_eq!(spec.recipe_legs(), vec![4, 3, 3, 3]);
        let t = make_tnt(spec).unwrap();
        let note = t.note.as_ref().unwrap();
        assert_eq!(note.recipe_order, 10);
        assert_eq!(t.legs, vec![4, 3, 3, 2]);
        assert_eq!(t.graph.n(), 9);
        assert_eq!(t.leaves, 4);
    }

    #[test]
    fn extremal_trees_meet_their_profiles() {
        for id in ExtremalTree::FIXED {
            make_extremal_tree(id).unwrap();
        }
        for (n, t) in [(16, 5), (13, 4), (10, 3)] {
            make_extremal_tree(ExtremalTree::LeafyPath { n, t }).unwrap();
        }
        for (n, t) in [(12, 3), (9, 2), (15, 4)] {
            make_extremal_tree(ExtremalTree::PendantPath { n, t }).unwrap();
        }
        assert!(make_extremal_tree(ExtremalTree::PendantPath { n: 9, t: 5 }).is_err());
        let g = make_extremal_tree(ExtremalTree::BalancedCaterpillar { t: 4 }).unwrap();
        assert_eq!(profile(&g), (4, 4, 2));
        let g = make_extremal_tree(ExtremalTree::BranchedPath).unwrap();
        assert_eq!(profile(&g), (5, 1, 3));
    }

    #[test]
    fn surgery_on_caterpillar() {
        let g = make_extremal_tree(ExtremalTree::BalancedCaterpillar { t: 4 }).unwrap();
        let branch: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
        assert_eq!(branch, vec![1, 2]);
        let s = tree_surgery(&g, branch[0], branch[1]).unwrap();
        assert!(s.tree.is_tree());
        assert_eq!(profile(&s.tree).2, 1);
        assert_eq!(profile(&s.tree).0, profile(&g).0);
        assert_eq!(reverse_surgery(&s), g);
        assert!(tree_surgery(&g, 1, 1).is_err());
        assert!(tree_surgery(&g, 1, 0).is_err());
    }

    #[test]
    fn random_trees_hit_diameter() {
        for seed in 0..50 {
            let g = random_tree_with_diameter(12, 8, seed).unwrap();
            assert!(g.is_tree());
            assert_eq!(g.diameter(), Diameter::Finite(8));
        }
        assert_eq!(random_tree_with_diameter(7, 6, 3).unwrap(), make_path(7).unwrap());
        assert_eq!(random_tree_with_diameter(12, 8, 9).unwrap(), random_tree_with_diameter(12, 8, 9).unwrap());
        assert!(random_tree_with_diameter(5, 5, 0).is_err());
        assert!(random_tree_with_diameter(4, 1, 0).is_err());
    }

    #[test]
    fn named() {
        let o = make_named(NamedGraph::Octahedron).unwrap();
        assert_eq!((o.n(), o.m(), o.regular_degree()), (6, 12, Some(4)));
        let i = make_named(NamedGraph::Icosahedron).unwrap();
        assert_eq!((i.n(), i.m(), i.regular_degree()), (12, 30, Some(5)));
        let f = make_named(NamedGraph::Fan(6)).unwrap();
        assert_eq!(f.m(), 9);
        for (depth, n) in [(0, 4), (1, 7), (2, 16)] {
            let a = make_named(NamedGraph::Apollonian(depth)).unwrap();
            assert_eq!((a.n(), a.m()), (n, 3 * n - 6));
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(3, 7).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4, 7).unwrap().count(), 64);
        assert_eq!(labeled_graph_count(6), 32768);
        assert!(enumerate_labeled_graphs(8, 7).is_err());
        let all: Vec<Graph> = enumerate_labeled_graphs(3, 7).unwrap().collect();
        assert_eq!(all[0].m(), 0);
        assert_eq!(all[7].m(), 3);
    }
}
