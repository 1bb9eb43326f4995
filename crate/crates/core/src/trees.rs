//! Degree bookkeeping for trees of order `n` and diameter `n - t`, and the
//! bounds on `α_{k-reg}` (for `k >= 2`) that depend only on `n` and `t`.
//!
//! For such trees the regimes are
//!
//! | range of `t`            | lower bound     | upper bound                   |
//! |-------------------------|-----------------|-------------------------------|
//! | `2 <= t <= (n-1)/3`     | `n - 2t`        | `n - 4`                       |
//! | `n/3 <= t <= n - 5`     | `(n + 2) / 3`   | `max(n - f(n,t) - 1, t + 1)`  |
//! | `t = n - 4`             | `ceil((n-1)/2)` | `t + 1`                       |
//! | `t = n - 3`             | `t + 1`         | `t + 1`                       |
//!
//! and they require `n >= 8`. The second lower bound is a fraction and is
//! compared exactly, never rounded.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{make_extremal_tree, random_tree_with_diameter, ExtremalTree};
use crate::graph::Graph;
use crate::solver::alpha_kreg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TreeDiameterProfile {
    pub n: usize,
    pub t: usize,
    pub diameter: usize,
    pub n1: usize,
    pub n2: usize,
    /// Number of vertices of degree at least 3.
    pub n3: usize,
    /// `f(n, t)` when `2 <= t <= n - 3`.
    pub f: Option<usize>,
}

/// Profile of a tree with `n >= 2`. Fails if the leaf count does not equal
/// `2 + Σ_{d(v) >= 3} (d(v) - 2)`, which holds for every tree.
pub fn tree_profile(g: &Graph) -> Result<TreeDiameterProfile> {
    if !g.is_tree() {
        return Err(Error::NotATree(format!("n = {}, m = {}", g.n(), g.m())));
    }
    if g.n() < 2 {
        return Err(Error::Precondition("tree profile needs n >= 2".into()));
    }
    let n = g.n();
    let diameter = g.diameter().finite().expect("trees are connected");
    let t = n - diameter;
    let p = g.degree_profile();
    let (n1, n2) = (p.count(1), p.count(2));
    let excess: usize = g.degrees().iter().filter(|&&d| d >= 3).map(|d| d - 2).sum();
    if n1 != excess + 2 {
        return Err(Error::ProfileMismatch(format!("leaf count {n1} != {} + 2", excess)));
    }
    Ok(TreeDiameterProfile {
        n,
        t,
        diameter,
        n1,
        n2,
        n3: p.big_degree_count,
        f: f_of(n, t).ok(),
    })
}

/// `f(n, t)`: `ceil(2(t-1) / (n-t)) + 2` for even `n - t`, and
/// `ceil(2(t-1) / (n-t-1)) + 2` for odd `n - t`. Defined for `2 <= t <= n-3`.
pub fn f_of(n: usize, t: usize) -> Result<usize> {
    if t < 2 || t + 3 > n {
        return Err(Error::InvalidParameter(format!("f(n,t) needs 2 <= t <= n-3, got n={n}, t={t}")));
    }
    let d = n - t;
    let den = if d.is_multiple_of(2) { d } else { d - 1 };
    Ok((2 * (t - 1)).div_ceil(den) + 2)
}

/// `max(n1, n2)`, which equals `α_{k-reg}` for trees with `k >= 2` and
/// `2 <= t <= n - 3`.
pub fn fast_alpha_tree(g: &Graph, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Precondition(format!("needs k >= 2, got {k}")));
    }
    let p = tree_profile(g)?;
    if p.t < 2 || p.t + 3 > p.n {
        return Err(Error::Precondition(format!(
            "needs 2 <= t <= n-3, got n={}, t={}",
            p.n, p.t
        )));
    }
    Ok(p.n1.max(p.n2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `2 <= t <= (n-1)/3`
    ShortT,
    /// `n/3 <= t <= n-5`
    MiddleT,
    /// `t = n - 4`
    DiameterFour,
    /// `t = n - 3`
    DiameterThree,
}

impl Regime {
    pub const ALL: [Regime; 4] = [Regime::ShortT, Regime::MiddleT, Regime::DiameterFour, Regime::DiameterThree];

    pub fn of(n: usize, t: usize) -> Result<Regime> {
        if n < 8 {
            return Err(Error::InvalidParameter(format!("the diameter bounds need n >= 8, got {n}")));
        }
        match t {
            _ if t < 2 || t + 3 > n => Err(Error::InvalidParameter(format!("t = {t} outside 2..=n-3 for n = {n}"))),
            _ if 3 * t < n => Ok(Regime::ShortT),
            _ if t + 5 <= n => Ok(Regime::MiddleT),
            _ if t + 4 == n => Ok(Regime::DiameterFour),
            _ => Ok(Regime::DiameterThree),
        }
    }
}

/// Exact fraction, serialized as `"p/q"` (or `"p"` when integral).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fraction(pub Ratio<u64>);

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl From<usize> for Fraction {
    fn from(v: usize) -> Self {
        Fraction(Ratio::from_integer(v as u64))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegimeBound {
    pub regime: Regime,
    pub lower: Fraction,
    pub upper: usize,
}

impl RegimeBound {
    pub fn admits(&self, alpha: usize) -> bool {
        Fraction::from(alpha) >= self.lower && alpha <= self.upper
    }
}

/// The regimes partition `2 <= t <= n - 3`, since `(n-1)/3 < n/3`, so exactly
/// one bound applies.
pub fn diameter_bounds(n: usize, t: usize) -> Result<RegimeBound> {
    let regime = Regime::of(n, t)?;
    let (lower, upper) = match regime {
        Regime::ShortT => (Fraction::from(n - 2 * t), n - 4),
        Regime::MiddleT => (
            Fraction(Ratio::new(n as u64 + 2, 3)),
            (n - f_of(n, t)? - 1).max(t + 1),
        ),
        Regime::DiameterFour => (Fraction::from((n - 1).div_ceil(2)), t + 1),
        Regime::DiameterThree => (Fraction::from(t + 1), t + 1),
    };
    Ok(RegimeBound { regime, lower, upper })
}

/// One tree checked against everything known about it at `k = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TreeCheck {
    pub seed: Option<u64>,
    pub graph6: String,
    pub profile: TreeDiameterProfile,
    pub bound: RegimeBound,
    pub alpha: usize,
    pub fast_alpha: usize,
    pub within_bounds: bool,
    pub fast_agrees: bool,
    /// `n1 >= f(n, t)`.
    pub leaf_bound_holds: bool,
    pub pass: bool,
}

pub const TREE_CHECK_K: usize = 2;

pub fn check_tree(g: &Graph, seed: Option<u64>) -> Result<TreeCheck> {
    let profile = tree_profile(g)?;
    let bound = diameter_bounds(profile.n, profile.t)?;
    let alpha = alpha_kreg(g, TREE_CHECK_K).value;
    let fast_alpha = fast_alpha_tree(g, TREE_CHECK_K)?;
    let within_bounds = bound.admits(alpha);
    let fast_agrees = fast_alpha == alpha;
    let leaf_bound_holds = profile.f.is_some_and(|f| profile.n1 >= f);
    Ok(TreeCheck {
        seed,
        graph6: g.to_graph6(),
        profile,
        bound,
        alpha,
        fast_alpha,
        within_bounds,
        fast_agrees,
        leaf_bound_holds,
        pass: within_bounds && fast_agrees && leaf_bound_holds,
    })
}

/// Random trees of order `n` and diameter `n - t` for seeds `seed..seed+samples`.
pub fn sample_trees(n: usize, t: usize, samples: usize, seed: u64) -> Result<Vec<TreeCheck>> {
    diameter_bounds(n, t)?;
    (seed..seed + samples as u64)
        .into_par_iter()
        .map(|s| check_tree(&random_tree_with_diameter(n, n - t, s)?, Some(s)))
        .collect()
}

/// Picks `(n, t)` in the regime with `8 <= n <= 18`, deterministically from `seed`.
pub fn regime_instance(regime: Regime, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(4).wrapping_add(regime as u64));
    let n = rng.gen_range(8..=18usize);
    let t = match regime {
        Regime::ShortT => rng.gen_range(2..=(n - 1) / 3),
        Regime::MiddleT => rng.gen_range(n.div_ceil(3)..=n - 5),
        Regime::DiameterFour => n - 4,
        Regime::DiameterThree => n - 3,
    };
    (n, t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegimeSweep {
    pub regime: Regime,
    pub checks: Vec<TreeCheck>,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EndpointCheck {
    pub tree: ExtremalTree,
    pub stated_alpha: usize,
    pub alpha: usize,
    pub check: TreeCheck,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TreeBoundsReport {
    pub samples_per_regime: usize,
    pub first_seed: u64,
    pub regimes: Vec<RegimeSweep>,
    pub endpoints: Vec<EndpointCheck>,
    pub violations: usize,
}

/// The eight example trees, with parameters chosen inside each stated range.
pub fn endpoint_trees() -> Vec<ExtremalTree> {
    let mut v = vec![
        ExtremalTree::LeafyPath { n: 16, t: 5 },
        ExtremalTree::PendantPath { n: 12, t: 4 },
    ];
    v.extend(ExtremalTree::FIXED);
    v
}

pub fn check_endpoint(id: ExtremalTree) -> Result<EndpointCheck> {
    let g = make_extremal_tree(id)?;
    let check = check_tree(&g, None)?;
    let stated_alpha = id.stated_profile().alpha;
    Ok(EndpointCheck {
        tree: id,
        stated_alpha,
        alpha: check.alpha,
        pass: check.alpha == stated_alpha && check.pass,
        check,
    })
}

/// Samples `samples` trees per regime (seeds `first_seed..`) and checks every
/// example tree.
pub fn verify_diameter_bounds(samples: usize, first_seed: u64) -> Result<TreeBoundsReport> {
    let regimes = Regime::ALL
        .iter()
        .map(|&regime| {
            let checks = (first_seed..first_seed + samples as u64)
                .into_par_iter()
                .map(|s| {
                    let (n, t) = regime_instance(regime, s);
                    check_tree(&random_tree_with_diameter(n, n - t, s)?, Some(s))
                })
                .collect::<Result<Vec<_>>>()?;
            let failures = checks.iter().filter(|c| !c.pass).count();
            Ok(RegimeSweep {
                regime,
                checks,
                failures,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let endpoints = endpoint_trees()
        .into_iter()
        .map(check_endpoint)
        .collect::<Result<Vec<_>>>()?;
    let violations =
        regimes.iter().map(|r| r.failures).sum::<usize>() + endpoints.iter().filter(|e| !e.pass).count();
    Ok(TreeBoundsReport {
        samples_per_regime: samples,
        first_seed,
        regimes,
        endpoints,
        violations,
    })
}
