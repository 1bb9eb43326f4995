//! Lower bounds on `α_{k-reg}(L(G))` and on `rep(L(G))` for line graphs, checked
//! instance by instance.
//!
//! Every bound has the form `value >= F(m, ...) / χ_k(L(G))` (or without the
//! chromatic factor for the repetition bounds). All comparisons are done in
//! integers after clearing denominators and squaring or cubing, so there is no
//! floating tolerance. When the exact `χ_k` is out of reach, the search's
//! certified lower bound `χ̂ <= χ_k` stands in. That only makes the right-hand
//! side larger, so a pass still certifies the instance; a failure under the
//! stand-in is reported as inconclusive, never as a failure.

use serde::Serialize;

use super::shapes;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{alpha_kreg, chi_k, repetition_number, ChiOutcome};

/// Graph classes with a linear bound `m / divisor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    TreePerfectMatching,
    MaximalOuterplanar,
    TriangulationTwoFactor,
    TriangulationTwoFactorMinDegree4,
    TriangulationTwoFactorMinDegree5,
    TriangulationMinDegree4,
    TriangulationMinDegree5,
}

impl Shape {
    pub const ALL: [Shape; 7] = [
        Shape::TreePerfectMatching,
        Shape::MaximalOuterplanar,
        Shape::TriangulationTwoFactor,
        Shape::TriangulationTwoFactorMinDegree4,
        Shape::TriangulationTwoFactorMinDegree5,
        Shape::TriangulationMinDegree4,
        Shape::TriangulationMinDegree5,
    ];

    pub fn divisor(self) -> u64 {
        match self {
            Shape::TreePerfectMatching => 6,
            Shape::MaximalOuterplanar => 14,
            Shape::TriangulationTwoFactor => 33,
            Shape::TriangulationTwoFactorMinDegree4 => 27,
            Shape::TriangulationTwoFactorMinDegree5 => 15,
            Shape::TriangulationMinDegree4 => 68,
            Shape::TriangulationMinDegree5 => 51,
        }
    }

    /// The two bounds stated for triangulations of high minimum degree alone.
    pub fn is_min_degree_only(self) -> bool {
        matches!(self, Shape::TriangulationMinDegree4 | Shape::TriangulationMinDegree5)
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::TreePerfectMatching => "tree-perfect-matching",
            Shape::MaximalOuterplanar => "maximal-outerplanar",
            Shape::TriangulationTwoFactor => "triangulation-2-factor",
            Shape::TriangulationTwoFactorMinDegree4 => "triangulation-2-factor-mindeg4",
            Shape::TriangulationTwoFactorMinDegree5 => "triangulation-2-factor-mindeg5",
            Shape::TriangulationMinDegree4 => "triangulation-mindeg4",
            Shape::TriangulationMinDegree5 => "triangulation-mindeg5",
        }
    }

    /// Exact membership test. The maximal outerplanar class is also required
    /// to have a 2-factor, which every such graph on at least 3 vertices has.
    pub fn holds_for(self, g: &Graph) -> Result<bool> {
        let tri = || shapes::is_triangulation(g);
        let two = || shapes::has_two_factor(g);
        Ok(match self {
            Shape::TreePerfectMatching => g.is_tree() && g.m() >= 1 && shapes::has_perfect_matching(g)?,
            Shape::MaximalOuterplanar => g.n() >= 3 && shapes::is_maximal_outerplanar(g)? && two()?,
            Shape::TriangulationTwoFactor => tri()? && two()?,
            Shape::TriangulationTwoFactorMinDegree4 => g.min_degree() >= 4 && tri()? && two()?,
            Shape::TriangulationTwoFactorMinDegree5 => g.min_degree() >= 5 && tri()? && two()?,
            Shape::TriangulationMinDegree4 => g.min_degree() >= 4 && tri()?,
            Shape::TriangulationMinDegree5 => g.min_degree() >= 5 && tri()?,
        })
    }
}

/// The right-hand side `F` of a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "form", content = "shape")]
pub enum Form {
    /// `m^{1/3} / 4`, any graph with an edge.
    CubeRoot,
    /// `a·sqrt(m) - 1` with `a = δ / sqrt(cd(cd - δ))`, `c = 2d - 2δ + 1`,
    /// `d = 2m/n`; needs `d >= δ >= 1`.
    AverageDegree,
    /// `sqrt(m / 30)` for trees.
    TreeSqrt,
    /// `sqrt(m / 182)` for triangulations.
    PlanarSqrt,
    /// `m / divisor`.
    Linear(Shape),
}

impl Form {
    pub fn name(self) -> String {
        match self {
            Form::CubeRoot => "cube-root".into(),
            Form::AverageDegree => "average-degree".into(),
            Form::TreeSqrt => "tree-sqrt30".into(),
            Form::PlanarSqrt => "planar-sqrt182".into(),
            Form::Linear(s) => format!("linear.{}", s.name()),
        }
    }
}

/// Which quantity is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// `α_{k-reg}(L(G)) >= F / χ_k(L(G))`.
    RegIndep,
    /// `rep(L(G)) >= F`.
    Rep,
    /// `rep(L(G)) >= F / χ_k(L(G))`, the variant printed for the two
    /// minimum-degree triangulation bounds.
    RepOverChi,
}

impl Target {
    fn prefix(self) -> &'static str {
        match self {
            Target::RegIndep => "line-alpha",
            Target::Rep => "line-rep",
            Target::RepOverChi => "line-rep-over-chi",
        }
    }

    fn uses_chi(self) -> bool {
        !matches!(self, Target::Rep)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiMode {
    Exact,
    LowerBoundSurrogate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
    /// The bound's coefficient is undefined on this instance (`cd = δ`).
    NotApplicable,
}

/// One checked inequality instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundCertificate {
    pub theorem_tag: String,
    pub graph_id: String,
    pub k: usize,
    pub m: usize,
    /// `α_{k-reg}(L(G))` or `rep(L(G))`.
    pub lhs: usize,
    /// Decimal rendering of the right-hand side, for reading only.
    pub rhs: String,
    /// The integer inequality actually decided.
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_mode: Option<ChiMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    pub verdict: Verdict,
}

/// Everything the bounds need about one `(G, k)`, computed once.
#[derive(Clone, Debug)]
pub struct LineContext {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub k: usize,
    pub alpha: usize,
    pub rep: usize,
    pub chi: ChiOutcome,
}

impl LineContext {
    pub fn new(g: &Graph, k: usize, chi_budget: u64) -> Self {
        let line = g.line_graph().graph;
        Self {
            graph_id: g.to_graph6(),
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            k,
            alpha: alpha_kreg(&line, k).value,
            rep: repetition_number(&line),
            chi: chi_k(&line, k, chi_budget),
        }
    }
}

/// `F` as an exact comparison `lhs·χ >= F`, given `x = lhs·χ` (or `lhs`).
/// Returns `None` when `F` is undefined for this instance.
fn decide(form: Form, x: u128, ctx: &LineContext) -> Option<(bool, String, f64)> {
    let m = ctx.m as u128;
    let mf = ctx.m as f64;
    Some(match form {
        Form::CubeRoot => ((4 * x).pow(3) >= m, format!("(4*{x})^3 >= {m}"), mf.cbrt() / 4.0),
        Form::TreeSqrt => (30 * x * x >= m, format!("30*{x}^2 >= {m}"), (mf / 30.0).sqrt()),
        Form::PlanarSqrt => (182 * x * x >= m, format!("182*{x}^2 >= {m}"), (mf / 182.0).sqrt()),
        Form::Linear(s) => {
            let dv = s.divisor() as u128;
            (dv * x >= m, format!("{dv}*{x} >= {m}"), mf / dv as f64)
        }
        Form::AverageDegree => {
            // with d = 2m/n: cd·n² = 2m(4m - 2δn + n) =: a and (cd - δ)·n² = a - δn² =: b,
            // so x + 1 >= δ·sqrt(m)/sqrt(cd(cd-δ)) iff (x+1)²·a·b >= δ²·m·n⁴
            let (n, dl) = (ctx.n as i128, ctx.min_degree as i128);
            let mi = m as i128;
            let a = 2 * mi * (4 * mi - 2 * dl * n + n);
            let b = a - dl * n * n;
            if b <= 0 {
                return None;
            }
            let lhs = (x as i128 + 1).pow(2) * a * b;
            let rhs = dl * dl * mi * n.pow(4);
            let coef = (dl as f64) * (n * n) as f64 / ((a as f64) * (b as f64)).sqrt();
            (lhs >= rhs, format!("({x}+1)^2*{a}*{b} >= {dl}^2*{m}*{n}^4"), coef * mf.sqrt() - 1.0)
        }
    })
}

/// Shape precondition of a form, as an error when it does not hold.
pub fn require(form: Form, g: &Graph) -> Result<()> {
    let ok = match form {
        Form::CubeRoot => g.m() >= 1,
        Form::AverageDegree => g.m() >= 1 && g.min_degree() >= 1,
        Form::TreeSqrt => g.is_tree() && g.m() >= 1,
        Form::PlanarSqrt => shapes::is_triangulation(g)?,
        Form::Linear(s) => s.holds_for(g)?,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("{} does not apply to {}", form.name(), g.to_graph6())))
    }
}

/// Checks `target >= form` on a prepared context. Shape preconditions are the
/// caller's responsibility; see [`require`] and [`certify`].
pub fn evaluate(ctx: &LineContext, target: Target, form: Form) -> BoundCertificate {
    let lhs = match target {
        Target::RegIndep => ctx.alpha,
        Target::Rep | Target::RepOverChi => ctx.rep,
    };
    let (chi_mode, chi) = if target.uses_chi() {
        match &ctx.chi {
            ChiOutcome::Exact(c) => (Some(ChiMode::Exact), Some(c.color_count)),
            ChiOutcome::Inconclusive { lower_bound, .. } => (Some(ChiMode::LowerBoundSurrogate), Some(*lower_bound)),
        }
    } else {
        (None, None)
    };
    let x = lhs as u128 * chi.unwrap_or(1) as u128;
    let (verdict, check, rhs) = match decide(form, x, ctx) {
        None => (Verdict::NotApplicable, "cd - delta <= 0".to_string(), f64::NAN),
        Some((true, check, rhs)) => (Verdict::Holds, check, rhs),
        Some((false, check, rhs)) if chi_mode == Some(ChiMode::LowerBoundSurrogate) => {
            (Verdict::Inconclusive, check, rhs)
        }
        Some((false, check, rhs)) => (Verdict::Fails, check, rhs),
    };
    let rhs = match (rhs.is_nan(), chi) {
        (true, _) => "undefined".to_string(),
        (false, Some(c)) => format!("{:.6}", rhs / c as f64),
        (false, None) => format!("{rhs:.6}"),
    };
    BoundCertificate {
        theorem_tag: format!("{}.{}", target.prefix(), form.name()),
        graph_id: ctx.graph_id.clone(),
        k: ctx.k,
        m: ctx.m,
        lhs,
        rhs,
        check,
        chi_mode,
        chi,
        verdict,
    }
}

/// Checks the shape, builds the context and evaluates one bound.
pub fn certify(g: &Graph, k: usize, target: Target, form: Form, chi_budget: u64) -> Result<BoundCertificate> {
    require(form, g)?;
    Ok(evaluate(&LineContext::new(g, k, chi_budget), target, form))
}

/// Every form whose shape precondition `g` meets, in a fixed order.
pub fn applicable_forms(g: &Graph) -> Result<Vec<Form>> {
    let mut forms = vec![Form::CubeRoot, Form::AverageDegree, Form::TreeSqrt, Form::PlanarSqrt];
    forms.extend(Shape::ALL.map(Form::Linear));
    let mut out = Vec::new();
    for f in forms {
        match require(f, g) {
            Ok(()) => out.push(f),
            Err(Error::ShapeMismatch(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// All applicable certificates for `(g, k)`: the `α_{k-reg}` bound and the
/// repetition bound for each form, plus the chromatic reading of the two
/// minimum-degree repetition bounds.
pub fn certify_all(g: &Graph, k: usize, chi_budget: u64) -> Result<Vec<BoundCertificate>> {
    let forms = applicable_forms(g)?;
    if forms.is_empty() {
        return Ok(Vec::new());
    }
    let ctx = LineContext::new(g, k, chi_budget);
    let mut out = Vec::new();
    for f in forms {
        out.push(evaluate(&ctx, Target::RegIndep, f));
        out.push(evaluate(&ctx, Target::Rep, f));
        if matches!(f, Form::Linear(s) if s.is_min_degree_only()) {
            out.push(evaluate(&ctx, Target::RepOverChi, f));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::solver::DEFAULT_CHI_BUDGET;

    fn cert(g: &Graph, k: usize, target: Target, form: Form) -> BoundCertificate {
        certify(g, k, target, form, DEFAULT_CHI_BUDGET).unwrap()
    }

    #[test]
    fn path_cube_root() {
        let c = cert(&make_path(10).unwrap(), 2, Target::RegIndep, Form::CubeRoot);
        assert_eq!((c.lhs, c.chi, c.verdict), (7, Some(1), Verdict::Holds));
        assert_eq!(c.rhs, "0.520021");
        let c = cert(&make_path(10).unwrap(), 0, Target::Rep, Form::CubeRoot);
        assert_eq!((c.lhs, c.verdict), (7, Verdict::Holds));
    }

    #[test]
    fn average_degree() {
        let c = cert(&make_cycle(6).unwrap(), 1, Target::RegIndep, Form::AverageDegree);
        assert_eq!(c.verdict, Verdict::NotApplicable);
        let c = cert(&make_path(8).unwrap(), 1, Target::RegIndep, Form::AverageDegree);
        assert_eq!(c.verdict, Verdict::Holds);
        assert!(certify(&Graph::empty(3), 0, Target::Rep, Form::AverageDegree, 10).is_err());
    }

    #[test]
    fn star_sparse() {
        let c = cert(&make_star(10).unwrap(), 0, Target::RegIndep, Form::TreeSqrt);
        assert_eq!((c.lhs, c.chi, c.verdict), (1, Some(9), Verdict::Holds));
    }

    #[test]
    fn shapes_are_enforced() {
        let oct = make_named(NamedGraph::Octahedron).unwrap();
        for s in [
            Shape::TriangulationTwoFactor,
            Shape::TriangulationTwoFactorMinDegree4,
            Shape::TriangulationMinDegree4,
        ] {
            assert_eq!(cert(&oct, 1, Target::RegIndep, Form::Linear(s)).verdict, Verdict::Holds);
        }
        assert!(matches!(
            certify(&oct, 1, Target::RegIndep, Form::Linear(Shape::TriangulationMinDegree5), 10),
            Err(Error::ShapeMismatch(_))
        ));
        let fan = make_named(NamedGraph::Fan(8)).unwrap();
        assert_eq!(
            cert(&fan, 2, Target::RegIndep, Form::Linear(Shape::MaximalOuterplanar)).verdict,
            Verdict::Holds
        );
        let p8 = make_path(8).unwrap();
        assert_eq!(
            cert(&p8, 0, Target::Rep, Form::Linear(Shape::TreePerfectMatching)).lhs,
            5
        );
    }

    #[test]
    fn surrogate_failure_is_inconclusive() {
        let ctx = LineContext {
            graph_id: "x".into(),
            n: 4,
            m: 1000,
            min_degree: 1,
            k: 0,
            alpha: 1,
            rep: 1,
            chi: ChiOutcome::Inconclusive {
                lower_bound: 1,
                upper_bound: 9,
            },
        };
        assert_eq!(evaluate(&ctx, Target::RegIndep, Form::CubeRoot).verdict, Verdict::Inconclusive);
        assert_eq!(evaluate(&ctx, Target::Rep, Form::CubeRoot).verdict, Verdict::Fails);
    }
}
