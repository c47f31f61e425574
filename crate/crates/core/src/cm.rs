//! Cohen-Macaulay decisions by Reisner's criterion, and the classification
//! statements about `Γ²_G` as executable checks.
//!
//! A complex `Γ` is Cohen-Macaulay over `K` iff for every face `σ`
//! (including `∅`) the link `lk(σ)` has `H̃_i(lk σ; K) = 0` for all
//! `i ≠ dim lk σ`. The sweep visits faces by size, then lexicographically,
//! and reports the first failure, so the witness is deterministic.

use alloc::format;
use alloc::vec::Vec;

use crate::catalog::{assemble, catalog_to_complex, check_square_domain, generic_square_complex};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::{reduced_betti_numbers, FieldSpec};

/// Why a complex was rejected before the face sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FastFail {
    /// Dimension at least one and a disconnected 1-skeleton.
    NotConnected,
    NotPure,
    /// A graph-level necessary condition rules the square out.
    NecessaryCondition,
}

impl FastFail {
    pub fn as_str(self) -> &'static str {
        match self {
            FastFail::NotConnected => "not-connected",
            FastFail::NotPure => "not-pure",
            FastFail::NecessaryCondition => "necessary-condition",
        }
    }
}

/// A face whose link has reduced homology below its top degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub face: Face,
    pub degree: isize,
    pub betti: usize,
    pub link_dimension: isize,
}

/// Which construction produced a square complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Catalog,
    Generic,
    /// Both routes were built and compared.
    Both,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Catalog => "catalog",
            Route::Generic => "generic",
            Route::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub field: FieldSpec,
    pub witness: Option<Witness>,
    pub fast_fail: Option<FastFail>,
    pub route: Option<Route>,
}

impl CmVerdict {
    fn cm(field: FieldSpec) -> Self {
        CmVerdict { is_cm: true, field, witness: None, fast_fail: None, route: None }
    }

    fn failed(field: FieldSpec, witness: Witness) -> Self {
        CmVerdict { is_cm: false, field, witness: Some(witness), fast_fail: None, route: None }
    }

    pub fn fast_failed(field: FieldSpec, reason: FastFail) -> Self {
        CmVerdict { is_cm: false, field, witness: None, fast_fail: Some(reason), route: None }
    }
}

/// Strategy for scanning faces in the Reisner sweep.
///
/// Implementations must return the failure at the smallest position of
/// `faces`, whatever order they evaluate in.
pub trait FaceSweep {
    fn first_failure(&self, complex: &SimplicialComplex, faces: &[Face], field: FieldSpec) -> Option<Witness>;
}

/// Checks faces one after another.
#[derive(Clone, Copy, Debug, Default)]
pub struct SequentialSweep;

impl FaceSweep for SequentialSweep {
    fn first_failure(&self, complex: &SimplicialComplex, faces: &[Face], field: FieldSpec) -> Option<Witness> {
        faces.iter().find_map(|&f| reisner_failure(complex, f, field))
    }
}

/// Reisner's condition at one face: the lowest degree `i ≠ dim lk σ` with
/// `b̃_i(lk σ) ≠ 0`, if any.
pub fn reisner_failure(complex: &SimplicialComplex, face: Face, field: FieldSpec) -> Option<Witness> {
    let link = complex.link(face).ok()?;
    let dim = link.dimension();
    let profile = reduced_betti_numbers(&link, field);
    let degree = profile.nonzero_degrees().find(|&i| i != dim)?;
    Some(Witness { face, degree, betti: profile.betti(degree), link_dimension: dim })
}

/// Reisner's criterion over `field`. With `use_fast_fail` the complex is first
/// required to be pure, and connected when its dimension is at least one.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec, use_fast_fail: bool) -> CmVerdict {
    is_cohen_macaulay_with(complex, field, use_fast_fail, &SequentialSweep)
}

pub fn is_cohen_macaulay_with<S: FaceSweep + ?Sized>(
    complex: &SimplicialComplex,
    field: FieldSpec,
    use_fast_fail: bool,
    sweep: &S,
) -> CmVerdict {
    if use_fast_fail {
        if let Some(reason) = structural_fast_fail(complex) {
            return CmVerdict::fast_failed(field, reason);
        }
    }
    let faces = sweep_order(complex);
    match sweep.first_failure(complex, &faces, field) {
        Some(w) => CmVerdict::failed(field, w),
        None => CmVerdict::cm(field),
    }
}

/// Faces in the order the Reisner sweep visits them: largest first, ties
/// broken lexicographically. The first failure is then a deepest failing
/// face, whose link is the smallest certificate.
pub fn sweep_order(complex: &SimplicialComplex) -> Vec<Face> {
    let mut faces = complex.all_faces();
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
    faces
}

/// Connectivity (in dimension ≥ 1) and purity, both necessary for the
/// Cohen-Macaulay property.
pub fn structural_fast_fail(complex: &SimplicialComplex) -> Option<FastFail> {
    if complex.dimension() >= 1 && !complex.is_connected() {
        Some(FastFail::NotConnected)
    } else if !complex.is_pure() {
        Some(FastFail::NotPure)
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareOptions {
    pub route: Route,
    pub fast_fail: bool,
}

impl Default for SquareOptions {
    fn default() -> Self {
        SquareOptions { route: Route::Catalog, fast_fail: true }
    }
}

/// Builds `Γ²_G` along the requested route. [`Route::Both`] compares the
/// two constructions and fails on any difference.
pub fn square_complex(g: &Graph, route: Route) -> Result<SimplicialComplex> {
    match route {
        Route::Catalog => catalog_to_complex(g),
        Route::Generic => {
            check_square_domain(g)?;
            generic_square_complex(g)
        }
        Route::Both => {
            let a = catalog_to_complex(g)?;
            let b = generic_square_complex(g)?;
            if a != b {
                return Err(Error::Inconsistency(format!(
                    "catalog and generic routes disagree ({} vs {} facets)",
                    a.facets().len(),
                    b.facets().len()
                )));
            }
            Ok(a)
        }
    }
}

fn check_connected_domain(g: &Graph) -> Result<()> {
    check_square_domain(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Whether `I(G)^2` is Cohen-Macaulay over `field`, through the facet
/// catalog and Reisner's criterion with fast-fail enabled. Debug builds also
/// build the generic route and compare.
pub fn square_is_cm(g: &Graph, field: FieldSpec) -> Result<CmVerdict> {
    let route = if cfg!(debug_assertions) { Route::Both } else { Route::Catalog };
    square_is_cm_with(g, field, SquareOptions { route, fast_fail: true }, &SequentialSweep)
}

pub fn square_is_cm_with<S: FaceSweep + ?Sized>(
    g: &Graph,
    field: FieldSpec,
    options: SquareOptions,
    sweep: &S,
) -> Result<CmVerdict> {
    check_connected_domain(g)?;
    let complex = square_complex(g, options.route)?;
    let mut verdict = is_cohen_macaulay_with(&complex, field, options.fast_fail, sweep);
    verdict.route = Some(options.route);
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PurityReport {
    pub is_pure: bool,
    /// Unmixed and triangle-free.
    pub expected: bool,
    pub dim: isize,
    /// `n + α(G) - 1`.
    pub formula_dim: isize,
}

/// Purity of `Γ²_G` next to its graph-side prediction. A mismatch, a pure
/// complex of the wrong dimension, or `dim < n` is reported as
/// [`Error::Inconsistency`].
pub fn purity_report(g: &Graph) -> Result<PurityReport> {
    let complex = catalog_to_complex(g)?;
    let n = g.order() as isize;
    let report = PurityReport {
        is_pure: complex.is_pure(),
        expected: purity_expected(g),
        dim: complex.dimension(),
        formula_dim: n + g.independence_number() as isize - 1,
    };
    if report.is_pure != report.expected {
        return Err(Error::Inconsistency(format!(
            "square complex is_pure={} but unmixed-and-triangle-free={}",
            report.is_pure, report.expected
        )));
    }
    if report.is_pure && report.dim != report.formula_dim {
        return Err(Error::Inconsistency(format!(
            "pure square complex has dimension {} instead of {}",
            report.dim, report.formula_dim
        )));
    }
    if report.dim < n {
        return Err(Error::Inconsistency(format!("square complex dimension {} below n = {n}", report.dim)));
    }
    Ok(report)
}

/// Graph-side purity prediction: unmixed and triangle-free.
pub fn purity_expected(g: &Graph) -> bool {
    g.is_unmixed() && !g.has_triangle()
}

/// A reason, read off the graph, why `I(G)^2` cannot be Cohen-Macaulay.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotPure,
    /// Induced path `z-x-y-w` whose ends are leaves of `G`.
    LeafPath3([usize; 4]),
}

impl Rejection {
    pub fn as_str(self) -> &'static str {
        match self {
            Rejection::NotPure => "not-pure",
            Rejection::LeafPath3(_) => "leaf-path-3",
        }
    }
}

/// Cheap necessary conditions: purity first, then an induced `P_3` with
/// leaf ends. `None` means the graph survives the screen.
pub fn necessary_condition_screen(g: &Graph) -> Result<Option<Rejection>> {
    check_connected_domain(g)?;
    if !purity_expected(g) {
        return Ok(Some(Rejection::NotPure));
    }
    Ok(g.leaf_path3_witness().map(Rejection::LeafPath3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleMode {
    Theorem,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleClassification {
    pub t: usize,
    /// The classification statement: CM iff `t = 5`.
    pub theorem: bool,
    pub unmixed: bool,
    pub verified: Option<CmVerdict>,
}

impl CycleClassification {
    pub fn agrees(&self) -> bool {
        self.verified.is_none_or(|v| v.is_cm == self.theorem)
    }
}

/// Largest cycle that [`cycle_square_classification`] verifies by default.
pub const DEFAULT_CYCLE_CAP: usize = 8;

/// Cohen-Macaulayness of `I(C_t)^2`. Theorem mode evaluates `t = 5` and
/// recomputes the unmixedness prefilter; verify mode additionally runs
/// [`square_is_cm`] when `t ≤ cap`.
pub fn cycle_square_classification(
    t: usize,
    field: FieldSpec,
    mode: CycleMode,
    cap: usize,
) -> Result<CycleClassification> {
    cycle_square_classification_with(t, field, mode, cap, &SequentialSweep)
}

pub fn cycle_square_classification_with<S: FaceSweep + ?Sized>(
    t: usize,
    field: FieldSpec,
    mode: CycleMode,
    cap: usize,
    sweep: &S,
) -> Result<CycleClassification> {
    let g = Graph::cycle(t)?;
    let unmixed = g.is_unmixed();
    if unmixed != matches!(t, 3 | 4 | 5 | 7) {
        return Err(Error::Inconsistency(format!("C_{t} unmixed={unmixed}")));
    }
    let verified = match mode {
        CycleMode::Theorem => None,
        CycleMode::Verify => {
            if t > cap {
                return Err(Error::TooLarge { what: "cycle", size: t, cap });
            }
            Some(square_is_cm_with(&g, field, SquareOptions::default(), sweep)?)
        }
    };
    Ok(CycleClassification { t, theorem: t == 5, unmixed, verified })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleStarReport {
    pub pi: Face,
    pub pi_is_face: bool,
    pub link_facets: Vec<Face>,
    pub expected_link_facets: Vec<Face>,
    pub b0: usize,
}

impl DoubleStarReport {
    pub fn holds(&self) -> bool {
        self.pi_is_face && self.link_facets == self.expected_link_facets && self.b0 == 1
    }
}

/// The double-star obstruction: with `π = {x0, y0}_(1) ∪ (V \ {x0, y0})_(2)`,
/// `lk(π)` in `Γ²_G` is the two disjoint simplices
/// `{y1..ys}_(1) ∪ {x0_2}` and `{x1..xt}_(1) ∪ {y0_2}`.
pub fn double_star_obstruction_check(s: usize, t: usize) -> Result<DoubleStarReport> {
    let g = Graph::double_star(s, t)?;
    let complex = catalog_to_complex(&g)?;
    let (x0, y0) = (0, 1);
    let xs: VertexSet = (2..2 + t).collect();
    let ys: VertexSet = (2 + t..2 + t + s).collect();
    let centers = VertexSet::from_ids([x0, y0]);
    let pi = assemble(centers, g.vertices() - centers);
    let pi_is_face = complex.is_face(pi);
    let (link_facets, b0) = match complex.link(pi) {
        Ok(link) => (link.facets().to_vec(), reduced_betti_numbers(&link, FieldSpec::GF2).betti(0)),
        Err(_) => (Vec::new(), 0),
    };
    let mut expected_link_facets =
        alloc::vec![assemble(ys, VertexSet::singleton(x0)), assemble(xs, VertexSet::singleton(y0))];
    expected_link_facets.sort_by(|a, b| a.graded_cmp(*b));
    Ok(DoubleStarReport { pi, pi_is_face, link_facets, expected_link_facets, b0 })
}
