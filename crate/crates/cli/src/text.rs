//! Human-readable rendering of ideals, faces, facets and verdicts.

use edgesquare_core::catalog::{copies_in, CatalogFacet};
use edgesquare_core::cm::{CmVerdict, PurityReport, Rejection};
use edgesquare_core::ideal::PolarizedIdeal;
use edgesquare_core::{Face, FacetKind, FacetWitness, Graph, Monomial, MonomialIdeal, VertexSet};

/// How polarized variables are spelled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VarStyle {
    /// `x_1` instead of `x1`.
    pub subscript: bool,
}

impl VarStyle {
    /// `x1` or `x_1`. Names ending in a digit always get the underscore.
    pub fn polarized(self, base: &str, copy: u32) -> String {
        if self.subscript || base.ends_with(|c: char| c.is_ascii_digit()) {
            format!("{base}_{copy}")
        } else {
            format!("{base}{copy}")
        }
    }
}

/// Names of a square-complex face: first copies by vertex id, then second
/// copies by vertex id.
pub fn face_names(g: &Graph, face: Face, style: VarStyle) -> Vec<String> {
    [1, 2]
        .into_iter()
        .flat_map(|copy| copies_in(face, copy).iter().map(move |v| style.polarized(g.name(v), copy)))
        .collect()
}

pub fn render_face(g: &Graph, face: Face, style: VarStyle) -> String {
    format!("{{{}}}", face_names(g, face, style).join(","))
}

pub fn render_vertex_set(g: &Graph, s: VertexSet) -> String {
    format!("{{{}}}", s.iter().map(|v| g.name(v)).collect::<Vec<_>>().join(","))
}

/// Vertex names run together (`ac`) when all are single characters,
/// otherwise comma separated.
fn word(g: &Graph, s: VertexSet) -> String {
    let names: Vec<&str> = s.iter().map(|v| g.name(v)).collect();
    if names.iter().all(|n| n.chars().count() == 1) {
        names.concat()
    } else {
        names.join(",")
    }
}

/// `x^2*z^2`, with variables indexed by vertex id.
pub fn render_monomial(g: &Graph, m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.terms()
        .iter()
        .map(|&(v, e)| if e == 1 { g.name(v).to_string() } else { format!("{}^{e}", g.name(v)) })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn render_ideal(g: &Graph, ideal: &MonomialIdeal) -> String {
    if ideal.generators().is_empty() {
        return "(0)".into();
    }
    let gens: Vec<String> = ideal.generators().iter().map(|m| render_monomial(g, m)).collect();
    format!("({})", gens.join(", "))
}

/// The polarized ideal in `x1*x2*z1*z2` form. Its base variables are the
/// vertex ids of `g`.
pub fn render_polarized(g: &Graph, p: &PolarizedIdeal, style: VarStyle) -> String {
    let gens: Vec<String> = p
        .polarized_generators()
        .iter()
        .map(|m| m.iter().map(|pv| style.polarized(g.name(pv.base), pv.copy)).collect::<Vec<_>>().join("*"))
        .collect();
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(", "))
    }
}

/// The annotation for one witness, e.g. `star ac centered at a`.
pub fn witness_tag(g: &Graph, w: &FacetWitness) -> String {
    match w.kind {
        FacetKind::Independent => format!("independent set {}", word(g, w.a)),
        FacetKind::Leaf => {
            let a = w.anchor.expect("leaf witness has a free vertex");
            format!("leaf {} with free vertex {}", word(g, w.w), g.name(a))
        }
        FacetKind::Star => {
            let b = w.anchor.expect("star witness has a center");
            format!("star {} centered at {}", word(g, w.w), g.name(b))
        }
        FacetKind::Triangle => "triangle".into(),
    }
}

/// `W={..} A={..} Z={..}`.
pub fn witness_decomposition(g: &Graph, w: &FacetWitness) -> String {
    format!(
        "W={} A={} Z={}",
        render_vertex_set(g, w.w),
        render_vertex_set(g, w.a),
        render_vertex_set(g, w.z)
    )
}

/// Facet list lines, sorted. With `witness`, each line carries its
/// family annotations.
pub fn facet_lines(g: &Graph, facets: &[CatalogFacet], style: VarStyle, witness: bool) -> Vec<String> {
    let mut lines: Vec<String> = facets
        .iter()
        .map(|f| {
            let face = render_face(g, f.facet, style);
            if !witness {
                return face;
            }
            let tags: Vec<String> = f
                .witnesses
                .iter()
                .map(|w| format!("({}) [{}]", witness_tag(g, w), witness_decomposition(g, w)))
                .collect();
            format!("{face}  -- {}", tags.join("; "))
        })
        .collect();
    lines.sort();
    lines
}

/// Plain facet lines for a complex on the square layout of `g`.
pub fn face_lines(g: &Graph, faces: &[Face], style: VarStyle) -> Vec<String> {
    let mut lines: Vec<String> = faces.iter().map(|&f| render_face(g, f, style)).collect();
    lines.sort();
    lines
}

/// `CM`, `NOT CM; witness face {..}, b~i(link)=k` or `NOT CM; fast-fail <tag>`.
pub fn render_verdict(g: &Graph, v: &CmVerdict, style: VarStyle) -> String {
    if v.is_cm {
        return "CM".into();
    }
    match (&v.witness, v.fast_fail) {
        (Some(w), _) => format!(
            "NOT CM; witness face {}, b~{}(link)={}",
            render_face(g, w.face, style),
            w.degree,
            w.betti
        ),
        (None, Some(tag)) => format!("NOT CM; fast-fail {}", tag.as_str()),
        (None, None) => "NOT CM".into(),
    }
}

pub fn render_purity(r: &PurityReport) -> Vec<String> {
    vec![
        format!("pure: {}", r.is_pure),
        format!("unmixed and triangle-free: {}", r.expected),
        format!("dim: {}", r.dim),
        format!("n + alpha - 1: {}", r.formula_dim),
    ]
}

pub fn render_rejection(g: &Graph, r: Option<Rejection>) -> String {
    match r {
        None => "survives".into(),
        Some(Rejection::NotPure) => "rejected: not-pure".into(),
        Some(Rejection::LeafPath3(p)) => format!(
            "rejected: leaf-path-3 {}",
            p.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join("-")
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgesquare_core::catalog::assemble;

    #[test]
    fn variable_names() {
        let s = VarStyle::default();
        assert_eq!(s.polarized("x", 1), "x1");
        assert_eq!(s.polarized("v0", 2), "v0_2");
        assert_eq!(VarStyle { subscript: true }.polarized("x", 2), "x_2");
    }

    #[test]
    fn faces_list_first_copies_first() {
        let g = Graph::labeled_p3();
        let f = assemble(VertexSet::from_ids([0, 1]), VertexSet::from_ids([2, 3]));
        assert_eq!(render_face(&g, f, VarStyle::default()), "{x1,y1,z2,w2}");
    }

    #[test]
    fn ideal_text() {
        let g = Graph::labeled_p3();
        let i = edgesquare_core::ideal::edge_ideal(&g);
        assert_eq!(render_ideal(&g, &i), "(x*y, x*z, y*w)");
        let sq = edgesquare_core::ideal::ideal_power(&i, 2).unwrap();
        assert!(render_ideal(&g, &sq).contains("x^2*z^2"));
    }
}
