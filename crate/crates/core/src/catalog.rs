//! Facets of the square complex `Γ²_G`, the Stanley-Reisner complex of the
//! polarization of `I(G)^2`, read off directly from the graph.
//!
//! Vertex `v` of `G` contributes the complex vertices `v_1` and `v_2`, stored
//! at indices `2v` and `2v + 1` (see [`polarized_index`]). Every facet has the
//! form `W_(1) ∪ A_(1) ∪ Z_(2)` for one of four families:
//!
//! | kind        | `W`                          | `A`                  | `Z`           |
//! |-------------|------------------------------|----------------------|---------------|
//! | independent | `∅`                          | `𝒜(G)`               | `V`           |
//! | leaf        | leaf edge `{a, b}`, `a` free | `𝒜(G \ N[b])`        | `V \ {a}`     |
//! | star        | induced star centered at `b` | `𝒜(G \ N[W])`        | `V \ {b}`     |
//! | triangle    | a triangle                   | `𝒜(G \ N[W])`        | `V \ W`       |
//!
//! Candidates from all families are pooled and only the inclusion-maximal
//! sets are kept. A facet reachable from several families keeps every
//! witness.

use alloc::vec::Vec;

use crate::complex::{maximal_sets, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ideal::{edge_ideal, ideal_power, polarize_ideal};

/// Index of the polarized vertex `v_copy` in a square complex.
#[inline]
pub fn polarized_index(v: usize, copy: u32) -> usize {
    debug_assert!(copy == 1 || copy == 2);
    2 * v + (copy as usize - 1)
}

/// Inverse of [`polarized_index`]: `(v, copy)`.
#[inline]
pub fn split_index(i: usize) -> (usize, u32) {
    (i / 2, (i % 2) as u32 + 1)
}

/// `W_(1) ∪ A_(1) ∪ Z_(2)` as a face.
pub fn assemble(first: VertexSet, second: VertexSet) -> Face {
    let mut f = Face::EMPTY;
    for v in first.iter() {
        f = f.with(polarized_index(v, 1));
    }
    for v in second.iter() {
        f = f.with(polarized_index(v, 2));
    }
    f
}

/// The graph vertices whose `copy`-th polarized vertex lies in `face`.
pub fn copies_in(face: Face, copy: u32) -> VertexSet {
    face.iter().filter_map(|i| (split_index(i).1 == copy).then_some(split_index(i).0)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetKind {
    Independent,
    Leaf,
    Star,
    Triangle,
}

impl FacetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FacetKind::Independent => "independent",
            FacetKind::Leaf => "leaf",
            FacetKind::Star => "star",
            FacetKind::Triangle => "triangle",
        }
    }
}

/// How one family produces a facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FacetWitness {
    pub kind: FacetKind,
    pub w: VertexSet,
    pub a: VertexSet,
    pub z: VertexSet,
    /// Star center `b`, or the free vertex `a` of a leaf edge.
    pub anchor: Option<usize>,
    pub facet: Face,
}

/// A facet of `Γ²_G` with every family witness that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogFacet {
    pub facet: Face,
    pub witnesses: Vec<FacetWitness>,
}

impl CatalogFacet {
    pub fn kinds(&self) -> Vec<FacetKind> {
        let mut k: Vec<FacetKind> = self.witnesses.iter().map(|w| w.kind).collect();
        k.sort();
        k.dedup();
        k
    }
}

/// Rejects graphs outside the domain of the square complex construction.
pub fn check_square_domain(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(())
}

/// Nonempty independent subsets of `within`.
fn independent_subsets(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    fn rec(g: &Graph, rest: VertexSet, chosen: VertexSet, out: &mut Vec<VertexSet>) {
        let Some(v) = rest.first() else {
            if !chosen.is_empty() {
                out.push(chosen);
            }
            return;
        };
        let rest = rest.without(v);
        rec(g, rest, chosen, out);
        rec(g, rest - g.adj(v), chosen.with(v), out);
    }
    let mut out = Vec::new();
    rec(g, within, VertexSet::EMPTY, &mut out);
    out
}

fn candidates(g: &Graph) -> Vec<FacetWitness> {
    let all = g.vertices();
    let mut out = Vec::new();
    let mut push = |kind, w: VertexSet, a_sets: Vec<VertexSet>, z: VertexSet, anchor| {
        for a in a_sets {
            out.push(FacetWitness { kind, w, a, z, anchor, facet: assemble(w | a, z) });
        }
    };
    let mis_outside = |w: VertexSet| g.restrict(all - g.closed_nbhd(w)).maximal_independent_sets();

    push(FacetKind::Independent, VertexSet::EMPTY, g.maximal_independent_sets(), all, None);

    for a in g.leaves().iter() {
        let b = g.adj(a).first().expect("leaf has a neighbor");
        let w = VertexSet::from_ids([a, b]);
        push(FacetKind::Leaf, w, mis_outside(VertexSet::singleton(b)), all.without(a), Some(a));
    }

    for b in all.iter() {
        for t in independent_subsets(g, g.adj(b)) {
            let w = t.with(b);
            push(FacetKind::Star, w, mis_outside(w), all.without(b), Some(b));
        }
    }

    for [a, b, c] in g.triangles() {
        let w = VertexSet::from_ids([a, b, c]);
        push(FacetKind::Triangle, w, mis_outside(w), all - w, None);
    }
    out
}

/// All facets of `Γ²_G` with their witnesses, sorted by
/// [`Face::graded_cmp`].
pub fn catalog_facets(g: &Graph) -> Result<Vec<CatalogFacet>> {
    check_square_domain(g)?;
    let cands = candidates(g);
    let facets = maximal_sets(cands.iter().map(|c| c.facet).collect());
    Ok(facets
        .into_iter()
        .map(|facet| CatalogFacet {
            facet,
            witnesses: cands.iter().filter(|c| c.facet == facet).copied().collect(),
        })
        .collect())
}

/// `Γ²_G` assembled from [`catalog_facets`].
pub fn catalog_to_complex(g: &Graph) -> Result<SimplicialComplex> {
    Ok(SimplicialComplex::from_facets(catalog_facets(g)?.into_iter().map(|c| c.facet)))
}

/// `Γ²_G` through the ideal machinery: `I(G)`, its square, polarization and
/// the Stanley-Reisner complex, relabeled into the [`polarized_index`]
/// layout of `G`'s vertex ids.
///
/// Vertices without edges have exponent zero in every generator; they keep
/// a single copy `v_1`.
pub fn generic_square_complex(g: &Graph) -> Result<SimplicialComplex> {
    if g.order() == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    let (compact, old) = g.compact();
    let polarized = polarize_ideal(&ideal_power(&edge_ideal(&compact), 2)?);
    let complex = crate::complex::stanley_reisner_complex(polarized.ideal())?;
    let map: Vec<usize> =
        polarized.variables().iter().map(|pv| polarized_index(old[pv.base], pv.copy)).collect();
    Ok(complex.relabel(&map))
}
