//! Abstract simplicial complexes on at most 128 vertices, and the
//! Stanley-Reisner complex of a squarefree monomial ideal.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Largest vertex count of a [`SimplicialComplex`].
pub const MAX_COMPLEX_VERTICES: usize = 128;

/// Ambient size up to which [`SrEngine::Auto`] scans every subset.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// A set of complex vertices stored as a 128-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Face(pub u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_COMPLEX_VERTICES);
        Face(1u128 << v)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        ids.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_COMPLEX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Face {
        Face(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Face) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// Lexicographic comparison of the increasing vertex sequences.
    pub fn lex_cmp(self, other: Face) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        let (has, lacks) = if self.0 >> d & 1 == 1 { (self, other) } else { (other, self) };
        // `has` continues with d; `lacks` either stops (prefix) or continues above d.
        let has_first = lacks.0 >> d != 0;
        match (has == self, has_first) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// Order used for sweeps and listings: by size, then lexicographic.
    pub fn graded_cmp(self, other: Face) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }

    /// Every subset of this face, including the empty set and itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(Face(cur))
        })
    }
}

impl BitOr for Face {
    type Output = Face;
    fn bitor(self, rhs: Face) -> Face {
        Face(self.0 | rhs.0)
    }
}

impl BitAnd for Face {
    type Output = Face;
    fn bitand(self, rhs: Face) -> Face {
        Face(self.0 & rhs.0)
    }
}

impl Sub for Face {
    type Output = Face;
    fn sub(self, rhs: Face) -> Face {
        Face(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Face::from_ids(iter)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A simplicial complex stored by its facets.
///
/// The vertex set is the union of the facets. The complex `{∅}` is stored as
/// the single facet `∅`. Facets are kept sorted by [`Face::graded_cmp`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertices: Face,
    facets: Vec<Face>,
}

/// Keeps the inclusion-maximal members, sorted by [`Face::graded_cmp`].
pub fn maximal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.0.cmp(&b.0)));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.graded_cmp(*b));
    kept
}

impl SimplicialComplex {
    /// The complex generated by `sets`; non-maximal sets are dropped. An empty
    /// input yields `{∅}`.
    pub fn from_facets<I: IntoIterator<Item = Face>>(sets: I) -> Self {
        let mut facets = maximal_sets(sets.into_iter().collect());
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        let vertices = facets.iter().fold(Face::EMPTY, |a, &f| a | f);
        SimplicialComplex { vertices, facets }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    /// Checks the antichain and cover invariants.
    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.facets.iter().enumerate() {
            for (j, b) in self.facets.iter().enumerate() {
                if i != j && a.is_subset(*b) {
                    return Err(Error::Inconsistency(format!("facet {a:?} lies inside {b:?}")));
                }
            }
        }
        let cover = self.facets.iter().fold(Face::EMPTY, |a, &f| a | f);
        if cover != self.vertices {
            return Err(Error::Inconsistency("facets do not cover the vertex set".into()));
        }
        Ok(())
    }

    /// `max |F| - 1` over facets; `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_face(&self, s: Face) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Components of the 1-skeleton as vertex sets.
    pub fn components(&self) -> Vec<Face> {
        let mut comps: Vec<Face> = Vec::new();
        for &f in &self.facets {
            if f.is_empty() {
                continue;
            }
            let mut merged = f;
            comps.retain(|c| {
                if c.intersects(merged) {
                    merged = merged | *c;
                    false
                } else {
                    true
                }
            });
            comps.push(merged);
        }
        comps.sort_by(|a, b| a.lex_cmp(*b));
        comps
    }

    /// The 1-skeleton is connected; false for `{∅}`.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Γ}`.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        let facets: Vec<Face> =
            self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|&f| f - sigma).collect();
        if facets.is_empty() {
            return Err(Error::NotAFace);
        }
        Ok(Self::from_facets(facets))
    }

    /// Every face, including `∅`, each once, ordered by size then
    /// lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut faces: Vec<Face> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        faces.sort_unstable();
        faces.dedup();
        faces.sort_by(|a, b| a.graded_cmp(*b));
        faces
    }

    /// Faces grouped by size: entry `k` holds the `(k-1)`-dimensional faces,
    /// each group sorted by raw mask.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let top = (self.dimension() + 1) as usize;
        let mut groups: Vec<Vec<Face>> = alloc::vec![Vec::new(); top + 1];
        let mut faces: Vec<Face> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        faces.sort_unstable();
        faces.dedup();
        for f in faces {
            groups[f.len()].push(f);
        }
        groups
    }

    /// `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Renames vertex `v` to `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> SimplicialComplex {
        Self::from_facets(self.facets.iter().map(|f| f.iter().map(|v| map[v]).collect::<Face>()))
    }

    /// True when some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        let common = self.facets.iter().fold(self.vertices, |a, &f| a & f);
        !common.is_empty()
    }
}

/// Facet extraction engine for [`stanley_reisner_complex_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrEngine {
    /// Scan every subset of the ambient variables.
    BruteForce,
    /// Complements of the minimal transversals of the generator supports,
    /// computed incrementally one generator at a time.
    Dualization,
    /// Brute force up to [`BRUTE_FORCE_LIMIT`] variables, dualization above.
    Auto,
}

/// The Stanley-Reisner complex of a squarefree ideal with generators of
/// degree at least two, on the vertex set `0..ambient`.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    stanley_reisner_complex_with(ideal, SrEngine::Auto)
}

pub fn stanley_reisner_complex_with(ideal: &MonomialIdeal, engine: SrEngine) -> Result<SimplicialComplex> {
    let n = ideal.ambient();
    if n > MAX_COMPLEX_VERTICES {
        return Err(Error::TooLarge { what: "ambient ring", size: n, cap: MAX_COMPLEX_VERTICES });
    }
    let mut supports = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::InvalidInput("Stanley-Reisner complex needs a squarefree ideal".into()));
        }
        if g.degree() < 2 {
            return Err(Error::InvalidInput("generators must have degree at least 2".into()));
        }
        supports.push(g.terms().iter().map(|&(v, _)| v).collect::<Face>());
    }
    let engine = match engine {
        SrEngine::Auto if n <= BRUTE_FORCE_LIMIT => SrEngine::BruteForce,
        SrEngine::Auto => SrEngine::Dualization,
        e => e,
    };
    let facets = match engine {
        SrEngine::BruteForce => {
            if n > BRUTE_FORCE_LIMIT {
                return Err(Error::TooLarge { what: "brute-force scan", size: n, cap: BRUTE_FORCE_LIMIT });
            }
            brute_force_facets(n, &supports)
        }
        _ => dualization_facets(n, &supports),
    };
    Ok(SimplicialComplex::from_facets(facets))
}

fn brute_force_facets(n: usize, supports: &[Face]) -> Vec<Face> {
    let size = 1usize << n;
    // Upward closure of the generator supports marks the non-faces.
    let mut nonface = alloc::vec![false; size];
    for s in supports {
        nonface[s.0 as usize] = true;
    }
    for bit in 0..n {
        let b = 1usize << bit;
        for m in 0..size {
            if m & b != 0 && nonface[m ^ b] {
                nonface[m] = true;
            }
        }
    }
    (0..size)
        .filter(|&m| !nonface[m] && (0..n).all(|v| m >> v & 1 == 1 || nonface[m | 1 << v]))
        .map(|m| Face(m as u128))
        .collect()
}

fn dualization_facets(n: usize, supports: &[Face]) -> Vec<Face> {
    let all = Face((0..n).fold(0u128, |a, v| a | 1u128 << v));
    let mut transversals = alloc::vec![Face::EMPTY];
    for &edge in supports {
        let mut next = Vec::with_capacity(transversals.len() * 2);
        for &t in &transversals {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        transversals = minimal_sets(next);
    }
    transversals.into_iter().map(|t| all - t).collect()
}

fn minimal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.0.cmp(&b.0)));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}
