//! Monomials, monomial ideals, edge ideals, powers and polarization.
//!
//! Variables are dense indices. For an edge ideal variable `i` is vertex `i`
//! of the graph; names are attached only when rendering.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A monomial as a sparse exponent vector: `(variable, exponent)` pairs with
/// strictly increasing variables and positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    terms: Vec<(usize, u32)>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial { terms: Vec::new() }
    }

    pub fn var(v: usize) -> Self {
        Monomial { terms: alloc::vec![(v, 1)] }
    }

    /// From `(variable, exponent)` pairs in any order; repeated variables
    /// add up and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut terms: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        terms.sort_unstable();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(terms.len());
        for (v, e) in terms {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { terms: merged }
    }

    /// From a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().copied().enumerate())
    }

    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.terms
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.iter().all(|&(_, e)| e == 1)
    }

    /// Largest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { terms: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.terms.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// Graded lexicographic comparison with `x0 > x1 > ...`; higher
    /// monomials compare as `Less` so that sorting puts them first.
    pub fn glex_cmp(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            for (&(v, e), &(w, f)) in self.terms.iter().zip(&other.terms) {
                if v != w {
                    return v.cmp(&w);
                }
                if e != f {
                    return f.cmp(&e);
                }
            }
            other.terms.len().cmp(&self.terms.len())
        })
    }
}

/// A monomial ideal in `K[x_0, ..., x_{ambient-1}]` given by its minimal
/// generators in graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding generators divisible
    /// by other generators.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(v) = gens.iter().filter_map(Monomial::max_var).max() {
            if v >= ambient {
                return Err(Error::InvalidInput(format!(
                    "variable {v} outside an ambient ring of {ambient} variables"
                )));
            }
        }
        Ok(MonomialIdeal { ambient, generators: minimalize(gens) })
    }

    /// The zero ideal.
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, generators: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Sorts, dedups and removes generators that are multiples of others.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.glex_cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // Only a monomial of no larger degree can divide g.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(Monomial::glex_cmp);
    kept
}

/// `I(G)`: one generator `uv` per edge. Variables are the vertex ids of `G`
/// (all `capacity()` of them; vertices without edges get no generator).
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_pairs([(u, 1), (v, 1)]))
        .collect::<Vec<_>>();
    let mut gens = gens;
    gens.sort_by(Monomial::glex_cmp);
    MonomialIdeal { ambient: g.capacity(), generators: gens }
}

/// `I^k` by its minimal generators.
pub fn ideal_power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidInput("ideal power exponent must be at least 1".into()));
    }
    let gens = ideal.generators();
    let equal_degree = gens.windows(2).all(|w| w[0].degree() == w[1].degree());
    let mut current: Vec<Monomial> = gens.to_vec();
    for _ in 1..k {
        let mut next = Vec::with_capacity(current.len() * gens.len());
        for a in &current {
            for b in gens {
                next.push(a.mul(b));
            }
        }
        next.sort_by(Monomial::glex_cmp);
        next.dedup();
        // Products of equal-degree generators are all of one degree, so
        // distinct products are already minimal.
        current = if equal_degree { next } else { minimalize(next) };
    }
    current.sort_by(Monomial::glex_cmp);
    Ok(MonomialIdeal { ambient: ideal.ambient, generators: current })
}

/// The `copy`-th polarized copy of base variable `base` (copies start at 1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PolarizedVariable {
    pub base: usize,
    pub copy: u32,
}

/// A squarefree monomial over polarized variables, sorted by `(base, copy)`.
pub type PolarizedMonomial = Vec<PolarizedVariable>;

/// `x^a ↦ x_1 x_2 ... x_a`, variable by variable; `1 ↦ 1`.
pub fn polarize_monomial(m: &Monomial) -> PolarizedMonomial {
    m.terms()
        .iter()
        .flat_map(|&(base, e)| (1..=e).map(move |copy| PolarizedVariable { base, copy }))
        .collect()
}

/// Forgets copy indices and accumulates exponents again.
pub fn depolarize_monomial(p: &[PolarizedVariable]) -> Monomial {
    Monomial::from_pairs(p.iter().map(|pv| (pv.base, 1)))
}

/// The polarization of an ideal: a squarefree ideal whose variable `i` is
/// `variables[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolarizedIdeal {
    variables: Vec<PolarizedVariable>,
    ideal: MonomialIdeal,
}

impl PolarizedIdeal {
    /// Polarized variables, sorted by `(base, copy)`.
    pub fn variables(&self) -> &[PolarizedVariable] {
        &self.variables
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn index_of(&self, pv: PolarizedVariable) -> Option<usize> {
        self.variables.binary_search(&pv).ok()
    }

    /// Generators as polarized monomials, in the order of `ideal()`.
    pub fn polarized_generators(&self) -> Vec<PolarizedMonomial> {
        self.ideal
            .generators()
            .iter()
            .map(|g| g.terms().iter().map(|&(i, _)| self.variables[i]).collect())
            .collect()
    }
}

/// Polarizes each minimal generator. The ambient ring has copies
/// `1..=max(1, e_v)` of every base variable `v`, where `e_v` is the largest
/// exponent of `v` among the generators.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> PolarizedIdeal {
    let mut max_exp = alloc::vec![1u32; ideal.ambient()];
    for g in ideal.generators() {
        for &(v, e) in g.terms() {
            max_exp[v] = max_exp[v].max(e);
        }
    }
    let variables: Vec<PolarizedVariable> = max_exp
        .iter()
        .enumerate()
        .flat_map(|(base, &e)| (1..=e).map(move |copy| PolarizedVariable { base, copy }))
        .collect();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            Monomial::from_pairs(polarize_monomial(g).into_iter().map(|pv| {
                (variables.binary_search(&pv).expect("copy within ambient"), 1)
            }))
        })
        .collect::<Vec<_>>();
    let mut gens = gens;
    gens.sort_by(Monomial::glex_cmp);
    PolarizedIdeal { ideal: MonomialIdeal { ambient: variables.len(), generators: gens }, variables }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pv(base: usize, copy: u32) -> PolarizedVariable {
        PolarizedVariable { base, copy }
    }

    #[test]
    fn edge_ideal_of_p3_and_triangle() {
        let g = Graph::labeled_p3(); // x=0 y=1 z=2 w=3
        let i = edge_ideal(&g);
        let mut want = [
            Monomial::from_pairs([(0, 1), (2, 1)]),
            Monomial::from_pairs([(0, 1), (1, 1)]),
            Monomial::from_pairs([(1, 1), (3, 1)]),
        ];
        want.sort_by(Monomial::glex_cmp);
        assert_eq!(i.generators(), &want[..]);

        let t = edge_ideal(&Graph::triangle());
        assert_eq!(t.generators().len(), 3);
        assert!(t.generators().iter().all(|m| m.degree() == 2 && m.is_squarefree()));
        assert!(edge_ideal(&Graph::unnamed(3, &[]).unwrap()).generators().is_empty());
    }

    #[test]
    fn square_of_p3() {
        let (x, y, z, w) = (0, 1, 2, 3);
        let sq = ideal_power(&edge_ideal(&Graph::labeled_p3()), 2).unwrap();
        let want = [
            [(x, 2), (z, 2)].to_vec(),
            [(x, 2), (y, 1), (z, 1)].to_vec(),
            [(x, 1), (y, 1), (z, 1), (w, 1)].to_vec(),
            [(x, 2), (y, 2)].to_vec(),
            [(x, 1), (y, 2), (w, 1)].to_vec(),
            [(y, 2), (w, 2)].to_vec(),
        ];
        let mut want: Vec<Monomial> = want.into_iter().map(Monomial::from_pairs).collect();
        want.sort_by(Monomial::glex_cmp);
        assert_eq!(sq.generators(), &want[..]);
    }

    #[test]
    fn first_power_is_identity() {
        let i = edge_ideal(&Graph::cycle(5).unwrap());
        assert_eq!(ideal_power(&i, 1).unwrap(), i);
        assert!(ideal_power(&i, 0).is_err());
    }

    #[test]
    fn square_of_c4_has_abcd_once() {
        let sq = ideal_power(&edge_ideal(&Graph::cycle(4).unwrap()), 2).unwrap();
        let abcd = Monomial::from_exponents(&[1, 1, 1, 1]);
        assert_eq!(sq.generators().iter().filter(|m| **m == abcd).count(), 1);
        // 10 pair products, (ab)(cd) = (bc)(da)
        assert_eq!(sq.generators().len(), 9);
    }

    #[test]
    fn mixed_degree_power_prunes() {
        // (x, y^2)^2 = (x^2, x y^2, y^4)
        let i = MonomialIdeal::new(2, vec![Monomial::var(0), Monomial::from_pairs([(1, 2)])]).unwrap();
        let sq = ideal_power(&i, 2).unwrap();
        assert_eq!(sq.generators().len(), 3);
        // (x, xy) is just (x)
        let j = MonomialIdeal::new(2, vec![Monomial::var(0), Monomial::from_pairs([(0, 1), (1, 1)])])
            .unwrap();
        assert_eq!(j.generators(), &[Monomial::var(0)]);
    }

    #[test]
    fn polarize_monomials() {
        let (x, y, z) = (0, 1, 2);
        assert_eq!(
            polarize_monomial(&Monomial::from_pairs([(x, 2), (z, 2)])),
            vec![pv(x, 1), pv(x, 2), pv(z, 1), pv(z, 2)]
        );
        assert!(polarize_monomial(&Monomial::one()).is_empty());
        assert_eq!(
            polarize_monomial(&Monomial::from_pairs([(x, 2), (y, 1)])),
            vec![pv(x, 1), pv(x, 2), pv(y, 1)]
        );
    }

    #[test]
    fn polarized_square_of_p3() {
        let (x, y, z, w) = (0, 1, 2, 3);
        let p = polarize_ideal(&ideal_power(&edge_ideal(&Graph::labeled_p3()), 2).unwrap());
        let mut got = p.polarized_generators();
        got.iter_mut().for_each(|m| m.sort());
        got.sort();
        let mut want = vec![
            vec![pv(x, 1), pv(x, 2), pv(z, 1), pv(z, 2)],
            vec![pv(x, 1), pv(x, 2), pv(z, 1), pv(y, 1)],
            vec![pv(x, 1), pv(z, 1), pv(y, 1), pv(w, 1)],
            vec![pv(x, 1), pv(x, 2), pv(y, 1), pv(y, 2)],
            vec![pv(x, 1), pv(y, 1), pv(y, 2), pv(w, 1)],
            vec![pv(y, 1), pv(y, 2), pv(w, 1), pv(w, 2)],
        ];
        want.iter_mut().for_each(|m| m.sort());
        want.sort();
        assert_eq!(got, want);
        assert_eq!(p.variables().len(), 8);
        assert!(p.ideal().is_squarefree());
    }

    #[test]
    fn squarefree_ideal_polarizes_to_itself() {
        let i = edge_ideal(&Graph::stars_example());
        let p = polarize_ideal(&i);
        assert!(p.variables().iter().all(|v| v.copy == 1));
        assert_eq!(p.ideal(), &i);
    }

    #[test]
    fn polarized_square_of_triangle_shapes() {
        let p = polarize_ideal(&ideal_power(&edge_ideal(&Graph::triangle()), 2).unwrap());
        let gens = p.polarized_generators();
        assert_eq!(gens.len(), 6);
        let edge_squares = gens.iter().filter(|m| m.iter().filter(|v| v.copy == 2).count() == 2).count();
        let stars = gens.iter().filter(|m| m.iter().filter(|v| v.copy == 2).count() == 1).count();
        // a triangle has no matching of size two
        assert_eq!((edge_squares, stars), (3, 3));
    }

    #[test]
    fn glex_order() {
        let a = Monomial::from_pairs([(0, 2)]);
        let b = Monomial::from_pairs([(0, 1), (1, 1)]);
        let c = Monomial::from_pairs([(1, 2)]);
        let d = Monomial::var(0);
        assert_eq!(a.glex_cmp(&b), Ordering::Less);
        assert_eq!(b.glex_cmp(&c), Ordering::Less);
        assert_eq!(c.glex_cmp(&d), Ordering::Less);
        assert_eq!(b.glex_cmp(&b), Ordering::Equal);
    }
}
