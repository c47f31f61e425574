//! Exhaustive census of small connected graphs.
//!
//! Graphs are enumerated up to isomorphism by growing connected graphs one
//! vertex at a time (every connected graph has a vertex whose removal keeps
//! it connected) and deduplicating by a canonical form: the smallest
//! upper-triangle adjacency code over all relabelings that list vertices by
//! decreasing degree.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cm::{
    is_cohen_macaulay, necessary_condition_screen, square_is_cm_with, CmVerdict, FaceSweep, FastFail,
    Rejection, SequentialSweep, SquareOptions,
};
use crate::complex::stanley_reisner_complex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::FieldSpec;
use crate::ideal::edge_ideal;

/// Largest order the enumerator accepts (11 bits of adjacency code per
/// vertex keep the code within 64 bits up to 11 vertices; the graph count
/// is the practical limit).
pub const MAX_CENSUS_ORDER: usize = 8;

/// Default cap on the census order.
pub const DEFAULT_CENSUS_CAP: usize = 6;

fn pair_bit(i: usize, j: usize, n: usize) -> usize {
    // position of (i, j), i < j, in row-major upper-triangle order
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                code |= 1u64 << (63 - pair_bit(i, j, n));
            }
        }
    }
    code
}

/// Canonical adjacency code of a graph on at most 11 vertices, and the
/// vertex order that realizes it.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let (g, _) = g.compact();
    let n = g.order();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    // cells of equal degree, permuted independently
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in verts {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(alloc::vec![v]),
        }
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut order = Vec::with_capacity(n);
    search(&g, &cells, 0, &mut alloc::vec![false; n], &mut order, &mut best);
    best.expect("at least one labeling")
}

fn search(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    if cell == cells.len() {
        let code = code_under(g, order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order.clone()));
        }
        return;
    }
    let placed_in_cell = order.len() - cells[..cell].iter().map(Vec::len).sum::<usize>();
    if placed_in_cell == cells[cell].len() {
        search(g, cells, cell + 1, used, order, best);
        return;
    }
    for &v in &cells[cell] {
        if !used[v] {
            used[v] = true;
            order.push(v);
            search(g, cells, cell, used, order, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// Rebuilds the graph in canonical labeling, named `v0..`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (compact, _) = g.compact();
    let (_, order) = canonical_form(&compact);
    let mut pos = alloc::vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(usize, usize)> =
        compact.edges().into_iter().map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))).collect();
    Graph::unnamed(order.len(), &edges).expect("relabeled graph is valid")
}

/// Connected graphs on exactly `1..=n_max` vertices, one per isomorphism
/// class, in canonical labeling, ordered by order, then edge count, then code.
pub fn connected_graphs(n_max: usize) -> Result<Vec<Graph>> {
    if n_max > MAX_CENSUS_ORDER {
        return Err(Error::TooLarge { what: "census order", size: n_max, cap: MAX_CENSUS_ORDER });
    }
    let mut all = Vec::new();
    if n_max == 0 {
        return Ok(all);
    }
    let mut layer = alloc::vec![Graph::unnamed(1, &[]).expect("valid")];
    all.extend(layer.iter().cloned());
    for n in 2..=n_max {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let base = g.edges();
            for mask in 1u64..(1 << (n - 1)) {
                let mut edges = base.clone();
                edges.extend((0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                let h = Graph::unnamed(n, &edges).expect("valid");
                let canon = canonical_graph(&h);
                if seen.insert(canonical_form(&canon).0) {
                    next.push(canon);
                }
            }
        }
        next.sort_by_key(|g| (g.edge_count(), canonical_form(g).0));
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all)
}

/// Graph classes tracked by the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ClassFlags {
    pub tree: bool,
    pub chordal: bool,
    pub bipartite: bool,
    pub whiskered: bool,
    pub cycle: bool,
    /// Bipartite with a Cohen-Macaulay independence complex.
    pub cm_bipartite: bool,
}

impl ClassFlags {
    pub const NAMES: [&'static str; 6] = ["tree", "chordal", "bipartite", "whiskered", "cycle", "cm-bipartite"];

    pub fn as_array(&self) -> [bool; 6] {
        [self.tree, self.chordal, self.bipartite, self.whiskered, self.cycle, self.cm_bipartite]
    }

    /// Member of one of the classes covered by the classification results.
    pub fn in_covered_class(&self) -> bool {
        self.tree || self.chordal || self.whiskered || self.cycle || self.cm_bipartite
    }
}

/// Whether the independence complex of `g` (the Stanley-Reisner complex of
/// `I(G)`) is Cohen-Macaulay.
pub fn edge_ideal_is_cm(g: &Graph, field: FieldSpec) -> Result<bool> {
    let (compact, _) = g.compact();
    let complex = stanley_reisner_complex(&edge_ideal(&compact))?;
    Ok(is_cohen_macaulay(&complex, field, true).is_cm)
}

pub fn class_flags(g: &Graph, field: FieldSpec) -> Result<ClassFlags> {
    let p = g.predicates();
    let cm_bipartite = p.is_bipartite && p.is_connected && edge_ideal_is_cm(g, field)?;
    Ok(ClassFlags {
        tree: p.is_tree,
        chordal: p.is_chordal,
        bipartite: p.is_bipartite,
        whiskered: p.is_whiskered,
        cycle: p.is_cycle,
        cm_bipartite,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub graph: Graph,
    pub classes: ClassFlags,
    pub screen: Option<Rejection>,
    /// One verdict per requested field, in request order.
    pub verdicts: Vec<CmVerdict>,
}

impl CensusRecord {
    pub fn is_cm(&self) -> bool {
        self.verdicts.first().is_some_and(|v| v.is_cm)
    }

    /// The fields gave different answers.
    pub fn field_disagreement(&self) -> bool {
        self.verdicts.windows(2).any(|w| w[0].is_cm != w[1].is_cm)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub cap: usize,
    /// Run the full check on graphs the screen already rejected.
    pub verify_screened: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { cap: DEFAULT_CENSUS_CAP, verify_screened: false }
    }
}

/// Screens one connected graph and checks the survivors over every field.
pub fn census_record<S: FaceSweep + ?Sized>(
    g: &Graph,
    fields: &[FieldSpec],
    verify_screened: bool,
    sweep: &S,
) -> Result<CensusRecord> {
    if fields.is_empty() {
        return Err(Error::InvalidInput("census needs at least one field".into()));
    }
    let screen = necessary_condition_screen(g)?;
    let verdicts = fields
        .iter()
        .map(|&f| {
            if screen.is_some() && !verify_screened {
                Ok(CmVerdict::fast_failed(f, FastFail::NecessaryCondition))
            } else {
                square_is_cm_with(g, f, SquareOptions::default(), sweep)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusRecord { graph: g.clone(), classes: class_flags(g, fields[0])?, screen, verdicts })
}

/// Connected graphs on `2..=n_max` vertices that the census covers.
pub fn census_graphs(n_max: usize, cap: usize) -> Result<Vec<Graph>> {
    if n_max > cap {
        return Err(Error::TooLarge { what: "census order", size: n_max, cap });
    }
    Ok(connected_graphs(n_max)?.into_iter().filter(|g| g.order() >= 2).collect())
}

/// Sequential census over `2..=n_max` vertices.
pub fn census(n_max: usize, fields: &[FieldSpec], options: CensusOptions) -> Result<Vec<CensusRecord>> {
    census_graphs(n_max, options.cap)?
        .iter()
        .map(|g| census_record(g, fields, options.verify_screened, &SequentialSweep))
        .collect()
}

/// Per class, the indices of records whose square is Cohen-Macaulay.
pub fn cm_by_class(records: &[CensusRecord]) -> Vec<(&'static str, Vec<usize>)> {
    ClassFlags::NAMES
        .iter()
        .enumerate()
        .map(|(k, &name)| {
            let hits = records
                .iter()
                .enumerate()
                .filter(|(_, r)| r.classes.as_array()[k] && r.is_cm())
                .map(|(i, _)| i)
                .collect();
            (name, hits)
        })
        .collect()
}
