//! Finite simple graphs on at most 64 vertices.
//!
//! Vertices are dense ids `0..capacity`. A [`Graph`] carries a membership
//! mask, so induced subgraphs and deletions keep the ids of the host graph;
//! this lets sets computed in a subgraph (for example maximal independent
//! sets of `G \ N[W]`) be used directly in `G`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        ids.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
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
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Lexicographic comparison of the increasing id sequences.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_ids(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Finite simple undirected graph.
///
/// Isolated vertices are allowed; the entry points that build the square
/// complex reject them.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: VertexSet,
    adj: Vec<VertexSet>,
    names: Vec<String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (self.name(u), self.name(v)))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.vertices.iter().map(|v| self.name(v)).collect::<Vec<_>>())
            .field("edges", &edges)
            .finish()
    }
}

/// Flags reported by [`Graph::predicates`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StructuralPredicates {
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_chordal: bool,
    pub has_triangle: bool,
    pub is_whiskered: bool,
    pub is_cycle: bool,
}

impl Graph {
    /// Builds a graph on `names.len()` vertices. Repeated edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "graph", size: n, cap: MAX_VERTICES });
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {}", names[u])));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { vertices: VertexSet::range(n), adj, names })
    }

    /// Graph with vertices named `v0, v1, ...`.
    pub fn unnamed(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), edges)
    }

    /// Graph with the given vertex names and edges given by name.
    pub fn from_named_edges(names: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let index = |s: &str| {
            names
                .iter()
                .position(|n| *n == s)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex name {s}")))
        };
        let ids = edges
            .iter()
            .map(|&(a, b)| Ok((index(a)?, index(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names.iter().map(|s| String::from(*s)).collect(), &ids)
    }

    /// Size of the id space (vertices of the host graph this one came from).
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices).first() {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// Open neighborhood without membership checks.
    #[inline]
    pub(crate) fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.capacity() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .iter()
            .flat_map(|u| self.adj[u].iter().filter(move |&v| u < v).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// `N_G(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// `N_G[W]`: `W` together with every neighbor of a member of `W`.
    pub fn closed_neighborhood(&self, w: VertexSet) -> Result<VertexSet> {
        self.check_set(w)?;
        Ok(self.closed_nbhd(w))
    }

    pub(crate) fn closed_nbhd(&self, w: VertexSet) -> VertexSet {
        w.iter().fold(w, |acc, v| acc | self.adj[v])
    }

    /// `G|_U`, keeping vertex ids and names.
    pub fn induced_subgraph(&self, u: VertexSet) -> Result<Graph> {
        self.check_set(u)?;
        Ok(self.restrict(u))
    }

    pub(crate) fn restrict(&self, u: VertexSet) -> Graph {
        let adj = (0..self.capacity())
            .map(|v| if u.contains(v) { self.adj[v] & u } else { VertexSet::EMPTY })
            .collect();
        Graph { vertices: u, adj, names: self.names.clone() }
    }

    /// `G \ U`, the induced subgraph on the remaining vertices. Isolated
    /// vertices are kept.
    pub fn deletion(&self, u: VertexSet) -> Result<Graph> {
        self.check_set(u)?;
        Ok(self.restrict(self.vertices - u))
    }

    /// Relabels the vertices to `0..order()`; returns the new graph and the
    /// old id of each new vertex.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = self.vertices.iter().collect();
        let mut new_of = alloc::vec![usize::MAX; self.capacity()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(u, v)| (new_of[u], new_of[v])).collect();
        let names = old.iter().map(|&v| self.names[v].clone()).collect();
        (Graph::new(names, &edges).expect("compacted graph is valid"), old)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// All maximal independent sets, sorted lexicographically by their
    /// increasing id sequences. The graph without vertices has exactly one,
    /// the empty set.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.mis_rec(VertexSet::EMPTY, self.vertices, VertexSet::EMPTY, &mut out);
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    // Bron-Kerbosch with pivoting, run on the complement graph.
    fn mis_rec(&self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let non_adj = |v: usize| self.vertices - self.adj[v].with(v);
        let pivot = (p | x).iter().max_by_key(|&u| (p & non_adj(u)).len()).expect("p nonempty");
        for v in (p - non_adj(pivot)).iter() {
            let nv = non_adj(v);
            self.mis_rec(r.with(v), p & nv, x & nv, out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// `alpha(G)`; zero for the graph without vertices.
    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets().iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// All maximal independent sets share one cardinality.
    pub fn is_unmixed(&self) -> bool {
        let sets = self.maximal_independent_sets();
        sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices.iter().filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        self.vertices.iter().filter(|&v| self.degree(v) == 1).collect()
    }

    fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier.iter().fold(VertexSet::EMPTY, |acc, u| acc | self.adj[u]) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            out.push(c);
            rest = rest - c;
        }
        out
    }

    /// True iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.order()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        for start in self.vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut stack = alloc::vec![start];
            seen = seen.with(start);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if !seen.contains(w) {
                        seen = seen.with(w);
                        if !side.contains(u) {
                            side = side.with(w);
                        }
                        stack.push(w);
                    } else if side.contains(w) == side.contains(u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Chordality by repeatedly removing a simplicial vertex.
    pub fn is_chordal(&self) -> bool {
        let mut rest = self.vertices;
        'outer: while !rest.is_empty() {
            for v in rest.iter() {
                let nb = self.adj[v] & rest;
                if nb.iter().all(|u| (nb.without(u)).is_subset(self.adj[u])) {
                    rest = rest.without(v);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// All 3-cliques `[a, b, c]` with `a < b < c`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in (self.adj[a] & self.adj[b]).iter().filter(|&c| c > b) {
                out.push([a, b, c]);
            }
        }
        out
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().into_iter().any(|(a, b)| self.adj[a].intersects(self.adj[b]))
    }

    /// Recognizes a whiskered graph: the non-leaves `C` and the leaves `L`
    /// have equal size, every leaf hangs off a member of `C`, and every member
    /// of `C` carries exactly one leaf. The single edge `K2` counts as the
    /// whiskering of one vertex.
    pub fn is_whiskered(&self) -> bool {
        if self.order() == 2 && self.edge_count() == 1 {
            return true;
        }
        if !self.isolated_vertices().is_empty() || self.order() == 0 {
            return false;
        }
        let leaves = self.leaves();
        let core = self.vertices - leaves;
        leaves.len() == core.len()
            && leaves.iter().all(|l| self.adj[l].is_subset(core))
            && core.iter().all(|c| (self.adj[c] & leaves).len() == 1)
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.is_connected() && self.vertices.iter().all(|v| self.degree(v) == 2)
    }

    pub fn predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            is_connected: self.is_connected(),
            is_tree: self.is_tree(),
            is_bipartite: self.is_bipartite(),
            is_chordal: self.is_chordal(),
            has_triangle: self.has_triangle(),
            is_whiskered: self.is_whiskered(),
            is_cycle: self.is_cycle(),
        }
    }

    /// The lexicographically first `(z, x, y, w)` such that `z-x-y-w` is an
    /// induced path and `z`, `w` have degree one in the whole graph.
    pub fn leaf_path3_witness(&self) -> Option<[usize; 4]> {
        let leaves = self.leaves();
        for z in leaves.iter() {
            let x = self.adj[z].first()?;
            for y in self.adj[x].iter() {
                if y == z {
                    continue;
                }
                for w in (self.adj[y] & leaves).iter() {
                    let path = [z, x, y, w];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| path[i] != path[j]));
                    let set = VertexSet::from_ids(path);
                    if distinct && self.restrict(set).edge_count() == 3 {
                        return Some(path);
                    }
                }
            }
        }
        None
    }
}

// Constructors for the graph families used throughout the crate.
impl Graph {
    /// Cycle `C_t` on `v0..v{t-1}`.
    pub fn cycle(t: usize) -> Result<Graph> {
        if !(3..=MAX_VERTICES).contains(&t) {
            return Err(Error::InvalidInput(format!("cycle length {t} must be in 3..=64")));
        }
        let edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
        Graph::unnamed(t, &edges)
    }

    /// Path with `k` edges on `v0..vk`.
    pub fn path_graph(k: usize) -> Result<Graph> {
        if k + 1 > MAX_VERTICES {
            return Err(Error::TooLarge { what: "path", size: k + 1, cap: MAX_VERTICES });
        }
        let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
        Graph::unnamed(k + 1, &edges)
    }

    /// `K_{m,n}` with sides `a1..am` and `b1..bn`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidInput(format!("K_{{{m},{n}}} needs both sides nonempty")));
        }
        let names = (1..=m).map(|i| format!("a{i}")).chain((1..=n).map(|j| format!("b{j}"))).collect();
        let edges: Vec<_> = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
        Graph::new(names, &edges)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::unnamed(n, &edges)
    }

    /// Adds one new pendant neighbor `y_v` to every vertex `v` of `g`.
    pub fn whisker(g: &Graph) -> Result<Graph> {
        let (g, _) = g.compact();
        let n = g.order();
        if 2 * n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "whiskered graph", size: 2 * n, cap: MAX_VERTICES });
        }
        let mut names: Vec<String> = g.names.clone();
        names.extend(g.names.iter().map(|s| format!("{s}'")));
        let mut edges = g.edges();
        edges.extend((0..n).map(|i| (i, n + i)));
        Graph::new(names, &edges)
    }

    /// Two adjacent centers `x0`, `y0`; `x0` carries arms `x1..xt` and `y0`
    /// carries arms `y1..ys`. Ids: `x0, y0, x1..xt, y1..ys`.
    pub fn double_star(s: usize, t: usize) -> Result<Graph> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidInput(format!("double star needs s, t >= 1 (got {s}, {t})")));
        }
        if s + t + 2 > MAX_VERTICES {
            return Err(Error::TooLarge { what: "double star", size: s + t + 2, cap: MAX_VERTICES });
        }
        let mut names = alloc::vec![String::from("x0"), String::from("y0")];
        names.extend((1..=t).map(|i| format!("x{i}")));
        names.extend((1..=s).map(|i| format!("y{i}")));
        let mut edges = alloc::vec![(0, 1)];
        edges.extend((0..t).map(|i| (0, 2 + i)));
        edges.extend((0..s).map(|i| (1, 2 + t + i)));
        Graph::new(names, &edges)
    }

    /// `K2` on `x, y`.
    pub fn single_edge() -> Graph {
        Graph::from_named_edges(&["x", "y"], &[("x", "y")]).expect("valid")
    }

    /// Triangle on `a, b, c`.
    pub fn triangle() -> Graph {
        Graph::from_named_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).expect("valid")
    }

    /// The path `z-x-y-w`, with ids in the order `x, y, z, w`.
    pub fn labeled_p3() -> Graph {
        Graph::from_named_edges(&["x", "y", "z", "w"], &[("z", "x"), ("x", "y"), ("y", "w")])
            .expect("valid")
    }

    /// Six-vertex graph with a triangle `x, y, z`, pendant `u` at `x` and the
    /// path `x-w-v`.
    pub fn stars_example() -> Graph {
        Graph::from_named_edges(
            &["x", "y", "z", "w", "u", "v"],
            &[("z", "x"), ("x", "y"), ("x", "w"), ("x", "u"), ("w", "v"), ("z", "y")],
        )
        .expect("valid")
    }
}
