//! Reduced simplicial homology over a prime field.
//!
//! Chain groups are indexed by face size: size `k` faces span the
//! `(k-1)`-chains, and the empty face spans the `(-1)`-chains, which gives
//! reduced homology. Boundary signs follow the increasing order of vertex
//! ids: `∂[v_0..v_k] = Σ (-1)^j [v_0..v̂_j..v_k]`.
//!
//! Ranks are computed by sparse column reduction mod `p`. A dense
//! eliminator (bit-packed rows for `p = 2`) is kept as an independent check.

use alloc::format;
use alloc::vec::Vec;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec { p: 2 };
    pub const GF3: FieldSpec = FieldSpec { p: 3 };

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("characteristic {p} is not prime")));
        }
        Ok(FieldSpec { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn inv(self, a: u32) -> u32 {
        // a^(p-2)
        let (mut base, mut exp, mut acc) = (a as u64, self.p as u64 - 2, 1u64);
        let p = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced Betti numbers `b̃_{-1}, b̃_0, ..., b̃_dim` over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    /// Entry `k` is `b̃_{k-1}`.
    pub reduced_betti: Vec<usize>,
}

impl HomologyProfile {
    /// `b̃_i`, zero outside the stored range.
    pub fn betti(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.reduced_betti.get(k).copied()).unwrap_or(0)
    }

    /// Degrees with nonzero reduced homology, ascending.
    pub fn nonzero_degrees(&self) -> impl Iterator<Item = isize> + '_ {
        self.reduced_betti.iter().enumerate().filter(|(_, &b)| b != 0).map(|(k, _)| k as isize - 1)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced_betti.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^i b̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.reduced_betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Reduced Euler characteristic from face counts: `Σ (-1)^i f_i`, `i ≥ -1`.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Sparse column: `(row, coefficient)` with increasing rows and nonzero
/// coefficients.
pub type SparseColumn = Vec<(u32, u32)>;

/// The boundary map from `i`-chains to `(i-1)`-chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub field: FieldSpec,
    /// `(i-1)`-faces, sorted by raw mask.
    pub rows: Vec<Face>,
    /// `i`-faces, sorted by raw mask.
    pub cols: Vec<Face>,
    pub columns: Vec<SparseColumn>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut m = alloc::vec![alloc::vec![0u32; self.cols.len()]; self.rows.len()];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r as usize][c] = v;
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        sparse_rank(self.columns.clone(), self.rows.len(), self.field)
    }
}

fn boundary_columns(lower: &[Face], upper: &[Face], field: FieldSpec) -> Vec<SparseColumn> {
    upper
        .iter()
        .map(|&face| {
            let mut col: SparseColumn = face
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let row = lower.binary_search(&face.without(v)).expect("boundary face present");
                    let sign = if j % 2 == 0 { 1 } else { field.neg(1) };
                    (row as u32, sign)
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

/// `∂_i` for `-1 ≤ i ≤ dim Γ`. `∂_{-1}` has no rows; `∂_0` is the
/// augmentation row of ones.
pub fn boundary_matrix(complex: &SimplicialComplex, i: isize, field: FieldSpec) -> Result<BoundaryMatrix> {
    let dim = complex.dimension();
    if i < -1 || i > dim {
        return Err(Error::InvalidInput(format!("boundary degree {i} outside -1..={dim}")));
    }
    let groups = complex.faces_by_size();
    let k = (i + 1) as usize;
    let cols = groups[k].clone();
    let rows = if k == 0 { Vec::new() } else { groups[k - 1].clone() };
    let columns = if k == 0 {
        alloc::vec![Vec::new(); cols.len()]
    } else {
        boundary_columns(&rows, &cols, field)
    };
    Ok(BoundaryMatrix { field, rows, cols, columns })
}

/// Selects the elimination routine behind [`reduced_betti_numbers_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankEngine {
    Sparse,
    Dense,
}

/// Reduced Betti numbers of `complex` over `field`.
pub fn reduced_betti_numbers(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    reduced_betti_numbers_with(complex, field, RankEngine::Sparse)
}

pub fn reduced_betti_numbers_with(
    complex: &SimplicialComplex,
    field: FieldSpec,
    engine: RankEngine,
) -> HomologyProfile {
    let groups = complex.faces_by_size();
    let top = groups.len();
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces.
    let mut ranks = alloc::vec![0usize; top + 1];
    for k in 1..top {
        let columns = boundary_columns(&groups[k - 1], &groups[k], field);
        ranks[k] = match engine {
            RankEngine::Sparse => sparse_rank(columns, groups[k - 1].len(), field),
            RankEngine::Dense => dense_rank(&columns, groups[k - 1].len(), field),
        };
    }
    let reduced_betti = (0..top).map(|k| groups[k].len() - ranks[k] - ranks[k + 1]).collect();
    HomologyProfile { field, reduced_betti }
}

/// Rank by column reduction: each column is reduced against earlier pivot
/// columns until its lowest row is new or it vanishes.
pub fn sparse_rank(columns: Vec<SparseColumn>, nrows: usize, field: FieldSpec) -> usize {
    let mut owner: Vec<u32> = alloc::vec![u32::MAX; nrows];
    let mut pivots: Vec<SparseColumn> = Vec::new();
    let mut scratch: SparseColumn = Vec::new();
    for mut col in columns {
        while let Some(&(low, val)) = col.last() {
            let o = owner[low as usize];
            if o == u32::MAX {
                let inv = field.inv(val);
                if inv != 1 {
                    col.iter_mut().for_each(|e| e.1 = field.mul(e.1, inv));
                }
                owner[low as usize] = pivots.len() as u32;
                pivots.push(col);
                break;
            }
            // pivot columns are normalized, so subtract val * pivot
            axpy_into(&col, &pivots[o as usize], val, field, &mut scratch);
            core::mem::swap(&mut col, &mut scratch);
        }
    }
    pivots.len()
}

// out = a - factor * b
fn axpy_into(a: &[(u32, u32)], b: &[(u32, u32)], factor: u32, field: FieldSpec, out: &mut SparseColumn) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |e| e.0);
        let rb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i]);
            i += 1;
        } else if rb < ra {
            let v = field.neg(field.mul(factor, b[j].1));
            if v != 0 {
                out.push((rb, v));
            }
            j += 1;
        } else {
            let v = field.sub(a[i].1, field.mul(factor, b[j].1));
            if v != 0 {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
}

/// Rank by dense Gaussian elimination on rows.
pub fn dense_rank(columns: &[SparseColumn], nrows: usize, field: FieldSpec) -> usize {
    let ncols = columns.len();
    if field.characteristic() == 2 {
        let words = ncols.div_ceil(64).max(1);
        let mut rows = alloc::vec![alloc::vec![0u64; words]; nrows];
        for (c, col) in columns.iter().enumerate() {
            for &(r, v) in col {
                if v % 2 == 1 {
                    rows[r as usize][c / 64] ^= 1u64 << (c % 64);
                }
            }
        }
        let mut rank = 0;
        for c in 0..ncols {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..nrows).find(|&r| rows[r][w] & bit != 0) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] & bit != 0 {
                    row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= *y);
                }
            }
            rank += 1;
        }
        rank
    } else {
        let mut m = alloc::vec![alloc::vec![0u32; ncols]; nrows];
        for (c, col) in columns.iter().enumerate() {
            for &(r, v) in col {
                m[r as usize][c] = v % field.characteristic();
            }
        }
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, p);
            let inv = field.inv(m[rank][c]);
            for x in m[rank].iter_mut() {
                *x = field.mul(*x, inv);
            }
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[c] != 0 {
                    let f = row[c];
                    row.iter_mut().zip(&pivot).for_each(|(x, y)| *x = field.sub(*x, field.mul(f, *y)));
                }
            }
            rank += 1;
        }
        rank
    }
}
