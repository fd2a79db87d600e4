//! Exact rational homology of simplicial complexes and Hochster's formula for
//! the Betti numbers of moment-angle complexes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{Face, SimplicialComplex};
use crate::space::SphereMultiset;
use crate::{Error, Result};

/// Default limit on `m` for Hochster enumeration (`2^m` subsets).
pub const DEFAULT_HOCHSTER_CEILING: usize = 20;

/// Reduced Betti numbers `b̃_{-1}, b̃_0, b̃_1, ...` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedBetti {
    ranks: Vec<usize>,
}

impl ReducedBetti {
    /// `b̃_degree`, zero outside the stored range.
    pub fn get(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.ranks.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    /// Ranks indexed from degree `-1`.
    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }

    /// `Σ (-1)^i b̃_i` over `i >= -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Reduced Euler characteristic `Σ (-1)^i f_i` over `i >= -1`.
pub fn reduced_euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.f_vector()
        .iter()
        .enumerate()
        .map(|(idx, &f)| if idx % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Ranks of the augmented boundary maps `∂_i : C_i → C_{i-1}` for
/// `i = 0..=dim`, indexed by `i`.
pub fn boundary_ranks(k: &SimplicialComplex) -> Vec<usize> {
    let by_dim = faces_by_dim(k);
    (1..by_dim.len()).map(|d| rank(boundary_matrix(&by_dim[d - 1], &by_dim[d]))).collect()
}

/// Reduced Betti numbers of `k` with exact arithmetic.
///
/// The complex `{∅}` has `b̃_{-1} = 1`; any complex with a vertex has
/// `b̃_{-1} = 0`.
pub fn reduced_betti(k: &SimplicialComplex) -> ReducedBetti {
    let chain: Vec<usize> = k.f_vector();
    let ranks = boundary_ranks(k);
    // ranks[i] is the rank of ∂ out of chain index i + 1 (faces of size i + 1).
    let rank_out = |idx: usize| if idx == 0 { 0 } else { ranks[idx - 1] };
    let rank_in = |idx: usize| ranks.get(idx).copied().unwrap_or(0);
    let betti = (0..chain.len()).map(|idx| chain[idx] - rank_out(idx) - rank_in(idx)).collect();
    ReducedBetti { ranks: betti }
}

fn faces_by_dim(k: &SimplicialComplex) -> Vec<Vec<&Face>> {
    let mut out: Vec<Vec<&Face>> = vec![Vec::new(); (k.dim() + 2) as usize];
    for f in k.faces() {
        out[f.len()].push(f);
    }
    out
}

/// Rows indexed by `lower` faces, columns by `upper` faces. Both slices are in
/// the complex's canonical (sorted) order, so rows are found by binary search.
fn boundary_matrix(lower: &[&Face], upper: &[&Face]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, face) in upper.iter().enumerate() {
        for i in 0..face.len() {
            let mut g: Face = (*face).clone();
            g.remove(i);
            let row = lower.binary_search(&&g).expect("complex is downward closed");
            m[row][col] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Rank over the rationals by fraction-free row elimination, dividing each
/// updated row by the gcd of its entries to keep integers small.
fn rank(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        let p = prow[col];
        for row in tail.iter_mut() {
            let a = row[col];
            if a == 0 {
                continue;
            }
            let mut g = 0i64;
            for (x, &y) in row.iter_mut().zip(prow.iter()) {
                *x = x
                    .checked_mul(p)
                    .and_then(|u| y.checked_mul(a).and_then(|v| u.checked_sub(v)))
                    .expect("boundary elimination overflowed i64");
                g = gcd(g, *x);
            }
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Unreduced Betti numbers of a moment-angle complex, keyed by degree.
/// Only nonzero ranks are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    m: usize,
    ranks: BTreeMap<usize, u64>,
}

impl BettiTable {
    pub fn new(m: usize) -> Self {
        BettiTable { m, ranks: BTreeMap::new() }
    }

    /// Ground-set size of the source complex.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &BTreeMap<usize, u64> {
        &self.ranks
    }

    pub fn add(&mut self, degree: usize, rank: u64) {
        if rank > 0 {
            *self.ranks.entry(degree).or_insert(0) += rank;
        }
    }

    /// Adds the Hochster contribution of one full subcomplex `K_I`, `|I| = size`:
    /// `b̃_i(K_I)` lands in degree `i + |I| + 1`.
    pub fn add_subset(&mut self, size: usize, reduced: &ReducedBetti) {
        for (idx, &b) in reduced.as_slice().iter().enumerate() {
            self.add(idx + size, b as u64);
        }
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (&d, &r) in &other.ranks {
            self.add(d, r);
        }
    }
}

/// Checks the Hochster preconditions: no ghost vertices and `m <= ceiling`.
pub fn check_hochster_input(k: &SimplicialComplex, ceiling: usize) -> Result<()> {
    if let Some(&v) = k.ghosts().first() {
        return Err(Error::GhostVertex(v));
    }
    let m = k.ground_size();
    if m > ceiling || m > 63 {
        return Err(Error::TooManyVertices { m, ceiling: ceiling.min(63) });
    }
    Ok(())
}

/// Betti table of `Z_K` by Hochster's formula with the default ceiling.
pub fn hochster_zk_betti(k: &SimplicialComplex) -> Result<BettiTable> {
    hochster_zk_betti_with_ceiling(k, DEFAULT_HOCHSTER_CEILING)
}

/// `b_j(Z_K) = Σ_{I ⊆ [m]} b̃_{j-|I|-1}(K_I)`, enumerating all `2^m` subsets
/// serially. Reduced Betti numbers are memoized on the normalised face set of
/// `K_I`.
pub fn hochster_zk_betti_with_ceiling(k: &SimplicialComplex, ceiling: usize) -> Result<BettiTable> {
    check_hochster_input(k, ceiling)?;
    let m = k.ground_size();
    let mut memo: BTreeMap<SimplicialComplex, ReducedBetti> = BTreeMap::new();
    let mut table = BettiTable::new(m);
    for mask in 0u64..(1u64 << m) {
        let sub = k.full_subcomplex_mask(mask);
        let size = mask.count_ones() as usize;
        if let Some(rb) = memo.get(&sub) {
            table.add_subset(size, rb);
        } else {
            let rb = reduced_betti(&sub);
            table.add_subset(size, &rb);
            memo.insert(sub, rb);
        }
    }
    Ok(table)
}

/// Converts a Betti table of a connected `Z_K` into the multiset
/// `{d ↦ b_d : d >= 1}`.
pub fn table_to_spheres(table: &BettiTable) -> Result<SphereMultiset> {
    if table.get(0) != 1 {
        return Err(Error::Disconnected);
    }
    let mut out = SphereMultiset::new();
    for (&d, &r) in table.ranks().range(1..) {
        out.add(d as u32, r);
    }
    Ok(out)
}

/// The multiset of homology degrees of `Z_K` (degree ≥ 1, with
/// multiplicity). When `K` is a graph this determines the homology, since
/// full subcomplexes of graphs have free homology.
pub fn zk_sphere_multiset(k: &SimplicialComplex) -> Result<SphereMultiset> {
    table_to_spheres(&hochster_zk_betti(k)?)
}
