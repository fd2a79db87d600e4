//! Finite simplicial complexes on a labelled ground set, and the graph
//! families the decompositions consume.
//!
//! A complex stores every face explicitly (the empty face included). All
//! complexes in scope are graphs or full simplices, so the face set stays
//! small and explicit storage keeps every operation a direct set operation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A face is a strictly increasing list of vertex labels.
pub type Face = Vec<usize>;

/// A finite simplicial complex on the ground set `0..ground_size`.
///
/// Labels without a singleton face are ghost vertices. Equality is literal:
/// same ground set and same face set. Use [`SimplicialComplex::find_isomorphism`]
/// for equality up to relabelling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    ground_size: usize,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` on the ground set `0..ground_size`.
    ///
    /// Facets need not be maximal, sorted, or distinct. Repeated labels inside
    /// a facet are collapsed.
    pub fn from_facets<F: AsRef<[usize]>>(ground_size: usize, facets: &[F]) -> Result<Self> {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        for facet in facets {
            let mut f: Vec<usize> = facet.as_ref().to_vec();
            f.sort_unstable();
            f.dedup();
            if let Some(&label) = f.iter().find(|&&v| v >= ground_size) {
                return Err(Error::LabelOutOfRange { label, ground_size });
            }
            if faces.contains(&f) {
                continue;
            }
            insert_closure(&mut faces, &f);
        }
        Ok(SimplicialComplex { ground_size, faces })
    }

    fn from_faces_unchecked(ground_size: usize, faces: BTreeSet<Face>) -> Self {
        debug_assert!(faces.contains(&Vec::new()));
        SimplicialComplex { ground_size, faces }
    }

    /// The complex `{∅}` on `ground_size` ghost vertices.
    pub fn empty(ground_size: usize) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        SimplicialComplex { ground_size, faces }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// All faces in canonical order, the empty face first.
    pub fn faces(&self) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.faces.contains(face)
    }

    /// Faces with `dim + 1` vertices.
    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter().filter(move |f| f.len() == dim + 1)
    }

    /// Largest face size minus one; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    /// Labels carrying a singleton face.
    pub fn vertices(&self) -> Vec<usize> {
        self.faces.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect()
    }

    /// Labels of the ground set with no singleton face.
    pub fn ghosts(&self) -> Vec<usize> {
        (0..self.ground_size).filter(|&v| !self.faces.contains(&[v][..])).collect()
    }

    pub fn has_ghosts(&self) -> bool {
        self.faces.iter().filter(|f| f.len() == 1).count() < self.ground_size
    }

    /// Maximal faces in lexicographic order. `{∅}` has the single facet `[]`.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .faces
            .iter()
            .filter(|f| {
                (0..self.ground_size).all(|v| {
                    if f.binary_search(&v).is_ok() {
                        return true;
                    }
                    !self.faces.contains(&with_vertex(f, v))
                })
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    /// Face counts by dimension: `(f_{-1} = 1, f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2) as usize];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        counts
    }

    /// Checks downward closure, label range and presence of the empty face.
    pub fn is_valid(&self) -> bool {
        if !self.faces.contains(&Vec::new()) {
            return false;
        }
        self.faces.iter().all(|f| {
            f.windows(2).all(|w| w[0] < w[1])
                && f.iter().all(|&v| v < self.ground_size)
                && (0..f.len()).all(|i| {
                    let mut g = f.clone();
                    g.remove(i);
                    self.faces.contains(&g)
                })
        })
    }

    /// The full subcomplex on `vertices`, relabelled order-preservingly onto
    /// `0..|I|`. Ghost members of `I` stay ghosts.
    pub fn full_subcomplex(&self, vertices: &[usize]) -> Result<Self> {
        let mut set: Vec<usize> = vertices.to_vec();
        set.sort_unstable();
        set.dedup();
        if let Some(&label) = set.iter().find(|&&v| v >= self.ground_size) {
            return Err(Error::LabelOutOfRange { label, ground_size: self.ground_size });
        }
        let mut index = vec![usize::MAX; self.ground_size];
        for (i, &v) in set.iter().enumerate() {
            index[v] = i;
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.iter().all(|&v| index[v] != usize::MAX))
            .map(|f| f.iter().map(|&v| index[v]).collect())
            .collect();
        Ok(Self::from_faces_unchecked(set.len(), faces))
    }

    /// Full subcomplex on the vertex set encoded by the bits of `mask`.
    ///
    /// Bits at or above `ground_size` are ignored.
    pub fn full_subcomplex_mask(&self, mask: u64) -> Self {
        let mut index = [usize::MAX; 64];
        let mut size = 0;
        for (v, slot) in index.iter_mut().enumerate().take(self.ground_size.min(64)) {
            if mask >> v & 1 == 1 {
                *slot = size;
                size += 1;
            }
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.iter().all(|&v| v < 64 && index[v] != usize::MAX))
            .map(|f| f.iter().map(|&v| index[v]).collect())
            .collect();
        Self::from_faces_unchecked(size, faces)
    }

    /// Image of the complex under the vertex bijection `v ↦ perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_bijection(perm, self.ground_size)?;
        let faces = self
            .faces
            .iter()
            .map(|f| {
                let mut g: Vec<usize> = f.iter().map(|&v| perm[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Ok(Self::from_faces_unchecked(self.ground_size, faces))
    }

    /// True iff every minimal non-face has exactly two vertices, i.e. every set
    /// of pairwise adjacent vertices spans a face.
    pub fn is_flag(&self) -> bool {
        let vertices = self.vertices();
        for tau in self.faces.iter().filter(|f| f.len() >= 2) {
            let top = *tau.last().unwrap();
            for &v in vertices.iter().filter(|&&v| v > top) {
                let s = with_vertex(tau, v);
                if self.faces.contains(&s) {
                    continue;
                }
                let all_boundary = (0..s.len()).all(|i| {
                    let mut g = s.clone();
                    g.remove(i);
                    self.faces.contains(&g)
                });
                if all_boundary {
                    return false;
                }
            }
        }
        true
    }

    /// Searches for a vertex bijection `perm` with `self.relabel(perm) == *other`.
    ///
    /// Backtracking over vertices, pruned by per-vertex face-count signatures
    /// and by adjacency consistency. Intended for desk-scale complexes.
    pub fn find_isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        if self.ground_size != other.ground_size || self.f_vector() != other.f_vector() {
            return None;
        }
        let m = self.ground_size;
        let sig_a: Vec<Vec<usize>> = (0..m).map(|v| self.vertex_signature(v)).collect();
        let sig_b: Vec<Vec<usize>> = (0..m).map(|v| other.vertex_signature(v)).collect();
        {
            let mut a = sig_a.clone();
            let mut b = sig_b.clone();
            a.sort();
            b.sort();
            if a != b {
                return None;
            }
        }
        // Map high-degree vertices first; they constrain the search most.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&x, &y| sig_a[y].cmp(&sig_a[x]).then(x.cmp(&y)));
        let mut perm = vec![usize::MAX; m];
        let mut used = vec![false; m];
        let ctx = IsoSearch { a: self, b: other, sig_a: &sig_a, sig_b: &sig_b, order: &order };
        if ctx.extend(0, &mut perm, &mut used) {
            Some(perm)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.find_isomorphism(other).is_some()
    }

    fn vertex_signature(&self, v: usize) -> Vec<usize> {
        let mut sig = vec![0usize; (self.dim() + 2).max(1) as usize];
        for f in self.faces.iter().filter(|f| f.binary_search(&v).is_ok()) {
            sig[f.len() - 1] += 1;
        }
        sig
    }

    /// The 1-skeleton edges as ordered pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces_of_dim(1).map(|f| (f[0], f[1])).collect()
    }
}

struct IsoSearch<'a> {
    a: &'a SimplicialComplex,
    b: &'a SimplicialComplex,
    sig_a: &'a [Vec<usize>],
    sig_b: &'a [Vec<usize>],
    order: &'a [usize],
}

impl IsoSearch<'_> {
    fn extend(&self, depth: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return self.a.relabel(perm).map(|c| &c == self.b).unwrap_or(false);
        }
        let v = self.order[depth];
        for w in 0..perm.len() {
            if used[w] || self.sig_a[v] != self.sig_b[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let e_a = self.a.contains(&pair(u, v));
                let e_b = self.b.contains(&pair(perm[u], w));
                e_a == e_b
            });
            if !consistent {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            if self.extend(depth + 1, perm, used) {
                return true;
            }
            used[w] = false;
            perm[v] = usize::MAX;
        }
        false
    }
}

fn pair(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

fn with_vertex(face: &[usize], v: usize) -> Face {
    let mut g = face.to_vec();
    let pos = g.binary_search(&v).unwrap_or_else(|p| p);
    g.insert(pos, v);
    g
}

fn insert_closure(faces: &mut BTreeSet<Face>, facet: &[usize]) {
    let k = facet.len();
    for mask in 0u64..(1u64 << k) {
        let sub: Face = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
        faces.insert(sub);
    }
}

pub(crate) fn check_bijection(perm: &[usize], size: usize) -> Result<()> {
    if perm.len() != size {
        return Err(Error::NotABijection);
    }
    let mut seen = vec![false; size];
    for &p in perm {
        if p >= size || seen[p] {
            return Err(Error::NotABijection);
        }
        seen[p] = true;
    }
    Ok(())
}

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

/// Path of length `l`: vertices `0..=l`, edges `{i, i+1}`.
pub fn path_graph(l: usize) -> Result<SimplicialComplex> {
    if l == 0 {
        return Err(invalid(format!("path length must be at least 1, got {l}")));
    }
    let edges: Vec<[usize; 2]> = (0..l).map(|i| [i, i + 1]).collect();
    SimplicialComplex::from_facets(l + 1, &edges)
}

/// Cycle of length `len` on vertices `0..len`.
pub fn cycle_graph(len: usize) -> Result<SimplicialComplex> {
    if len < 3 {
        return Err(invalid(format!("cycle length must be at least 3, got {len}")));
    }
    let edges: Vec<[usize; 2]> = (0..len).map(|i| [i, (i + 1) % len]).collect();
    SimplicialComplex::from_facets(len, &edges)
}

/// `n` isolated vertices.
pub fn disjoint_points(n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(invalid("need at least one point".into()));
    }
    let points: Vec<[usize; 1]> = (0..n).map(|i| [i]).collect();
    SimplicialComplex::from_facets(n, &points)
}

/// The full simplex `Δ^k` on `k + 1` vertices.
pub fn simplex(k: usize) -> Result<SimplicialComplex> {
    if k >= 24 {
        return Err(invalid(format!("simplex dimension {k} is too large to store explicitly")));
    }
    let facet: Vec<usize> = (0..=k).collect();
    SimplicialComplex::from_facets(k + 1, &[facet])
}

/// Generalised book graph `B(n, l, p)`: `p` cycles of length `l` sharing a
/// common path of length `n`.
///
/// Built by iterated gluing of `C_l` along the path on `0..=n`, so the shared
/// path carries labels `0..=n` and each later page appends its `l - n - 1`
/// free vertices.
pub fn book_graph(n: usize, l: usize, p: usize) -> Result<SimplicialComplex> {
    if l < 3 || n < 1 || n + 2 > l || p < 2 {
        return Err(invalid(format!(
            "book graph needs 1 <= n <= l-2, l >= 3, p >= 2; got ({n}, {l}, {p})"
        )));
    }
    let base = cycle_graph(l)?;
    let spine: Vec<usize> = (0..=n).collect();
    glue(&GluingSpec::symmetric(base, &spine, p)?)
}

/// Planar form of `B(l, 2l, p)`: `p + 1` paths of length `l` sharing their
/// endpoints.
///
/// The endpoints are `0` and `1`; path `i` (for `i` in `0..=p`) has interior
/// vertices `2 + i(l-1) .. 2 + (i+1)(l-1)` in order from endpoint `0`.
pub fn planar_book(l: usize, p: usize) -> Result<SimplicialComplex> {
    if l < 2 || p < 2 {
        return Err(invalid(format!("planar book needs l >= 2, p >= 2; got ({l}, {p})")));
    }
    let inner = l - 1;
    let m = 2 + (p + 1) * inner;
    let mut edges = Vec::with_capacity((p + 1) * l);
    for i in 0..=p {
        let first = 2 + i * inner;
        let mut prev = 0;
        for j in 0..inner {
            edges.push([prev, first + j]);
            prev = first + j;
        }
        edges.push([prev, 1]);
    }
    SimplicialComplex::from_facets(m, &edges)
}

/// Data for the iterated pushout `M_n`: `copies` copies of `base`, copy
/// `j + 1` attached to copy `j` by gluing the copy of `sub_b` in copy `j` to
/// the copy of `sub_a` in copy `j + 1` through `psi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    base: SimplicialComplex,
    sub_a: Vec<usize>,
    sub_b: Vec<usize>,
    psi: Vec<usize>,
    copies: usize,
    phi: Vec<Vec<usize>>,
}

impl GluingSpec {
    pub fn new(
        base: SimplicialComplex,
        sub_a: &[usize],
        sub_b: &[usize],
        psi: Vec<usize>,
        copies: usize,
    ) -> Result<Self> {
        let m = base.ground_size();
        let phi = (1..copies).map(|_| (0..m).collect()).collect();
        let spec = GluingSpec {
            sub_a: normalise_set(sub_a),
            sub_b: normalise_set(sub_b),
            base,
            psi,
            copies,
            phi,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `L_1 = L_2 = sub` with `ψ` and every `φ` the identity.
    pub fn symmetric(base: SimplicialComplex, sub: &[usize], copies: usize) -> Result<Self> {
        let psi = (0..base.ground_size()).collect();
        Self::new(base, sub, sub, psi, copies)
    }

    /// Replaces the identifications `φ_{1,j}` for `j = 2..=copies`.
    pub fn with_phi(mut self, phi: Vec<Vec<usize>>) -> Result<Self> {
        self.phi = phi;
        self.validate()?;
        Ok(self)
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn sub_a(&self) -> &[usize] {
        &self.sub_a
    }

    pub fn sub_b(&self) -> &[usize] {
        &self.sub_b
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn phi(&self) -> &[Vec<usize>] {
        &self.phi
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.base.ground_size();
        if self.copies < 2 {
            return Err(invalid(format!("need at least 2 copies, got {}", self.copies)));
        }
        for &v in self.sub_a.iter().chain(&self.sub_b) {
            if v >= m {
                return Err(Error::LabelOutOfRange { label: v, ground_size: m });
            }
        }
        if self.base.relabel(&self.psi).map_err(|_| Error::NotAnAutomorphism)? != self.base {
            return Err(Error::NotAnAutomorphism);
        }
        let image = |set: &[usize]| normalise_set(&set.iter().map(|&v| self.psi[v]).collect::<Vec<_>>());
        if image(&self.sub_a) != self.sub_b || image(&self.sub_b) != self.sub_a {
            return Err(Error::SubcomplexMismatch);
        }
        if self.phi.len() != self.copies - 1 {
            return Err(invalid(format!(
                "expected {} copy identifications, got {}",
                self.copies - 1,
                self.phi.len()
            )));
        }
        for phi in &self.phi {
            check_bijection(phi, m)?;
        }
        Ok(())
    }
}

fn normalise_set(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Builds `M_n` by `copies - 1` iterated pushouts.
///
/// Copy 1 keeps the base labels. Each later copy reuses the labels of the
/// vertices it is glued along and appends fresh labels for the rest in
/// ascending base order. In base coordinates the attaching map
/// `φ_{1,j+1} ∘ ψ ∘ φ_{1,j}⁻¹` is `ψ` itself, so the result does not depend
/// on the `φ` (they are still validated).
pub fn glue(spec: &GluingSpec) -> Result<SimplicialComplex> {
    spec.validate()?;
    let m = spec.base.ground_size();
    let mut psi_inv = vec![0; m];
    for (v, &w) in spec.psi.iter().enumerate() {
        psi_inv[w] = v;
    }
    let mut prev: Vec<usize> = (0..m).collect();
    let mut next = m;
    let mut faces = spec.base.faces.clone();
    for _ in 1..spec.copies {
        let mut cur = vec![usize::MAX; m];
        for &b in &spec.sub_a {
            cur[b] = prev[psi_inv[b]];
        }
        for slot in cur.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        for f in &spec.base.faces {
            let mut g: Face = f.iter().map(|&v| cur[v]).collect();
            g.sort_unstable();
            faces.insert(g);
        }
        prev = cur;
    }
    Ok(SimplicialComplex::from_faces_unchecked(next, faces))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(k: &SimplicialComplex) -> Vec<(usize, usize)> {
        k.edges()
    }

    #[test]
    fn from_facets_closes_downward() {
        let c4 = SimplicialComplex::from_facets(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        assert_eq!(c4, cycle_graph(4).unwrap());
        assert_eq!(c4.f_vector(), vec![1, 4, 4]);

        let d2 = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        assert_eq!(d2.num_faces(), 8);
        assert!(d2.is_valid());

        let ghost = SimplicialComplex::from_facets(3, &[vec![0], vec![2]]).unwrap();
        assert_eq!(ghost.ghosts(), vec![1]);
        assert!(ghost.has_ghosts());
    }

    #[test]
    fn from_facets_rejects_out_of_range_and_dedups() {
        assert_eq!(
            SimplicialComplex::from_facets(2, &[[0, 2]]),
            Err(Error::LabelOutOfRange { label: 2, ground_size: 2 })
        );
        let k = SimplicialComplex::from_facets(3, &[vec![1, 0], vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(k.facets(), vec![vec![0, 1]]);
        assert_eq!(k.ghosts(), vec![2]);
    }

    #[test]
    fn path_cycle_points_simplex() {
        let p4 = path_graph(4).unwrap();
        assert_eq!(p4.f_vector(), vec![1, 5, 4]);
        assert_eq!(path_graph(1).unwrap().facets(), vec![vec![0, 1]]);
        assert_eq!(edge_set(&path_graph(2).unwrap()), vec![(0, 1), (1, 2)]);
        assert!(path_graph(0).is_err());

        assert_eq!(cycle_graph(3).unwrap().f_vector(), vec![1, 3, 3]);
        assert_eq!(cycle_graph(5).unwrap().f_vector(), vec![1, 5, 5]);
        assert!(cycle_graph(2).is_err());

        assert_eq!(disjoint_points(2).unwrap().num_faces(), 3);
        assert_eq!(disjoint_points(1).unwrap().f_vector(), vec![1, 1]);
        assert!(disjoint_points(0).is_err());

        assert_eq!(simplex(0).unwrap().f_vector(), vec![1, 1]);
        assert_eq!(simplex(1).unwrap().f_vector(), vec![1, 2, 1]);
        assert_eq!(simplex(2).unwrap().num_faces(), 8);
        assert_eq!(simplex(2).unwrap().f_vector(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn book_graph_small_cases() {
        let b132 = book_graph(1, 3, 2).unwrap();
        assert_eq!(b132.f_vector(), vec![1, 4, 5]);
        // The figure's labels 1..4 shifted to 0..3.
        let drawn =
            SimplicialComplex::from_facets(4, &[[0, 1], [0, 2], [1, 2], [1, 3], [2, 3]]).unwrap();
        assert!(b132.is_isomorphic(&drawn));

        assert_eq!(book_graph(1, 3, 3).unwrap().f_vector(), vec![1, 5, 7]);

        let b242 = book_graph(2, 4, 2).unwrap();
        assert_eq!(b242.f_vector(), vec![1, 5, 6]);
        let k23 = SimplicialComplex::from_facets(
            5,
            &[[0, 2], [0, 3], [0, 4], [1, 2], [1, 3], [1, 4]],
        )
        .unwrap();
        assert!(b242.is_isomorphic(&k23));

        assert!(book_graph(0, 3, 2).is_err());
        assert!(book_graph(2, 3, 2).is_err());
        assert!(book_graph(1, 3, 1).is_err());
    }

    #[test]
    fn planar_book_small_cases() {
        let pb = planar_book(2, 4).unwrap();
        assert_eq!(pb.f_vector(), vec![1, 7, 10]);
        let pb22 = planar_book(2, 2).unwrap();
        assert_eq!(pb22.f_vector(), vec![1, 5, 6]);
        assert!(pb22.is_isomorphic(&book_graph(2, 4, 2).unwrap()));
        assert_eq!(planar_book(3, 2).unwrap().f_vector(), vec![1, 8, 9]);
        assert!(planar_book(1, 2).is_err());
        assert!(planar_book(2, 1).is_err());
    }

    #[test]
    fn full_subcomplex_cases() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.full_subcomplex(&[0, 2]).unwrap(), disjoint_points(2).unwrap());
        assert_eq!(c4.full_subcomplex(&[0, 1, 2, 3]).unwrap(), c4);
        let p2 = path_graph(2).unwrap();
        assert_eq!(p2.full_subcomplex(&[2, 0]).unwrap(), disjoint_points(2).unwrap());
        assert!(p2.full_subcomplex(&[3]).is_err());
        assert_eq!(c4.full_subcomplex_mask(0b0101), disjoint_points(2).unwrap());

        let ghost = SimplicialComplex::from_facets(3, &[vec![0], vec![2]]).unwrap();
        assert_eq!(ghost.full_subcomplex(&[1, 2]).unwrap().ghosts(), vec![0]);
    }

    #[test]
    fn glue_reproduces_families() {
        for p in 2..=4 {
            let planar = planar_book(3, p).unwrap();
            let spec = GluingSpec::symmetric(path_graph(3).unwrap(), &[0, 3], p + 1).unwrap();
            let glued = glue(&spec).unwrap();
            assert_eq!(glued.ground_size(), planar.ground_size());
            assert!(glued.is_isomorphic(&planar));
        }
    }

    #[test]
    fn glue_edges_along_an_endpoint() {
        let edge = simplex(1).unwrap();
        // Gluing the far endpoint of one copy to the near endpoint of the next.
        for n in 2..=5 {
            let spec = GluingSpec::new(edge.clone(), &[0], &[1], vec![1, 0], n).unwrap();
            let glued = glue(&spec).unwrap();
            assert!(glued.is_isomorphic(&path_graph(n).unwrap()), "n = {n}");
        }
        // Gluing every copy along the same endpoint gives a star instead.
        let star = glue(&GluingSpec::symmetric(edge, &[0], 3).unwrap()).unwrap();
        assert_eq!(star.f_vector(), vec![1, 4, 3]);
        assert!(!star.is_isomorphic(&path_graph(3).unwrap()));
    }

    #[test]
    fn gluing_spec_validation() {
        let p2 = path_graph(2).unwrap();
        assert_eq!(
            GluingSpec::new(p2.clone(), &[0], &[0], vec![1, 0, 2], 2),
            Err(Error::NotAnAutomorphism)
        );
        assert_eq!(
            GluingSpec::new(p2.clone(), &[0], &[1], vec![0, 1, 2], 2),
            Err(Error::SubcomplexMismatch)
        );
        assert_eq!(
            GluingSpec::new(p2.clone(), &[0], &[2], vec![2, 1, 0], 2).map(|s| s.copies()),
            Ok(2)
        );
        assert!(GluingSpec::symmetric(p2.clone(), &[0], 1).is_err());
        let spec = GluingSpec::symmetric(p2, &[0, 2], 3).unwrap();
        assert_eq!(spec.clone().with_phi(vec![vec![0, 0, 1], vec![0, 1, 2]]), Err(Error::NotABijection));
        let swapped = spec.with_phi(vec![vec![2, 1, 0], vec![0, 1, 2]]).unwrap();
        assert!(glue(&swapped).unwrap().is_isomorphic(&planar_book(2, 2).unwrap()));
    }

    #[test]
    fn flag_detection() {
        assert!(!book_graph(1, 3, 2).unwrap().is_flag());
        assert!(!cycle_graph(3).unwrap().is_flag());
        assert!(planar_book(2, 2).unwrap().is_flag());
        assert!(simplex(2).unwrap().is_flag());
        assert!(cycle_graph(4).unwrap().is_flag());
        let hollow = SimplicialComplex::from_facets(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert!(!hollow.is_flag());
    }

    #[test]
    fn relabel_cases() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.relabel(&[1, 2, 3, 0]).unwrap(), c4);
        let p2 = path_graph(2).unwrap();
        assert_eq!(p2.relabel(&[2, 1, 0]).unwrap(), p2);
        let swapped = p2.relabel(&[0, 2, 1]).unwrap();
        assert_eq!(swapped.facets(), vec![vec![0, 2], vec![1, 2]]);
        assert_ne!(swapped, p2);
        assert_eq!(p2.relabel(&[0, 0, 1]), Err(Error::NotABijection));
        assert_eq!(p2.relabel(&[0, 1]), Err(Error::NotABijection));
    }

    #[test]
    fn isomorphism_search_rejects_non_isomorphic() {
        let p3 = path_graph(3).unwrap();
        let star = SimplicialComplex::from_facets(4, &[[0, 1], [0, 2], [0, 3]]).unwrap();
        assert!(!p3.is_isomorphic(&star));
        let perm = p3.find_isomorphism(&p3.relabel(&[3, 1, 0, 2]).unwrap()).unwrap();
        assert_eq!(p3.relabel(&perm).unwrap(), p3.relabel(&[3, 1, 0, 2]).unwrap());
    }

    #[test]
    fn facets_of_void_like_complex() {
        let k = SimplicialComplex::empty(2);
        assert_eq!(k.facets(), vec![Vec::<usize>::new()]);
        assert_eq!(k.dim(), -1);
        assert_eq!(k.f_vector(), vec![1]);
    }
}
