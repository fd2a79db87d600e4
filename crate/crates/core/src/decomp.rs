//! Loop-space decompositions of polyhedral products.
//!
//! Every builder returns a [`DecompResult`]: the total loop space as a
//! normalized term, the named factors it is a product of, sphere tables for
//! the factors that are wedges of spheres, the Poincaré series when every
//! atom is declared, and the list of splitting steps used.
//!
//! The loop of the base space is described by a [`LoopModel`]. With
//! [`LoopModel::Circles`] the base space is `CP^∞`, so `ΩX = S^1` and the
//! polyhedral product `(X, *)^K` is the Davis–Januszkiewicz space `DJ_K`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{path_graph, planar_book, GluingSpec};
use crate::series::{strip_circles, TruncSeries};
use crate::space::{normalize, poincare_series, sphere_multiset_of, Atom, SpaceExpr, SphereMultiset};
use crate::{Error, Result};

/// How `ΩX` is represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopModel {
    /// `X = CP^∞`, `ΩX = S^1`.
    Circles,
    /// `X` kept as the given term; `ΩX` stays a symbolic loop.
    Symbolic(SpaceExpr),
}

impl LoopModel {
    /// The term for `X`.
    pub fn space(&self) -> SpaceExpr {
        match self {
            LoopModel::Circles => SpaceExpr::atom(Atom::cp_infinity()),
            LoopModel::Symbolic(x) => x.clone(),
        }
    }

    /// The term for `ΩX`.
    pub fn loop_space(&self) -> SpaceExpr {
        match self {
            LoopModel::Circles => SpaceExpr::circle(),
            LoopModel::Symbolic(x) => SpaceExpr::loop_of(x.clone()),
        }
    }
}

/// A splitting step recorded in the provenance of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `Ω(X,*)^K ≃ ∏ ΩX × Ω(CΩX, ΩX)^K`.
    ConeLoopSplit,
    /// `(CX, X)^{P_l} ≃ (CX, X)^{V_l}`.
    PathDisjointPoints,
    /// `(CX, X)^{V_l}` as a wedge of suspended smashes of loops.
    PorterWedge,
    /// `ΩP_n ≃ ΩX × Ω(⋁^{n-1} ΣF)` for the fold map.
    FoldMap,
    /// The fold decomposition for an iterated pushout of polyhedral products.
    PolyhedralFold,
    /// Endpoint fibre of a path of length 2 as a join.
    EndpointJoin,
    /// Endpoint fibre of a longer path through the inclusion fibre.
    EndpointFibre,
    /// `Σ(X × Y) ≃ ΣX ∨ ΣY ∨ Σ(X ∧ Y)`.
    SuspensionSplitting,
    /// `C ⋊ B ≃ C ∨ (C ∧ B)` for a suspension `C`.
    HalfSmashSplit,
    /// `ΣΩΣX ≃ ⋁ ΣX^{∧n}`.
    James,
    /// Assembly of the book-graph decomposition.
    BookGraph,
    /// Total series divided by `(1 + t)^m` with non-negative quotient.
    CircleWitness,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::ConeLoopSplit => "cone-loop-split",
            Step::PathDisjointPoints => "path-disjoint-points",
            Step::PorterWedge => "porter-wedge",
            Step::FoldMap => "fold-map",
            Step::PolyhedralFold => "polyhedral-fold",
            Step::EndpointJoin => "endpoint-join",
            Step::EndpointFibre => "endpoint-fibre",
            Step::SuspensionSplitting => "suspension-splitting",
            Step::HalfSmashSplit => "half-smash-split",
            Step::James => "james",
            Step::BookGraph => "book-graph",
            Step::CircleWitness => "circle-witness",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A loop space written as a product of named factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompResult {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    /// Normal form of the product of the factors.
    pub total: SpaceExpr,
    pub factors: Vec<(String, SpaceExpr)>,
    /// Sphere tables, keyed like the factors they describe.
    pub spheres: Vec<(String, SphereMultiset)>,
    /// `None` when the total involves atoms without declared series.
    pub series: Option<TruncSeries>,
    /// `(m, series / (1+t)^m)` when the circle count was checked.
    pub circle_witness: Option<(usize, TruncSeries)>,
    pub provenance: Vec<Step>,
}

impl DecompResult {
    fn assemble(
        family: impl Into<String>,
        factors: Vec<(String, SpaceExpr)>,
        provenance: Vec<Step>,
        n: usize,
    ) -> Result<Self> {
        let total = normalize(&SpaceExpr::Prod(factors.iter().map(|(_, e)| e.clone()).collect()));
        let series = optional_series(&total, n)?;
        Ok(DecompResult {
            family: family.into(),
            params: BTreeMap::new(),
            total,
            factors,
            spheres: Vec::new(),
            series,
            circle_witness: None,
            provenance,
        })
    }

    fn with_param(mut self, key: &str, value: usize) -> Self {
        self.params.insert(key.to_string(), value as u64);
        self
    }

    pub fn factor(&self, name: &str) -> Option<&SpaceExpr> {
        self.factors.iter().find(|(k, _)| k == name).map(|(_, e)| e)
    }

    pub fn spheres_of(&self, name: &str) -> Option<&SphereMultiset> {
        self.spheres.iter().find(|(k, _)| k == name).map(|(_, s)| s)
    }

    /// Number of summands of the wedge `W` in the factor `fibre = ΩW`, if
    /// that factor exists and is literally a loop on a wedge.
    pub fn fibre_wedge_len(&self) -> Option<usize> {
        match self.factor("fibre")? {
            SpaceExpr::Loop(w) => match &**w {
                SpaceExpr::Wedge(xs) => Some(xs.len()),
                _ => Some(1),
            },
            _ => None,
        }
    }

    /// Checks that the series of the total equals the product of the factor
    /// series to degree `n`. `Ok(false)` is a genuine mismatch.
    pub fn check_factorisation(&self, n: usize) -> Result<bool> {
        let total = poincare_series(&self.total, n)?;
        let mut product = TruncSeries::one(n);
        for (_, f) in &self.factors {
            product = product.mul(&poincare_series(f, n)?)?;
        }
        Ok(total == product)
    }

    /// Divides the total series by `(1+t)^m` and records the quotient.
    fn witness_circles(mut self, m: usize) -> Result<Self> {
        if let Some(s) = &self.series {
            self.circle_witness = Some((m, strip_circles(s, m)?));
            self.provenance.push(Step::CircleWitness);
        }
        Ok(self)
    }
}

fn optional_series(e: &SpaceExpr, n: usize) -> Result<Option<TruncSeries>> {
    match poincare_series(e, n) {
        Ok(s) => Ok(Some(s)),
        Err(Error::UndeclaredAtom(_)) => Ok(None),
        Err(err) => Err(err),
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `ΩP_n ≃ ΩX × Ω(⋁^{n-1} ΣF)` for `n` copies of `X` glued along a point.
pub fn fold_decompose(copies: usize, x: &SpaceExpr, fibre: &SpaceExpr, n: usize) -> Result<DecompResult> {
    if copies < 2 {
        return Err(invalid(format!("fold needs at least 2 copies, got {copies}")));
    }
    let wedge = SpaceExpr::wedge_power(&SpaceExpr::susp(fibre.clone()), copies - 1);
    let factors = vec![
        ("base".to_string(), SpaceExpr::loop_of(x.clone())),
        ("fibre".to_string(), SpaceExpr::loop_of(wedge)),
    ];
    Ok(DecompResult::assemble("fold", factors, vec![Step::FoldMap], n)?.with_param("n", copies))
}

/// `Ω(X ∨ ⋯ ∨ X) ≃ ∏_{i=0}^{copies-1} Ω(ΣΩ)^i X`, one fold per wedge summand.
pub fn fold_iterated(copies: usize, x: &SpaceExpr, n: usize) -> Result<DecompResult> {
    if copies < 1 {
        return Err(invalid("iterated fold needs at least 1 copy".into()));
    }
    let mut factors = Vec::with_capacity(copies);
    let mut y = x.clone();
    for i in 0..copies {
        factors.push((format!("level{i}"), SpaceExpr::loop_of(y.clone())));
        y = SpaceExpr::susp(SpaceExpr::loop_of(y));
    }
    let steps = vec![Step::FoldMap; copies - 1];
    Ok(DecompResult::assemble("fold-iterated", factors, steps, n)?.with_param("n", copies))
}

/// `Ω(X,*)^{M_n} ≃ Ω(X,*)^{K_1} × Ω(⋁^{n-1} ΣG)` for the gluing `spec`.
///
/// `base_loop` is the term used for `Ω(X,*)^{K_1}`, for instance the total
/// of a [`cone_loop_split`]; `fibre_g` is the fibre `G` of the inclusion of
/// the glued subcomplex.
pub fn poly_fold_decompose(
    spec: &GluingSpec,
    base_loop: &SpaceExpr,
    fibre_g: &SpaceExpr,
    n: usize,
) -> Result<DecompResult> {
    spec.validate()?;
    let copies = spec.copies();
    let wedge = SpaceExpr::wedge_power(&SpaceExpr::susp(fibre_g.clone()), copies - 1);
    let factors = vec![
        ("base".to_string(), base_loop.clone()),
        ("fibre".to_string(), SpaceExpr::loop_of(wedge)),
    ];
    Ok(DecompResult::assemble("polyhedral-fold", factors, vec![Step::PolyhedralFold], n)?
        .with_param("copies", copies))
}

/// `Ω(X,*)^K ≃ (ΩX)^m × Ω(CΩX, ΩX)^K` with `zk` standing for the second
/// polyhedral product.
pub fn cone_loop_split(m: usize, model: &LoopModel, zk: &SpaceExpr, n: usize) -> Result<DecompResult> {
    if m < 1 {
        return Err(invalid("cone-loop split needs at least one vertex".into()));
    }
    let factors = vec![
        ("loops".to_string(), SpaceExpr::prod_power(&model.loop_space(), m)),
        ("zk".to_string(), SpaceExpr::loop_of(zk.clone())),
    ];
    Ok(DecompResult::assemble("cone-loop", factors, vec![Step::ConeLoopSplit], n)?.with_param("m", m))
}

/// `(CΩX, ΩX)^{V_l} ≃ ⋁_{k=2}^{l} ⋁_{|I|=k} (Σ ΩX^{∧k})^{∨(k-1)}`.
///
/// With circles each summand is `S^{k+1}`, giving `(k-1)·C(l, k)` spheres of
/// dimension `k + 1`.
pub fn porter_wedge(l: usize, model: &LoopModel) -> Result<SpaceExpr> {
    if l < 2 {
        return Err(invalid(format!("porter wedge needs l >= 2, got {l}")));
    }
    let lx = model.loop_space();
    let mut summands = Vec::new();
    for k in 2..=l {
        let term = SpaceExpr::susp(SpaceExpr::smash_power(&lx, k));
        for _ in 0..(k - 1) * binomial(l, k) {
            summands.push(term.clone());
        }
    }
    Ok(normalize(&SpaceExpr::Wedge(summands)))
}

/// `(CΩX, ΩX)^{P_l}`, through the disjoint-points reduction. Contractible for
/// `l = 1`.
pub fn path_fibre_reduce(l: usize, model: &LoopModel) -> Result<SpaceExpr> {
    match l {
        0 => Err(invalid("path length must be at least 1".into())),
        1 => Ok(SpaceExpr::Point),
        _ => porter_wedge(l, model),
    }
}

/// `C = ⋁_{I ⊆ {0..l-2}, I ∉ {∅, {0}}} Σ(ΩX^{∧I} ∧ ΩX) ∨ (Z_{P_{l-1}} ⋊ ΩX)`.
///
/// With circles the subset summands are `S^{|I|+2}`.
pub fn book_c(l: usize, model: &LoopModel) -> Result<SpaceExpr> {
    if l < 3 {
        return Err(invalid(format!("book C needs l >= 3, got {l}")));
    }
    let lx = model.loop_space();
    let mut summands = Vec::new();
    for mask in 2u64..(1u64 << (l - 1)) {
        let size = mask.count_ones() as usize;
        summands.push(SpaceExpr::susp(SpaceExpr::smash_power(&lx, size + 1)));
    }
    let zk = path_fibre_reduce(l - 1, model)?;
    summands.push(SpaceExpr::half_smash(zk, lx));
    Ok(SpaceExpr::Wedge(summands))
}

/// Fibre `F` of the inclusion of the endpoints in `(X,*)^{P_l}`.
///
/// `l = 2`: `F = ΩX`. `l ≥ 3`: `F = (ΩX)^{l-1} × Ω(C ⋊ Ω(ΩX ∗ ΩX))`.
pub fn endpoint_fibre(l: usize, model: &LoopModel) -> Result<SpaceExpr> {
    let lx = model.loop_space();
    match l {
        0 | 1 => Err(invalid(format!("endpoint fibre needs l >= 2, got {l}"))),
        2 => Ok(lx),
        _ => {
            let join = SpaceExpr::join(lx.clone(), lx.clone());
            let inner = SpaceExpr::half_smash(book_c(l, model)?, SpaceExpr::loop_of(join));
            let mut factors = vec![lx; l - 1];
            factors.push(SpaceExpr::loop_of(inner));
            Ok(SpaceExpr::Prod(factors))
        }
    }
}

/// `ΩDJ_{P_l} ≃ (S^1)^{l+1} × ΩZ_{P_l}` with `Z_{P_l}` a wedge of spheres.
pub fn dj_path_decompose(l: usize, n: usize) -> Result<DecompResult> {
    path_graph(l)?;
    let zk = path_fibre_reduce(l, &LoopModel::Circles)?;
    let mut r = cone_loop_split(l + 1, &LoopModel::Circles, &zk, n)?;
    r.family = "path".into();
    r.params.clear();
    r = r.with_param("l", l);
    if l >= 2 {
        r.provenance.extend([Step::PathDisjointPoints, Step::PorterWedge]);
    }
    r.spheres.push(("zk".into(), sphere_multiset_of(&zk, (l + 1) as u32)?));
    r.witness_circles(l + 1)
}

/// `ΩDJ_{V_k} ≃ (S^1)^k × ΩZ_{V_k}` for `k` disjoint points.
pub fn dj_points_decompose(k: usize, n: usize) -> Result<DecompResult> {
    if k < 1 {
        return Err(invalid("need at least one point".into()));
    }
    let zk = if k == 1 { SpaceExpr::Point } else { porter_wedge(k, &LoopModel::Circles)? };
    let mut r = cone_loop_split(k, &LoopModel::Circles, &zk, n)?;
    r.family = "points".into();
    r.params.clear();
    r = r.with_param("n", k);
    if k >= 2 {
        r.provenance.push(Step::PorterWedge);
    }
    r.spheres.push(("zk".into(), sphere_multiset_of(&zk, (k + 1) as u32)?));
    r.witness_circles(k)
}

/// `ΩDJ_{Δ^k} ≃ (S^1)^{k+1}`; the moment-angle complex is contractible.
pub fn dj_simplex_decompose(k: usize, n: usize) -> Result<DecompResult> {
    let mut r = cone_loop_split(k + 1, &LoopModel::Circles, &SpaceExpr::Point, n)?;
    r.family = "simplex".into();
    r.params.clear();
    r = r.with_param("k", k);
    r.spheres.push(("zk".into(), SphereMultiset::new()));
    r.witness_circles(k + 1)
}

/// `ΩDJ_{B(l,2l,p)} ≃ (S^1)^{l+1} × ΩZ_{P_l} × Ω(⋁^p ΣF)`.
///
/// The book is the gluing of `p + 1` copies of `P_l` along its endpoints.
/// `Z_{P_l}` is reported exactly; the fibre wedge `⋁^p ΣF` is reported up to
/// `max_dim`, which must reach the top sphere of `Z_{P_l}`.
pub fn dj_book_decompose(l: usize, p: usize, n: usize, max_dim: u32) -> Result<DecompResult> {
    let book = planar_book(l, p)?;
    let needed = (l + 1) as u32;
    if max_dim < needed {
        return Err(Error::CeilingTooLow { needed, got: max_dim });
    }
    let circles = LoopModel::Circles;
    let zk = path_fibre_reduce(l, &circles)?;
    let f = endpoint_fibre(l, &circles)?;
    let wedge = SpaceExpr::wedge_power(&SpaceExpr::susp(f), p);

    let factors = vec![
        ("loops".to_string(), SpaceExpr::prod_power(&circles.loop_space(), l + 1)),
        ("zk".to_string(), SpaceExpr::loop_of(zk.clone())),
        ("fibre".to_string(), SpaceExpr::loop_of(wedge.clone())),
    ];
    let mut provenance = vec![
        Step::PolyhedralFold,
        Step::ConeLoopSplit,
        Step::PathDisjointPoints,
        Step::PorterWedge,
        if l == 2 { Step::EndpointJoin } else { Step::EndpointFibre },
        Step::SuspensionSplitting,
    ];
    if l >= 3 {
        provenance.extend([Step::HalfSmashSplit, Step::James]);
    }
    provenance.push(Step::BookGraph);

    let mut r = DecompResult::assemble("B(l,2l,p)", factors, provenance, n)?
        .with_param("l", l)
        .with_param("p", p);
    r.spheres.push(("zk".into(), sphere_multiset_of(&zk, max_dim)?));
    r.spheres.push(("fibre".into(), sphere_multiset_of(&wedge, max_dim)?));
    r.witness_circles(book.ground_size())
}

/// `ΩDJ_{B(k,l,p)} ≃ ΩDJ_{C_l} × Ω(⋁^{p-1} ΣG)` with the fibre `G` and the
/// moment-angle complex of the cycle kept as opaque atoms.
pub fn dj_cycle_book_decompose(k: usize, l: usize, p: usize, n: usize) -> Result<DecompResult> {
    let base = crate::complex::cycle_graph(l)?;
    let spine: Vec<usize> = (0..=k).collect();
    if k < 1 || k + 2 > l {
        return Err(invalid(format!("book graph needs 1 <= n <= l-2; got n = {k}, l = {l}")));
    }
    let spec = GluingSpec::symmetric(base, &spine, p)?;
    let zc = SpaceExpr::atom(Atom::new(format!("Z_C{l}")));
    let base_loop = cone_loop_split(l, &LoopModel::Circles, &zc, n)?.total;
    let g = SpaceExpr::atom(Atom::new("G"));
    let mut r = poly_fold_decompose(&spec, &base_loop, &g, n)?;
    r.family = "B(n,l,p)".into();
    r.params.clear();
    r.provenance.insert(0, Step::ConeLoopSplit);
    Ok(r.with_param("n", k).with_param("l", l).with_param("p", p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{disjoint_points, glue};
    use crate::homology::zk_sphere_multiset;
    use crate::series::koszul_loop_series;
    use crate::space::hilton_milnor;

    fn s(d: u32) -> SpaceExpr {
        SpaceExpr::sphere(d)
    }

    fn ms(pairs: &[(u32, u64)]) -> SphereMultiset {
        SphereMultiset::from_pairs(pairs)
    }

    fn circles_multiset(e: &SpaceExpr) -> SphereMultiset {
        sphere_multiset_of(e, 32).unwrap()
    }

    #[test]
    fn porter_examples() {
        let c = LoopModel::Circles;
        assert_eq!(circles_multiset(&porter_wedge(2, &c).unwrap()), ms(&[(3, 1)]));
        assert_eq!(circles_multiset(&porter_wedge(3, &c).unwrap()), ms(&[(3, 3), (4, 2)]));
        assert_eq!(circles_multiset(&porter_wedge(4, &c).unwrap()), ms(&[(3, 6), (4, 8), (5, 3)]));
        assert!(porter_wedge(1, &c).is_err());
        assert_eq!(path_fibre_reduce(1, &c).unwrap(), SpaceExpr::Point);
    }

    #[test]
    fn porter_matches_hochster_on_p4() {
        let z = zk_sphere_multiset(&path_graph(4).unwrap()).unwrap();
        assert_eq!(circles_multiset(&porter_wedge(4, &LoopModel::Circles).unwrap()), z);
    }

    #[test]
    fn book_c_examples() {
        let c = LoopModel::Circles;
        let c3 = normalize(&book_c(3, &c).unwrap());
        assert_eq!(c3, SpaceExpr::Wedge(vec![s(3), s(3), s(4), s(4)]));
        assert_eq!(circles_multiset(&book_c(4, &c).unwrap()), ms(&[(3, 5), (4, 8), (5, 3)]));
        assert!(book_c(2, &c).is_err());
    }

    #[test]
    fn endpoint_fibre_examples() {
        let c = LoopModel::Circles;
        assert_eq!(endpoint_fibre(2, &c).unwrap(), s(1));
        let f3 = endpoint_fibre(3, &c).unwrap();
        let SpaceExpr::Prod(xs) = &f3 else { panic!("{f3}") };
        assert_eq!(&xs[..2], &[s(1), s(1)]);
        let wedge = normalize(&SpaceExpr::wedge_power(&SpaceExpr::susp(endpoint_fibre(2, &c).unwrap()), 3));
        assert_eq!(wedge, SpaceExpr::Wedge(vec![s(2), s(2), s(2)]));
    }

    #[test]
    fn fold_three_spheres() {
        let r = fold_decompose(3, &s(2), &SpaceExpr::loop_of(s(2)), 12).unwrap();
        let expected = TruncSeries::from_coeffs(12, &[1, -3]).invert().unwrap();
        assert_eq!(r.series.as_ref().unwrap(), &expected);
        assert_eq!(r.fibre_wedge_len(), Some(2));
        assert!(fold_decompose(1, &s(2), &s(1), 4).is_err());
    }

    #[test]
    fn iterated_fold_matches_hilton_milnor() {
        for copies in 1..=3 {
            let r = fold_iterated(copies, &s(3), 12).unwrap();
            let hm = hilton_milnor(&SpaceExpr::wedge_power(&s(3), copies), 13).unwrap();
            assert_eq!(r.series.unwrap(), hm.poincare_series(12).unwrap(), "copies = {copies}");
        }
    }

    #[test]
    fn cone_loop_examples() {
        let c = LoopModel::Circles;
        let r = cone_loop_split(3, &c, &s(3), 16).unwrap();
        assert_eq!(r.series.unwrap(), koszul_loop_series(&path_graph(2).unwrap(), 16).unwrap());
        let r = cone_loop_split(2, &c, &s(3), 16).unwrap();
        assert_eq!(r.series.unwrap(), koszul_loop_series(&disjoint_points(2).unwrap(), 16).unwrap());
        let x = SpaceExpr::atom(Atom::new("X"));
        let r = cone_loop_split(1, &LoopModel::Symbolic(x.clone()), &SpaceExpr::Point, 4).unwrap();
        assert_eq!(r.total, SpaceExpr::loop_of(x));
        assert_eq!(r.series, None);
    }

    #[test]
    fn paths_match_koszul() {
        for l in 1..=6 {
            let r = dj_path_decompose(l, 16).unwrap();
            let k = koszul_loop_series(&path_graph(l).unwrap(), 16).unwrap();
            assert_eq!(r.series.as_ref().unwrap(), &k, "l = {l}");
            assert!(r.check_factorisation(16).unwrap());
        }
    }

    #[test]
    fn books_match_koszul() {
        for (l, p) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
            let r = dj_book_decompose(l, p, 16, 16).unwrap();
            let k = koszul_loop_series(&planar_book(l, p).unwrap(), 16).unwrap();
            assert_eq!(r.series.as_ref().unwrap(), &k, "({l}, {p})");
            assert!(r.check_factorisation(16).unwrap());
            assert_eq!(r.fibre_wedge_len(), Some(p));
        }
    }

    #[test]
    fn book_two_two_details() {
        let r = dj_book_decompose(2, 2, 16, 16).unwrap();
        assert_eq!(&r.series.as_ref().unwrap().coeffs()[..5], &[1, 5, 14, 32, 68]);
        assert_eq!(r.spheres_of("zk").unwrap(), &ms(&[(3, 1)]));
        assert_eq!(r.spheres_of("fibre").unwrap(), &ms(&[(2, 2)]));
        assert_eq!(r.circle_witness.as_ref().unwrap().0, 5);
        assert!(matches!(dj_book_decompose(3, 2, 16, 3), Err(Error::CeilingTooLow { .. })));
    }

    #[test]
    fn poly_fold_planar_book_spec() {
        let l = 3;
        let p = 2;
        let spec = GluingSpec::symmetric(path_graph(l).unwrap(), &[0, l], p + 1).unwrap();
        assert!(glue(&spec).unwrap().is_isomorphic(&planar_book(l, p).unwrap()));
        let c = LoopModel::Circles;
        let base = cone_loop_split(l + 1, &c, &path_fibre_reduce(l, &c).unwrap(), 16).unwrap().total;
        let r = poly_fold_decompose(&spec, &base, &endpoint_fibre(l, &c).unwrap(), 16).unwrap();
        assert_eq!(r.fibre_wedge_len(), Some(p));
        let direct = dj_book_decompose(l, p, 16, 16).unwrap();
        assert_eq!(r.series, direct.series);
    }

    #[test]
    fn cycle_book_is_symbolic() {
        let r = dj_cycle_book_decompose(1, 4, 3, 8).unwrap();
        assert_eq!(r.fibre_wedge_len(), Some(2));
        assert_eq!(r.series, None);
    }
}
