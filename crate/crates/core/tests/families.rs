use polyloop_core::complex::{
    book_graph, cycle_graph, disjoint_points, glue, path_graph, planar_book, simplex, GluingSpec,
};
use polyloop_core::homology::{hochster_zk_betti, reduced_betti, zk_sphere_multiset};
use polyloop_core::series::{hilbert_sr, koszul_loop_series, strip_circles};
use polyloop_core::{Error, SimplicialComplex, SphereMultiset, TruncSeries};

fn edges(k: &SimplicialComplex) -> usize {
    k.f_vector().get(2).copied().unwrap_or(0)
}

#[test]
fn family_sizes() {
    assert_eq!(path_graph(4).unwrap().f_vector(), vec![1, 5, 4]);
    assert_eq!(cycle_graph(4).unwrap().f_vector(), vec![1, 4, 4]);
    assert_eq!(simplex(2).unwrap().f_vector(), vec![1, 3, 3, 1]);
    assert_eq!(book_graph(1, 3, 2).unwrap().f_vector(), vec![1, 4, 5]);
    assert_eq!(book_graph(1, 3, 3).unwrap().f_vector(), vec![1, 5, 7]);
    assert_eq!(book_graph(2, 4, 2).unwrap().f_vector(), vec![1, 5, 6]);
    for (l, p, v, e) in [(2, 4, 7, 10), (2, 2, 5, 6), (3, 2, 8, 9)] {
        let k = planar_book(l, p).unwrap();
        assert_eq!((k.ground_size(), edges(&k)), (v, e), "planar book ({l}, {p})");
    }
}

#[test]
fn family_parameter_errors() {
    assert!(matches!(path_graph(0), Err(Error::InvalidParameter(_))));
    assert!(cycle_graph(2).is_err());
    assert!(disjoint_points(0).is_err());
    assert!(book_graph(2, 3, 2).is_err());
    assert!(book_graph(1, 3, 1).is_err());
    assert!(planar_book(1, 2).is_err());
}

#[test]
fn planar_books_are_books() {
    for (l, p) in [(2, 2), (2, 3), (3, 2)] {
        let planar = planar_book(l, p).unwrap();
        assert!(planar.is_isomorphic(&book_graph(l, 2 * l, p).unwrap()), "({l}, {p})");
        assert_eq!(planar.ground_size(), 2 + (p + 1) * (l - 1));
    }
}

#[test]
fn gluing_reproduces_families() {
    let spec = GluingSpec::symmetric(cycle_graph(5).unwrap(), &[0, 1, 2], 3).unwrap();
    assert_eq!(glue(&spec).unwrap(), book_graph(2, 5, 3).unwrap());
    let spec = GluingSpec::symmetric(path_graph(3).unwrap(), &[0, 3], 4).unwrap();
    assert!(glue(&spec).unwrap().is_isomorphic(&planar_book(3, 3).unwrap()));
    // An edge glued end to end through the swap gives a path.
    let spec = GluingSpec::new(simplex(1).unwrap(), &[0], &[1], vec![1, 0], 4).unwrap();
    assert!(glue(&spec).unwrap().is_isomorphic(&path_graph(4).unwrap()));
}

#[test]
fn homology_examples() {
    assert_eq!(reduced_betti(&disjoint_points(2).unwrap()).get(0), 1);
    assert_eq!(reduced_betti(&cycle_graph(5).unwrap()).get(1), 1);
    let middle = planar_book(2, 2).unwrap().full_subcomplex(&[2, 3, 4]).unwrap();
    assert_eq!(reduced_betti(&middle).get(0), 2);
    let t = hochster_zk_betti(&path_graph(2).unwrap()).unwrap();
    assert_eq!((t.get(0), t.get(3)), (1, 1));
    assert_eq!(zk_sphere_multiset(&path_graph(3).unwrap()).unwrap(), SphereMultiset::from_pairs(&[(3, 3), (4, 2)]));
    assert_eq!(zk_sphere_multiset(&cycle_graph(4).unwrap()).unwrap(), SphereMultiset::from_pairs(&[(3, 2), (6, 1)]));
    let points = hochster_zk_betti(&disjoint_points(1).unwrap()).unwrap();
    assert_eq!(points.ranks().values().sum::<u64>(), 1);
}

#[test]
fn hochster_refusals() {
    let ghost = SimplicialComplex::from_facets(3, &[[0], [2]]).unwrap();
    assert_eq!(hochster_zk_betti(&ghost), Err(Error::GhostVertex(1)));
    let big = disjoint_points(21).unwrap();
    assert!(matches!(hochster_zk_betti(&big), Err(Error::TooManyVertices { .. })));
}

#[test]
fn series_examples() {
    let s = |c: &[i128]| TruncSeries::from_coeffs(8, c);
    assert_eq!(hilbert_sr(&disjoint_points(2).unwrap(), 8).unwrap(), s(&[1, 2, 2, 2, 2, 2, 2, 2, 2]));
    // (1 + s) / (1 - s)^2
    assert_eq!(hilbert_sr(&path_graph(2).unwrap(), 8).unwrap(), s(&[1, 3, 5, 7, 9, 11, 13, 15, 17]));
    assert_eq!(hilbert_sr(&simplex(0).unwrap(), 8).unwrap(), s(&[1; 9]));
    // (1 + t) / (1 - t)
    assert_eq!(koszul_loop_series(&disjoint_points(2).unwrap(), 8).unwrap(), s(&[1, 2, 2, 2, 2, 2, 2, 2, 2]));
    // (1 + t)^2 / (1 - t)
    let p2 = koszul_loop_series(&path_graph(2).unwrap(), 8).unwrap();
    assert_eq!(p2, s(&[1, 3, 4, 4, 4, 4, 4, 4, 4]));
    assert_eq!(strip_circles(&p2, 3).unwrap(), s(&[1, 0, 1, 0, 1, 0, 1, 0, 1]));
    assert!(matches!(strip_circles(&s(&[1, 2, 1]), 3), Err(Error::NotDivisible { .. })));
    assert_eq!(koszul_loop_series(&book_graph(1, 3, 2).unwrap(), 8), Err(Error::NotFlag));
}
