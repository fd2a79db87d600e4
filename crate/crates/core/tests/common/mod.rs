//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use polyloop_core::complex::{
    book_graph, cycle_graph, disjoint_points, path_graph, planar_book, simplex,
};
use polyloop_core::{SimplicialComplex, SpaceExpr};
use rand::Rng;

/// Named complexes covering every family builder.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for l in 1..=6 {
        out.push((format!("path {l}"), path_graph(l).unwrap()));
    }
    for l in 3..=6 {
        out.push((format!("cycle {l}"), cycle_graph(l).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("points {n}"), disjoint_points(n).unwrap()));
    }
    for k in 0..=3 {
        out.push((format!("simplex {k}"), simplex(k).unwrap()));
    }
    for (n, l, p) in [(1, 3, 2), (1, 3, 3), (1, 3, 4), (2, 4, 2), (1, 4, 3)] {
        out.push((format!("book {n} {l} {p}"), book_graph(n, l, p).unwrap()));
    }
    for (l, p) in [(2, 2), (2, 3), (3, 2)] {
        out.push((format!("planar-book {l} {p}"), planar_book(l, p).unwrap()));
    }
    out
}

fn sphere<R: Rng>(rng: &mut R, min: u32) -> SpaceExpr {
    SpaceExpr::Sphere(rng.gen_range(min..=4))
}

/// A wedge of one to three spheres of dimension at least 2.
fn simply_connected_wedge<R: Rng>(rng: &mut R) -> SpaceExpr {
    let k = rng.gen_range(1..=3);
    SpaceExpr::Wedge((0..k).map(|_| sphere(rng, 2)).collect())
}

/// A random term over spheres whose rational Poincaré series is defined.
///
/// Loops only ever wrap simply connected wedges of spheres or products of
/// them, and half-smashes only have a syntactic suspension on the left.
pub fn random_term<R: Rng>(rng: &mut R, depth: u32) -> SpaceExpr {
    if depth == 0 {
        return match rng.gen_range(0..8) {
            0 => SpaceExpr::Point,
            1 => SpaceExpr::loop_of(simply_connected_wedge(rng)),
            _ => sphere(rng, 1),
        };
    }
    let sub = |rng: &mut R| random_term(rng, depth - 1);
    match rng.gen_range(0..10) {
        0 => SpaceExpr::Wedge((0..rng.gen_range(0..=3)).map(|_| sub(rng)).collect()),
        1 => SpaceExpr::Prod((0..rng.gen_range(0..=3)).map(|_| sub(rng)).collect()),
        2 => SpaceExpr::Smash((1..=rng.gen_range(1..=3)).map(|_| sub(rng)).collect()),
        3 => SpaceExpr::susp(sub(rng)),
        4 => SpaceExpr::join(sub(rng), sub(rng)),
        5 => SpaceExpr::half_smash(SpaceExpr::susp(sub(rng)), sub(rng)),
        6 => SpaceExpr::cone(sub(rng)),
        7 => SpaceExpr::loop_of(SpaceExpr::Prod(vec![
            simply_connected_wedge(rng),
            simply_connected_wedge(rng),
        ])),
        _ => sphere(rng, 1),
    }
}
