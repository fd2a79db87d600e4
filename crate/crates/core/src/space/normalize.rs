//! Rewriting to normal form.
//!
//! Rules, each a homotopy equivalence:
//!
//! * `Cone(X) → *`, `Join(X, Y) → Σ(X ∧ Y)`
//! * wedge, product and smash are flattened and sorted; `*` is the unit of
//!   wedge and product and absorbing for smash
//! * `Σ* → *`, `ΣS^d → S^{d+1}`, `Σ(X ∨ Y) → ΣX ∨ ΣY`,
//!   `Σ(X_1 × ⋯ × X_k) → ⋁_{∅ ≠ I} Σ X^{∧I}`
//! * smash distributes over wedge; sphere and suspension factors leave a
//!   smash as suspensions: `S^a ∧ ΣY ∧ Z → Σ^{a+1}(Y ∧ Z)`
//! * `Ω* → *`, `Ω(X × Y) → ΩX × ΩY`
//! * `C ⋊ B → C ∨ (C ∧ B)` when `C` is syntactically a suspension
//!
//! In normal form spheres never appear as smash factors and `Susp` never
//! wraps a point, sphere, wedge or product.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::SpaceExpr;
use SpaceExpr::*;

/// Normal form of `e`. Idempotent; terms no rule touches are left intact.
pub fn normalize(e: &SpaceExpr) -> SpaceExpr {
    match e {
        Point | Sphere(_) | Atom(_) => e.clone(),
        Cone(_) => Point,
        Join(a, b) => susp_of(smash_of(vec![normalize(a), normalize(b)])),
        Susp(x) => susp_of(normalize(x)),
        Wedge(xs) => wedge_of(xs.iter().map(normalize).collect()),
        Prod(xs) => prod_of(xs.iter().map(normalize).collect()),
        Smash(xs) => smash_of(xs.iter().map(normalize).collect()),
        Loop(x) => loop_of(normalize(x)),
        RHalfSmash(a, b) => half_smash_of(normalize(a), normalize(b)),
    }
}

/// Syntactic recognition of suspensions.
///
/// Points, spheres, suspensions, joins and cones are suspensions; so is a
/// wedge of suspensions, a smash with a suspension factor, a half-smash whose
/// left side is one, and an atom declared as one.
pub fn is_suspension(e: &SpaceExpr) -> bool {
    match e {
        Point | Sphere(_) | Susp(_) | Join(..) | Cone(_) => true,
        Atom(a) => a.is_suspension(),
        Wedge(xs) => xs.iter().all(is_suspension),
        Smash(xs) => xs.iter().any(is_suspension),
        RHalfSmash(c, _) => is_suspension(c),
        Prod(_) | Loop(_) => false,
    }
}

fn susp_n(mut x: SpaceExpr, n: u32) -> SpaceExpr {
    for _ in 0..n {
        x = susp_of(x);
    }
    x
}

fn susp_of(x: SpaceExpr) -> SpaceExpr {
    match x {
        Point => Point,
        Sphere(d) => Sphere(d + 1),
        Wedge(xs) => wedge_of(xs.into_iter().map(susp_of).collect()),
        Prod(xs) => {
            let k = xs.len();
            let mut summands = Vec::with_capacity((1usize << k) - 1);
            for mask in 1u64..(1u64 << k) {
                let factors: Vec<SpaceExpr> =
                    (0..k).filter(|i| mask >> i & 1 == 1).map(|i| xs[i].clone()).collect();
                summands.push(susp_of(smash_of(factors)));
            }
            wedge_of(summands)
        }
        other => Susp(Box::new(other)),
    }
}

fn wedge_of(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut flat = Vec::with_capacity(xs.len());
    for x in xs {
        match x {
            Point => {}
            Wedge(inner) => flat.extend(inner),
            other => flat.push(other),
        }
    }
    collapse(flat, Wedge)
}

fn prod_of(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut flat = Vec::with_capacity(xs.len());
    for x in xs {
        match x {
            Point => {}
            Prod(inner) => flat.extend(inner),
            other => flat.push(other),
        }
    }
    collapse(flat, Prod)
}

fn collapse(mut flat: Vec<SpaceExpr>, ctor: fn(Vec<SpaceExpr>) -> SpaceExpr) -> SpaceExpr {
    match flat.len() {
        0 => Point,
        1 => flat.pop().unwrap(),
        _ => {
            flat.sort();
            ctor(flat)
        }
    }
}

/// Smash of normalized factors. The empty smash is taken to be a point.
fn smash_of(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut flat = Vec::with_capacity(xs.len());
    for x in xs {
        match x {
            Smash(inner) => flat.extend(inner),
            other => flat.push(other),
        }
    }
    if flat.is_empty() || flat.contains(&Point) {
        return Point;
    }
    if let Some(i) = flat.iter().position(|x| matches!(x, Wedge(_))) {
        let Wedge(summands) = flat[i].clone() else { unreachable!() };
        let distributed = summands
            .into_iter()
            .map(|w| {
                let mut factors = flat.clone();
                factors[i] = w;
                smash_of(factors)
            })
            .collect();
        return wedge_of(distributed);
    }
    let mut shift = 0u32;
    let mut rest = Vec::with_capacity(flat.len());
    for x in flat {
        match x {
            Sphere(d) => shift += d,
            Susp(y) => {
                shift += 1;
                rest.push(*y);
            }
            other => rest.push(other),
        }
    }
    if shift > 0 {
        return if rest.is_empty() { Sphere(shift) } else { susp_n(smash_of(rest), shift) };
    }
    collapse(rest, Smash)
}

fn loop_of(x: SpaceExpr) -> SpaceExpr {
    match x {
        Point => Point,
        Prod(xs) => prod_of(xs.into_iter().map(loop_of).collect()),
        other => Loop(Box::new(other)),
    }
}

fn half_smash_of(c: SpaceExpr, b: SpaceExpr) -> SpaceExpr {
    if b == Point || c == Point {
        return c;
    }
    if is_suspension(&c) {
        return wedge_of(vec![c.clone(), smash_of(vec![c, b])]);
    }
    RHalfSmash(Box::new(c), Box::new(b))
}
