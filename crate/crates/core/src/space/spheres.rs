//! Reduction of terms to wedges of spheres.
//!
//! A normalized term that is a suspension splits as a wedge of spheres when
//! every piece under the suspension splits after one suspension:
//! spheres, wedges, smashes and products of such pieces (via
//! `Σ(X × Y) ≃ ΣX ∨ ΣY ∨ Σ(X ∧ Y)`), and loops on simply connected wedges of
//! spheres (via the James splitting `ΣΩΣW ≃ ⋁_{n≥1} ΣW^{∧n}`). The sphere
//! dimensions are then the homology degrees, which is what [`Cells`] tracks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{is_suspension, normalize, SpaceExpr, SphereMultiset, Truncated};
use crate::{Error, Result};
use SpaceExpr::*;

/// Homology degrees up to a ceiling, and whether anything above was dropped.
#[derive(Debug, Clone, Default)]
struct Cells {
    counts: BTreeMap<u32, u64>,
    truncated: bool,
}

impl Cells {
    fn single(d: u32, ceiling: u32) -> Self {
        let mut c = Cells::default();
        if d <= ceiling {
            c.counts.insert(d, 1);
        } else {
            c.truncated = true;
        }
        c
    }

    fn add_all(&mut self, other: &Cells) -> Result<()> {
        for (&d, &m) in &other.counts {
            let slot = self.counts.entry(d).or_insert(0);
            *slot = slot.checked_add(m).ok_or(Error::Overflow)?;
        }
        self.truncated |= other.truncated;
        Ok(())
    }

    /// Degrees of `A ∧ B` from those of `A` and `B`.
    fn smash(&self, other: &Cells, ceiling: u32) -> Result<Cells> {
        let mut out = Cells { counts: BTreeMap::new(), truncated: self.truncated || other.truncated };
        for (&a, &ma) in &self.counts {
            for (&b, &mb) in &other.counts {
                if a + b > ceiling {
                    out.truncated = true;
                    continue;
                }
                let m = ma.checked_mul(mb).ok_or(Error::Overflow)?;
                let slot = out.counts.entry(a + b).or_insert(0);
                *slot = slot.checked_add(m).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    fn shift(&self, k: u32) -> Cells {
        Cells {
            counts: self.counts.iter().map(|(&d, &m)| (d + k, m)).collect(),
            truncated: self.truncated,
        }
    }

    /// `⊕_{n≥1} V^{⊗n}` up to the ceiling; `V` must sit in degrees ≥ 1.
    fn tensor_algebra(&self, ceiling: u32) -> Result<Cells> {
        let mut out = Cells { counts: BTreeMap::new(), truncated: self.truncated };
        if self.counts.is_empty() {
            return Ok(out);
        }
        // Infinitely many tensor powers: the result is always cut.
        out.truncated = true;
        let mut power = self.clone();
        while !power.counts.is_empty() {
            out.add_all(&power)?;
            power = power.smash(self, ceiling)?;
        }
        out.truncated = true;
        Ok(out)
    }
}

fn cells(e: &SpaceExpr, ceiling: u32) -> Result<Cells> {
    match e {
        Point | Cone(_) => Ok(Cells::default()),
        Sphere(d) => Ok(Cells::single(*d, ceiling)),
        Wedge(xs) => {
            let mut acc = Cells::default();
            for x in xs {
                acc.add_all(&cells(x, ceiling)?)?;
            }
            Ok(acc)
        }
        Susp(x) => {
            if ceiling == 0 {
                return Ok(Cells { counts: BTreeMap::new(), truncated: true });
            }
            Ok(cells(x, ceiling - 1)?.shift(1))
        }
        Smash(xs) => {
            let mut iter = xs.iter();
            let Some(first) = iter.next() else { return Ok(Cells::default()) };
            let mut acc = cells(first, ceiling)?;
            for x in iter {
                acc = acc.smash(&cells(x, ceiling)?, ceiling)?;
            }
            Ok(acc)
        }
        Prod(xs) => {
            // (1 + a)(1 + b)... - 1
            let mut acc = Cells::default();
            for x in xs {
                let cx = cells(x, ceiling)?;
                let cross = acc.smash(&cx, ceiling)?;
                acc.add_all(&cx)?;
                acc.add_all(&cross)?;
            }
            Ok(acc)
        }
        Loop(w) => {
            let w = normalize(w);
            if !is_suspension(&w) {
                return Err(Error::Unsupported(format!("loop of non-suspension {w}")));
            }
            let cw = cells(&w, ceiling + 1)?;
            if cw.counts.keys().any(|&d| d < 2) {
                return Err(Error::NotSimplyConnected(format!("{w}")));
            }
            let desuspended = Cells {
                counts: cw.counts.iter().map(|(&d, &m)| (d - 1, m)).collect(),
                truncated: cw.truncated,
            };
            desuspended.tensor_algebra(ceiling)
        }
        Join(..) => cells(&normalize(e), ceiling),
        Atom(a) => Err(Error::Unsupported(format!("atom {} has no sphere decomposition", a.name()))),
        RHalfSmash(..) => Err(Error::Unsupported(format!("half-smash {e} does not split"))),
    }
}

/// The wedge of spheres that `e` is equivalent to, up to dimension `max_dim`.
///
/// Fails when the normal form of `e` is not a suspension, or when a piece
/// does not reduce to spheres (atoms, unsplit half-smashes, loops of
/// non-simply-connected spaces).
pub fn sphere_multiset_of(e: &SpaceExpr, max_dim: u32) -> Result<SphereMultiset> {
    let n = normalize(e);
    if !is_suspension(&n) {
        return Err(Error::Unsupported(format!("{n} is not a wedge of spheres")));
    }
    let c = cells(&n, max_dim)?;
    let mut out = SphereMultiset::new();
    for (d, m) in c.counts {
        out.add(d, m);
    }
    Ok(if c.truncated { out.with_ceiling(max_dim) } else { out })
}

/// `ΣΩΣX ≃ ⋁_{n≥1} ΣX^{∧n}` for `X` a wedge of spheres, cut at `cutoff`.
pub fn james_split(x: &SpaceExpr, cutoff: u32) -> Result<Truncated> {
    let n = normalize(x);
    if n == Point {
        return Ok(Truncated { expr: Point, ceiling: None });
    }
    if !is_suspension(&n) {
        return Err(Error::Unsupported(format!("{n} is not a wedge of spheres")));
    }
    let base = cells(&n, cutoff)?;
    let powers = base.tensor_algebra(cutoff.saturating_sub(1))?.shift(1);
    let mut xs = Vec::new();
    for (&d, &m) in &powers.counts {
        for _ in 0..m {
            xs.push(Sphere(d));
        }
    }
    Ok(Truncated { expr: normalize(&Wedge(xs)), ceiling: Some(cutoff) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Atom;
    use alloc::vec;

    fn s(d: u32) -> SpaceExpr {
        SpaceExpr::sphere(d)
    }

    fn ms(pairs: &[(u32, u64)]) -> SphereMultiset {
        SphereMultiset::from_pairs(pairs)
    }

    #[test]
    fn multiset_examples() {
        assert_eq!(sphere_multiset_of(&Wedge(vec![s(3), s(3), s(4)]), 16).unwrap(), ms(&[(3, 2), (4, 1)]));
        let e = SpaceExpr::susp(Prod(vec![s(1), s(1)]));
        assert_eq!(sphere_multiset_of(&e, 16).unwrap(), ms(&[(2, 2), (3, 1)]));
        let so = SpaceExpr::susp(SpaceExpr::loop_of(s(3)));
        assert_eq!(sphere_multiset_of(&so, 8).unwrap(), ms(&[(3, 1), (5, 1), (7, 1)]).with_ceiling(8));
    }

    #[test]
    fn multiset_rejects_non_wedges() {
        assert!(sphere_multiset_of(&Prod(vec![s(1), s(1)]), 8).is_err());
        assert!(sphere_multiset_of(&SpaceExpr::loop_of(s(3)), 8).is_err());
        let a = SpaceExpr::susp(SpaceExpr::atom(Atom::new("A")));
        assert!(sphere_multiset_of(&a, 8).is_err());
        let bad = SpaceExpr::susp(SpaceExpr::loop_of(s(1)));
        assert!(matches!(sphere_multiset_of(&bad, 8), Err(Error::NotSimplyConnected(_))));
        let bad = SpaceExpr::susp(SpaceExpr::loop_of(Wedge(vec![s(1), s(2)])));
        assert!(matches!(sphere_multiset_of(&bad, 8), Err(Error::NotSimplyConnected(_))));
    }

    #[test]
    fn james_examples() {
        let t = james_split(&s(2), 10).unwrap();
        assert_eq!(t.expr, Wedge(vec![s(3), s(5), s(7), s(9)]));
        assert_eq!(t.ceiling, Some(10));
        let t = james_split(&s(1), 5).unwrap();
        assert_eq!(t.expr, Wedge(vec![s(2), s(3), s(4), s(5)]));
        assert_eq!(james_split(&Point, 5).unwrap(), Truncated { expr: Point, ceiling: None });
        assert!(james_split(&SpaceExpr::loop_of(s(2)), 5).is_err());
    }

    #[test]
    fn james_on_a_wedge() {
        // X = S^1 ∨ S^1: ΣX^{∧n} contributes 2^n copies of S^{n+1}.
        let t = james_split(&Wedge(vec![s(1), s(1)]), 4).unwrap();
        assert_eq!(sphere_multiset_of(&t.expr, 4).unwrap(), ms(&[(2, 2), (3, 4), (4, 8)]));
    }

    #[test]
    fn ceiling_zero_is_safe() {
        let e = SpaceExpr::susp(SpaceExpr::loop_of(s(3)));
        assert!(sphere_multiset_of(&e, 0).unwrap().is_empty());
    }
}
