//! A term algebra of homotopy types.
//!
//! [`SpaceExpr`] terms are built from spheres, atoms, and the usual
//! constructions (wedge, product, smash, suspension, loops, join, right
//! half-smash, cone). [`normalize`] orients the standard equivalences as
//! rewrite rules and reaches a canonical form; [`poincare_series`] evaluates
//! rational Poincaré series; [`sphere_multiset_of`] reduces a term to a
//! wedge of spheres when the splitting rules apply.

mod lyndon;
mod normalize;
mod poincare;
mod spheres;

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use lyndon::{hilton_milnor, lyndon_words, HiltonMilnorProduct};
pub use normalize::{is_suspension, normalize};
pub use poincare::poincare_series;
pub use spheres::{james_split, sphere_multiset_of};

/// A named space whose homotopy type the engine does not know.
///
/// Series are exact polynomials given by their coefficients; a declared
/// series must start with `1` (atoms are connected). `suspension` records
/// that the atom is known to be a suspension (for instance a member of a
/// class of wedges of suspensions), which unlocks the half-smash splitting
/// and loop-of-suspension series.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    name: String,
    series: Option<Vec<i128>>,
    loop_series: Option<Vec<i128>>,
    suspension: bool,
}

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        Atom { name: name.into(), series: None, loop_series: None, suspension: false }
    }

    pub fn with_series(mut self, coeffs: Vec<i128>) -> Result<Self> {
        check_connected(&coeffs)?;
        self.series = Some(coeffs);
        Ok(self)
    }

    pub fn with_loop_series(mut self, coeffs: Vec<i128>) -> Result<Self> {
        check_connected(&coeffs)?;
        self.loop_series = Some(coeffs);
        Ok(self)
    }

    pub fn as_suspension(mut self) -> Self {
        self.suspension = true;
        self
    }

    /// `CP^∞`, declared only through its loop space `ΩCP^∞ ≃ S^1`.
    pub fn cp_infinity() -> Self {
        Atom::new("CP_inf").with_loop_series(vec![1, 1]).expect("1 + t is connected")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn series(&self) -> Option<&[i128]> {
        self.series.as_deref()
    }

    pub fn loop_series(&self) -> Option<&[i128]> {
        self.loop_series.as_deref()
    }

    pub fn is_suspension(&self) -> bool {
        self.suspension
    }
}

fn check_connected(coeffs: &[i128]) -> Result<()> {
    if coeffs.first() != Some(&1) {
        return Err(Error::InvalidParameter("declared series must have constant term 1".into()));
    }
    Ok(())
}

/// A formal homotopy type.
///
/// The derived order (constructor tag first, then fields) is the fixed total
/// order used to sort wedge, product and smash factors in normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceExpr {
    Point,
    /// `S^d`, `d >= 1`.
    Sphere(u32),
    Atom(Atom),
    Wedge(Vec<SpaceExpr>),
    Prod(Vec<SpaceExpr>),
    Smash(Vec<SpaceExpr>),
    Susp(Box<SpaceExpr>),
    Loop(Box<SpaceExpr>),
    Join(Box<SpaceExpr>, Box<SpaceExpr>),
    /// `left ⋊ right = (left × right) / (* × right)`.
    RHalfSmash(Box<SpaceExpr>, Box<SpaceExpr>),
    Cone(Box<SpaceExpr>),
}

impl SpaceExpr {
    pub fn sphere(d: u32) -> Self {
        assert!(d >= 1, "spheres start at dimension 1");
        SpaceExpr::Sphere(d)
    }

    pub fn circle() -> Self {
        SpaceExpr::Sphere(1)
    }

    pub fn atom(atom: Atom) -> Self {
        SpaceExpr::Atom(atom)
    }

    pub fn susp(e: SpaceExpr) -> Self {
        SpaceExpr::Susp(Box::new(e))
    }

    pub fn loop_of(e: SpaceExpr) -> Self {
        SpaceExpr::Loop(Box::new(e))
    }

    pub fn cone(e: SpaceExpr) -> Self {
        SpaceExpr::Cone(Box::new(e))
    }

    pub fn join(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn half_smash(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::RHalfSmash(Box::new(a), Box::new(b))
    }

    /// `n`-fold wedge of copies of `e`.
    pub fn wedge_power(e: &SpaceExpr, n: usize) -> Self {
        SpaceExpr::Wedge(vec![e.clone(); n])
    }

    /// `n`-fold product of copies of `e`.
    pub fn prod_power(e: &SpaceExpr, n: usize) -> Self {
        SpaceExpr::Prod(vec![e.clone(); n])
    }

    /// `n`-fold smash of copies of `e`.
    pub fn smash_power(e: &SpaceExpr, n: usize) -> Self {
        SpaceExpr::Smash(vec![e.clone(); n])
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        use SpaceExpr::*;
        1 + match self {
            Point | Sphere(_) | Atom(_) => 0,
            Wedge(xs) | Prod(xs) | Smash(xs) => xs.iter().map(SpaceExpr::size).sum(),
            Susp(x) | Loop(x) | Cone(x) => x.size(),
            Join(a, b) | RHalfSmash(a, b) => a.size() + b.size(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(atom {}", self.name)?;
        let list = |f: &mut fmt::Formatter<'_>, tag: &str, cs: &[i128]| -> fmt::Result {
            write!(f, " ({tag}")?;
            for c in cs {
                write!(f, " {c}")?;
            }
            f.write_str(")")
        };
        if let Some(s) = &self.series {
            list(f, "series", s)?;
        }
        if let Some(s) = &self.loop_series {
            list(f, "loop-series", s)?;
        }
        if self.suspension {
            f.write_str(" suspension")?;
        }
        f.write_str(")")
    }
}

/// S-expression form, e.g. `(wedge (sphere 3) (loop (sphere 2)))`.
impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SpaceExpr::*;
        let many = |f: &mut fmt::Formatter<'_>, tag: &str, xs: &[SpaceExpr]| -> fmt::Result {
            write!(f, "({tag}")?;
            for x in xs {
                write!(f, " {x}")?;
            }
            f.write_str(")")
        };
        match self {
            Point => f.write_str("(point)"),
            Sphere(d) => write!(f, "(sphere {d})"),
            Atom(a) => write!(f, "{a}"),
            Wedge(xs) => many(f, "wedge", xs),
            Prod(xs) => many(f, "prod", xs),
            Smash(xs) => many(f, "smash", xs),
            Susp(x) => write!(f, "(susp {x})"),
            Loop(x) => write!(f, "(loop {x})"),
            Cone(x) => write!(f, "(cone {x})"),
            Join(a, b) => write!(f, "(join {a} {b})"),
            RHalfSmash(a, b) => write!(f, "(rhalfsmash {a} {b})"),
        }
    }
}

/// A wedge of spheres as a table `dimension ↦ multiplicity`.
///
/// When `ceiling` is set the wedge was cut there: entries above the ceiling
/// are unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SphereMultiset {
    counts: BTreeMap<u32, u64>,
    ceiling: Option<u32>,
}

impl SphereMultiset {
    pub fn new() -> Self {
        SphereMultiset::default()
    }

    pub fn from_pairs(pairs: &[(u32, u64)]) -> Self {
        let mut s = SphereMultiset::new();
        for &(d, m) in pairs {
            s.add(d, m);
        }
        s
    }

    pub fn with_ceiling(mut self, ceiling: u32) -> Self {
        self.counts.retain(|&d, _| d <= ceiling);
        self.ceiling = Some(ceiling);
        self
    }

    pub fn add(&mut self, dim: u32, mult: u64) {
        if mult > 0 {
            *self.counts.entry(dim).or_insert(0) += mult;
        }
    }

    pub fn get(&self, dim: u32) -> u64 {
        self.counts.get(&dim).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn ceiling(&self) -> Option<u32> {
        self.ceiling
    }

    pub fn is_truncated(&self) -> bool {
        self.ceiling.is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of spheres.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The wedge as a term. Refuses wedges with more than `limit` summands.
    pub fn to_expr(&self, limit: u64) -> Result<SpaceExpr> {
        if self.total() > limit {
            return Err(Error::Unsupported(alloc::format!(
                "wedge of {} spheres is too large to spell out",
                self.total()
            )));
        }
        let mut xs = Vec::new();
        for (&d, &m) in &self.counts {
            for _ in 0..m {
                xs.push(SpaceExpr::Sphere(d));
            }
        }
        Ok(normalize(&SpaceExpr::Wedge(xs)))
    }
}

/// A term cut at a dimension ceiling. `ceiling` is `None` when nothing was
/// dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncated {
    pub expr: SpaceExpr,
    pub ceiling: Option<u32>,
}
