//! Rational Poincaré series of terms.

use alloc::format;

use super::{is_suspension, normalize, SpaceExpr};
use crate::series::TruncSeries;
use crate::{Error, Result};
use SpaceExpr::*;

/// Poincaré series of `e` over the rationals, truncated at degree `n`.
///
/// Evaluated structurally on `e` as given (no normalization), except under
/// `Loop`, whose argument is normalized first:
///
/// * `S^d ↦ 1 + t^d`; wedge, smash, suspension and join act on reduced
///   series; product multiplies; `C ⋊ B ↦ 1 + r_C · P_B`
/// * `ΩΣY ↦ 1 / (1 - r_Y)` for connected `Y`, read off a syntactic
///   suspension whose reduced series vanishes in degree 1
/// * atoms contribute their declared series only
pub fn poincare_series(e: &SpaceExpr, n: usize) -> Result<TruncSeries> {
    let one = TruncSeries::one(n);
    match e {
        Point | Cone(_) => Ok(one),
        Sphere(d) => one.add(&TruncSeries::monomial(n, *d as usize, 1)),
        Atom(a) => a
            .series()
            .map(|c| TruncSeries::from_coeffs(n, c))
            .ok_or_else(|| Error::UndeclaredAtom(a.name().into())),
        Wedge(xs) => {
            let mut acc = one;
            for x in xs {
                acc = acc.add(&reduced(x, n)?)?;
            }
            Ok(acc)
        }
        Prod(xs) => {
            let mut acc = one;
            for x in xs {
                acc = acc.mul(&poincare_series(x, n)?)?;
            }
            Ok(acc)
        }
        Smash(xs) => {
            if xs.is_empty() {
                return Ok(one);
            }
            let mut acc = TruncSeries::one(n);
            for x in xs {
                acc = acc.mul(&reduced(x, n)?)?;
            }
            one.add(&acc)
        }
        Susp(x) => one.add(&reduced(x, n)?.shift_up(1)),
        Join(a, b) => one.add(&reduced(a, n)?.mul(&reduced(b, n)?)?.shift_up(1)),
        RHalfSmash(c, b) => one.add(&reduced(c, n)?.mul(&poincare_series(b, n)?)?),
        Loop(x) => loop_series(&normalize(x), n),
    }
}

fn reduced(e: &SpaceExpr, n: usize) -> Result<TruncSeries> {
    poincare_series(e, n)?.sub(&TruncSeries::one(n))
}

fn loop_series(x: &SpaceExpr, n: usize) -> Result<TruncSeries> {
    match x {
        Point => return Ok(TruncSeries::one(n)),
        Prod(xs) => {
            let mut acc = TruncSeries::one(n);
            for y in xs {
                acc = acc.mul(&loop_series(y, n)?)?;
            }
            return Ok(acc);
        }
        Atom(a) => {
            if let Some(c) = a.loop_series() {
                return Ok(TruncSeries::from_coeffs(n, c));
            }
            if !a.is_suspension() {
                return Err(Error::UndeclaredAtom(format!("loop of {}", a.name())));
            }
        }
        _ => {}
    }
    if !is_suspension(x) {
        return Err(Error::Unsupported(format!("loop series of {x}")));
    }
    // x = ΣY with r_x = t · r_Y; Bott–Samelson gives H_*(ΩΣY) = T(H̃_*(Y)).
    let r = reduced(x, n + 1)?;
    if r.coeff(1) != 0 {
        return Err(Error::NotSimplyConnected(format!("{x}")));
    }
    let r_y = r.shift_down(1)?;
    TruncSeries::one(n).sub(&r_y)?.invert()
}
