//! Exact truncated power series with integer coefficients, the face-ring
//! Hilbert series and the Koszul loop-homology oracle for flag complexes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::{Error, Result};

/// `a_0 + a_1 t + ... + a_N t^N` with exact integer coefficients.
///
/// Binary operations require both operands to share `N`; nothing ever
/// silently widens or narrows the truncation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<i128>,
}

/// The three public series operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Invert,
}

impl TruncSeries {
    pub fn zero(n: usize) -> Self {
        TruncSeries { coeffs: vec![0; n + 1] }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, 1)
    }

    /// `c t^k`, or zero when `k > N`.
    pub fn monomial(n: usize, k: usize, c: i128) -> Self {
        let mut s = Self::zero(n);
        if k <= n {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series of truncation degree `n` from leading coefficients; missing
    /// coefficients are zero, extra ones are dropped.
    pub fn from_coeffs(n: usize, coeffs: &[i128]) -> Self {
        let mut s = Self::zero(n);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// Truncation degree `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Re-truncates to a degree no larger than the current one.
    pub fn truncate(&self, n: usize) -> Self {
        assert!(n <= self.degree(), "cannot extend a truncated series");
        TruncSeries { coeffs: self.coeffs[..=n].to_vec() }
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(TruncSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn scale(&self, c: i128) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(TruncSeries { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let n = self.degree();
        let mut out = vec![0i128; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, mut e: usize) -> Result<Self> {
        let mut acc = Self::one(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; requires `a_0 = ±1` so the result stays integral.
    pub fn invert(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 != 1 && a0 != -1 {
            return Err(Error::NonUnitConstant(a0));
        }
        let n = self.degree();
        let mut out = vec![0i128; n + 1];
        out[0] = a0;
        for k in 1..=n {
            let mut acc = 0i128;
            for i in 1..=k {
                let term = self.coeffs[i].checked_mul(out[k - i]).ok_or(Error::Overflow)?;
                acc = acc.checked_add(term).ok_or(Error::Overflow)?;
            }
            // a0 * out[k] = -acc and a0 = ±1.
            out[k] = acc.checked_mul(-a0).ok_or(Error::Overflow)?;
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `self(-t)`.
    pub fn negate_variable(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().map(|(k, &a)| if k % 2 == 1 { -a } else { a }).collect();
        TruncSeries { coeffs }
    }

    /// `t^k · self`, truncated at the same degree.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.degree();
        let mut out = vec![0i128; n + 1];
        for i in 0..=n {
            if i + k <= n {
                out[i + k] = self.coeffs[i];
            }
        }
        TruncSeries { coeffs: out }
    }

    /// `self / t^k`, truncated to degree `N - k`. Fails unless the low `k`
    /// coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        let n = self.degree();
        if k > n {
            return Err(Error::InvalidParameter("shift exceeds truncation degree".into()));
        }
        if let Some(d) = (0..k).find(|&d| self.coeffs[d] != 0) {
            return Err(Error::NotDivisible { degree: d, coefficient: self.coeffs[d] });
        }
        Ok(TruncSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Exact quotient by `(1 + t)`, always defined for power series.
    pub fn div_one_plus_t(&self) -> Result<Self> {
        let mut out = self.coeffs.clone();
        for k in 1..out.len() {
            out[k] = out[k].checked_sub(out[k - 1]).ok_or(Error::Overflow)?;
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            let sign = if a < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if !first {
                f.write_str(" ")?;
            }
            let mag = a.unsigned_abs();
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{mag}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.degree() + 1)
    }
}

/// Applies `op` to `operands`. `Add` and `Mul` fold over one or more operands;
/// `Invert` takes exactly one.
pub fn series_arith(op: SeriesOp, operands: &[TruncSeries]) -> Result<TruncSeries> {
    let (first, rest) = operands
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("no operands".into()))?;
    match op {
        SeriesOp::Add => rest.iter().try_fold(first.clone(), |acc, s| acc.add(s)),
        SeriesOp::Mul => rest.iter().try_fold(first.clone(), |acc, s| acc.mul(s)),
        SeriesOp::Invert => {
            if !rest.is_empty() {
                return Err(Error::InvalidParameter("invert takes one operand".into()));
            }
            first.invert()
        }
    }
}

fn binomial(n: usize, k: usize) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128).ok_or(Error::Overflow)? / (i as i128 + 1);
    }
    Ok(acc)
}

/// Hilbert series of the face ring with generators in degree 1:
/// `H(s) = Σ_{σ ∈ K} (s / (1 - s))^{|σ|}`, including `σ = ∅`.
pub fn hilbert_sr(k: &SimplicialComplex, n: usize) -> Result<TruncSeries> {
    if let Some(&v) = k.ghosts().first() {
        return Err(Error::GhostVertex(v));
    }
    let f = k.f_vector();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[0] = 1;
    // [s^d] (s/(1-s))^j = C(d-1, j-1) for d >= j >= 1.
    for (j, &fj) in f.iter().enumerate().skip(1) {
        for (d, slot) in coeffs.iter_mut().enumerate().skip(j) {
            let term = binomial(d - 1, j - 1)?.checked_mul(fj as i128).ok_or(Error::Overflow)?;
            *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    Ok(TruncSeries { coeffs })
}

/// Poincaré series of `H_*(ΩDJ_K)` for a flag complex `K`: `1 / H(-t)`.
pub fn koszul_loop_series(k: &SimplicialComplex, n: usize) -> Result<TruncSeries> {
    if let Some(&v) = k.ghosts().first() {
        return Err(Error::GhostVertex(v));
    }
    if !k.is_flag() {
        return Err(Error::NotFlag);
    }
    hilbert_sr(k, n)?.negate_variable().invert()
}

/// `p / (1 + t)^m`, accepted only when the quotient is again a series with
/// non-negative coefficients.
pub fn strip_circles(p: &TruncSeries, m: usize) -> Result<TruncSeries> {
    let mut q = p.clone();
    for _ in 0..m {
        q = q.div_one_plus_t()?;
    }
    if let Some((degree, &coefficient)) = q.coeffs().iter().enumerate().find(|(_, a)| **a < 0) {
        return Err(Error::NotDivisible { degree, coefficient });
    }
    Ok(q)
}
