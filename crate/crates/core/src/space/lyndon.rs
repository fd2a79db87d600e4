//! Lyndon words and the Hilton–Milnor product.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{normalize, poincare_series, SpaceExpr};
use crate::series::TruncSeries;
use crate::{Error, Result};

/// All Lyndon words over `1..=n` of length at most `max_len`, ordered by
/// length and then lexicographically.
pub fn lyndon_words(n: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if n == 0 || max_len == 0 {
        return out;
    }
    // Successive words in lexicographic order: extend periodically, drop
    // trailing maximal letters, increment the last one.
    let mut w = vec![1u32];
    loop {
        out.push(w.clone());
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&n) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `Ω(ΣX_1 ∨ ⋯ ∨ ΣX_k)` as a product of loops on suspended smash products,
/// one factor `ΩΣ(X_{ω_1} ∧ ⋯ ∧ X_{ω_r})` per Lyndon word `ω`.
///
/// The factor of `ω` depends only on its letter content, so words are
/// grouped by content and each group is stored once with its size. Groups
/// are listed by word length, then by sorted letters in lexicographic order;
/// adjacent groups with equal factors are merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiltonMilnorProduct {
    factors: Vec<(SpaceExpr, u64)>,
    ceiling: u32,
}

impl HiltonMilnorProduct {
    /// Factors with multiplicities.
    pub fn factors(&self) -> &[(SpaceExpr, u64)] {
        &self.factors
    }

    /// Words whose factor `ΣX_ω` has bottom cell above this were dropped.
    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    /// Number of factors counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product spelled out as a term, refusing more than `limit` factors.
    pub fn to_expr(&self, limit: u64) -> Result<SpaceExpr> {
        if self.len() > limit {
            return Err(Error::Unsupported(format!(
                "product of {} factors is too large to spell out",
                self.len()
            )));
        }
        let mut xs = Vec::new();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                xs.push(f.clone());
            }
        }
        Ok(match xs.len() {
            0 => SpaceExpr::Point,
            1 => xs.pop().unwrap(),
            _ => SpaceExpr::Prod(xs),
        })
    }

    /// Poincaré series of the product to degree `n`.
    pub fn poincare_series(&self, n: usize) -> Result<TruncSeries> {
        let mut acc = TruncSeries::one(n);
        for (f, m) in &self.factors {
            let m = usize::try_from(*m).map_err(|_| Error::Overflow)?;
            acc = acc.mul(&poincare_series(f, n)?.pow(m)?)?;
        }
        Ok(acc)
    }
}

/// Every nonzero vector of letter counts with total weight at most `bound`.
fn letter_contents(weights: &[u64], bound: u64, cur: &mut Vec<u32>, i: usize, used: u64, out: &mut Vec<Vec<u32>>) {
    if i == weights.len() {
        if cur.iter().any(|&k| k > 0) {
            out.push(cur.clone());
        }
        return;
    }
    let mut k = 0;
    loop {
        cur[i] = k;
        letter_contents(weights, bound, cur, i + 1, used + u64::from(k) * weights[i], out);
        if used + u64::from(k + 1) * weights[i] > bound {
            break;
        }
        k += 1;
    }
    cur[i] = 0;
}

fn mobius(mut n: u32) -> i128 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn multinomial(parts: impl Iterator<Item = u32>) -> Result<i128> {
    let mut total: i128 = 0;
    let mut acc: i128 = 1;
    for k in parts {
        for j in 1..=i128::from(k) {
            total += 1;
            acc = acc.checked_mul(total).ok_or(Error::Overflow)? / j;
        }
    }
    Ok(acc)
}

/// Number of Lyndon words with letter counts `c`:
/// `(1/k) Σ_{d | gcd(c)} μ(d) (k/d)! / ∏ (c_i/d)!` with `k = Σ c_i`.
fn lyndon_count(c: &[u32]) -> Result<u64> {
    let k: u32 = c.iter().sum();
    let g = c.iter().fold(0, |a, &b| gcd(a, b));
    let mut sum: i128 = 0;
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu != 0 {
            let term = multinomial(c.iter().map(|&x| x / d))?;
            sum = sum.checked_add(mu * term).ok_or(Error::Overflow)?;
        }
    }
    u64::try_from(sum / i128::from(k)).map_err(|_| Error::Overflow)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Desuspension of a wedge summand.
fn desuspend(e: &SpaceExpr) -> Result<SpaceExpr> {
    match e {
        SpaceExpr::Sphere(d) if *d >= 2 => Ok(SpaceExpr::Sphere(d - 1)),
        SpaceExpr::Susp(y) => Ok((**y).clone()),
        other => Err(Error::NotASuspension(format!("{other}"))),
    }
}

/// Lowest degree with nonzero reduced homology, or 1 when unknown.
fn bottom_degree(x: &SpaceExpr, cutoff: u32) -> u64 {
    match poincare_series(x, cutoff as usize) {
        Ok(p) => (1..=cutoff as usize)
            .find(|&i| p.coeff(i) != 0)
            .map_or(u64::from(cutoff) + 1, |i| i as u64),
        Err(_) => 1,
    }
}

/// Hilton–Milnor expansion of `Ω(wedge)`, cut at `cutoff`.
///
/// `wedge` (or `Ω(wedge)`) must normalize to a wedge of suspensions `ΣX_i`:
/// spheres of dimension at least 2 or explicit suspensions. A word `ω` is
/// kept when the bottom cell of `ΣX_ω` lies at or below `cutoff`.
pub fn hilton_milnor(wedge: &SpaceExpr, cutoff: u32) -> Result<HiltonMilnorProduct> {
    let w = match normalize(wedge) {
        SpaceExpr::Loop(inner) => *inner,
        other => other,
    };
    let summands = match w {
        SpaceExpr::Point => Vec::new(),
        SpaceExpr::Wedge(xs) => xs,
        other => vec![other],
    };
    let xs = summands.iter().map(desuspend).collect::<Result<Vec<_>>>()?;
    let weights: Vec<u64> = xs.iter().map(|x| bottom_degree(x, cutoff)).collect();
    let bound = u64::from(cutoff).saturating_sub(1);

    let mut contents = Vec::new();
    letter_contents(&weights, bound, &mut vec![0; xs.len()], 0, 0, &mut contents);
    contents.sort_by(|a, b| {
        let (la, lb) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
        la.cmp(&lb).then_with(|| b.cmp(a))
    });
    let mut factors: Vec<(SpaceExpr, u64)> = Vec::new();
    let mut last_len = 0;
    for c in contents {
        let count = lyndon_count(&c)?;
        if count == 0 {
            continue;
        }
        let letters = c.iter().enumerate().flat_map(|(i, &k)| core::iter::repeat_n(xs[i].clone(), k as usize));
        let smash = SpaceExpr::Smash(letters.collect());
        let factor = normalize(&SpaceExpr::Loop(Box::new(SpaceExpr::susp(smash))));
        let len = c.iter().sum::<u32>();
        match factors.last_mut() {
            Some((f, m)) if len == last_len && *f == factor => {
                *m = m.checked_add(count).ok_or(Error::Overflow)?;
            }
            _ => factors.push((factor, count)),
        }
        last_len = len;
    }
    Ok(HiltonMilnorProduct { factors, ceiling: cutoff })
}
