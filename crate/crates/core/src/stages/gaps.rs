//! Short and very short gaps.
//!
//! A gap `(a, b)` is short when some `y <= a` lies in the range of `f` but has
//! no preimage `<= b`. Inside a number with top position `μ`, it is very short
//! when some `y <= a` has a preimage `<= μ` but none `<= b`. Shortness needs
//! range knowledge; very-shortness only needs `f` on `[1, μ]`.

use super::enumerated::{bounded_range_query, range_oracle, EnumeratedFunction, FunctionAccess};
use crate::error::{Error, Result};
use crate::numerals::{Decomposition, Gap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapVerdict {
    pub gap: Gap,
    pub short: bool,
    pub very_short: bool,
}

/// Classifies a gap of a number whose top position is `mu`, straight from the
/// definitions.
pub fn classify_gap(f: &EnumeratedFunction, gap: Gap, mu: u32) -> Result<GapVerdict> {
    if gap.lo >= gap.hi {
        return Err(Error::domain(format!("{gap} is not a gap")));
    }
    if mu < gap.hi {
        return Err(Error::domain(format!("mu = {mu} is below the gap {gap}")));
    }
    let hi = u64::from(gap.hi);
    let short =
        (1..=u64::from(gap.lo)).any(|y| range_oracle(f, y) && !bounded_range_query(f, y, hi));
    Ok(GapVerdict {
        gap,
        short,
        very_short: is_very_short(f, gap, mu),
    })
}

/// Very-shortness of `gap` inside a number with top position `mu`, using only
/// evaluations of `f` at arguments `<= mu`.
pub fn is_very_short<F: FunctionAccess + ?Sized>(f: &F, gap: Gap, mu: u32) -> bool {
    (1..=u64::from(gap.lo)).any(|y| {
        bounded_range_query(f, y, u64::from(mu)) && !bounded_range_query(f, y, u64::from(gap.hi))
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GapCounts {
    pub gaps: usize,
    pub short: usize,
    pub very_short: usize,
}

/// `VSG(n)` from the decomposition, evaluating `f` once on `[1, μ(n)]`.
///
/// A gap `(a, b)` is very short iff some `x ∈ (b, μ]` has `f(x) <= a`, which is
/// read off a suffix minimum of the evaluated values.
pub fn vsg_of<F: FunctionAccess + ?Sized>(f: &F, d: &Decomposition) -> usize {
    let gaps = d.gaps();
    if gaps.is_empty() {
        return 0;
    }
    let mu = d.mu() as usize;
    // suffix_min[x] = min f(x..=mu), with suffix_min[mu + 1] = ∞
    let mut suffix_min = vec![u64::MAX; mu + 2];
    for x in (1..=mu).rev() {
        suffix_min[x] = suffix_min[x + 1].min(f.apply(x as u64));
    }
    gaps.iter()
        .filter(|g| suffix_min[g.hi as usize + 1] <= u64::from(g.lo))
        .count()
}

/// `SG(n)` from the decomposition. Needs ground-truth range access.
pub fn sg_of(f: &EnumeratedFunction, d: &Decomposition) -> usize {
    d.gaps()
        .iter()
        .filter(|g| {
            (1..=u64::from(g.lo)).any(|y| matches!(f.witness(y), Some(x) if x > u64::from(g.hi)))
        })
        .count()
}

pub fn gap_counts(f: &EnumeratedFunction, d: &Decomposition) -> GapCounts {
    GapCounts {
        gaps: d.gaps().len(),
        short: sg_of(f, d),
        very_short: vsg_of(f, d),
    }
}

pub fn sg(f: &EnumeratedFunction, n: u64, base: u64) -> Result<usize> {
    Ok(sg_of(f, &Decomposition::new(n, base)?))
}

pub fn vsg<F: FunctionAccess + ?Sized>(f: &F, n: u64, base: u64) -> Result<usize> {
    Ok(vsg_of(f, &Decomposition::new(n, base)?))
}
