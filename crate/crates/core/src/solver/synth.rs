//! Constructions of guaranteed solutions from privileged knowledge: the full
//! range of an [`EnumeratedFunction`], or the limits and stabilization stages
//! of a [`LimitApproximation`]. Decoders never get this access.

use super::chain::Chain;
use super::SolutionCandidate;
use crate::error::{Error, Result};
use crate::numerals::ResidueClass;
use crate::stages::{EnumeratedFunction, LimitApproximation};

/// Exponents `k_1 = 1`, `k_{j+1} = max(k_j + 1, W(k_j))`, where `W(k)` bounds
/// the preimages of every range element `<= k`.
fn power_exponents(f: &EnumeratedFunction, length: usize) -> Result<Vec<u32>> {
    let mut exponents = Vec::with_capacity(length);
    let mut k: u32 = 1;
    for _ in 0..length {
        exponents.push(k);
        let bound = f.witness_bound(u64::from(k));
        let next = u64::from(k + 1).max(bound);
        k = u32::try_from(next)
            .map_err(|_| Error::Overflow(format!("exponent {next} out of range")))?;
    }
    Ok(exponents)
}

/// The chain `{base^{k_1} < … < base^{k_L}}`, certified fresh by construction.
pub fn synthesize_power_chain(f: &EnumeratedFunction, base: u64, length: usize) -> Result<Chain> {
    if base != 3 && base != 7 {
        return Err(Error::domain(format!("base must be 3 or 7, got {base}")));
    }
    if length == 0 {
        return Err(Error::domain("length must be at least 1"));
    }
    let elements = power_exponents(f, length)?
        .into_iter()
        .map(|k| {
            base.checked_pow(k)
                .ok_or_else(|| Error::Overflow(format!("{base}^{k} exceeds u64")))
        })
        .collect::<Result<Vec<u64>>>()?;
    // sums of up to three elements must stay representable
    elements.iter().rev().take(3).try_fold(0u64, |acc, &x| {
        acc.checked_add(x)
            .ok_or_else(|| Error::Overflow("sum of the largest elements exceeds u64".into()))
    })?;
    Ok(Chain::new(&elements, base)?.mark_certified())
}

/// A solution whose bounded-sum closure is monochromatic under the matching
/// coloring: four-coloring for base 3, three-coloring for base 7.
pub fn synthesize_power_solution(
    f: &EnumeratedFunction,
    base: u64,
    length: usize,
    sum_bound: usize,
) -> Result<SolutionCandidate> {
    if !(1..=3).contains(&sum_bound) {
        return Err(Error::domain(format!(
            "sum bound must be in [1, 3], got {sum_bound}"
        )));
    }
    let chain = synthesize_power_chain(f, base, length)?;
    SolutionCandidate::new(chain.elements(), sum_bound)
}

/// The common limit value and the least `count` indices `k <= horizon`
/// sharing it; the value whose `count`-th index comes first wins.
pub fn delta2_choice(a: &LimitApproximation, count: usize) -> Result<(u8, Vec<u64>)> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    let mut by_value: [Vec<u64>; 2] = [Vec::new(), Vec::new()];
    for k in 0..=a.horizon() {
        let v = a.limit_value(k);
        by_value[usize::from(v)].push(k);
        if by_value[usize::from(v)].len() == count {
            return Ok((v, by_value[usize::from(v)].clone()));
        }
    }
    Err(Error::Unsatisfiable(format!(
        "no {count} indices up to {} share a limit value ({} with limit 0, {} with limit 1)",
        a.horizon(),
        by_value[0].len(),
        by_value[1].len()
    )))
}

/// One element of `O_{k,1}` (base 3) per chosen index, each at least the
/// largest stabilization stage of the approximation. Pairwise sums then lie
/// in `O_{k,1}` for the smaller index and are past stabilization as well, so
/// the closure under sums of at most two is monochromatic.
pub fn synthesize_delta2_solution(
    a: &LimitApproximation,
    count: usize,
) -> Result<SolutionCandidate> {
    let (_, indices) = delta2_choice(a, count)?;
    let floor = a.max_stabilization_stage();
    let mut elements = indices
        .into_iter()
        .map(|k| {
            let level =
                u32::try_from(k).map_err(|_| Error::Overflow(format!("index {k} out of range")))?;
            ResidueClass::new(3, level, 1)?.least_member_at_least(floor)
        })
        .collect::<Result<Vec<u64>>>()?;
    elements.sort_unstable();
    SolutionCandidate::new(elements, 2)
}
