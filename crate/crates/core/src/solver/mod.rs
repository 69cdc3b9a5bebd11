//! Bounded-sum closures, monochromaticity certificates and finite solution
//! search.

mod chain;
mod search;
mod synth;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::colorings::{Color, Coloring};
use crate::error::{Error, Result};

pub use chain::{thin_chain, thin_first_digit, Chain};
pub use search::{search_monochromatic, search_monochromatic_parallel};
pub use synth::{
    delta2_choice, synthesize_delta2_solution, synthesize_power_chain, synthesize_power_solution,
};

/// A finite, strictly increasing candidate set together with its sum bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionCandidate {
    elements: Vec<u64>,
    sum_bound: usize,
}

impl SolutionCandidate {
    pub fn new(elements: Vec<u64>, sum_bound: usize) -> Result<Self> {
        if sum_bound == 0 {
            return Err(Error::domain("sum bound must be at least 1"));
        }
        check_increasing(&elements)?;
        Ok(SolutionCandidate {
            elements,
            sum_bound,
        })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn sum_bound(&self) -> usize {
        self.sum_bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn closure(&self) -> Result<BTreeSet<u64>> {
        fs_bounded(&self.elements, self.sum_bound)
    }

    pub fn check<C: Coloring + ?Sized>(&self, c: &C) -> Result<MonoCertificate> {
        is_monochromatic(c, &self.elements, self.sum_bound)
    }
}

/// Outcome of a monochromaticity check on `FS^{≤n}(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoCertificate {
    Monochromatic {
        color: Color,
    },
    /// The least pair of subsets (ordered by size, then lexicographically)
    /// whose sums get different colors.
    Violation {
        first: Vec<u64>,
        first_color: Color,
        second: Vec<u64>,
        second_color: Color,
    },
}

impl MonoCertificate {
    pub fn verdict(&self) -> bool {
        matches!(self, MonoCertificate::Monochromatic { .. })
    }

    pub fn color(&self) -> Option<Color> {
        match self {
            MonoCertificate::Monochromatic { color } => Some(*color),
            MonoCertificate::Violation { .. } => None,
        }
    }
}

/// All subsets of `sorted` with `1 <= |F| <= n`, by size and then lexicographically.
fn bounded_subsets(sorted: &[u64], n: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
    (1..=n.min(sorted.len())).flat_map(move |k| sorted.iter().copied().combinations(k))
}

fn subset_sum(subset: &[u64]) -> Result<u64> {
    subset
        .iter()
        .try_fold(0u64, |acc, &x| acc.checked_add(x))
        .ok_or_else(|| Error::Overflow(format!("sum of {subset:?}")))
}

/// Validates a finite set of distinct positive integers and returns it sorted.
fn normalize_set(xs: &[u64]) -> Result<Vec<u64>> {
    if xs.is_empty() {
        return Err(Error::domain("the set must be nonempty"));
    }
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    if sorted[0] == 0 {
        return Err(Error::domain("0 is not a positive integer"));
    }
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::domain(format!("duplicate element {}", w[0])));
    }
    Ok(sorted)
}

fn check_increasing(xs: &[u64]) -> Result<()> {
    if xs.first() == Some(&0) {
        return Err(Error::domain("0 is not a positive integer"));
    }
    if let Some(w) = xs.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::structure(format!(
            "elements not strictly increasing at {} -> {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// `FS^{≤n}(X) = { Σ F : F ⊆ X, 1 ≤ |F| ≤ n }`.
pub fn fs_bounded(xs: &[u64], n: usize) -> Result<BTreeSet<u64>> {
    if n == 0 {
        return Err(Error::domain("sum bound must be at least 1"));
    }
    let sorted = normalize_set(xs)?;
    bounded_subsets(&sorted, n)
        .map(|f| subset_sum(&f))
        .collect()
}

pub fn is_monochromatic<C: Coloring + ?Sized>(
    c: &C,
    xs: &[u64],
    n: usize,
) -> Result<MonoCertificate> {
    if n == 0 {
        return Err(Error::domain("sum bound must be at least 1"));
    }
    let sorted = normalize_set(xs)?;
    let mut subsets = bounded_subsets(&sorted, n);
    let first = subsets.next().expect("nonempty set has a singleton subset");
    let first_color = c.color(subset_sum(&first)?);
    for subset in subsets {
        let color = c.color(subset_sum(&subset)?);
        if color != first_color {
            return Ok(MonoCertificate::Violation {
                first,
                first_color,
                second: subset,
                second_color: color,
            });
        }
    }
    Ok(MonoCertificate::Monochromatic { color: first_color })
}

/// One decimal integer per line, strictly increasing; `#` lines are comments.
pub fn parse_integer_set(text: &str) -> Result<Vec<u64>> {
    let mut out: Vec<u64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: u64 = line
            .parse()
            .map_err(|_| Error::parse(idx + 1, format!("`{line}` is not an integer")))?;
        if v == 0 {
            return Err(Error::parse(idx + 1, "0 is not a positive integer"));
        }
        if out.last().is_some_and(|&last| last >= v) {
            return Err(Error::parse(
                idx + 1,
                "integers must be strictly increasing",
            ));
        }
        out.push(v);
    }
    Ok(out)
}

pub fn format_integer_set(xs: &[u64]) -> String {
    xs.iter().map(|x| format!("{x}\n")).collect()
}

impl fmt::Display for SolutionCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_integer_set(&self.elements))
    }
}

impl FromStr for SolutionCandidate {
    type Err = Error;

    /// The integer-set file format; the sum bound defaults to 1.
    fn from_str(s: &str) -> Result<Self> {
        SolutionCandidate::new(parse_integer_set(s)?, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{three_coloring, ColorName, Constant, Parity};
    use crate::stages::EnumeratedFunction;
    use proptest::prelude::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(fs_bounded(&[1, 2, 4], 2).unwrap(), set(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(
            fs_bounded(&[1, 2, 4], 3).unwrap(),
            set(&[1, 2, 3, 4, 5, 6, 7])
        );
        assert_eq!(fs_bounded(&[5], 3).unwrap(), set(&[5]));
    }

    #[test]
    fn closure_errors() {
        assert!(matches!(fs_bounded(&[], 2), Err(Error::Domain(_))));
        assert!(fs_bounded(&[1, 1], 2).is_err());
        assert!(fs_bounded(&[0, 1], 2).is_err());
        assert!(fs_bounded(&[1, 2], 0).is_err());
        assert!(matches!(
            fs_bounded(&[u64::MAX, 1], 2),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn monochromatic_examples() {
        assert_eq!(
            is_monochromatic(&Parity, &[2, 4, 6], 2).unwrap(),
            MonoCertificate::Monochromatic { color: Color(0) }
        );
        assert_eq!(
            is_monochromatic(&Parity, &[1, 2], 2).unwrap(),
            MonoCertificate::Violation {
                first: vec![1],
                first_color: Color(1),
                second: vec![2],
                second_color: Color(0),
            }
        );
        let f = EnumeratedFunction::new([(1, 4), (2, 6), (3, 8), (4, 2)], 6, 4).unwrap();
        let cert = is_monochromatic(&three_coloring(f), &[7, 49, 2401, 16807], 3).unwrap();
        assert_eq!(cert.color(), Some(ColorName::Red.color()));
        assert!(is_monochromatic(&Constant, &[], 1).is_err());
    }

    #[test]
    fn violation_uses_least_pair() {
        // {1,3}: singletons odd, 4 even -> first differing subset is {1,3}
        let cert = is_monochromatic(&Parity, &[3, 1], 2).unwrap();
        assert_eq!(
            cert,
            MonoCertificate::Violation {
                first: vec![1],
                first_color: Color(1),
                second: vec![1, 3],
                second_color: Color(0),
            }
        );
    }

    #[test]
    fn integer_set_format() {
        let text = "# header\n3\n\n81\n";
        assert_eq!(parse_integer_set(text).unwrap(), vec![3, 81]);
        assert_eq!(format_integer_set(&[3, 81]), "3\n81\n");
        assert!(parse_integer_set("3\n3\n").is_err());
        assert!(parse_integer_set("5\n3\n").is_err());
        assert!(parse_integer_set("0\n").is_err());
        assert!(parse_integer_set("x\n").is_err());
        let cand: SolutionCandidate = "7\n49\n".parse().unwrap();
        assert_eq!(cand.to_string(), "7\n49\n");
    }

    #[test]
    fn candidate_validation() {
        assert!(SolutionCandidate::new(vec![1, 2], 0).is_err());
        assert!(matches!(
            SolutionCandidate::new(vec![2, 1], 2),
            Err(Error::Structure(_))
        ));
        assert!(SolutionCandidate::new(vec![], 2).unwrap().is_empty());
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Every bounded subset sum, with multiplicity, via bitmask enumeration.
    fn subset_sums_oracle(xs: &[u64], n: usize) -> Vec<u64> {
        (1u32..(1 << xs.len()))
            .filter(|mask| mask.count_ones() as usize <= n)
            .map(|mask| {
                xs.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, x)| x)
                    .sum()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn closure_matches_oracle(xs in prop::collection::btree_set(1u64..200, 1..8), n in 1usize..5) {
            let xs: Vec<u64> = xs.into_iter().collect();
            let got = fs_bounded(&xs, n).unwrap();
            let sums = subset_sums_oracle(&xs, n);
            let expected: BTreeSet<u64> = sums.iter().copied().collect();
            prop_assert_eq!(&got, &expected);
            let bound: usize = (1..=n).map(|j| binom(xs.len(), j)).sum();
            prop_assert_eq!(sums.len(), bound);
            prop_assert!(got.len() <= bound);
            // equality iff no two bounded subsets share a sum
            let mut sorted = sums.clone();
            sorted.sort_unstable();
            let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
            prop_assert_eq!(got.len() == bound, distinct);
        }

        #[test]
        fn closure_is_monotone(xs in prop::collection::btree_set(1u64..500, 1..7), extra in 1u64..500, n in 1usize..4) {
            let xs: Vec<u64> = xs.into_iter().collect();
            let base = fs_bounded(&xs, n).unwrap();
            prop_assert_eq!(fs_bounded(&xs, 1).unwrap(), xs.iter().copied().collect::<BTreeSet<_>>());
            prop_assert!(base.is_subset(&fs_bounded(&xs, n + 1).unwrap()));
            if !xs.contains(&extra) {
                let mut bigger = xs.clone();
                bigger.push(extra);
                prop_assert!(base.is_subset(&fs_bounded(&bigger, n).unwrap()));
            }
        }

        #[test]
        fn certificate_violations_are_genuine(xs in prop::collection::btree_set(1u64..300, 1..6), n in 1usize..4) {
            let xs: Vec<u64> = xs.into_iter().collect();
            match is_monochromatic(&Parity, &xs, n).unwrap() {
                MonoCertificate::Monochromatic { color } => {
                    prop_assert!(fs_bounded(&xs, n).unwrap().iter().all(|&s| Parity.color(s) == color));
                }
                MonoCertificate::Violation { first, first_color, second, second_color } => {
                    prop_assert!((1..=n).contains(&first.len()) && (1..=n).contains(&second.len()));
                    prop_assert_eq!(Parity.color(first.iter().sum()), first_color);
                    prop_assert_eq!(Parity.color(second.iter().sum()), second_color);
                    prop_assert_ne!(first_color, second_color);
                }
            }
        }
    }
}
