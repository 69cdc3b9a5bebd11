//! Nonzero-digit decompositions of positive integers in a fixed base.
//!
//! A positive integer `n` is written uniquely as
//! `d_0·b^{p_0} + … + d_l·b^{p_l}` with `p_0 < … < p_l` and every `d_j` in
//! `[1, b-1]`. The lowest position is `λ(n)`, the highest is `μ(n)` and the
//! digit at the lowest position is `i(n)`. The open intervals between
//! consecutive positions are the gaps of `n`.

use std::fmt;

use crate::error::{Error, Result};

/// One nonzero digit of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub position: u32,
    pub digit: u64,
}

/// Interval between two consecutive nonzero-digit positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gap {
    pub lo: u32,
    pub hi: u32,
}

impl Gap {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo >= hi {
            return Err(Error::domain(format!("gap ({lo},{hi}) must have lo < hi")));
        }
        Ok(Gap { lo, hi })
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// The class `O_{k,i}` of numbers whose lowest nonzero digit is `i` at position `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueClass {
    pub base: u64,
    pub level: u32,
    pub digit: u64,
}

impl ResidueClass {
    pub fn new(base: u64, level: u32, digit: u64) -> Result<Self> {
        check_base(base)?;
        if digit == 0 || digit >= base {
            return Err(Error::domain(format!(
                "digit {digit} is not a nonzero base-{base} digit"
            )));
        }
        Ok(ResidueClass { base, level, digit })
    }

    /// `n ≡ digit·base^level (mod base^{level+1})`.
    pub fn contains(&self, n: u64) -> bool {
        if n == 0 {
            return false;
        }
        let (Some(unit), Some(modulus)) = (
            self.base.checked_pow(self.level),
            self.base.checked_pow(self.level + 1),
        ) else {
            // base^{level+1} exceeds u64, so only numbers of that size could match
            return match self.base.checked_pow(self.level) {
                Some(unit) => n.is_multiple_of(unit) && n / unit == self.digit,
                None => false,
            };
        };
        n % modulus == self.digit * unit
    }

    /// Smallest member of the class that is `>= floor`.
    pub fn least_member_at_least(&self, floor: u64) -> Result<u64> {
        let overflow = || Error::Overflow(format!("least member of {self} above {floor}"));
        let unit = self.base.checked_pow(self.level).ok_or_else(overflow)?;
        let first = self.digit.checked_mul(unit).ok_or_else(overflow)?;
        if floor <= first {
            return Ok(first);
        }
        let step = unit.checked_mul(self.base).ok_or_else(overflow)?;
        let steps = (floor - first).div_ceil(step);
        steps
            .checked_mul(step)
            .and_then(|d| d.checked_add(first))
            .ok_or_else(overflow)
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O[{},{}]_{}", self.level, self.digit, self.base)
    }
}

/// Base-`b` nonzero-digit representation of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    base: u64,
    value: u64,
    terms: Vec<Term>,
    gaps: Vec<Gap>,
}

impl Decomposition {
    pub fn new(n: u64, base: u64) -> Result<Self> {
        check_base(base)?;
        if n == 0 {
            return Err(Error::domain("0 is not a positive integer"));
        }
        let mut terms = Vec::new();
        let mut rest = n;
        let mut position = 0u32;
        while rest > 0 {
            let digit = rest % base;
            if digit != 0 {
                terms.push(Term { position, digit });
            }
            rest /= base;
            position += 1;
        }
        let gaps = terms
            .windows(2)
            .map(|w| Gap {
                lo: w[0].position,
                hi: w[1].position,
            })
            .collect();
        Ok(Decomposition {
            base,
            value: n,
            terms,
            gaps,
        })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn gaps(&self) -> &[Gap] {
        &self.gaps
    }

    /// Lowest nonzero-digit position, `λ(n)`.
    pub fn lambda(&self) -> u32 {
        self.terms[0].position
    }

    /// Highest nonzero-digit position, `μ(n)`.
    pub fn mu(&self) -> u32 {
        self.terms[self.terms.len() - 1].position
    }

    /// Digit at the lowest nonzero position, `i(n)`.
    pub fn first_digit(&self) -> u64 {
        self.terms[0].digit
    }

    pub fn residue_class(&self) -> ResidueClass {
        ResidueClass {
            base: self.base,
            level: self.lambda(),
            digit: self.first_digit(),
        }
    }

    /// Re-evaluates `Σ digit·base^position`.
    pub fn evaluate(&self) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, t| {
            self.base
                .checked_pow(t.position)
                .and_then(|p| p.checked_mul(t.digit))
                .and_then(|v| acc.checked_add(v))
                .ok_or_else(|| Error::Overflow("decomposition value exceeds u64".into()))
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{}*{}^{}", t.digit, self.base, t.position))
            .collect();
        write!(f, "{} = {}", self.value, terms.join(" + "))
    }
}

pub fn decompose(n: u64, base: u64) -> Result<Decomposition> {
    Decomposition::new(n, base)
}

/// The pair `(k, i)` with `n ∈ O_{k,i}`.
pub fn residue_class(n: u64, base: u64) -> Result<ResidueClass> {
    check_base(base)?;
    if n == 0 {
        return Err(Error::domain("0 is not a positive integer"));
    }
    let mut rest = n;
    let mut level = 0;
    while rest.is_multiple_of(base) {
        rest /= base;
        level += 1;
    }
    Ok(ResidueClass {
        base,
        level,
        digit: rest % base,
    })
}

/// The `±` class of a nonzero base-7 digit: `±1 ↦ 1`, `±2 ↦ 2`, `±3 ↦ 3`.
pub fn pm_class(digit: u64) -> Result<u8> {
    match digit {
        1 | 6 => Ok(1),
        2 | 5 => Ok(2),
        3 | 4 => Ok(3),
        _ => Err(Error::domain(format!(
            "{digit} is not a nonzero base-7 digit"
        ))),
    }
}

fn check_base(base: u64) -> Result<()> {
    if base < 2 {
        return Err(Error::domain(format!("base {base} must be at least 2")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn positions(d: &Decomposition) -> Vec<(u32, u64)> {
        d.terms().iter().map(|t| (t.position, t.digit)).collect()
    }

    #[test]
    fn decompose_single_digit() {
        let d = decompose(1, 3).unwrap();
        assert_eq!(positions(&d), vec![(0, 1)]);
        assert_eq!((d.lambda(), d.mu(), d.first_digit()), (0, 0, 1));
        assert!(d.gaps().is_empty());
    }

    #[test]
    fn decompose_eleven_base_three() {
        let d = decompose(11, 3).unwrap();
        assert_eq!(positions(&d), vec![(0, 2), (2, 1)]);
        assert_eq!((d.lambda(), d.mu(), d.first_digit()), (0, 2, 2));
        assert_eq!(d.gaps(), &[Gap { lo: 0, hi: 2 }]);
    }

    #[test]
    fn decompose_heptary() {
        let d = decompose(17199, 7).unwrap();
        assert_eq!(positions(&d), vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!((d.lambda(), d.mu(), d.first_digit()), (2, 5, 1));
        assert_eq!(d.gaps(), &[Gap { lo: 2, hi: 3 }, Gap { lo: 3, hi: 5 }]);
        assert_eq!(d.to_string(), "17199 = 1*7^2 + 1*7^3 + 1*7^5");
    }

    #[test]
    fn rejects_zero_and_small_bases() {
        assert!(matches!(decompose(0, 3), Err(Error::Domain(_))));
        assert!(matches!(decompose(5, 1), Err(Error::Domain(_))));
        assert!(matches!(residue_class(0, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn residue_class_examples() {
        let rc = |n, b| {
            let c = residue_class(n, b).unwrap();
            (c.level, c.digit)
        };
        assert_eq!(rc(3, 3), (1, 1));
        assert_eq!(rc(12, 3), (1, 1));
        assert_eq!(rc(63, 7), (1, 2));
    }

    #[test]
    fn pm_class_table() {
        let classes: Vec<u8> = (1..=6).map(|i| pm_class(i).unwrap()).collect();
        assert_eq!(classes, vec![1, 2, 3, 3, 2, 1]);
        assert!(pm_class(0).is_err());
        assert!(pm_class(7).is_err());
    }

    #[test]
    fn gap_requires_lo_below_hi() {
        assert!(Gap::new(3, 3).is_err());
        assert!(Gap::new(2, 3).is_ok());
    }

    #[test]
    fn least_member_at_least() {
        let c = ResidueClass::new(3, 2, 1).unwrap();
        assert_eq!(c.least_member_at_least(0).unwrap(), 9);
        assert_eq!(c.least_member_at_least(30).unwrap(), 36);
        assert_eq!(c.least_member_at_least(36).unwrap(), 36);
        let c = ResidueClass::new(3, 0, 1).unwrap();
        assert_eq!(c.least_member_at_least(30).unwrap(), 31);
    }

    #[test]
    fn huge_levels_do_not_overflow_membership() {
        let c = ResidueClass::new(7, 22, 1).unwrap();
        assert!(c.contains(7u64.pow(22)));
        assert!(!c.contains(7u64.pow(22) + 1));
        let far = ResidueClass::new(7, 40, 1).unwrap();
        assert!(!far.contains(u64::MAX));
    }

    #[test]
    fn roundtrip_small_ranges() {
        for base in [3, 7] {
            for n in 1..=2401 {
                let d = decompose(n, base).unwrap();
                assert_eq!(d.evaluate().unwrap(), n);
                assert_eq!(residue_class(n, base).unwrap(), d.residue_class());
                assert!(d.residue_class().contains(n));
            }
        }
    }

    proptest! {
        #[test]
        fn decomposition_invariants(n in 1u64.., base in 2u64..=16) {
            let d = decompose(n, base).unwrap();
            prop_assert_eq!(d.evaluate().unwrap(), n);
            prop_assert!(d.terms().windows(2).all(|w| w[0].position < w[1].position));
            prop_assert!(d.terms().iter().all(|t| t.digit >= 1 && t.digit < base));
            prop_assert_eq!(d.gaps().len() + 1, d.terms().len());
        }

        #[test]
        fn membership_matches_congruence(n in 1u64..1_000_000, level in 0u32..6, digit in 1u64..7) {
            let c = ResidueClass::new(7, level, digit).unwrap();
            let unit = 7u64.pow(level);
            prop_assert_eq!(c.contains(n), n % (unit * 7) == digit * unit);
        }
    }
}
