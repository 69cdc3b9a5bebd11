use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Evaluation access to a function on the positive integers.
///
/// This is the only interface decoders get: they may evaluate at finitely
/// many points, never ask about the range directly.
pub trait FunctionAccess {
    /// `f(x)`; callers guarantee `x >= 1`.
    fn apply(&self, x: u64) -> u64;
}

impl<F: FunctionAccess + ?Sized> FunctionAccess for &F {
    fn apply(&self, x: u64) -> u64 {
        (**self).apply(x)
    }
}

/// An injective total function given by a finite exception table on
/// `[1, T]` and the affine tail `x ↦ x + c` everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnumeratedFunction {
    exceptions: BTreeMap<u64, u64>,
    // value -> argument, for exception entries only
    inverse: BTreeMap<u64, u64>,
    tail_offset: u64,
    threshold: u64,
}

impl EnumeratedFunction {
    pub fn new(
        exceptions: impl IntoIterator<Item = (u64, u64)>,
        tail_offset: u64,
        threshold: u64,
    ) -> Result<Self> {
        if tail_offset == 0 {
            return Err(Error::domain("tail offset must be positive"));
        }
        let mut table = BTreeMap::new();
        let mut inverse = BTreeMap::new();
        for (x, y) in exceptions {
            if x == 0 || x > threshold {
                return Err(Error::domain(format!(
                    "exception argument {x} outside [1, {threshold}]"
                )));
            }
            if y == 0 {
                return Err(Error::domain(format!("exception value f({x}) = 0")));
            }
            if table.insert(x, y).is_some() {
                return Err(Error::domain(format!("duplicate exception argument {x}")));
            }
            if let Some(prev) = inverse.insert(y, x) {
                return Err(Error::domain(format!(
                    "not injective: f({prev}) = f({x}) = {y}"
                )));
            }
        }
        let ceiling = threshold
            .checked_add(tail_offset)
            .ok_or_else(|| Error::Overflow("threshold + tail offset".into()))?;
        for (&y, &x) in &inverse {
            // the tail covers exactly the values above T + c
            if y > ceiling {
                return Err(Error::domain(format!(
                    "not injective: f({x}) = {y} collides with the tail at {}",
                    y - tail_offset
                )));
            }
            // untabulated x' <= T map to x' + c
            if y > tail_offset && !table.contains_key(&(y - tail_offset)) {
                return Err(Error::domain(format!(
                    "not injective: f({x}) = f({}) = {y}",
                    y - tail_offset
                )));
            }
        }
        Ok(EnumeratedFunction {
            exceptions: table,
            inverse,
            tail_offset,
            threshold,
        })
    }

    pub fn eval(&self, x: u64) -> Result<u64> {
        if x == 0 {
            return Err(Error::domain("0 is not a positive integer"));
        }
        Ok(self.apply(x))
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, u64> {
        &self.exceptions
    }

    pub fn tail_offset(&self) -> u64 {
        self.tail_offset
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// The unique `x` with `f(x) = y`, if any.
    ///
    /// Privileged: this reads the table structure rather than evaluating `f`.
    pub fn witness(&self, y: u64) -> Option<u64> {
        if let Some(&x) = self.inverse.get(&y) {
            return Some(x);
        }
        if y <= self.tail_offset {
            return None;
        }
        let x = y - self.tail_offset;
        if x > self.threshold || !self.exceptions.contains_key(&x) {
            Some(x)
        } else {
            None
        }
    }

    /// Least bound `W` such that every `y <= k` in the range has a witness `<= W`.
    pub fn witness_bound(&self, k: u64) -> u64 {
        (1..=k).filter_map(|y| self.witness(y)).max().unwrap_or(0)
    }
}

impl FunctionAccess for EnumeratedFunction {
    fn apply(&self, x: u64) -> u64 {
        debug_assert!(x >= 1);
        match self.exceptions.get(&x) {
            Some(&y) => y,
            None => x + self.tail_offset,
        }
    }
}

/// `∃ x ∈ [1, bound]` with `f(x) = y`, using only evaluations at those `x`.
pub fn bounded_range_query<F: FunctionAccess + ?Sized>(f: &F, y: u64, bound: u64) -> bool {
    (1..=bound).any(|x| f.apply(x) == y)
}

/// Ground-truth range membership. Not available to decoders.
pub fn range_oracle(f: &EnumeratedFunction, y: u64) -> bool {
    f.witness(y).is_some()
}

/// Evaluation wrapper that records how `f` was queried.
pub struct Probe<F> {
    inner: F,
    calls: AtomicU64,
    max_argument: AtomicU64,
}

impl<F: FunctionAccess> Probe<F> {
    pub fn new(inner: F) -> Self {
        Probe {
            inner,
            calls: AtomicU64::new(0),
            max_argument: AtomicU64::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    /// Largest argument seen so far, 0 if none.
    pub fn max_argument(&self) -> u64 {
        self.max_argument.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::Relaxed);
        self.max_argument.store(0, Ordering::Relaxed);
    }
}

impl<F: FunctionAccess> FunctionAccess for Probe<F> {
    fn apply(&self, x: u64) -> u64 {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.max_argument.fetch_max(x, Ordering::Relaxed);
        self.inner.apply(x)
    }
}

impl fmt::Display for EnumeratedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, y) in &self.exceptions {
            writeln!(f, "{x} {y}")?;
        }
        writeln!(f, "tail {} {}", self.tail_offset, self.threshold)
    }
}

impl FromStr for EnumeratedFunction {
    type Err = Error;

    /// Lines `x y`, then a final `tail c T`. Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut tail = None;
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if tail.is_some() {
                return Err(Error::parse(line_no, "content after the `tail` line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["tail", c, t] => tail = Some((parse_u64(c, line_no)?, parse_u64(t, line_no)?)),
                [x, y] => pairs.push((parse_u64(x, line_no)?, parse_u64(y, line_no)?)),
                _ => {
                    return Err(Error::parse(
                        line_no,
                        format!("expected `x y` or `tail c T`, got `{line}`"),
                    ))
                }
            }
        }
        let (c, t) = tail.ok_or_else(|| Error::parse(0, "missing `tail c T` line"))?;
        EnumeratedFunction::new(pairs, c, t)
    }
}

pub(crate) fn parse_u64(field: &str, line: usize) -> Result<u64> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("`{field}` is not a non-negative integer")))
}
