use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numerals::Decomposition;
use crate::stages::EnumeratedFunction;

/// A strictly increasing set whose consecutive elements `n < m` satisfy
/// `μ(n) < λ(m)`, so their digit blocks never overlap under addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    base: u64,
    links: Vec<Decomposition>,
    certified: bool,
}

impl Chain {
    pub fn new(elements: &[u64], base: u64) -> Result<Self> {
        let links = elements
            .iter()
            .map(|&x| Decomposition::new(x, base))
            .collect::<Result<Vec<_>>>()?;
        for pair in links.windows(2) {
            let (n, m) = (&pair[0], &pair[1]);
            if n.value() >= m.value() {
                return Err(Error::structure(format!(
                    "chain elements not increasing at {} -> {}",
                    n.value(),
                    m.value()
                )));
            }
            if n.mu() >= m.lambda() {
                return Err(Error::structure(format!(
                    "chain condition fails: mu({}) = {} >= lambda({}) = {}",
                    n.value(),
                    n.mu(),
                    m.value(),
                    m.lambda()
                )));
            }
        }
        Ok(Chain {
            base,
            links,
            certified: false,
        })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn links(&self) -> &[Decomposition] {
        &self.links
    }

    pub fn elements(&self) -> Vec<u64> {
        self.links.iter().map(Decomposition::value).collect()
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Whether freshness has been established for this chain.
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Largest query decodable from the chain: `μ` of the second-largest element.
    pub fn decodable_limit(&self) -> Option<u32> {
        let len = self.links.len();
        (len >= 2).then(|| self.links[len - 2].mu())
    }

    /// Checks with ground-truth range access that every consecutive `n < m` is
    /// fresh: each `y <= μ(n)` in the range of `f` has a preimage `<= λ(m)`.
    /// Marks the chain certified on success.
    pub fn certify(mut self, f: &EnumeratedFunction) -> (Self, bool) {
        let fresh = self
            .links
            .windows(2)
            .all(|pair| f.witness_bound(u64::from(pair[0].mu())) <= u64::from(pair[1].lambda()));
        self.certified = fresh;
        (self, fresh)
    }

    pub(crate) fn mark_certified(mut self) -> Self {
        self.certified = true;
        self
    }
}

fn sorted_distinct(xs: &[u64]) -> Result<Vec<u64>> {
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    if sorted.first() == Some(&0) {
        return Err(Error::domain("0 is not a positive integer"));
    }
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::domain(format!("duplicate element {}", w[0])));
    }
    Ok(sorted)
}

/// Greedy chain thinning: keep the least element, then every element whose
/// `λ` exceeds `μ` of the last kept one.
pub fn thin_chain(xs: &[u64], base: u64) -> Result<Vec<u64>> {
    let mut kept = Vec::new();
    let mut last_mu: Option<u32> = None;
    for x in sorted_distinct(xs)? {
        let d = Decomposition::new(x, base)?;
        if last_mu.is_none_or(|mu| d.lambda() > mu) {
            last_mu = Some(d.mu());
            kept.push(x);
        }
    }
    Ok(kept)
}

/// The largest class of elements sharing a lowest nonzero digit; ties go to
/// the smaller digit.
pub fn thin_first_digit(xs: &[u64], base: u64) -> Result<Vec<u64>> {
    let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for x in sorted_distinct(xs)? {
        let d = Decomposition::new(x, base)?;
        classes.entry(d.first_digit()).or_default().push(x);
    }
    let mut best: Vec<u64> = Vec::new();
    for class in classes.into_values() {
        if class.len() > best.len() {
            best = class;
        }
    }
    Ok(best)
}
