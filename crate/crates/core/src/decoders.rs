//! Information extraction from solutions.
//!
//! Decoders see a solution and evaluation access to the coloring or to `f`,
//! nothing more. In particular they never read a limit approximation's
//! schedules and never consult range ground truth.

use std::collections::BTreeSet;

use crate::colorings::{Color, Coloring, Delta2Coloring};
use crate::error::{Error, Result};
use crate::numerals::{residue_class, ResidueClass};
use crate::solver::Chain;
use crate::stages::{bounded_range_query, FunctionAccess};

/// What a verdict was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    /// `member = ∃ x <= bound, f(x) = y` with `bound = λ(successor)` and `y <= μ(element)`.
    Chain {
        element: u64,
        successor: u64,
        bound: u64,
    },
    /// The index's value read off one solution element's class and color.
    Residue {
        element: u64,
        class: ResidueClass,
        color: Color,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub query: u64,
    pub member: bool,
    pub evidence: Evidence,
    /// Set when the input chain was known to be fresh.
    pub certified: bool,
}

impl MembershipVerdict {
    /// Recomputes the verdict from the recorded evidence alone.
    pub fn replay<F: FunctionAccess + ?Sized>(&self, f: &F) -> bool {
        match self.evidence {
            Evidence::Chain { bound, .. } => bounded_range_query(f, self.query, bound),
            Evidence::Residue { class, color, .. } => residue_bit(class, color) == 1,
        }
    }
}

/// Indices decoded to limit value 0 and to limit value 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BSets {
    pub b0: BTreeSet<u64>,
    pub b1: BTreeSet<u64>,
    /// One entry per solution element that landed in a class with index `<= K`.
    pub evidence: Vec<MembershipVerdict>,
}

impl BSets {
    pub fn is_disjoint(&self) -> bool {
        self.b0.is_disjoint(&self.b1)
    }
}

/// `k ∈ B_i` iff some `n ∈ W` lies in `O_{k,1}` with `c(n) = i` or in
/// `O_{k,2}` with `c(n) = 1 - i` (base 3), for `k <= horizon`.
pub fn decode_delta2(w: &[u64], c: &Delta2Coloring, horizon: u64) -> Result<BSets> {
    if w.is_empty() {
        return Err(Error::domain("the solution must be nonempty"));
    }
    let mut out = BSets::default();
    for &n in w {
        let class = residue_class(n, 3)?;
        let k = u64::from(class.level);
        if k > horizon {
            continue;
        }
        let color = c.color(n);
        let member = residue_bit(class, color) == 1;
        if member {
            out.b1.insert(k);
        } else {
            out.b0.insert(k);
        }
        out.evidence.push(MembershipVerdict {
            query: k,
            member,
            evidence: Evidence::Residue {
                element: n,
                class,
                color,
            },
            certified: false,
        });
    }
    Ok(out)
}

// c(n) on O_{k,1}, 1 - c(n) on O_{k,2}
fn residue_bit(class: ResidueClass, color: Color) -> u8 {
    if class.digit == 1 {
        color.0
    } else {
        1 - color.0
    }
}

/// Decides `y ∈ range(f)` from a chain: take the least element `n` with
/// `μ(n) >= y` and its successor `m`, and search for a preimage up to `λ(m)`.
pub fn decode_range_membership<F: FunctionAccess + ?Sized>(
    chain: &Chain,
    f: &F,
    y: u64,
) -> Result<MembershipVerdict> {
    let limit = chain.decodable_limit().map_or(0, u64::from);
    if y == 0 || y > limit {
        return Err(Error::OutOfDecodableRange { query: y, limit });
    }
    let links = chain.links();
    let j = links
        .iter()
        .position(|d| u64::from(d.mu()) >= y)
        .expect("y <= μ of the second-largest element");
    let (n, m) = (&links[j], &links[j + 1]);
    let bound = u64::from(m.lambda());
    Ok(MembershipVerdict {
        query: y,
        member: bounded_range_query(f, y, bound),
        evidence: Evidence::Chain {
            element: n.value(),
            successor: m.value(),
            bound,
        },
        certified: chain.is_certified(),
    })
}

/// Verdicts for every `y` in `[1, μ(second-largest element)]`.
pub fn decode_range_table<F: FunctionAccess + ?Sized>(
    chain: &Chain,
    f: &F,
) -> Result<Vec<MembershipVerdict>> {
    let limit = chain
        .decodable_limit()
        .ok_or(Error::OutOfDecodableRange { query: 1, limit: 0 })?;
    (1..=u64::from(limit))
        .map(|y| decode_range_membership(chain, f, y))
        .collect()
}
