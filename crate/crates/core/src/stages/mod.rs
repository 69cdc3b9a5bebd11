//! Finite stand-ins for injective computable functions and limit
//! approximations, plus the short / very-short gap counters built on them.

mod approx;
mod enumerated;
mod gaps;

pub use approx::{LimitApproximation, Schedule};
pub use enumerated::{
    bounded_range_query, range_oracle, EnumeratedFunction, FunctionAccess, Probe,
};
pub use gaps::{
    classify_gap, gap_counts, is_very_short, sg, sg_of, vsg, vsg_of, GapCounts, GapVerdict,
};
