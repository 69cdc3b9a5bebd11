//! Explicit computable colorings for Hindman's theorem restricted to sums of
//! boundedly many terms, together with the digit combinatorics they are built
//! from, a finite monochromatic-set solver, and decoders that extract
//! information (limit values, ranges of injective functions) from solutions.
//!
//! All objects are finite stand-ins for their computability-theoretic
//! counterparts: an [`EnumeratedFunction`] is an injective function with a
//! decidable range, and a [`LimitApproximation`] is a finite mind-change
//! schedule with a known limit. Decoders only ever use the bounded access the
//! underlying arguments allow; privileged access is confined to
//! synthesizers and test oracles.

pub mod colorings;
pub mod decoders;
mod error;
pub mod numerals;
pub mod solver;
pub mod stages;

pub use colorings::{Color, ColorName, Coloring};
pub use error::{Error, Result};
pub use numerals::{decompose, Decomposition, Gap, ResidueClass};
pub use solver::SolutionCandidate;
pub use stages::{EnumeratedFunction, FunctionAccess, LimitApproximation};
