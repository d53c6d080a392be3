//! Exact scalar and series arithmetic.
//!
//! Four representations, one rule: no operation in this module ever rounds
//! except [`BigFloat`], and `BigFloat` rounds exactly once per operation from
//! an exact rational intermediate.

mod float;
mod jet;
mod poly;
mod ratio;

pub use float::BigFloat;
pub use jet::JetQ;
pub use poly::{PolyQ, RationalPair};
pub use ratio::Ratio;
