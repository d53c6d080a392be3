//! Exact construction and verification of recursive scale cascades for the
//! scale-invariant equation `t dτ/dt = τ`.
//!
//! The standard solution of that equation is `τ = t`. This crate builds the
//! non-standard branch family obtained by composing levels of the recursion
//!
//! ```text
//! η_{n+1} = α_n² (η_n′)²,    η_n′ = η_n − ε_n/α_n,    α_n = 1 + ε_n,
//! ```
//!
//! multiplying the reciprocals of the plus-branch factors `t′_{n+} = 1 + α_n η_n′`
//! and closing the product after finitely many levels. Everything is exact:
//! scalars are arbitrary-precision rationals, series are truncated power series
//! (jets) or dense polynomials over those rationals, and the floating-point
//! type used for readouts is a dyadic float whose every operation is correctly
//! rounded from an exact rational intermediate.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the CLI live in
//! the companion `taujet-cli` crate.
//!
//! Module map:
//! - [`exact`] — `Ratio`, `PolyQ`, `JetQ`, `RationalPair`, `BigFloat`.
//! - [`cascade`] — scale schedules, cascade levels, and truncated branch
//!   solutions.
//! - [`analysis`] — residuals, log-derivative sums, second-derivative jump
//!   decomposition, parity, generation deviations, convergence diagnostics,
//!   and long-horizon comparison tables.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod cascade;
mod error;
pub mod exact;

pub use error::{Error, Result};
pub use exact::{BigFloat, JetQ, PolyQ, RationalPair, Ratio};

pub use cascade::{
    build_branch, BranchSolution, CascadeLevel, Closure, ScaleSchedule, ScheduleRule,
};
