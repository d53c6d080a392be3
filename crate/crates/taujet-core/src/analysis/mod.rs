//! Exact verification machinery for cascade branches: residuals, the
//! second-derivative jump decomposition, parity, generation deviations,
//! convergence diagnostics, and long-horizon value comparisons.
//!
//! Everything here takes a built [`crate::BranchSolution`] (or a schedule)
//! and produces exact rational answers; the only rounding anywhere is in the
//! float-valued comparison table, and that rounds each reported cell once.

mod compare;
mod converge;
mod generation;
mod jump;
mod logsum;
mod parity;
mod residual;
mod selfsim;

pub use compare::{long_horizon_compare, CompareRow};
pub use converge::{convergence_diagnostics, ConvergenceReport};
pub use generation::{generation_deviation, DeviationReport};
pub use jump::{jump_decomposition, JumpDecomposition};
pub use logsum::log_derivative_sum;
pub use parity::{parity_analysis, ParityReport, ReflectMode};
pub use residual::{ode_residual, ode_residual_rational, phi_residual, plus_residual, ResidualReport};
pub use selfsim::{selfsimilar_identity, SelfSimilarReport};
