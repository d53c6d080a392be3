//! Scale schedules, cascade levels, and truncated branch solutions.
//!
//! A *schedule* assigns each recursion level `n` its scale defect `ε_n`
//! (with `α_n = 1 + ε_n`). *Levels* carry the recursively-built series
//! `η_n′` in either dense-polynomial or jet form. A *branch solution* is the
//! finite product of reciprocal plus-branch factors with one of two closure
//! choices, normalized so that its value at the origin is exactly 1.

mod branch;
mod level;
mod schedule;

pub use branch::{build_branch, BranchSolution, Closure};
pub use level::{
    levels_jet, levels_poly, scalar_levels, CascadeLevel, SeriesForm, POLY_DEPTH_CAP,
};
pub use schedule::{ScaleSchedule, ScheduleRule};
