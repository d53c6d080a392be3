//! Convergence diagnostics for the infinite-product tail.
//!
//! The candidate infinite product converges iff `Σ |t′_{n+}(0) − 1|` does.
//! These diagnostics report the per-level deviations and the partial
//! products `C_n = ∏_{m=1}^{n} t′_{m+}(0)` exactly; deciding the limit is
//! the reader's business, but for the squared schedules the deviations
//! visibly collapse super-geometrically after the first level.

use alloc::vec::Vec;

use crate::cascade::{scalar_levels, ScaleSchedule};
use crate::Ratio;

/// Exact tail diagnostics through level `N`.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    /// `|t′_{n+}(0) − 1|` for `n = 1..=N`.
    pub deviations: Vec<Ratio>,
    /// `C_n = ∏_{m=1}^{n} t′_{m+}(0)` for `n = 1..=N`.
    pub partial_products: Vec<Ratio>,
}

impl ConvergenceReport {
    /// Whether the deviation sequence is strictly decreasing after its first
    /// entry — the cheap sufficient signal that the tail is collapsing.
    pub fn strictly_decreasing_after_first(&self) -> bool {
        self.deviations.windows(2).all(|w| w[1] < w[0])
    }
}

/// Computes the diagnostics for `schedule` through level `depth ≥ 1`.
pub fn convergence_diagnostics(schedule: &ScaleSchedule, depth: usize) -> ConvergenceReport {
    let origin = scalar_levels(schedule, depth);
    let mut deviations = Vec::with_capacity(depth);
    let mut partial_products = Vec::with_capacity(depth);
    let mut product = Ratio::one();
    for (n, eta_prime0) in origin.iter().enumerate().skip(1) {
        let value = schedule.alpha_at(n) * eta_prime0 + Ratio::one();
        deviations.push((&value - &Ratio::one()).abs());
        product *= &value;
        partial_products.push(product.clone());
    }
    ConvergenceReport {
        deviations,
        partial_products,
    }
}
