//! Deviation order of generation-`k` branches.
//!
//! A generation-`k` schedule leaves levels below `k` unscaled, so the branch
//! agrees with the standard solution `τ_s = t = 1 − η_0` to high order: the
//! first deviation enters at order `2^k` in `ln(τ/τ_s)`. Vanishing *below*
//! `2^k` is structural (the unscaled head telescopes against `τ_s` and the
//! scaled tail is built from level-`k` squares); the coefficient *at* `2^k`
//! is a property of the particular `ε`.

use crate::cascade::BranchSolution;
use crate::exact::JetQ;
use crate::{Error, Ratio, Result};

/// The deviation ledger of one branch.
#[derive(Clone, Debug)]
pub struct DeviationReport {
    /// The generation index `k` of the schedule.
    pub generation: usize,
    /// `2^k`, where the first deviation is expected.
    pub expected_order: usize,
    /// `ln(τ/τ_s)` through the window, when a deviation can exist
    /// (`None` for the unscaled cascade, which has nothing to measure —
    /// its log ledger is identically zero for the telescoping closure and
    /// pure truncation tail otherwise).
    pub log_jet: Option<JetQ>,
    /// First surviving order and coefficient of the log ledger, or `None`
    /// when the window is clean.
    pub leading: Option<(usize, Ratio)>,
    /// Whether every order below `expected_order` vanished exactly.
    pub clean_below_expected: bool,
}

/// Measures `ln(τ/τ_s)` for `branch` through `order`, which must reach the
/// expected deviation order `2^k`.
pub fn generation_deviation(branch: &BranchSolution, order: usize) -> Result<DeviationReport> {
    let generation = branch.schedule().generation();
    if generation >= usize::BITS as usize {
        return Err(Error::domain("generation index overflows the order scale"));
    }
    let expected_order = 1usize << generation;
    if order < expected_order {
        return Err(Error::domain(alloc::format!(
            "window K = {order} cannot see the expected deviation order 2^{generation} = {expected_order}"
        )));
    }
    if branch.schedule().epsilon().is_zero() {
        return Ok(DeviationReport {
            generation,
            expected_order,
            log_jet: None,
            leading: None,
            clean_below_expected: true,
        });
    }
    let tau = branch.jet(order);
    let tau_s_inv = (&JetQ::one(order) - &JetQ::var(order))
        .recip()
        .expect("1 − η_0 has unit constant term");
    let ratio = tau.mul(&tau_s_inv);
    let log_jet = ratio
        .log()
        .expect("normalized branch has unit constant term");
    let leading = log_jet.leading().map(|(k, c)| (k, c.clone()));
    let clean_below_expected = match leading {
        Some((k, _)) => k >= expected_order,
        None => true,
    };
    Ok(DeviationReport {
        generation,
        expected_order,
        log_jet: Some(log_jet),
        leading,
        clean_below_expected,
    })
}
