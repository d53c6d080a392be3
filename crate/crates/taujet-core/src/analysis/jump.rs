//! Decomposition of the second-derivative jump at the matching point.
//!
//! Both branches share `τ(0) = 1` and `τ′(0) = −1` (C¹ matching), so the
//! first discontinuity sits in the second derivative. On the plus side
//! `τ₊″(0) = 0`; on the minus side `τ₋″(0) = 2c₂`. Expanding `ln τ₋`
//! factor by factor attributes the jump to the scaled levels:
//!
//! ```text
//! 2c₂ = 2 − Σ_{k=1}^{N−1} T_k − T_closure ,
//! T_k = 2 α_k η_k″(0) / t′_{k+}(0) ,
//! ```
//!
//! with `η_k″(0)` the second η_0-derivative of `η_k′` at the origin — i.e.
//! `T_k = 2·α_k·[η_0²](η_k′) / t′_{k+}(0)`, the per-factor curvature
//! relative to the factor's origin value. An unscaled cascade has `T_1 = 2`
//! and every later term zero, and the jump closes to exactly zero.

use alloc::vec::Vec;

use crate::cascade::{BranchSolution, Closure};
use crate::{Error, Ratio, Result};

/// The jump `τ₋″(0) − τ₊″(0) = 2c₂` split into per-level contributions.
#[derive(Clone, Debug)]
pub struct JumpDecomposition {
    /// `2c₂`, the full second-derivative jump.
    pub total: Ratio,
    /// `T_k` for the scaled levels `k = 1..N−1` (in that order).
    pub terms: Vec<Ratio>,
    /// The closure's contribution (zero for [`Closure::One`]).
    pub closure_term: Ratio,
    /// Whether `total = 2 − Σ T_k − closure_term` held exactly — recomputed
    /// rather than assumed, so a decomposition bug cannot hide.
    pub identity_holds: bool,
}

/// Decomposes the second-derivative jump of a generation-1 branch of depth
/// `N ≥ 2`. Other generations shift where the cascade starts and make the
/// per-level ledger meaningless, so they are rejected as out of domain.
pub fn jump_decomposition(branch: &BranchSolution) -> Result<JumpDecomposition> {
    if branch.schedule().generation() != 1 {
        return Err(Error::domain(
            "jump decomposition is defined for generation-1 branches",
        ));
    }
    if branch.depth() < 2 {
        return Err(Error::domain(
            "jump decomposition needs depth at least 2",
        ));
    }
    let depth = branch.depth();
    let levels = branch.levels_jet(2);
    let two = Ratio::from_int(2);

    let mut terms = Vec::with_capacity(depth - 1);
    for level in &levels[1..depth] {
        let curvature = level.eta_prime.coeff(2);
        let t_k = &(&two * &level.alpha) * curvature / level.t_plus_at_zero();
        terms.push(t_k);
    }

    let closure_term = match branch.closure() {
        Closure::One => Ratio::zero(),
        Closure::Linear => {
            let eta_depth = levels[depth - 1].eta_next();
            let denom = Ratio::one() - eta_depth.coeff(0).clone();
            &(&two * eta_depth.coeff(2)) / &denom
        }
    };

    let total = {
        let tau = branch.jet(2);
        &two * tau.coeff(2)
    };

    let mut ledger = two;
    for t_k in &terms {
        ledger -= t_k;
    }
    ledger -= &closure_term;
    let identity_holds = ledger == total;

    Ok(JumpDecomposition {
        total,
        terms,
        closure_term,
        identity_holds,
    })
}
