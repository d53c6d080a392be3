//! ODE residuals of truncated branches.
//!
//! On the minus branch the radial coordinate is `t = 1 − η_0`, so
//! `t d/dt = −(1 − η_0) d/dη_0` and the equation `t dτ/dt = τ` turns into
//! the residual functional
//!
//! ```text
//! r(η_0) = −(1 − η_0)·dτ/dη_0 − τ .
//! ```
//!
//! An exact solution has `r ≡ 0`; a truncated cascade leaves a tail whose
//! leading order and coefficient are the quantities of interest.

use crate::cascade::BranchSolution;
use crate::exact::{JetQ, PolyQ, RationalPair};
use crate::{Ratio, Result};

/// The residual jet together with its leading surviving term.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    /// `r` truncated at the requested order.
    pub residual: JetQ,
    /// Order of the lowest nonzero coefficient, if any survives the window.
    pub leading_order: Option<usize>,
    /// The coefficient at `leading_order` (zero when the window is clean).
    pub leading_coefficient: Ratio,
}

impl ResidualReport {
    fn from_jet(residual: JetQ) -> Self {
        let (leading_order, leading_coefficient) = match residual.leading() {
            Some((k, c)) => (Some(k), c.clone()),
            None => (None, Ratio::zero()),
        };
        ResidualReport {
            residual,
            leading_order,
            leading_coefficient,
        }
    }
}

/// Minus-branch residual of `branch` through `order`, exactly.
///
/// The branch series is expanded one order past the request so that the
/// derivative is complete on the reported window: every reported
/// coefficient of `r` is the true coefficient, not an artifact of
/// differentiating a clipped series.
pub fn ode_residual(branch: &BranchSolution, order: usize) -> ResidualReport {
    let tau = branch.jet(order + 1);
    let dtau = tau.derive(); // order `order`
    let t = t_minus_jet(order);
    let residual = &t.mul(&-&dtau) - &tau.truncate(order);
    ResidualReport::from_jet(residual)
}

/// The same residual functional applied on the plus branch, where
/// `t = 1 + η_0` and `t d/dt = +(1 + η_0) d/dη_0`:
/// `r₊ = (1 + η_0)·dτ/dη_0 − τ`. Used for reflected series, whose natural
/// radial coordinate is the plus one.
pub fn plus_residual(tau_with_guard: &JetQ) -> ResidualReport {
    assert!(tau_with_guard.order() >= 1, "need at least one guard order");
    let order = tau_with_guard.order() - 1;
    let dtau = tau_with_guard.derive();
    let t = t_plus_jet(order);
    let residual = &t.mul(&dtau) - &tau_with_guard.truncate(order);
    ResidualReport::from_jet(residual)
}

/// Minus-branch residual as an exact rational function, via the dense
/// pipeline — an independent route to the same object as [`ode_residual`],
/// with no truncation at all. Depth-capped like every dense computation.
pub fn ode_residual_rational(branch: &BranchSolution, cap: usize) -> Result<RationalPair> {
    let tau = branch.rational(cap)?;
    let dtau = tau.derive();
    let t = PolyQ::one() - PolyQ::var();
    let minus_t_dtau = dtau.mul_poly(&t).neg();
    Ok(minus_t_dtau.sub(&tau))
}

/// Residual of the compensated observable `φ = ε̂·τ/t` on the minus branch:
///
/// ```text
/// t dφ/dt = −(1 − η_0) dφ/dη_0 ,
/// ```
///
/// reported as a jet through `order`. For any branch τ and any scalar `ε̂`,
/// the chain rule gives `t dφ/dt = (ε̂/t)(t dτ/dt − τ) = (ε̂/t)·r`, so this
/// equals the ordinary residual times `ε̂/t` — an identity the verification
/// suite checks coefficient by coefficient.
pub fn phi_residual(eps_hat: &Ratio, branch: &BranchSolution, order: usize) -> JetQ {
    let tau = branch.jet(order + 1);
    let t_inv = t_minus_jet(order + 1)
        .recip()
        .expect("1 − η_0 has unit constant term");
    let phi = tau.mul(&t_inv).scale(eps_hat);
    let dphi = phi.derive();
    t_minus_jet(order).mul(&-&dphi)
}

pub(crate) fn t_minus_jet(order: usize) -> JetQ {
    &JetQ::one(order) - &JetQ::var(order)
}

pub(crate) fn t_plus_jet(order: usize) -> JetQ {
    &JetQ::one(order) + &JetQ::var(order)
}
