//! The factor-wise logarithmic derivative of a branch.
//!
//! Differentiating `ln τ₋ = ln C_eff − Σ ln t′_{n+} (+ ln f)` term by term
//! gives
//!
//! ```text
//! S = Σ_{n=0}^{N−1} α_n (η_n′)′ / t′_{n+}   −   closure contribution,
//! ```
//!
//! and the chain rule packages the whole ODE check into the single identity
//! `dτ/dη_0 + τ·S = 0` — the derivative computed through the factor
//! structure must cancel the derivative computed directly on the series.
//! (For the level-0 factor `α_0(η_0′)′ = 1`, so the first term is the
//! familiar `1/(1 + η_0)`.)

use crate::cascade::{BranchSolution, Closure};
use crate::exact::JetQ;

/// `S = Σ α_n (η_n′)′/t′_{n+} + closure term`, truncated at `order`, where
/// the sum runs over the product levels `0..N−1` and the linear closure
/// contributes `(η_N)′/t_{N−}` (from `−d ln(1 − η_N)/dη_0`).
pub fn log_derivative_sum(branch: &BranchSolution, order: usize) -> JetQ {
    let levels = branch.levels_jet(order + 1);
    let depth = branch.depth();
    let mut sum = JetQ::zero(order);
    for level in &levels[..depth] {
        let numer = level.eta_prime.derive().scale(&level.alpha); // order `order`
        let denom = level.t_plus().truncate(order);
        let term = numer.mul(
            &denom
                .recip()
                .expect("factor origin values validated nonzero at build"),
        );
        sum = &sum + &term;
    }
    if branch.closure() == Closure::Linear {
        // −d ln f/dη₀ with f ∝ 1 − η_N: contributes +(η_N)′/(1 − η_N)
        let eta_depth = levels[depth - 1].eta_next();
        let numer = eta_depth.derive();
        let denom = (&JetQ::one(order) - &eta_depth.truncate(order))
            .recip()
            .expect("closure origin value validated nonzero at build");
        sum = &sum + &numer.mul(&denom);
    }
    sum
}
