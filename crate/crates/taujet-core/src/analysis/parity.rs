//! Reflection (parity) analysis.
//!
//! The unscaled construction is symmetric under `η_0 → −η_0`: reflecting the
//! minus branch yields the plus branch and vice versa. Scaling breaks this.
//! The structural reason is that every level above 0 is an *even* function
//! of `η_0`, so the reflection only ever reaches the level-0 factor; once
//! the upper levels carry scale defects, the reflected level-0 factor no
//! longer reassembles the companion branch.

use crate::cascade::BranchSolution;
use crate::exact::JetQ;
use crate::Ratio;

/// Which factors the reflection touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectMode {
    /// Reflect only the level-0 factor inside the product — the operation
    /// the cascade's evenness actually exposes. This is the default.
    LevelZeroOnly,
    /// Reflect the assembled series wholesale (`η_0 → −η_0` everywhere).
    /// Because levels above 0 are even, this agrees with
    /// [`ReflectMode::LevelZeroOnly`] on every branch — an agreement the
    /// tests pin down rather than assume.
    AllFactors,
}

/// The two branches, their reflections, and the exact asymmetry defect.
#[derive(Clone, Debug)]
pub struct ParityReport {
    pub tau_minus: JetQ,
    pub tau_plus: JetQ,
    /// The reflected minus branch (the candidate for `τ₊`).
    pub reflected_minus: JetQ,
    /// The reflected plus branch (the candidate for `τ₋`).
    pub reflected_plus: JetQ,
    /// `Σ_i |[reflected_minus − τ₊]_i| + Σ_i |[reflected_plus − τ₋]_i|`:
    /// zero iff reflection exchanges the branches within the window.
    pub asymmetry: Ratio,
}

/// Reflects the branch at truncation `order` and measures how far the
/// result is from the companion branch.
pub fn parity_analysis(branch: &BranchSolution, order: usize, mode: ReflectMode) -> ParityReport {
    let tau_minus = branch.jet(order);
    let tau_plus = branch.plus_jet(order);
    let reflected_minus = match mode {
        ReflectMode::LevelZeroOnly => branch.jet_with_reflected_base(order),
        ReflectMode::AllFactors => tau_minus.reflect(),
    };
    let reflected_plus = tau_plus.reflect();

    let mut asymmetry = Ratio::zero();
    for c in (&reflected_minus - &tau_plus).coeffs() {
        asymmetry += &c.abs();
    }
    for c in (&reflected_plus - &tau_minus).coeffs() {
        asymmetry += &c.abs();
    }

    ParityReport {
        tau_minus,
        tau_plus,
        reflected_minus,
        reflected_plus,
        asymmetry,
    }
}
