//! Truncated branch solutions: normalized products of reciprocal factors.

use alloc::vec::Vec;

use crate::cascade::{levels_jet, levels_poly, scalar_levels, CascadeLevel, ScaleSchedule};
use crate::exact::{JetQ, PolyQ, RationalPair};
use crate::{Error, Ratio, Result};

/// How the finite product is closed at depth `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Replace the infinite tail by the constant solution `f = 1`.
    One,
    /// Replace the tail by the linear solution of level `N`, normalized at
    /// the origin: `f = t_{N−}/t_{N−}(0)` with `t_{N−} = 1 − η_N`.
    Linear,
}

impl Closure {
    pub fn name(&self) -> &'static str {
        match self {
            Closure::One => "one",
            Closure::Linear => "linear",
        }
    }
}

/// A depth-`N` cascade branch in unevaluated product form:
///
/// ```text
/// τ₋ = C_eff · ∏_{n=0}^{N−1} 1/t′_{n+}(η_0) · f(η_0),
/// ```
///
/// where `t′_{n+} = 1 + α_n η_n′`, `f` is the closure factor, and the
/// effective normalizer `C_eff = ∏_{n=1}^{N−1} t′_{n+}(0)` makes
/// `τ₋(0) = 1` exactly. The *reported* normalization constant
/// `C = ∏_{n=1}^{N} t′_{n+}(0)` includes the closure level `N`, matching the
/// convergence diagnostics' partial products.
///
/// The companion plus branch is simply the level-0 plus factor,
/// `τ₊ = 1 + α_0 η_0′` (equal to `1 + η_0` whenever `ε_0 = 0`).
///
/// Construction is exact and cheap (scalar recursion only); the series and
/// dense forms are materialized on demand by [`BranchSolution::jet`] and
/// [`BranchSolution::rational`].
#[derive(Clone, Debug)]
pub struct BranchSolution {
    schedule: ScaleSchedule,
    depth: usize,
    closure: Closure,
    /// `t′_{n+}(0)` for `n = 0..=N`.
    factor_origin_values: Vec<Ratio>,
    /// `t_{N−}(0) = 1 − η_N(0)`.
    closure_origin_value: Ratio,
    /// `C = ∏_{n=1}^{N} t′_{n+}(0)`.
    normalization: Ratio,
}

/// Validates and assembles a depth-`N` branch. Fails on `N = 0` and on any
/// factor (or the linear-closure denominator) vanishing at the origin — which
/// cannot happen for formula schedules with `ε ∈ [0, 1)`, but explicit
/// schedules get checked rather than trusted.
pub fn build_branch(
    schedule: ScaleSchedule,
    depth: usize,
    closure: Closure,
) -> Result<BranchSolution> {
    if depth == 0 {
        return Err(Error::domain("cascade depth must be at least 1"));
    }
    let origin = scalar_levels(&schedule, depth);
    let mut factor_origin_values = Vec::with_capacity(depth + 1);
    for (n, eta_prime0) in origin.iter().enumerate() {
        let value = schedule.alpha_at(n) * eta_prime0 + Ratio::one();
        if value.is_zero() {
            return Err(Error::domain(alloc::format!(
                "plus factor at level {n} vanishes at the origin"
            )));
        }
        factor_origin_values.push(value);
    }
    // η_N(0) = α_{N−1}² η_{N−1}′(0)²
    let eta_depth0 = schedule.alpha_at(depth - 1).square() * origin[depth - 1].square();
    let closure_origin_value = Ratio::one() - eta_depth0;
    if closure == Closure::Linear && closure_origin_value.is_zero() {
        return Err(Error::domain(
            "linear closure factor vanishes at the origin",
        ));
    }
    let mut normalization = Ratio::one();
    for value in &factor_origin_values[1..] {
        normalization *= value;
    }
    Ok(BranchSolution {
        schedule,
        depth,
        closure,
        factor_origin_values,
        closure_origin_value,
        normalization,
    })
}

impl BranchSolution {
    pub fn schedule(&self) -> &ScaleSchedule {
        &self.schedule
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    /// The reported normalization constant `C = ∏_{n=1}^{N} t′_{n+}(0)`.
    pub fn normalization_constant(&self) -> &Ratio {
        &self.normalization
    }

    /// `t′_{n+}(0)` for `n = 0..=N`.
    pub fn factor_origin_values(&self) -> &[Ratio] {
        &self.factor_origin_values
    }

    /// The jet-form cascade levels `0..=N` backing this branch.
    pub fn levels_jet(&self, order: usize) -> Vec<CascadeLevel<JetQ>> {
        levels_jet(&self.schedule, self.depth, order)
    }

    /// The dense-form cascade levels `0..=N`; depth-capped.
    pub fn levels_poly(&self, cap: usize) -> Result<Vec<CascadeLevel<PolyQ>>> {
        levels_poly(&self.schedule, self.depth, cap)
    }

    /// The minus-branch series `τ₋` truncated at `order`.
    pub fn jet(&self, order: usize) -> JetQ {
        let levels = self.levels_jet(order);
        self.assemble_jet(&levels, false)
    }

    /// Like [`BranchSolution::jet`] but with the level-0 factor reflected
    /// (`η_0 → −η_0` in that factor only), which is the parity image the
    /// upper levels cannot see. Used by the parity analysis.
    pub(crate) fn jet_with_reflected_base(&self, order: usize) -> JetQ {
        let levels = self.levels_jet(order);
        self.assemble_jet(&levels, true)
    }

    fn assemble_jet(&self, levels: &[CascadeLevel<JetQ>], reflect_base: bool) -> JetQ {
        let order = levels[0].eta_prime.order();
        // effective normalizer ∏_{n=1}^{N−1} t′_{n+}(0)
        let mut c_eff = Ratio::one();
        for value in &self.factor_origin_values[1..self.depth] {
            c_eff *= value;
        }
        let mut tau = JetQ::constant(c_eff, order);
        for level in &levels[..self.depth] {
            let mut factor = level.t_plus();
            if reflect_base && level.n == 0 {
                factor = factor.reflect();
            }
            let recip = factor
                .recip()
                .expect("factor origin values validated nonzero at build");
            tau = tau.mul(&recip);
        }
        if self.closure == Closure::Linear {
            // f = t_{N−}/t_{N−}(0) with t_{N−} = 1 − η_N
            let t_minus_depth = &JetQ::one(order) - &levels[self.depth - 1].eta_next();
            let inv0 = self
                .closure_origin_value
                .recip()
                .expect("closure origin value validated nonzero at build");
            tau = tau.mul(&t_minus_depth.scale(&inv0));
        }
        tau
    }

    /// The companion plus branch `τ₊ = 1 + α_0 η_0′` as a jet.
    pub fn plus_jet(&self, order: usize) -> JetQ {
        let levels = levels_jet(&self.schedule, 0, order);
        levels[0].t_plus()
    }

    /// The minus branch as an exact rational function (dense numerator and
    /// denominator). Degree grows like `2^N`, so this is depth-capped.
    pub fn rational(&self, cap: usize) -> Result<RationalPair> {
        let levels = self.levels_poly(cap)?;
        let mut c_eff = Ratio::one();
        for value in &self.factor_origin_values[1..self.depth] {
            c_eff *= value;
        }
        let mut num = PolyQ::constant(c_eff);
        let mut den = PolyQ::one();
        for level in &levels[..self.depth] {
            den = &den * &level.t_plus();
        }
        if self.closure == Closure::Linear {
            let t_minus_depth = PolyQ::one() - levels[self.depth - 1].eta_next();
            num = &num * &t_minus_depth;
            den = den.scale(&self.closure_origin_value);
        }
        RationalPair::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::ScheduleRule;

    fn q(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d)
    }

    fn branch(eps: Ratio, depth: usize, closure: Closure) -> BranchSolution {
        let schedule = ScaleSchedule::new(eps, 1, ScheduleRule::PowerTower).unwrap();
        build_branch(schedule, depth, closure).unwrap()
    }

    #[test]
    fn normalization_constants_match_hand_values() {
        // ε = 1/10: C(1) = t′₁₊(0) = 9/10
        assert_eq!(
            branch(q(1, 10), 1, Closure::One).normalization_constant(),
            &q(9, 10)
        );
        // C(2) = (9/10)·t′₂₊(0) with t′₂₊(0) = 1 + (101/100)·(1/100 − 1/101)
        //      = (9/10)·(10001/10000) = 90009/100000
        assert_eq!(
            branch(q(1, 10), 2, Closure::One).normalization_constant(),
            &q(90009, 100_000)
        );
        // ε = 1/3: C(2) = 164/243
        assert_eq!(
            branch(q(1, 3), 2, Closure::One).normalization_constant(),
            &q(164, 243)
        );
        // unscaled cascade: C = 1 at every depth
        assert_eq!(
            branch(Ratio::zero(), 6, Closure::One).normalization_constant(),
            &Ratio::one()
        );
    }

    #[test]
    fn branch_value_at_origin_is_one() {
        for eps in [Ratio::zero(), q(1, 10), q(1, 3)] {
            for closure in [Closure::One, Closure::Linear] {
                for depth in 1..=5 {
                    let b = branch(eps.clone(), depth, closure);
                    let tau = b.jet(6);
                    assert!(tau.coeff(0).is_one(), "τ(0) ≠ 1 at N={depth}");
                    assert_eq!(tau.coeff(1), &Ratio::from_int(-1), "τ′(0) ≠ −1 at N={depth}");
                }
            }
        }
    }

    #[test]
    fn unscaled_one_closure_jet_shows_the_truncation_tail() {
        // ε = 0, N = 2, K = 5: τ₋ = (1−η₀)/(1−η₀⁴) = 1 − η₀ + η₀⁴ − η₀⁵ + …
        let b = branch(Ratio::zero(), 2, Closure::One);
        let tau = b.jet(5);
        let expect = JetQ::from_coeffs(
            alloc::vec![
                Ratio::one(),
                q(-1, 1),
                Ratio::zero(),
                Ratio::zero(),
                Ratio::one(),
                q(-1, 1),
            ],
            5,
        );
        assert_eq!(tau, expect);
    }

    #[test]
    fn unscaled_linear_closure_telescopes_exactly() {
        // ε = 0 with the linear closure: the product telescopes to 1 − η₀ at
        // every depth, in both dense and jet form
        for depth in 1..=8 {
            let b = branch(Ratio::zero(), depth, Closure::Linear);
            let pair = b.rational(crate::cascade::POLY_DEPTH_CAP).unwrap();
            let target = RationalPair::from_poly(PolyQ::one() - PolyQ::var());
            assert!(pair.equivalent(&target), "no telescoping at N={depth}");
            let tau = b.jet(10);
            let expect = JetQ::from_poly(&(PolyQ::one() - PolyQ::var()), 10);
            assert_eq!(tau, expect);
        }
    }

    #[test]
    fn jet_and_rational_pipelines_agree() {
        for eps in [q(1, 10), q(1, 3)] {
            for closure in [Closure::One, Closure::Linear] {
                let b = branch(eps.clone(), 3, closure);
                let order = 8;
                let tau = b.jet(order);
                let pair = b.rational(crate::cascade::POLY_DEPTH_CAP).unwrap();
                // expand num/den as series independently and compare
                let num_jet = JetQ::from_poly(&pair.num, order);
                let den_jet = JetQ::from_poly(&pair.den, order);
                let series = num_jet.mul(&den_jet.recip().unwrap());
                assert_eq!(series, tau);
            }
        }
    }

    #[test]
    fn plus_branch_is_one_plus_the_variable() {
        let b = branch(q(1, 10), 4, Closure::One);
        assert_eq!(b.plus_jet(3), &JetQ::one(3) + &JetQ::var(3));
    }

    #[test]
    fn depth_zero_is_rejected() {
        let schedule = ScaleSchedule::new(q(1, 10), 1, ScheduleRule::PowerTower).unwrap();
        assert!(matches!(
            build_branch(schedule, 0, Closure::One),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn second_coefficient_matches_frozen_values() {
        // c₂ = −4/90009 at ε = 1/10, N = 3 (independently derived)
        let b = branch(q(1, 10), 3, Closure::One);
        assert_eq!(b.jet(2).coeff(2), &q(-4, 90009));
        // and the N = 4 value, whose numerator is already unwieldy
        let b4 = branch(q(1, 10), 4, Closure::One);
        assert_eq!(
            b4.jet(2).coeff(2),
            &Ratio::parse("799919992/90000000000180009").unwrap()
        );
    }
}
