//! Cascade levels: the recursively-built series `η_n′`.

use alloc::vec::Vec;

use crate::cascade::ScaleSchedule;
use crate::exact::{JetQ, PolyQ};
use crate::{Error, Ratio, Result};

/// Default cap on the dense-polynomial pipeline depth. Level `n` has degree
/// `2^n`, so the cap bounds the largest dense degree at `2^12 = 4096`
/// coefficients per series — beyond that the jet pipeline is the right tool.
pub const POLY_DEPTH_CAP: usize = 12;

/// The series operations a cascade level needs, implemented by both series
/// representations. Dense polynomials track every coefficient (cost doubles
/// per level); jets track a fixed window (cost is flat per level).
pub trait SeriesForm: Clone {
    /// The base variable `η_0`, truncated at `order` where that means
    /// anything (dense polynomials ignore the hint).
    fn variable(order: usize) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, s: &Ratio) -> Self;
    fn add_scalar(&self, s: &Ratio) -> Self;
    fn constant_term(&self) -> Ratio;
    fn linear_term(&self) -> Ratio;
}

impl SeriesForm for PolyQ {
    fn variable(_order: usize) -> Self {
        PolyQ::var()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, s: &Ratio) -> Self {
        PolyQ::scale(self, s)
    }
    fn add_scalar(&self, s: &Ratio) -> Self {
        PolyQ::add_scalar(self, s)
    }
    fn constant_term(&self) -> Ratio {
        self.coeff(0)
    }
    fn linear_term(&self) -> Ratio {
        self.coeff(1)
    }
}

impl SeriesForm for JetQ {
    fn variable(order: usize) -> Self {
        JetQ::var(order)
    }
    fn mul(&self, rhs: &Self) -> Self {
        JetQ::mul(self, rhs)
    }
    fn scale(&self, s: &Ratio) -> Self {
        JetQ::scale(self, s)
    }
    fn add_scalar(&self, s: &Ratio) -> Self {
        JetQ::add_scalar(self, s)
    }
    fn constant_term(&self) -> Ratio {
        self.coeff(0).clone()
    }
    fn linear_term(&self) -> Ratio {
        if self.order() >= 1 {
            self.coeff(1).clone()
        } else {
            Ratio::zero()
        }
    }
}

/// One level of the cascade: the index `n`, its scale data, and the shifted
/// series `η_n′ = η_n − ε_n/α_n` as a function of the base variable `η_0`.
///
/// The recursion generating the levels is
///
/// ```text
/// η_0′ = η_0 − ε_0/α_0           (= η_0 whenever ε_0 = 0)
/// η_{n+1} = α_n² (η_n′)² ,   η_{n+1}′ = η_{n+1} − ε_{n+1}/α_{n+1}
/// ```
///
/// so in jet form each step is one truncated square — the degree doubling
/// happens only in the dense form.
#[derive(Clone, Debug)]
pub struct CascadeLevel<S> {
    pub n: usize,
    pub epsilon: Ratio,
    pub alpha: Ratio,
    pub eta_prime: S,
}

impl<S: SeriesForm> CascadeLevel<S> {
    /// The plus-branch factor `t′_{n+} = 1 + α_n η_n′`.
    pub fn t_plus(&self) -> S {
        self.eta_prime.scale(&self.alpha).add_scalar(&Ratio::one())
    }

    /// The minus-branch factor `t′_{n−} = 1 − α_n η_n′`.
    pub fn t_minus(&self) -> S {
        self.eta_prime
            .scale(&-&self.alpha)
            .add_scalar(&Ratio::one())
    }

    /// `t′_{n+}` evaluated at the origin, `1 + α_n η_n′(0)`.
    pub fn t_plus_at_zero(&self) -> Ratio {
        &self.alpha * &self.eta_prime.constant_term() + Ratio::one()
    }

    /// The scaled offset `η̄_n = α_n η_n′` that the level hands to the next
    /// recursion step.
    pub fn scaled_offset(&self) -> S {
        self.eta_prime.scale(&self.alpha)
    }

    /// The unshifted square fed upward: `η_{n+1} = α_n²(η_n′)²`.
    pub fn eta_next(&self) -> S {
        let sq = self.eta_prime.mul(&self.eta_prime);
        sq.scale(&self.alpha.square())
    }
}

fn build_levels<S: SeriesForm>(
    schedule: &ScaleSchedule,
    up_to: usize,
    order: usize,
) -> Vec<CascadeLevel<S>> {
    let mut levels: Vec<CascadeLevel<S>> = Vec::with_capacity(up_to + 1);
    for n in 0..=up_to {
        let epsilon = schedule.epsilon_at(n);
        let alpha = schedule.alpha_at(n);
        let shift = &epsilon / &alpha; // α = 1 + ε ≥ 1 > 0, never zero
        let eta = match levels.last() {
            None => S::variable(order),
            Some(prev) => prev.eta_next(),
        };
        let eta_prime = eta.add_scalar(&-shift);
        levels.push(CascadeLevel {
            n,
            epsilon,
            alpha,
            eta_prime,
        });
    }
    levels
}

/// Levels `0..=up_to` in jet form at truncation order `order`. Uncapped in
/// depth: each step costs one truncated multiply, independent of `n`.
pub fn levels_jet(schedule: &ScaleSchedule, up_to: usize, order: usize) -> Vec<CascadeLevel<JetQ>> {
    build_levels(schedule, up_to, order)
}

/// Levels `0..=up_to` in dense polynomial form. Level `n` has degree `2^n`,
/// so depth is capped (`cap`, usually [`POLY_DEPTH_CAP`]) and exceeding it is
/// a resource error, not a silent truncation.
pub fn levels_poly(
    schedule: &ScaleSchedule,
    up_to: usize,
    cap: usize,
) -> Result<Vec<CascadeLevel<PolyQ>>> {
    if up_to > cap {
        return Err(Error::resource(alloc::format!(
            "dense cascade depth {up_to} exceeds cap {cap} (degree 2^{up_to})"
        )));
    }
    Ok(build_levels(schedule, up_to, 0))
}

/// The origin values `η_n′(0)` for `n = 0..=up_to`, by scalar recursion —
/// enough for normalization constants and convergence diagnostics, at scalar
/// cost.
pub fn scalar_levels(schedule: &ScaleSchedule, up_to: usize) -> Vec<Ratio> {
    let mut out = Vec::with_capacity(up_to + 1);
    let mut eta = Ratio::zero(); // η_0(0) = 0
    for n in 0..=up_to {
        let eps = schedule.epsilon_at(n);
        let alpha = schedule.alpha_at(n);
        let eta_prime = &eta - &(&eps / &alpha);
        // feed the square upward before moving eta_prime into the result
        eta = alpha.square() * eta_prime.square();
        out.push(eta_prime);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::ScheduleRule;

    fn q(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d)
    }

    fn sched(eps: Ratio) -> ScaleSchedule {
        ScaleSchedule::new(eps, 1, ScheduleRule::PowerTower).unwrap()
    }

    #[test]
    fn unscaled_levels_are_iterated_squares() {
        // ε = 0: η_n′ = η_0^{2^n} exactly
        let s = sched(Ratio::zero());
        let levels = levels_poly(&s, 3, POLY_DEPTH_CAP).unwrap();
        for (n, level) in levels.iter().enumerate() {
            let expect = PolyQ::monomial(Ratio::one(), 1 << n);
            assert_eq!(level.eta_prime, expect);
            assert_eq!(level.t_plus(), expect.add_scalar(&Ratio::one()));
        }
    }

    #[test]
    fn scaled_level_one_and_two_match_hand_expansion() {
        // ε = 1/10: η₁ = η₀², η₁′ = η₀² − (1/10)/(11/10) = η₀² − 1/11
        let s = sched(q(1, 10));
        let levels = levels_poly(&s, 2, POLY_DEPTH_CAP).unwrap();
        let l1 = &levels[1];
        assert_eq!(l1.epsilon, q(1, 10));
        assert_eq!(l1.alpha, q(11, 10));
        assert_eq!(
            l1.eta_prime,
            PolyQ::monomial(Ratio::one(), 2).add_scalar(&q(-1, 11))
        );
        // t′₁₊ = 1 + (11/10)(η₀² − 1/11) = 9/10 + (11/10)η₀²
        assert_eq!(
            l1.t_plus(),
            PolyQ::monomial(q(11, 10), 2).add_scalar(&q(9, 10))
        );
        assert_eq!(l1.t_plus_at_zero(), q(9, 10));
        // η₂ = α₁²(η₁′)² = (121/100)(η₀² − 1/11)²
        let l2 = &levels[2];
        let expect_eta2 = PolyQ::monomial(Ratio::one(), 2)
            .add_scalar(&q(-1, 11))
            .mul(&PolyQ::monomial(Ratio::one(), 2).add_scalar(&q(-1, 11)))
            .scale(&q(121, 100));
        assert_eq!(
            l2.eta_prime,
            expect_eta2.add_scalar(&(-(q(1, 100) / q(101, 100))))
        );
    }

    #[test]
    fn jet_levels_agree_with_poly_levels_inside_the_window() {
        let s = sched(q(1, 3));
        let order = 9;
        let jets = levels_jet(&s, 4, order);
        let polys = levels_poly(&s, 4, POLY_DEPTH_CAP).unwrap();
        for (j, p) in jets.iter().zip(&polys) {
            assert_eq!(j.eta_prime, JetQ::from_poly(&p.eta_prime, order));
            assert_eq!(j.t_plus(), JetQ::from_poly(&p.t_plus(), order));
            assert_eq!(j.t_minus(), JetQ::from_poly(&p.t_minus(), order));
        }
    }

    #[test]
    fn upper_levels_are_even_with_degree_two_to_the_n() {
        // for n ≥ 1, η_n′ is an even polynomial of degree exactly 2^n with
        // zero linear coefficient
        let s = sched(q(1, 7));
        let levels = levels_poly(&s, 5, POLY_DEPTH_CAP).unwrap();
        for level in levels.iter().skip(1) {
            let p = &level.eta_prime;
            assert_eq!(p.degree(), Some(1 << level.n));
            assert!(p.coeff(1).is_zero());
            for (i, c) in p.coeffs().iter().enumerate() {
                if i % 2 == 1 {
                    assert!(c.is_zero(), "odd coefficient at level {}", level.n);
                }
            }
        }
    }

    #[test]
    fn scalar_levels_match_series_constant_terms() {
        let s = sched(q(1, 10));
        let scalars = scalar_levels(&s, 6);
        let jets = levels_jet(&s, 6, 4);
        for (x, level) in scalars.iter().zip(&jets) {
            assert_eq!(x, level.eta_prime.coeff(0));
        }
    }

    #[test]
    fn poly_depth_cap_is_a_resource_error() {
        let s = sched(q(1, 10));
        let err = levels_poly(&s, POLY_DEPTH_CAP + 1, POLY_DEPTH_CAP).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        // Jets carry no structural cap — the check lives only on the dense
        // route, independent of the schedule.  (With ε ≠ 0 the level
        // constants double their digit counts at every generation, so deep
        // scaled jets are bounded by arithmetic size, not by this library;
        // the unscaled cascade shows the uncapped shape cheaply.)
        assert_eq!(levels_jet(&sched(Ratio::zero()), 40, 4).len(), 41);
    }
}
