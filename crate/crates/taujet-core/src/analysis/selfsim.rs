//! The self-similar branch-matching identity at a cascade level.
//!
//! At level 0 the construction rests on the identity
//!
//! ```text
//! t′₋/t′₊ − t′₋·(df/dη̄)/f = 1 ,
//! ```
//!
//! where `t′_± = 1 ± η̄`, `η̄` is the level's scaled offset, and
//! `f = 1 − η̄²` is the next level's linear solution expressed in `η̄`. The
//! open structural question is whether the rescaled levels satisfy the same
//! relation with their own `α`. They do — exactly, for every `α`: writing
//! `t′_± = 1 ± αu` and `f = 1 − α²u²`, the combination collapses to
//! `(1 − α²u²)(−2αu) + 2αu(1 − α²u²) = 0` after clearing denominators, so
//! the checker below reports an identically-zero numerator at every level of
//! every schedule. The checker still *computes* rather than assumes this:
//! it is the reproducible certificate for that answer.

use crate::cascade::ScaleSchedule;
use crate::exact::{PolyQ, RationalPair};
use crate::Ratio;

/// The identity defect at one level, as an exact rational function of the
/// level variable `u = η_n′`.
#[derive(Clone, Debug)]
pub struct SelfSimilarReport {
    pub level: usize,
    pub alpha: Ratio,
    /// `t′₋/t′₊ − t′₋·f′/f − 1` with all members expanded in `u`; the
    /// identity holds iff this is the zero function.
    pub defect: RationalPair,
    /// `defect.num == 0`, i.e. the identity holds exactly.
    pub holds_exactly: bool,
}

/// Checks the matching identity at level `n` of `schedule`, exactly, in the
/// level's own variable.
pub fn selfsimilar_identity(schedule: &ScaleSchedule, level: usize) -> SelfSimilarReport {
    let alpha = schedule.alpha_at(level);
    let u = PolyQ::var();
    // the scaled offset η̄ = α·u, and the three actors as polynomials in u
    let eta_bar = u.scale(&alpha);
    let t_minus = PolyQ::one() - eta_bar.clone();
    let t_plus = PolyQ::one() + eta_bar.clone();
    let f = PolyQ::one() - &eta_bar * &eta_bar;
    // df/dη̄ = −2η̄, then everything over the common denominator t′₊·f
    let f_prime = eta_bar.scale(&Ratio::from_int(-2));
    let num = &(&(&t_minus * &f) - &(&(&t_plus * &t_minus) * &f_prime)) - &(&t_plus * &f);
    let den = &t_plus * &f;
    let defect = RationalPair::new(num, den).expect("t′₊·f has unit constant term");
    let holds_exactly = defect.is_zero();
    SelfSimilarReport {
        level,
        alpha,
        defect,
        holds_exactly,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::ScheduleRule;

    fn q(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d)
    }

    #[test]
    fn identity_holds_at_every_probed_level_and_scale() {
        for eps in [Ratio::zero(), q(1, 10), q(1, 3)] {
            let s = ScaleSchedule::new(eps, 1, ScheduleRule::PowerTower).unwrap();
            for level in 0..=3 {
                let rep = selfsimilar_identity(&s, level);
                assert!(
                    rep.holds_exactly,
                    "defect {:?} at level {level}",
                    rep.defect
                );
                assert!(rep.defect.is_zero());
            }
        }
    }

    #[test]
    fn level_zero_alpha_is_one_and_the_identity_is_the_base_matching() {
        let s = ScaleSchedule::new(q(1, 10), 1, ScheduleRule::PowerTower).unwrap();
        let rep = selfsimilar_identity(&s, 0);
        assert_eq!(rep.alpha, Ratio::one());
        assert!(rep.holds_exactly);
    }

    #[test]
    fn a_wrong_closure_choice_would_not_satisfy_the_identity() {
        // sanity that the checker can fail: replace f by the `one` closure
        // (f = 1, f′ = 0); then t′₋/t′₊ − 1 ≠ 0
        let alpha = q(11, 10);
        let u = PolyQ::var();
        let eta_bar = u.scale(&alpha);
        let t_minus = PolyQ::one() - eta_bar.clone();
        let t_plus = PolyQ::one() + eta_bar;
        let num = &t_minus - &t_plus;
        let defect = RationalPair::new(num, t_plus).unwrap();
        assert!(!defect.is_zero());
    }
}
