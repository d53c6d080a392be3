//! Scale-defect schedules `ε_0, ε_1, ε_2, …`.

use alloc::vec::Vec;

use crate::{Error, Ratio, Result};

/// How the scale defects are generated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScheduleRule {
    /// Squares cascading from `ε` at the generation threshold `k`:
    /// `ε_k = ε`, `ε_{n+1} = ε_n²` — i.e. `ε_n = ε^{2^{n−k}}` for `n ≥ k`.
    /// This is the default schedule.
    PowerTower,
    /// Same cascade started one squaring deeper: `ε_k = ε²`, so
    /// `ε_n = ε^{2^{n−k+1}}` for `n ≥ k`.
    LiteralPowerTower,
    /// Explicit per-level defects, indexed from level 0. Levels beyond the
    /// end of the list are unscaled (`ε_n = 0`).
    Explicit(Vec<Ratio>),
}

/// A complete scale assignment: the base defect `ε`, the generation index
/// `k ≥ 1` at which scaling switches on, and the generating rule.
///
/// Levels below the generation threshold are unscaled. Level 0 is *always*
/// unscaled under the formula rules; an [`ScheduleRule::Explicit`] list may
/// set `ε_0 ≠ 0`, which construction deliberately permits — `ε_0 = 0` is a
/// cascade invariant, checked downstream, not a type invariant, so that
/// corrupted schedules can be diagnosed rather than made unrepresentable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleSchedule {
    epsilon: Ratio,
    generation: usize,
    rule: ScheduleRule,
}

impl ScaleSchedule {
    /// Validates and builds a schedule: `0 ≤ ε < 1`, `k ≥ 1`, and every
    /// explicit entry in `[0, 1)`.
    pub fn new(epsilon: Ratio, generation: usize, rule: ScheduleRule) -> Result<Self> {
        if epsilon.is_negative() || epsilon >= Ratio::one() {
            return Err(Error::domain(alloc::format!(
                "scale parameter {epsilon} outside [0, 1)"
            )));
        }
        if generation == 0 {
            return Err(Error::domain("generation index must be at least 1"));
        }
        if let ScheduleRule::Explicit(entries) = &rule {
            for (n, e) in entries.iter().enumerate() {
                if e.is_negative() || e >= &Ratio::one() {
                    return Err(Error::domain(alloc::format!(
                        "explicit schedule entry ε_{n} = {e} outside [0, 1)"
                    )));
                }
            }
        }
        Ok(ScaleSchedule {
            epsilon,
            generation,
            rule,
        })
    }

    /// Builds a schedule checked against an intended cascade depth `N`: the
    /// generation threshold must not exceed `N`, and an explicit list must
    /// cover levels `0..=N`.
    pub fn make(epsilon: Ratio, depth: usize, generation: usize, rule: ScheduleRule) -> Result<Self> {
        if generation > depth {
            return Err(Error::domain(alloc::format!(
                "generation index {generation} exceeds cascade depth {depth}"
            )));
        }
        if let ScheduleRule::Explicit(entries) = &rule {
            if entries.len() < depth + 1 {
                return Err(Error::domain(alloc::format!(
                    "explicit schedule lists {} levels but depth {depth} needs {}",
                    entries.len(),
                    depth + 1
                )));
            }
        }
        ScaleSchedule::new(epsilon, generation, rule)
    }

    pub fn epsilon(&self) -> &Ratio {
        &self.epsilon
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn rule(&self) -> &ScheduleRule {
        &self.rule
    }

    /// The defect `ε_n` of level `n`.
    pub fn epsilon_at(&self, n: usize) -> Ratio {
        match &self.rule {
            ScheduleRule::Explicit(entries) => {
                entries.get(n).cloned().unwrap_or_else(Ratio::zero)
            }
            ScheduleRule::PowerTower | ScheduleRule::LiteralPowerTower => {
                if n < self.generation {
                    return Ratio::zero();
                }
                // iterated squaring from the threshold; exact and free of
                // giant-exponent bookkeeping
                let mut e = match self.rule {
                    ScheduleRule::PowerTower => self.epsilon.clone(),
                    _ => self.epsilon.square(),
                };
                for _ in self.generation..n {
                    e = e.square();
                }
                e
            }
        }
    }

    /// The scale factor `α_n = 1 + ε_n`.
    pub fn alpha_at(&self, n: usize) -> Ratio {
        self.epsilon_at(n) + Ratio::one()
    }

    /// Whether the origin level is unscaled (`ε_0 = 0`) — the cascade
    /// invariant that makes the level-0 plus/minus factors exactly `1 ± η_0`.
    pub fn origin_is_unscaled(&self) -> bool {
        self.epsilon_at(0).is_zero()
    }

    /// `ε_0..=ε_n` as a vector, convenient for reports.
    pub fn prefix(&self, n: usize) -> Vec<Ratio> {
        (0..=n).map(|i| self.epsilon_at(i)).collect()
    }
}
