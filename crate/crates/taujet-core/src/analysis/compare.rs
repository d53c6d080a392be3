//! Long-horizon comparison of the standard and scale-affected values.
//!
//! Far from the matching region the cascade's net long-horizon effect is the
//! compensated drift `τ_g(t) = t + ε·τ(t)` against the standard `τ_s(t) = t`:
//! the absolute deviation grows linearly (`ε·t`) while the relative
//! deviation stays pinned at `ε`. The table reports both on an evenly-spaced
//! grid. Every cell is computed exactly in rationals and rounded once, so
//! the only error in any entry is a single correct rounding at the requested
//! precision.

use alloc::vec::Vec;

use crate::exact::BigFloat;
use crate::{Error, Ratio, Result};

/// One grid row of the comparison table.
#[derive(Clone, Debug)]
pub struct CompareRow {
    pub t: BigFloat,
    pub tau_s: BigFloat,
    pub tau_g: BigFloat,
    pub abs_dev: BigFloat,
    pub rel_dev: BigFloat,
}

/// Builds the comparison table on the inclusive grid
/// `t_i = t_lo + i·(t_hi − t_lo)/(steps − 1)`.
///
/// Preconditions: `t_lo > 0` (the horizon lives on the positive axis),
/// `t_hi ≥ t_lo`, `steps ≥ 2`.
pub fn long_horizon_compare(
    epsilon: &Ratio,
    t_lo: &Ratio,
    t_hi: &Ratio,
    steps: usize,
    precision: u32,
) -> Result<Vec<CompareRow>> {
    if t_lo.is_negative() || t_lo.is_zero() {
        return Err(Error::domain("grid start must be positive"));
    }
    if t_hi < t_lo {
        return Err(Error::domain("grid end must not precede its start"));
    }
    if steps < 2 {
        return Err(Error::domain("grid needs at least 2 steps"));
    }
    let span = t_hi - t_lo;
    let denom = Ratio::from_int((steps - 1) as i64);
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let t = t_lo + &(&(&span * &Ratio::from_int(i as i64)) / &denom);
        // exact values first, one rounding per reported cell
        let tau_s = t.clone();
        let abs = epsilon * &t;
        let tau_g = &t + &abs;
        rows.push(CompareRow {
            t: BigFloat::from_ratio(&t, precision),
            tau_s: BigFloat::from_ratio(&tau_s, precision),
            tau_g: BigFloat::from_ratio(&tau_g, precision),
            abs_dev: BigFloat::from_ratio(&abs, precision),
            rel_dev: BigFloat::from_ratio(epsilon, precision),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d)
    }

    #[test]
    fn grid_endpoints_and_spacing_are_exact() {
        let rows =
            long_horizon_compare(&q(1, 1000), &Ratio::from_int(1), &Ratio::from_int(1000), 4, 128)
                .unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].t.to_ratio(), Ratio::from_int(1));
        assert_eq!(rows[1].t.to_ratio(), Ratio::from_int(334));
        assert_eq!(rows[3].t.to_ratio(), Ratio::from_int(1000));
    }

    #[test]
    fn deviations_scale_linearly_with_pinned_relative_error() {
        // ε = 1/1000 at t = 1000: abs_dev is exactly 1, rel_dev exactly ε
        let rows =
            long_horizon_compare(&q(1, 1000), &Ratio::from_int(1), &Ratio::from_int(1000), 2, 256)
                .unwrap();
        let last = &rows[1];
        assert_eq!(last.abs_dev.to_ratio(), Ratio::one());
        assert_eq!(last.tau_g.to_ratio(), Ratio::from_int(1001));
        assert_eq!(last.tau_s.to_ratio(), Ratio::from_int(1000));
        // 1/1000 is not dyadic, so rel_dev carries exactly one rounding
        let err = (last.rel_dev.to_ratio() - q(1, 1000)).abs();
        let bound = q(1, 1000) * q(1, 2).pow(200);
        assert!(err <= bound);
    }

    #[test]
    fn preconditions_reject_bad_grids() {
        let one = Ratio::from_int(1);
        assert!(long_horizon_compare(&q(1, 10), &Ratio::zero(), &one, 2, 64).is_err());
        assert!(long_horizon_compare(&q(1, 10), &one, &q(1, 2), 2, 64).is_err());
        assert!(long_horizon_compare(&q(1, 10), &one, &one, 1, 64).is_err());
        // a degenerate-but-legal grid: t_lo = t_hi with 2 steps
        let rows = long_horizon_compare(&q(1, 10), &one, &one, 2, 64).unwrap();
        assert_eq!(rows[0].t, rows[1].t);
    }
}
