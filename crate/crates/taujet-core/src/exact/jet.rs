//! Truncated power series (jets) over exact rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::exact::PolyQ;
use crate::{Error, Ratio, Result};

/// A power series truncated at a fixed order `K`: coefficients of
/// `x⁰ … x^K`, all retained (including zeros — the truncation order is part
/// of the value, unlike [`PolyQ`]'s trimmed canonical form).
///
/// All arithmetic is exact on the retained window. Binary operations require
/// both operands to share the same order; mixing orders is a programming
/// error and panics, because silently truncating to the shorter operand is
/// how order-tracking bugs hide. Use [`JetQ::truncate`] to lower an order on
/// purpose.
#[derive(Clone, PartialEq, Eq)]
pub struct JetQ {
    coeffs: Vec<Ratio>, // len = order + 1, always ≥ 1
}

impl JetQ {
    pub fn zero(order: usize) -> Self {
        JetQ {
            coeffs: vec![Ratio::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        JetQ::constant(Ratio::one(), order)
    }

    pub fn constant(c: Ratio, order: usize) -> Self {
        let mut coeffs = vec![Ratio::zero(); order + 1];
        coeffs[0] = c;
        JetQ { coeffs }
    }

    /// The identity series `x`, truncated at `order`. (At order 0 the linear
    /// term is outside the window and the jet is zero.)
    pub fn var(order: usize) -> Self {
        let mut coeffs = vec![Ratio::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = Ratio::one();
        }
        JetQ { coeffs }
    }

    /// Builds from ascending coefficients, padding with zeros or discarding
    /// entries beyond `order`.
    pub fn from_coeffs(mut coeffs: Vec<Ratio>, order: usize) -> Self {
        coeffs.resize(order + 1, Ratio::zero());
        JetQ { coeffs }
    }

    /// The first `order + 1` coefficients of a polynomial.
    pub fn from_poly(p: &PolyQ, order: usize) -> Self {
        let coeffs = (0..=order).map(|i| p.coeff(i)).collect();
        JetQ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; `i` must be within the retained window.
    pub fn coeff(&self, i: usize) -> &Ratio {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Ratio] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ratio::is_zero)
    }

    /// Lowest-order nonzero term as `(order, coefficient)`, if any survives
    /// in the window.
    pub fn leading(&self) -> Option<(usize, &Ratio)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    fn check_order(&self, rhs: &JetQ, op: &str) {
        assert!(
            self.order() == rhs.order(),
            "jet order mismatch in {op}: {} vs {}",
            self.order(),
            rhs.order()
        );
    }

    /// Truncated Cauchy product at the shared order.
    pub fn mul(&self, rhs: &JetQ) -> JetQ {
        self.check_order(rhs, "mul");
        let k = self.order();
        let mut coeffs = vec![Ratio::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(k + 1 - i).enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        JetQ { coeffs }
    }

    pub fn scale(&self, s: &Ratio) -> JetQ {
        JetQ {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add_scalar(&self, s: &Ratio) -> JetQ {
        let mut out = self.clone();
        out.coeffs[0] += s;
        out
    }

    /// Multiplicative inverse through the retained order, by the standard
    /// recurrence `b₀ = 1/a₀`, `b_n = −(Σ_{i=1..n} a_i b_{n−i})/a₀`.
    /// The constant term must be nonzero.
    pub fn recip(&self) -> Result<JetQ> {
        if self.coeffs[0].is_zero() {
            return Err(Error::domain(
                "reciprocal of a series with zero constant term",
            ));
        }
        let a0_inv = self.coeffs[0].recip().expect("checked nonzero");
        let k = self.order();
        let mut out = vec![Ratio::zero(); k + 1];
        out[0] = a0_inv.clone();
        for n in 1..=k {
            let mut acc = Ratio::zero();
            for i in 1..=n {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[i] * &out[n - i]);
            }
            out[n] = -(acc * &a0_inv);
        }
        Ok(JetQ { coeffs: out })
    }

    /// Formal derivative; the order drops by one. Requires order ≥ 1.
    pub fn derive(&self) -> JetQ {
        assert!(self.order() >= 1, "derivative of an order-0 jet");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Ratio::from_int(i as i64) * c)
            .collect();
        JetQ { coeffs }
    }

    /// Series logarithm of a jet with constant term exactly 1, via
    /// `log(a) = ∫ a′/a`: the result has the same order, zero constant term,
    /// and satisfies `derive(log a) = derive(a)·recip(a)` at every retained
    /// order.
    pub fn log(&self) -> Result<JetQ> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain(
                "series logarithm requires constant term exactly 1",
            ));
        }
        let k = self.order();
        if k == 0 {
            return Ok(JetQ::zero(0));
        }
        let q = self.derive().mul(&self.recip()?.truncate(k - 1));
        let mut coeffs = vec![Ratio::zero(); k + 1];
        for (i, c) in q.coeffs.iter().enumerate() {
            coeffs[i + 1] = c / &Ratio::from_int((i + 1) as i64);
        }
        Ok(JetQ { coeffs })
    }

    /// Drops coefficients above `order` (which must not exceed the current
    /// order — jets never invent information).
    pub fn truncate(&self, order: usize) -> JetQ {
        assert!(
            order <= self.order(),
            "truncate to order {order} from {}",
            self.order()
        );
        JetQ {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// The reflection `a(−x)`: odd-order coefficients change sign.
    pub fn reflect(&self) -> JetQ {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        JetQ { coeffs }
    }
}

impl Add for &JetQ {
    type Output = JetQ;
    fn add(self, rhs: &JetQ) -> JetQ {
        self.check_order(rhs, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        JetQ { coeffs }
    }
}

impl Sub for &JetQ {
    type Output = JetQ;
    fn sub(self, rhs: &JetQ) -> JetQ {
        self.check_order(rhs, "sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        JetQ { coeffs }
    }
}

impl Neg for &JetQ {
    type Output = JetQ;
    fn neg(self) -> JetQ {
        JetQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for JetQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JetQ[K={}](", self.order())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d)
    }

    fn jet(vals: &[(i64, i64)]) -> JetQ {
        let coeffs: Vec<Ratio> = vals.iter().map(|&(n, d)| q(n, d)).collect();
        let order = coeffs.len() - 1;
        JetQ::from_coeffs(coeffs, order)
    }

    #[test]
    fn geometric_series_reciprocal() {
        // 1/(1 + x) = 1 − x + x² − x³ at K = 3
        let a = &JetQ::one(3) + &JetQ::var(3);
        let r = a.recip().unwrap();
        assert_eq!(r, jet(&[(1, 1), (-1, 1), (1, 1), (-1, 1)]));
        // and the product comes back to 1 within the window
        assert_eq!(a.mul(&r), JetQ::one(3));
    }

    #[test]
    fn truncated_telescoping_example() {
        // (1 − x)·recip(1 − x⁴) at K = 5 is 1 − x + x⁴ − x⁵
        let one_minus_x = jet(&[(1, 1), (-1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let one_minus_x4 = jet(&[(1, 1), (0, 1), (0, 1), (0, 1), (-1, 1), (0, 1)]);
        let got = one_minus_x.mul(&one_minus_x4.recip().unwrap());
        assert_eq!(got, jet(&[(1, 1), (-1, 1), (0, 1), (0, 1), (1, 1), (-1, 1)]));
    }

    #[test]
    fn recip_requires_nonzero_constant_term() {
        assert!(JetQ::var(4).recip().is_err());
    }

    #[test]
    fn mercator_series_from_log() {
        // log(1 + x) = x − x²/2 + x³/3 − x⁴/4 at K = 4
        let a = &JetQ::one(4) + &JetQ::var(4);
        let l = a.log().unwrap();
        assert_eq!(l, jet(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4)]));
        // log of anything with c₀ ≠ 1 is out of domain
        assert!(JetQ::constant(q(2, 1), 4).log().is_err());
        // defining identity: derive(log a) = derive(a)·recip(a)
        let lhs = l.derive();
        let rhs = a.derive().mul(&a.recip().unwrap().truncate(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_drops_order() {
        let a = jet(&[(5, 1), (3, 1), (0, 1), (7, 2)]);
        let d = a.derive();
        assert_eq!(d.order(), 2);
        assert_eq!(d, jet(&[(3, 1), (0, 1), (21, 2)]));
    }

    #[test]
    fn reflection_flips_odd_orders_only() {
        let a = jet(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(a.reflect(), jet(&[(1, 1), (-2, 1), (3, 1), (-4, 1)]));
        assert_eq!(a.reflect().reflect(), a);
    }

    #[test]
    fn from_poly_truncates_and_pads() {
        let p = PolyQ::from_coeffs(vec![q(1, 1), q(2, 1), q(3, 1)]);
        assert_eq!(JetQ::from_poly(&p, 1), jet(&[(1, 1), (2, 1)]));
        assert_eq!(
            JetQ::from_poly(&p, 4),
            jet(&[(1, 1), (2, 1), (3, 1), (0, 1), (0, 1)])
        );
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn mixed_orders_panic() {
        let _ = JetQ::one(3).mul(&JetQ::one(4));
    }

    #[test]
    fn leading_scans_within_window() {
        let a = jet(&[(0, 1), (0, 1), (-4, 1), (9, 1)]);
        let (k, c) = a.leading().unwrap();
        assert_eq!((k, c.clone()), (2, q(-4, 1)));
        assert!(JetQ::zero(6).leading().is_none());
        assert!(JetQ::zero(6).is_zero());
    }
}
