//! Dense exact polynomials and rational-function pairs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Ratio, Result};

/// A dense polynomial over [`Ratio`] in one indeterminate.
///
/// Canonical form: the coefficient vector never ends in a zero, and the zero
/// polynomial is the empty vector. That makes structural equality coincide
/// with mathematical equality, which the cancellation checks in the analysis
/// layer rely on (a telescoped product is *the* polynomial `1 − x`, not an
/// equivalent-but-longer coefficient list).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Ratio>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Ratio::one())
    }

    /// The indeterminate `x`.
    pub fn var() -> Self {
        PolyQ {
            coeffs: vec![Ratio::zero(), Ratio::one()],
        }
    }

    pub fn constant(c: Ratio) -> Self {
        PolyQ::from_coeffs(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: Ratio, k: usize) -> Self {
        let mut coeffs = vec![Ratio::zero(); k];
        coeffs.push(c);
        PolyQ::from_coeffs(coeffs)
    }

    /// Builds from ascending-order coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Ratio>) -> Self {
        while coeffs.last().is_some_and(Ratio::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Ratio {
        self.coeffs.get(i).cloned().unwrap_or_else(Ratio::zero)
    }

    /// Ascending coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[Ratio] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Ratio) -> Ratio {
        let mut acc = Ratio::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derive(&self) -> PolyQ {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Ratio::from_int(i as i64) * c)
            .collect();
        PolyQ::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Ratio) -> PolyQ {
        if s.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add_scalar(&self, s: &Ratio) -> PolyQ {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(s.clone());
        } else {
            coeffs[0] += s;
        }
        PolyQ::from_coeffs(coeffs)
    }

    /// Leading term as `(order, coefficient)` of the *lowest* nonzero order,
    /// or `None` for zero. ("Leading" in the power-series sense used
    /// throughout this crate: the first surviving order near the origin.)
    pub fn leading(&self) -> Option<(usize, &Ratio)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        PolyQ::from_coeffs(coeffs)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        PolyQ::from_coeffs(coeffs)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Ratio::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_poly {
    ($trait:ident, $method:ident) => {
        impl $trait for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_poly!(Add, add);
forward_owned_poly!(Sub, sub);
forward_owned_poly!(Mul, mul);

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{i}")?,
            }
        }
        Ok(())
    }
}

/// An exact rational function held as an explicit numerator/denominator pair.
///
/// No GCD reduction is ever attempted (polynomial GCD over `Ratio` is
/// expensive and nothing here needs canonical quotients); equality of two
/// pairs is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalPair {
    pub num: PolyQ,
    pub den: PolyQ,
}

impl RationalPair {
    /// Builds `num/den`, rejecting an identically-zero denominator.
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        Ok(RationalPair { num, den })
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RationalPair {
            num: p,
            den: PolyQ::one(),
        }
    }

    /// True iff the function is identically zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at `x`; a vanishing denominator there is a domain error.
    pub fn eval(&self, x: &Ratio) -> Result<Ratio> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::domain("rational function pole at evaluation point"));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Derivative by the quotient rule: `(n′d − nd′)/d²`.
    pub fn derive(&self) -> RationalPair {
        let num = &(&self.num.derive() * &self.den) - &(&self.num * &self.den.derive());
        let den = &self.den * &self.den;
        RationalPair { num, den }
    }

    pub fn mul(&self, rhs: &RationalPair) -> RationalPair {
        RationalPair {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    pub fn mul_poly(&self, p: &PolyQ) -> RationalPair {
        RationalPair {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &RationalPair) -> RationalPair {
        RationalPair {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn neg(&self) -> RationalPair {
        RationalPair {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Equality as functions, by cross-multiplication.
    pub fn equivalent(&self, rhs: &RationalPair) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d)
    }

    #[test]
    fn canonical_trailing_zeros_are_trimmed() {
        let p = PolyQ::from_coeffs(vec![q(1, 1), Ratio::zero(), Ratio::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p, PolyQ::one());
        assert_eq!(PolyQ::from_coeffs(vec![Ratio::zero()]), PolyQ::zero());
        assert_eq!(PolyQ::zero().degree(), None);
    }

    #[test]
    fn difference_of_squares() {
        // (1 + x)(1 − x) = 1 − x²
        let one_plus = PolyQ::one() + PolyQ::var();
        let one_minus = PolyQ::one() - PolyQ::var();
        let prod = &one_plus * &one_minus;
        let expect = PolyQ::from_coeffs(vec![q(1, 1), q(0, 1), q(-1, 1)]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn mersenne_style_telescoping_product() {
        // (1 + x)(1 + x²)(1 + x⁴) = 1 + x + … + x⁷
        let f = |k| PolyQ::one() + PolyQ::monomial(Ratio::one(), k);
        let prod = &(&f(1) * &f(2)) * &f(4);
        let expect = PolyQ::from_coeffs(vec![Ratio::one(); 8]);
        assert_eq!(prod, expect);
        // and multiplying by (1 − x) telescopes it to 1 − x⁸
        let tel = &(PolyQ::one() - PolyQ::var()) * &prod;
        assert_eq!(
            tel,
            PolyQ::one() - PolyQ::monomial(Ratio::one(), 8)
        );
    }

    #[test]
    fn eval_and_derive_agree_with_hand_computation() {
        // p = x² − 1/11
        let p = PolyQ::monomial(Ratio::one(), 2).add_scalar(&q(-1, 11));
        assert_eq!(p.eval(&q(1, 10)), q(1, 100) - q(1, 11));
        assert_eq!(p.derive(), PolyQ::monomial(q(2, 1), 1));
        assert_eq!(p.derive().derive(), PolyQ::constant(q(2, 1)));
        assert_eq!(p.derive().derive().derive(), PolyQ::zero());
    }

    #[test]
    fn leading_finds_lowest_nonzero_order() {
        let p = PolyQ::from_coeffs(vec![Ratio::zero(), Ratio::zero(), q(-4, 1), q(7, 2)]);
        let (k, c) = p.leading().unwrap();
        assert_eq!((k, c.clone()), (2, q(-4, 1)));
        assert!(PolyQ::zero().leading().is_none());
    }

    #[test]
    fn rational_pair_derivative_and_equivalence() {
        // d/dx [1/(1 − x)] = 1/(1 − x)²
        let pair = RationalPair::new(PolyQ::one(), PolyQ::one() - PolyQ::var()).unwrap();
        let d = pair.derive();
        let sq = RationalPair::new(
            PolyQ::one(),
            &(PolyQ::one() - PolyQ::var()) * &(PolyQ::one() - PolyQ::var()),
        )
        .unwrap();
        assert!(d.equivalent(&sq));
        assert_eq!(d.eval(&q(1, 2)).unwrap(), q(4, 1));
        assert!(pair.eval(&Ratio::one()).is_err());
        assert!(RationalPair::new(PolyQ::one(), PolyQ::zero()).is_err());
    }

    #[test]
    fn rational_pair_subtraction_detects_identity() {
        // 1/(1−x) − (1+x)/(1−x²) ≡ 0
        let a = RationalPair::new(PolyQ::one(), PolyQ::one() - PolyQ::var()).unwrap();
        let b = RationalPair::new(
            PolyQ::one() + PolyQ::var(),
            PolyQ::one() - PolyQ::monomial(Ratio::one(), 2),
        )
        .unwrap();
        assert!(a.sub(&b).is_zero());
        assert!(a.equivalent(&b));
    }
}
