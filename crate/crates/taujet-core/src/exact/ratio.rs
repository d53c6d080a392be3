//! Arbitrary-precision rational scalars.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// An exact rational number, always held in canonical form: reduced to lowest
/// terms with a strictly positive denominator.
///
/// `Ratio` is a thin newtype over [`num_rational::BigRational`]; canonical
/// form is maintained by that crate's constructors and arithmetic. The wrapper
/// pins down the textual contract used throughout this workspace — parsing and
/// printing as `"p/q"` with an explicit denominator, even when `q = 1` — and
/// keeps fallible operations (`recip`, parsing) in `Result` rather than
/// panicking.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(BigRational);

impl Ratio {
    pub fn zero() -> Self {
        Ratio(BigRational::zero())
    }

    pub fn one() -> Self {
        Ratio(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Ratio(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact quotient `n/d` of two machine integers. Panics if `d = 0`; meant
    /// for literals in code and tests. Use [`Ratio::parse`] for external input.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "Ratio::new with zero denominator");
        Ratio(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Ratio(BigRational::from_integer(n))
    }

    /// Builds `n/d` from big integers, rejecting `d = 0`.
    pub fn from_parts(n: BigInt, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::domain("rational with zero denominator"));
        }
        Ok(Ratio(BigRational::new(n, d)))
    }

    /// Parses `"p/q"` or a bare integer `"p"`. Signs are accepted on either
    /// part and normalized into the numerator; `q = 0` is a domain error.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let numer = BigInt::from_str(num_str)
            .map_err(|_| Error::domain(alloc::format!("unparseable rational {s:?}")))?;
        let denom = match den_str {
            Some(d) => BigInt::from_str(d)
                .map_err(|_| Error::domain(alloc::format!("unparseable rational {s:?}")))?,
            None => BigInt::one(),
        };
        Ratio::from_parts(numer, denom)
    }

    /// Numerator of the canonical form (carries the sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the canonical form (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Ratio(self.0.abs())
    }

    /// `self^exp` for a non-negative exponent; `0^0 = 1` by the usual
    /// power-series convention.
    pub fn pow(&self, exp: u32) -> Self {
        Ratio(self.0.pow(exp as i32))
    }

    /// Exact reciprocal; zero has none.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(Ratio(self.0.recip()))
    }

    /// Exact square, a common enough case to deserve a name.
    pub fn square(&self) -> Self {
        Ratio(&self.0 * &self.0)
    }
}

impl fmt::Display for Ratio {
    /// Canonical `"p/q"` rendering with the denominator always written out,
    /// so `1` prints as `1/1`. Round-trips through [`Ratio::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ratio({self})")
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ratio::parse(s)
    }
}

impl Default for Ratio {
    fn default() -> Self {
        Ratio::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Ratio {
    type Output = Ratio;

    /// Exact division. Panics on a zero divisor; fallible callers should use
    /// [`Ratio::recip`] first.
    fn div(self, rhs: &Ratio) -> Ratio {
        assert!(!rhs.is_zero(), "Ratio division by zero");
        Ratio(&self.0 / &rhs.0)
    }
}

impl Div for Ratio {
    type Output = Ratio;
    fn div(self, rhs: Ratio) -> Ratio {
        (&self).div(&rhs)
    }
}

impl Neg for Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-self.0)
    }
}

impl Neg for &Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-&self.0)
    }
}

impl AddAssign<&Ratio> for Ratio {
    fn add_assign(&mut self, rhs: &Ratio) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Ratio> for Ratio {
    fn sub_assign(&mut self, rhs: &Ratio) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Ratio> for Ratio {
    fn mul_assign(&mut self, rhs: &Ratio) {
        self.0 *= &rhs.0;
    }
}
