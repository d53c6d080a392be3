//! Correctly-rounded dyadic floats of configurable precision.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{JetQ, PolyQ};
use crate::{Error, Ratio, Result};

/// A binary floating-point number `±mantissa·2^exp` with an explicit
/// precision in bits.
///
/// Every arithmetic operation computes its result *exactly* in rational
/// arithmetic and then rounds once, to nearest with ties to even, at the
/// smaller of the two operand precisions. There is consequently no hidden
/// error accumulation beyond the single final rounding of each operation,
/// and [`BigFloat::to_ratio`] recovers the stored value exactly.
///
/// Invariant: a nonzero mantissa has exactly `precision` bits (the top bit
/// set); zero is represented by a zero mantissa. Equality and ordering
/// compare the represented *values*, so the same number at two precisions
/// compares equal.
#[derive(Clone)]
pub struct BigFloat {
    negative: bool,
    mantissa: BigUint,
    exp: i64,
    precision: u32,
}

impl BigFloat {
    pub fn zero(precision: u32) -> Self {
        assert!(precision >= 1, "precision must be at least 1 bit");
        BigFloat {
            negative: false,
            mantissa: BigUint::zero(),
            exp: 0,
            precision,
        }
    }

    /// Rounds an exact rational to `precision` bits, nearest-even.
    pub fn from_ratio(r: &Ratio, precision: u32) -> Self {
        assert!(precision >= 1, "precision must be at least 1 bit");
        if r.is_zero() {
            return BigFloat::zero(precision);
        }
        let p = r.numer().magnitude().clone();
        let q = r.denom().magnitude().clone();
        let (mantissa, exp) = round_quotient(&p, &q, precision);
        BigFloat {
            negative: r.is_negative(),
            mantissa,
            exp,
            precision,
        }
    }

    pub fn from_int(v: i64, precision: u32) -> Self {
        BigFloat::from_ratio(&Ratio::from_int(v), precision)
    }

    /// The stored value, exactly.
    pub fn to_ratio(&self) -> Ratio {
        if self.is_zero() {
            return Ratio::zero();
        }
        let mag = BigInt::from(self.mantissa.clone());
        let signed = if self.negative { -mag } else { mag };
        if self.exp >= 0 {
            Ratio::from_bigint(signed << self.exp as u64)
        } else {
            let den = BigInt::one() << (-self.exp) as u64;
            Ratio::from_parts(signed, den).expect("power of two is nonzero")
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative && !self.is_zero()
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        if !out.is_zero() {
            out.negative = !out.negative;
        }
        out
    }

    pub fn abs(&self) -> Self {
        let mut out = self.clone();
        out.negative = false;
        out
    }

    fn joint_precision(&self, rhs: &Self) -> u32 {
        self.precision.min(rhs.precision)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        BigFloat::from_ratio(&(self.to_ratio() + rhs.to_ratio()), self.joint_precision(rhs))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        BigFloat::from_ratio(&(self.to_ratio() - rhs.to_ratio()), self.joint_precision(rhs))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        BigFloat::from_ratio(&(self.to_ratio() * rhs.to_ratio()), self.joint_precision(rhs))
    }

    /// Correctly-rounded quotient; a zero divisor is a domain error.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::domain("float division by zero"));
        }
        let exact = self.to_ratio() / rhs.to_ratio();
        Ok(BigFloat::from_ratio(&exact, self.joint_precision(rhs)))
    }

    /// Value in reduced dyadic form `(negative, odd-or-zero mantissa, exp)`,
    /// used for value comparisons across precisions.
    fn reduced(&self) -> (bool, BigUint, i64) {
        if self.is_zero() {
            return (false, BigUint::zero(), 0);
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        (
            self.negative,
            &self.mantissa >> tz,
            self.exp + tz as i64,
        )
    }

    /// Deterministic scientific-notation rendering. The digit count is
    /// derived from the binary precision (`⌈precision·log₁₀2⌉ + 2`), so a
    /// given value at a given precision always prints the same bytes.
    pub fn to_decimal(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let digits = decimal_digits(self.precision);
        let (mut dec, mut e10) = significand_digits(&self.mantissa, self.exp, digits);
        let ten_pow = pow10(digits);
        if dec >= ten_pow {
            // rounding bumped d.dd…d up to 10.0…0: renormalize
            dec = pow10(digits - 1);
            e10 += 1;
        }
        let s = dec.to_string();
        debug_assert_eq!(s.len() as u64, digits);
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        out.push_str(&s[..1]);
        out.push('.');
        out.push_str(&s[1..]);
        out.push('e');
        if e10 >= 0 {
            out.push('+');
        }
        out.push_str(&e10.to_string());
        out
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.reduced() == other.reduced()
    }
}

impl Eq for BigFloat {}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    /// Exact value ordering (no rounding involved).
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => {
                return if other.negative {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (false, true) => {
                return if self.negative {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (false, false) => {}
        }
        match (self.negative, other.negative) {
            (false, true) => return Ordering::Greater,
            (true, false) => return Ordering::Less,
            (neg, _) => {
                let mag = cmp_magnitude(&self.mantissa, self.exp, &other.mantissa, other.exp);
                if neg {
                    mag.reverse()
                } else {
                    mag
                }
            }
        }
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BigFloat({} @ {} bits)",
            self.to_decimal(),
            self.precision
        )
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

/// Compares `m1·2^{e1}` with `m2·2^{e2}` for positive mantissas.
fn cmp_magnitude(m1: &BigUint, e1: i64, m2: &BigUint, e2: i64) -> Ordering {
    // Positions of the most significant bits decide unless they tie.
    let msb1 = e1 + m1.bits() as i64;
    let msb2 = e2 + m2.bits() as i64;
    match msb1.cmp(&msb2) {
        Ordering::Equal => {
            // Align to a common exponent; the shift is bounded by the
            // mantissa widths because the MSB positions agree.
            if e1 >= e2 {
                (m1 << (e1 - e2) as u64).cmp(m2)
            } else {
                m1.cmp(&(m2 << (e2 - e1) as u64))
            }
        }
        other => other,
    }
}

/// Rounds `p/q` (both positive) to `bits` significant bits, nearest-even,
/// returning `(mantissa, exp)` with `mantissa` exactly `bits` bits wide.
fn round_quotient(p: &BigUint, q: &BigUint, bits: u32) -> (BigUint, i64) {
    let mut exp = (p.bits() as i64 - q.bits() as i64) - bits as i64;
    loop {
        let (num, den) = if exp <= 0 {
            (p << (-exp) as u64, q.clone())
        } else {
            (p.clone(), q << exp as u64)
        };
        let (mut m, rem) = num.div_rem(&den);
        if m.bits() > bits as u64 {
            // quotient came out one bit too wide; shift the window once
            exp += 1;
            continue;
        }
        match (&rem << 1u32).cmp(&den) {
            Ordering::Greater => m += 1u32,
            Ordering::Equal => {
                if m.is_odd() {
                    m += 1u32;
                }
            }
            Ordering::Less => {}
        }
        if m.bits() > bits as u64 {
            // rounding carried into a new top bit (m = 2^bits)
            m >>= 1u32;
            exp += 1;
        }
        debug_assert_eq!(m.bits(), bits as u64);
        return (m, exp);
    }
}

fn decimal_digits(precision: u32) -> u64 {
    // ⌈precision·log₁₀2⌉ + 2 with log₁₀2 ≈ 30103/100000 (an overestimate is
    // harmless, a deterministic formula is the point)
    (precision as u64 * 30103).div_ceil(100000) + 2
}

fn pow10(k: u64) -> BigUint {
    BigUint::from(10u32).pow(k as u32)
}

/// Compares `m·2^e` with `10^k` exactly.
fn cmp_pow10(m: &BigUint, e: i64, k: i64) -> Ordering {
    // Clear denominators: m·2^e ? 10^k becomes one of four integer shapes.
    match (e >= 0, k >= 0) {
        (true, true) => (m << e as u64).cmp(&pow10(k as u64)),
        (true, false) => (&(m << e as u64) * &pow10((-k) as u64)).cmp(&BigUint::one()),
        (false, true) => m.cmp(&(&pow10(k as u64) << (-e) as u64)),
        (false, false) => (m * &pow10((-k) as u64)).cmp(&(BigUint::one() << (-e) as u64)),
    }
}

/// First `digits` decimal digits of `m·2^e` (rounded half-even) plus the
/// decimal exponent of the leading digit.
fn significand_digits(m: &BigUint, e: i64, digits: u64) -> (BigUint, i64) {
    // initial estimate of floor(log10(m·2^e)) from the MSB position
    let pos = e + m.bits() as i64 - 1;
    let mut e10 = (pos * 30103).div_euclid(100000);
    while cmp_pow10(m, e, e10 + 1) != Ordering::Less {
        e10 += 1;
    }
    while cmp_pow10(m, e, e10) == Ordering::Less {
        e10 -= 1;
    }
    // significand = round(m·2^e / 10^j) with j = e10 − digits + 1
    let j = e10 - digits as i64 + 1;
    let mut num = m.clone();
    let mut den = BigUint::one();
    if j >= 0 {
        den *= pow10(j as u64);
    } else {
        num *= pow10((-j) as u64);
    }
    if e >= 0 {
        num <<= e as u64;
    } else {
        den <<= (-e) as u64;
    }
    let (mut d, rem) = num.div_rem(&den);
    match (&rem << 1u32).cmp(&den) {
        Ordering::Greater => d += 1u32,
        Ordering::Equal => {
            if d.is_odd() {
                d += 1u32;
            }
        }
        Ordering::Less => {}
    }
    (d, e10)
}

/// Horner evaluation of exact coefficients at a float point. Each
/// coefficient is rounded once on entry (at the point's precision) and each
/// multiply/add rounds once, per the `BigFloat` operation contract.
pub fn float_eval(coeffs: &[Ratio], x: &BigFloat) -> BigFloat {
    let prec = x.precision();
    let mut acc = BigFloat::zero(prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&BigFloat::from_ratio(c, prec));
    }
    acc
}

impl PolyQ {
    /// Rounded evaluation at a float point; see [`float_eval`].
    pub fn eval_float(&self, x: &BigFloat) -> BigFloat {
        float_eval(self.coeffs(), x)
    }
}

impl JetQ {
    /// Rounded evaluation of the truncated series at a float point; see
    /// [`float_eval`].
    pub fn eval_float(&self, x: &BigFloat) -> BigFloat {
        float_eval(self.coeffs(), x)
    }
}
