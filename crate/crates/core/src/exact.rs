//! Exact rational scalars and their decimal rendering.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational. Arithmetic never rounds; floats only
/// appear through [`ExactScalar::to_f64`] and [`ExactScalar::to_decimal`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    /// Exact value of a finite float.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self)
    }

    pub fn from_ratio(ratio: BigRational) -> Self {
        Self(ratio)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// `self^exp` for a possibly negative exponent. Panics on `0^negative`.
    pub fn pow(&self, exp: i32) -> Self {
        Self(num_traits::Pow::pow(&self.0, exp))
    }

    /// Nearest `f64` (through a 17-digit decimal, so huge values become
    /// infinite instead of failing).
    pub fn to_f64(&self) -> f64 {
        if let (Some(n), Some(d)) = (self.numer().to_i64(), self.denom().to_i64()) {
            if n.unsigned_abs() < (1 << 53) && d < (1 << 53) {
                return n as f64 / d as f64;
            }
        }
        self.to_decimal(17).parse().unwrap_or(f64::NAN)
    }

    /// Natural logarithm. Works for magnitudes beyond the `f64` range.
    /// Returns NaN for non-positive values.
    pub fn ln(&self) -> f64 {
        if !self.is_positive() {
            return f64::NAN;
        }
        ln_big(self.numer()) - ln_big(self.denom())
    }

    /// Decimal rendering with `sig` significant digits, formatted like C's
    /// `%.{sig}g`: trailing zeros are dropped and exponents outside
    /// `[-4, sig)` switch to scientific notation.
    pub fn to_decimal(&self, sig: usize) -> String {
        format_significant(&self.0, sig.max(1))
    }
}

impl fmt::Display for ExactScalar {
    /// Integers print bare, everything else as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<u64> for ExactScalar {
    fn from(v: u64) -> Self {
        Self(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<u128> for ExactScalar {
    fn from(v: u128) -> Self {
        Self(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for ExactScalar {
    fn from(v: BigInt) -> Self {
        Self(BigRational::from_integer(v))
    }
}

impl From<BigUint> for ExactScalar {
    fn from(v: BigUint) -> Self {
        Self(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigRational> for ExactScalar {
    fn from(v: BigRational) -> Self {
        Self(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl std::iter::Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 512 {
        return x.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

fn pow10(exp: u32) -> BigInt {
    num_traits::Pow::pow(BigInt::from(10u32), exp)
}

fn format_significant(value: &BigRational, sig: usize) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let num = value.numer().abs();
    let den = value.denom().clone();

    // Find e with 10^e <= num/den < 10^(e+1).
    let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
    let cmp_pow = |e: i64| -> std::cmp::Ordering {
        // compare num/den with 10^e
        if e >= 0 {
            num.cmp(&(&den * pow10(e as u32)))
        } else {
            (&num * pow10((-e) as u32)).cmp(&den)
        }
    };
    if cmp_pow(exp) == std::cmp::Ordering::Less {
        exp -= 1;
    }

    // mantissa = round(num/den * 10^(sig-1-exp)), ties away from zero
    let shift = sig as i64 - 1 - exp;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (&num * pow10(shift as u32), den.clone())
    } else {
        (num.clone(), &den * pow10((-shift) as u32))
    };
    let (q, r) = scaled_num.div_rem(&scaled_den);
    let mut mantissa = if (&r * 2u32) >= scaled_den { q + 1u32 } else { q };
    if mantissa == pow10(sig as u32) {
        mantissa /= 10u32;
        exp += 1;
    }

    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), sig);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp < -4 || exp >= sig as i64 {
        let (lead, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        out.push_str(lead);
        if !rest.is_empty() {
            out.push('.');
            out.push_str(rest);
        }
        let sign = if exp < 0 { '-' } else { '+' };
        out.push_str(&format!("e{}{:02}", sign, exp.abs()));
    } else if exp >= 0 {
        let split = exp as usize + 1;
        let (int_part, frac) = digits.split_at(split);
        out.push_str(int_part);
        let frac = frac.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(digits.trim_end_matches('0'));
    }
    out
}
