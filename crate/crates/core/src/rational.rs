//! Exact rational scalars.
//!
//! Every parameter (`b`, `λ`, `α`), every coefficient of `h(t)` and every
//! polynomial coefficient lives here. Values are always in lowest terms with a
//! positive denominator.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Pow, Reciprocal};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational as Q;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Q);

impl Rational {
    pub fn zero() -> Self {
        Rational(Q::ZERO)
    }

    pub fn one() -> Self {
        Rational(Q::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Q::from(n))
    }

    /// `num / den`; `None` when `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            None
        } else {
            Some(Rational(Q::from_signeds(num, den)))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Q::ZERO
    }

    pub fn is_one(&self) -> bool {
        self.0 == Q::ONE
    }

    pub fn is_negative(&self) -> bool {
        self.0 < Q::ZERO
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denominator_ref() == 1u32
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational((&self.0).reciprocal()))
        }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    ///
    /// # Panics
    /// On `0^e` with `e < 0`.
    pub fn pow(&self, e: i64) -> Self {
        assert!(!(self.is_zero() && e < 0), "zero raised to a negative power");
        Rational((&self.0).pow(e))
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Numerator and denominator as machine integers, when they fit.
    pub fn to_i128_parts(&self) -> Option<(i128, u128)> {
        let (n, d) = self.0.numerator_and_denominator_ref();
        let n = u128::try_from(n).ok()?;
        let d = u128::try_from(d).ok()?;
        let n = i128::try_from(n).ok()?;
        Some((if self.is_negative() { -n } else { n }, d))
    }

    /// The value as an `i64`, when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        let (n, d) = self.to_i128_parts()?;
        if d != 1 {
            return None;
        }
        i64::try_from(n).ok()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Accepts `p`, `-p`, `p/q` and `-p/q` with decimal digits.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        Q::from_str(trimmed).map(Rational).map_err(|_| ParseError {
            position: 0,
            message: format!("invalid rational literal `{trimmed}`"),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// # Panics
    /// On division by zero.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
    }
}

impl AddAssign<&Rational> for Rational {
    #[inline]
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    #[inline]
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    #[inline]
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    #[inline]
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == Q::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&Q::from(*other))
    }
}

/// `n choose k` as a rational; zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> Rational {
    if k < 0 || k > n as i64 {
        return Rational::zero();
    }
    let k = k as u32;
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    Rational(Q::from(acc))
}

/// `1 / k!`, with the convention `k! = 1` for `k < 0`.
pub fn inv_factorial(k: i64) -> Rational {
    let mut acc = Rational::one();
    for i in 2..=k.max(0) {
        acc = acc * Rational::from_int(i);
    }
    acc.recip().expect("factorial is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_signed() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(0, 5).unwrap(), Rational::zero());
        assert!(Rational::new(1, 0).is_none());
    }

    #[test]
    fn parse_literals() {
        assert_eq!("3/2".parse::<Rational>().unwrap(), Rational::new(3, 2).unwrap());
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::from_int(-7));
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn negative_powers() {
        let third = Rational::new(1, 3).unwrap();
        assert_eq!(third.pow(-2), Rational::from_int(9));
        assert_eq!(third.pow(0), Rational::one());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), Rational::from_int(10));
        assert_eq!(binomial(3, 4), Rational::zero());
        assert_eq!(binomial(3, -1), Rational::zero());
        assert_eq!(inv_factorial(3), Rational::new(1, 6).unwrap());
        assert_eq!(inv_factorial(-1), Rational::one());
        assert_eq!(inv_factorial(0), Rational::one());
    }
}
