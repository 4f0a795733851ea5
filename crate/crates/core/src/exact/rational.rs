//! Arbitrary-precision rationals kept in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A rational number `p/q` with `gcd(|p|, q) = 1` and `q >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `num/den`, reduced. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_parts(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_parts(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotAUnit { ring: "Q".into() });
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Rational::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including integers (`3/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Rational::from_parts(parse(p)?, q)
            }
            None => Ok(Rational::from_bigint(parse(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_eagerly() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(0, -7).unwrap().to_string(), "0/1");
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3".parse::<Rational>().unwrap().to_string(), "3/1");
        assert_eq!("10/-4".parse::<Rational>().unwrap().to_string(), "-5/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn units_and_inverse() {
        let r = Rational::new(3, 7).unwrap();
        assert!(r.is_unit());
        assert_eq!(Rational::new(2, 3).unwrap().inverse().unwrap(), Rational::new(3, 2).unwrap());
        assert!(Rational::zero().inverse().is_err());
        assert_eq!(r.pow(-2).unwrap(), Rational::new(49, 9).unwrap());
    }
}
