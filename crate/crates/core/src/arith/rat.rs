//! Exact rational numbers.
//!
//! `Rat` wraps a reduced `BigRational`: the denominator is positive, numerator
//! and denominator are coprime, and zero is stored as `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rat {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num.into(), den))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn recip(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn pow(&self, k: u32) -> Rat {
        Rat(num_traits::pow(self.0.clone(), k as usize))
    }

    /// Non-negative rational square root, when one exists.
    pub fn sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = self.0.numer();
        let d = self.0.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rat(BigRational::new(rn, rd)))
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Number of decimal digits in the larger of numerator and denominator.
    pub fn digits(&self) -> usize {
        let n = self.0.numer().abs().to_string().len();
        let d = self.0.denom().to_string().len();
        n.max(d)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `int` or `int/uint`, with an optional leading sign. No floats.
impl FromStr for Rat {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Rat, ParseError> {
        let t = s.trim();
        let bad = |msg: &str| ParseError::Syntax { pos: 0, msg: format!("{msg}: {s:?}") };
        let (num_s, den_s) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let digits_ok = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
        let unsigned = num_s.strip_prefix(['-', '+']).unwrap_or(num_s);
        if !digits_ok(unsigned) {
            return Err(bad("expected an integer or p/q rational"));
        }
        let num: BigInt = num_s.parse().map_err(|_| bad("bad integer"))?;
        let den: BigInt = match den_s {
            Some(d) if digits_ok(d) => d.parse().map_err(|_| bad("bad denominator"))?,
            Some(_) => return Err(bad("bad denominator")),
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                Rat(self.0.$m(o.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &'a Rat) -> Rat {
                Rat(self.0.$m(&o.0))
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                Rat((&self.0).$m(o.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, o: &'b Rat) -> Rat {
                Rat((&self.0).$m(&o.0))
            }
        }
        impl $atr<Rat> for Rat {
            fn $am(&mut self, o: Rat) {
                self.0.$am(o.0);
            }
        }
        impl<'a> $atr<&'a Rat> for Rat {
            fn $am(&mut self, o: &'a Rat) {
                self.0.$am(&o.0);
            }
        }
    };
}

rat_binop!(Add, add, AddAssign, add_assign);
rat_binop!(Sub, sub, SubAssign, sub_assign);
rat_binop!(Mul, mul, MulAssign, mul_assign);

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, o: Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        Rat(self.0 / o.0)
    }
}

impl<'a> Div<&'a Rat> for Rat {
    type Output = Rat;
    fn div(self, o: &'a Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        Rat(self.0 / &o.0)
    }
}

impl<'b> Div<&'b Rat> for &Rat {
    type Output = Rat;
    fn div(self, o: &'b Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        Rat(&self.0 / &o.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rat::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(Rat::new(0, -7), Rat::zero());
        assert_eq!(Rat::new(0, -7).denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/2".parse::<Rat>().unwrap().to_string(), "3/2");
        assert_eq!("-9".parse::<Rat>().unwrap(), Rat::from(-9));
        assert_eq!("4/6".parse::<Rat>().unwrap().to_string(), "2/3");
        assert!("1.5".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
        assert!("1/-2".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(Rat::from(5184).sqrt(), Some(Rat::from(72)));
        assert_eq!(Rat::new(9, 4).sqrt(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::from(2).sqrt(), None);
        assert_eq!(Rat::from(-4).sqrt(), None);
        assert_eq!(Rat::zero().sqrt(), Some(Rat::zero()));
    }
}
