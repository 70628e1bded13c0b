//! Coefficient fields: ℚ and the Gaussian rationals ℚ(i).

mod gauss;
mod rat;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub use gauss::GaussRat;
pub use rat::Rat;

/// An exact coefficient field.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + From<Rat>
    + From<i64>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }

    /// The principal square root, when it lies in the field.
    fn sqrt(&self) -> Option<Self>;

    /// Membership in the canonical "positive" half used to fix signs.
    fn is_positive(&self) -> bool;

    /// The value as a rational number, if it is one.
    fn to_rat(&self) -> Option<Rat>;

    /// Whether the printed form is a plain negative number, so a polynomial
    /// printer may emit it as ` - |c|`.
    fn prints_negative(&self) -> bool;

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc *= self;
        }
        acc
    }
}

impl Field for Rat {
    fn zero() -> Rat {
        Rat::zero()
    }
    fn one() -> Rat {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rat::is_one(self)
    }
    fn inv(&self) -> Option<Rat> {
        self.recip()
    }
    fn sqrt(&self) -> Option<Rat> {
        Rat::sqrt(self)
    }
    fn is_positive(&self) -> bool {
        Rat::is_positive(self)
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn prints_negative(&self) -> bool {
        self.is_negative()
    }
    fn pow(&self, k: u32) -> Rat {
        Rat::pow(self, k)
    }
}

impl Field for GaussRat {
    fn zero() -> GaussRat {
        GaussRat::default()
    }
    fn one() -> GaussRat {
        GaussRat::real(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn sqrt(&self) -> Option<GaussRat> {
        GaussRat::sqrt(self)
    }
    fn is_positive(&self) -> bool {
        GaussRat::is_positive(self)
    }
    fn to_rat(&self) -> Option<Rat> {
        self.is_real().then(|| self.re.clone())
    }
    fn prints_negative(&self) -> bool {
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }
}
