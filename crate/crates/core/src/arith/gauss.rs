//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! The tangent frames at the vertices p₁ and p₃ need square roots of
//! negative λ-values whenever the frame at p₀ is rational, so the local
//! analysis runs over ℚ(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> GaussRat {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> GaussRat {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn i() -> GaussRat {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn conj(&self) -> GaussRat {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Square root with non-negative real part (positive imaginary part on the
    /// imaginary axis), when it lies in ℚ(i).
    pub fn sqrt(&self) -> Option<GaussRat> {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                Some(GaussRat::new(Rat::zero(), (-&self.re).sqrt()?))
            } else {
                Some(GaussRat::real(self.re.sqrt()?))
            };
        }
        // (p + qi)² = a + bi  ⇒  p² = (a + |z|)/2, q = b/(2p)
        let modulus = self.norm().sqrt()?;
        let half = Rat::new(1, 2);
        let p = ((&self.re + &modulus) * &half).sqrt()?;
        let q = &self.im / &(Rat::from(2) * &p);
        Some(GaussRat::new(p, q))
    }

    /// Canonical half-plane: real part positive, or real part zero and
    /// imaginary part positive.
    pub fn is_positive(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && self.im.is_positive())
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> GaussRat {
        GaussRat::real(r)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> GaussRat {
        GaussRat::real(Rat::from(n))
    }
}

/// Serialized as its printed form, e.g. `"3*i"`.
impl serde::Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                write!(f, "i")
            } else if self.im == -1 {
                write!(f, "-i")
            } else {
                write!(f, "{}*i", self.im)
            }
        } else if self.im.is_negative() {
            write!(f, "({} - {}*i)", self.re, self.im.abs())
        } else {
            write!(f, "({} + {}*i)", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn mul_parts(a: &GaussRat, b: &GaussRat) -> GaussRat {
    GaussRat { re: &a.re * &b.re - &a.im * &b.im, im: &a.re * &b.im + &a.im * &b.re }
}

fn div_parts(a: &GaussRat, b: &GaussRat) -> GaussRat {
    let n = b.norm();
    assert!(!n.is_zero(), "division by zero");
    let p = mul_parts(a, &b.conj());
    GaussRat { re: p.re / &n, im: p.im / &n }
}

macro_rules! gauss_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $body:expr) => {
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: GaussRat) -> GaussRat {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &'a GaussRat) -> GaussRat {
                $body(&self, o)
            }
        }
        impl<'a, 'b> $tr<&'b GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &'b GaussRat) -> GaussRat {
                $body(self, o)
            }
        }
        impl $atr<GaussRat> for GaussRat {
            fn $am(&mut self, o: GaussRat) {
                *self = $body(self, &o);
            }
        }
        impl<'a> $atr<&'a GaussRat> for GaussRat {
            fn $am(&mut self, o: &'a GaussRat) {
                *self = $body(self, o);
            }
        }
    };
}

gauss_binop!(Add, add, AddAssign, add_assign, |a: &GaussRat, b: &GaussRat| GaussRat {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
gauss_binop!(Sub, sub, SubAssign, sub_assign, |a: &GaussRat, b: &GaussRat| GaussRat {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
gauss_binop!(Mul, mul, MulAssign, mul_assign, mul_parts);

impl Div<GaussRat> for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        div_parts(&self, &o)
    }
}

impl<'a> Div<&'a GaussRat> for GaussRat {
    type Output = GaussRat;
    fn div(self, o: &'a GaussRat) -> GaussRat {
        div_parts(&self, o)
    }
}

impl<'b> Div<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn div(self, o: &'b GaussRat) -> GaussRat {
        div_parts(self, o)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::new(Rat::from(a), Rat::from(b))
    }

    #[test]
    fn sqrt_of_negative_rational_is_imaginary() {
        assert_eq!(g(-9, 0).sqrt(), Some(g(0, 3)));
        assert_eq!(g(-2, 0).sqrt(), None);
    }

    #[test]
    fn sqrt_general() {
        // (2 + 3i)² = -5 + 12i
        assert_eq!(g(-5, 12).sqrt(), Some(g(2, 3)));
        // (1 - i)² = -2i, principal root has positive real part
        assert_eq!(g(0, -2).sqrt(), Some(g(1, -1)));
        assert_eq!(g(1, 1).sqrt(), None);
    }

    #[test]
    fn field_ops() {
        let a = g(1, 2);
        let b = g(3, -1);
        assert_eq!(&a * &b, g(5, 5));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(g(0, 1) * g(0, 1), g(-1, 0));
    }
}
