//! Inverses and square roots of truncated series.

use super::TSeries;
use crate::arith::Field;
use crate::error::{PolyError, SeriesError};
use crate::poly::MPoly;

impl<F: Field> TSeries<F> {
    /// Multiplicative inverse of a unit, solved degree by degree.
    pub fn inverse(&self) -> Result<TSeries<F>, SeriesError> {
        let c0 = self.constant_term();
        let c0_inv = c0.inv().ok_or(SeriesError::NotUnit)?;
        let n = self.order();
        let mut r: Vec<MPoly<F>> = Vec::with_capacity(n);
        r.push(MPoly::constant(self.ctx(), c0_inv.clone()));
        for k in 1..n {
            let mut acc = MPoly::zero(self.ctx());
            for i in 1..=k {
                let s = self.piece(i);
                if !s.is_zero() && !r[k - i].is_zero() {
                    acc = &acc + &(s * &r[k - i]);
                }
            }
            r.push(acc.scale(&-c0_inv.clone()));
        }
        Ok(TSeries::from_pieces(self.ctx(), r))
    }

    /// Square root of a unit whose constant term is a square in the field.
    ///
    /// Newton iteration `r <- (r + s/r)/2`, doubling the number of correct
    /// graded pieces each step. The constant term of the result is the
    /// principal root.
    pub fn sqrt_unit(&self) -> Result<TSeries<F>, SeriesError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(SeriesError::NotUnit);
        }
        let root = c0.sqrt().ok_or_else(|| SeriesError::NoConstantRoot(c0.to_string()))?;
        let n = self.order();
        let half = F::one() / F::from(2);
        let mut r = TSeries::constant(self.ctx(), 1, root);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let r_ext = extend(&r, prec);
            let s = self.truncate(prec);
            let q = &s * &r_ext.inverse()?;
            r = (&r_ext + &q).scale(&half);
        }
        Ok(r)
    }

    /// Square root of a series whose lowest graded piece is `h²` for a
    /// homogeneous form `h` of degree `m`.
    ///
    /// Degree by degree, each new piece `g` solves `2·h·g = known`, by exact
    /// division. The result has order `order - m`. The sign is fixed by a
    /// positive graded-lex leading coefficient of `h`.
    pub fn sqrt_graded(&self) -> Result<TSeries<F>, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::NotASquare { degree: 0 })?;
        if v % 2 == 1 {
            return Err(SeriesError::NotASquare { degree: v });
        }
        let m = v / 2;
        let n = self.order();
        let h = self.piece(v).sqrt_exact().ok_or(SeriesError::NotASquare { degree: v })?;
        let two_h = h.scale(&F::from(2));
        let out_order = n - m;
        let mut r: Vec<MPoly<F>> = vec![MPoly::zero(self.ctx()); out_order];
        if m < out_order {
            r[m] = h;
        }
        for k in 1..out_order.saturating_sub(m) {
            let mut rhs = self.piece(2 * m + k).clone();
            for i in 1..k {
                let (a, b) = (&r[m + i], &r[m + k - i]);
                if !a.is_zero() && !b.is_zero() {
                    rhs = &rhs - &(a * b);
                }
            }
            r[m + k] = match rhs.exact_divide(&two_h) {
                Ok(g) => g,
                Err(PolyError::NotDivisible) => return Err(SeriesError::NotASquare { degree: 2 * m + k }),
                Err(e) => return Err(e.into()),
            };
        }
        Ok(TSeries::from_pieces(self.ctx(), r))
    }
}

fn extend<F: Field>(s: &TSeries<F>, order: usize) -> TSeries<F> {
    let mut pieces = s.pieces().to_vec();
    pieces.resize(order, MPoly::zero(s.ctx()));
    TSeries::from_pieces(s.ctx(), pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::poly::VarContext;

    fn ctx() -> VarContext {
        VarContext::of(&["x", "y"])
    }

    fn ser(s: &str, n: usize) -> TSeries<Rat> {
        TSeries::from_poly(&MPoly::parse(s, &ctx()).unwrap(), n)
    }

    #[test]
    fn geometric_series() {
        let inv = ser("1 - x", 6).inverse().unwrap();
        assert_eq!(inv, ser("1 + x + x^2 + x^3 + x^4 + x^5", 6));
        assert_eq!(ser("1/2", 4).inverse().unwrap(), ser("2", 4));
        assert!(matches!(ser("x", 4).inverse(), Err(SeriesError::NotUnit)));
    }

    #[test]
    fn unit_square_roots() {
        assert_eq!(ser("1", 5).sqrt_unit().unwrap(), ser("1", 5));
        assert_eq!(ser("1 + 2*x + x^2", 8).sqrt_unit().unwrap(), ser("1 + x", 8));
        assert!(matches!(ser("2 + x", 4).sqrt_unit(), Err(SeriesError::NoConstantRoot(_))));
        assert!(matches!(ser("x", 4).sqrt_unit(), Err(SeriesError::NotUnit)));
    }

    #[test]
    fn graded_square_roots() {
        let r = ser("x^2 + 2*x^3 + x^4", 8).sqrt_graded().unwrap();
        assert_eq!(r.order(), 7);
        assert_eq!(r, ser("x + x^2", 7));
        assert!(matches!(ser("x^2 + y^2", 6).sqrt_graded(), Err(SeriesError::NotASquare { degree: 2 })));
        // sign fixed by the positive leading coefficient
        let r = ser("4*x^2 - 4*x*y + y^2", 6).sqrt_graded().unwrap();
        assert_eq!(r, ser("2*x - y", 5));
    }
}
