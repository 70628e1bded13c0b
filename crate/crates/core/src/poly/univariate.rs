//! Dense univariate polynomials, used for gcds and root counting.

use crate::arith::Field;
use crate::error::PolyError;

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> UPoly<F> {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly<F> {
        UPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly<F> {
        UPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * &F::from(k as i64)).collect())
    }

    pub fn monic(&self) -> UPoly<F> {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                UPoly::new(self.coeffs.iter().map(|c| c.clone() * &inv).collect())
            }
        }
    }

    pub fn mul(&self, o: &UPoly<F>) -> UPoly<F> {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        UPoly::new(out)
    }

    pub fn div_rem(&self, d: &UPoly<F>) -> Result<(UPoly<F>, UPoly<F>), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = d.leading().and_then(Field::inv).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= dc.clone() * &c;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, o: &UPoly<F>) -> UPoly<F> {
        let mut a = self.monic();
        let mut b = o.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, each with multiplicity one.
    pub fn squarefree_part(&self) -> UPoly<F> {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("nonzero gcd").0.monic()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.squarefree_part().degree().unwrap_or(0))
    }

    /// Multiplicity of `x - r` as a factor.
    pub fn root_multiplicity(&self, r: &F) -> usize {
        self.deflate(r).1
    }

    /// Removes every factor `x - r`; returns the cofactor and multiplicity.
    pub fn deflate(&self, r: &F) -> (UPoly<F>, usize) {
        let lin = UPoly::new(vec![-r.clone(), F::one()]);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.div_rem(&lin).expect("linear divisor").0;
            k += 1;
        }
        (p, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn up(c: &[i64]) -> UPoly<Rat> {
        UPoly::new(c.iter().map(|&x| Rat::from(x)).collect())
    }

    #[test]
    fn gcd_and_roots() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = up(&[2, -3, 0, 1]);
        assert_eq!(p.distinct_root_count().unwrap(), 2);
        assert_eq!(p.root_multiplicity(&Rat::from(1)), 2);
        assert_eq!(up(&[0, 0, 0, 0, 0, 1]).distinct_root_count().unwrap(), 1);
        assert_eq!(up(&[7]).distinct_root_count().unwrap(), 0);
        assert!(UPoly::<Rat>::zero().distinct_root_count().is_err());
    }

    #[test]
    fn division() {
        let p = up(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&up(&[-1, 1])).unwrap();
        assert_eq!(q, up(&[1, 1]));
        assert!(r.is_zero());
    }
}
