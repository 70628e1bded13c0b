//! Sylvester resultants and root counting on the projective line.

use super::{determinant, MPoly, UPoly};
use crate::arith::Field;
use crate::error::PolyError;

/// Sylvester resultant of `p` and `q` with respect to variable `var`.
///
/// Rows hold the coefficients of `p` (leading coefficient first, `deg q`
/// shifted copies) followed by those of `q`, so `res(x - a, x - b) = a - b`.
pub fn resultant<F: Field>(p: &MPoly<F>, q: &MPoly<F>, var: usize) -> Result<MPoly<F>, PolyError> {
    if p.ctx() != q.ctx() {
        return Err(PolyError::ContextMismatch);
    }
    let name = || p.ctx().name(var).to_string();
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    if m == 0 || n == 0 {
        return Err(PolyError::ZeroDegree(name()));
    }
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let size = m + n;
    let zero = MPoly::zero(p.ctx());
    let mut rows = vec![vec![zero.clone(); size]; size];
    for i in 0..n {
        for k in 0..=m {
            rows[i][i + k] = pc[m - k].clone();
        }
    }
    for i in 0..m {
        for k in 0..=n {
            rows[n + i][i + k] = qc[n - k].clone();
        }
    }
    determinant(&rows)
}

/// Number of distinct complex roots of a univariate polynomial, as
/// `deg(p / gcd(p, p'))`.
pub fn distinct_complex_root_count<F: Field>(p: &MPoly<F>) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    match p.univariate_var()? {
        None => Ok(0),
        Some(v) => p.to_upoly(v)?.distinct_root_count(),
    }
}

/// A binary form `f(u, v)` of known degree, viewed through its
/// dehomogenization `f(1, t)` plus the multiplicity of the point `(0:1)`.
#[derive(Clone, Debug)]
pub struct BinaryForm<F: Field> {
    pub degree: usize,
    pub affine: UPoly<F>,
}

impl<F: Field> BinaryForm<F> {
    /// `form` must be homogeneous in the variables `u` (set to 1) and `t`
    /// and free of all other variables.
    pub fn from_mpoly(form: &MPoly<F>, u: usize, t: usize) -> Result<BinaryForm<F>, PolyError> {
        if form.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if !form.is_homogeneous() {
            return Err(PolyError::NotUnivariate);
        }
        let degree = form.total_degree().unwrap_or(0) as usize;
        let affine = form.specialize(u, &F::one());
        let affine = affine.to_upoly(t)?;
        Ok(BinaryForm { degree, affine })
    }

    /// Multiplicity of the root at infinity `(0:1)`.
    pub fn infinity_multiplicity(&self) -> usize {
        self.degree - self.affine.degree().unwrap_or(0)
    }

    pub fn distinct_root_count(&self) -> usize {
        let finite = self.affine.distinct_root_count().unwrap_or(0);
        finite + usize::from(self.infinity_multiplicity() > 0)
    }

    /// Monic gcd of two binary forms, as a binary form.
    pub fn gcd(&self, o: &BinaryForm<F>) -> BinaryForm<F> {
        let affine = self.affine.gcd(&o.affine);
        let inf = self.infinity_multiplicity().min(o.infinity_multiplicity());
        BinaryForm { degree: affine.degree().unwrap_or(0) + inf, affine }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::poly::VarContext;

    fn ctx() -> VarContext {
        VarContext::of(&["x", "a", "b"])
    }

    fn p(s: &str) -> MPoly<Rat> {
        MPoly::parse(s, &ctx()).unwrap()
    }

    #[test]
    fn common_root_gives_zero() {
        assert!(resultant(&p("x^2 - 1"), &p("x - 1"), 0).unwrap().is_zero());
    }

    #[test]
    fn linear_resultant_sign() {
        assert_eq!(resultant(&p("x - a"), &p("x - b"), 0).unwrap(), p("a - b"));
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(matches!(resultant(&p("a"), &p("x"), 0), Err(PolyError::ZeroDegree(_))));
    }

    #[test]
    fn root_counts() {
        assert_eq!(distinct_complex_root_count(&p("x^3 - 3*x + 2")).unwrap(), 2);
        assert_eq!(distinct_complex_root_count(&p("x^5")).unwrap(), 1);
        assert_eq!(distinct_complex_root_count(&p("3")).unwrap(), 0);
        assert!(distinct_complex_root_count(&p("0")).is_err());
        assert!(distinct_complex_root_count(&p("x*a")).is_err());
    }

    #[test]
    fn binary_form_with_root_at_infinity() {
        // a^2 b (a - b): roots (0:1), (1:0), (1:1) in (a:b) -> a=1 chart has b(1-b)
        let f = BinaryForm::from_mpoly(&p("a^3*b - a^2*b^2"), 1, 2).unwrap();
        assert_eq!(f.degree, 4);
        assert_eq!(f.infinity_multiplicity(), 2);
        assert_eq!(f.distinct_root_count(), 3);
    }
}
