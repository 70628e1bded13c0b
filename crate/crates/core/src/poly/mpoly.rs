//! Sparse multivariate polynomials over an exact field.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, UPoly, VarContext};
use crate::arith::{Field, GaussRat, Rat};
use crate::error::PolyError;

/// Sparse polynomial: a map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<F: Field = Rat> {
    ctx: VarContext,
    terms: BTreeMap<Monomial, F>,
}

fn add_into<F: Field>(map: &mut BTreeMap<Monomial, F>, m: Monomial, c: F) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl<F: Field> MPoly<F> {
    pub fn zero(ctx: &VarContext) -> MPoly<F> {
        MPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &VarContext, c: F) -> MPoly<F> {
        let mut p = MPoly::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.arity()), c);
        }
        p
    }

    pub fn one(ctx: &VarContext) -> MPoly<F> {
        MPoly::constant(ctx, F::one())
    }

    pub fn var(ctx: &VarContext, i: usize) -> MPoly<F> {
        MPoly::term(ctx, Monomial::var(ctx.arity(), i), F::one())
    }

    pub fn var_named(ctx: &VarContext, name: &str) -> Result<MPoly<F>, PolyError> {
        Ok(MPoly::var(ctx, ctx.require(name)?))
    }

    pub fn term(ctx: &VarContext, m: Monomial, c: F) -> MPoly<F> {
        debug_assert_eq!(m.arity(), ctx.arity());
        let mut p = MPoly::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(ctx: &VarContext, terms: I) -> MPoly<F>
    where
        I: IntoIterator<Item = (Vec<u32>, F)>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ctx.arity(), "exponent vector length");
            add_into(&mut map, Monomial::new(e), c);
        }
        MPoly { ctx: ctx.clone(), terms: map }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Monomial::one(self.ctx.arity()))
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> F {
        self.coeff(&Monomial::new(exps.to_vec()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Variables that occur with a positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ctx.arity()).filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0)).collect()
    }

    fn same_ctx(&self, o: &MPoly<F>) -> Result<(), PolyError> {
        if self.ctx == o.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, o: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
        self.same_ctx(o)?;
        let mut map = self.terms.clone();
        for (m, c) in &o.terms {
            add_into(&mut map, m.clone(), c.clone());
        }
        Ok(MPoly { ctx: self.ctx.clone(), terms: map })
    }

    pub fn checked_sub(&self, o: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
        self.same_ctx(o)?;
        let mut map = self.terms.clone();
        for (m, c) in &o.terms {
            add_into(&mut map, m.clone(), -c.clone());
        }
        Ok(MPoly { ctx: self.ctx.clone(), terms: map })
    }

    pub fn checked_mul(&self, o: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
        self.same_ctx(o)?;
        let mut map = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                add_into(&mut map, m1.mul(m2), c1.clone() * c2);
            }
        }
        Ok(MPoly { ctx: self.ctx.clone(), terms: map })
    }

    /// Product keeping only terms of total degree below `order`.
    pub fn mul_truncated(&self, o: &MPoly<F>, order: u32) -> MPoly<F> {
        assert!(self.ctx == o.ctx, "context mismatch");
        let mut map = BTreeMap::new();
        for (m1, c1) in &self.terms {
            if m1.degree() >= order {
                break;
            }
            for (m2, c2) in &o.terms {
                if m1.degree() + m2.degree() >= order {
                    break;
                }
                add_into(&mut map, m1.mul(m2), c1.clone() * c2);
            }
        }
        MPoly { ctx: self.ctx.clone(), terms: map }
    }

    pub fn pow(&self, k: u32) -> MPoly<F> {
        let mut result = MPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &F) -> MPoly<F> {
        if c.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        MPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> MPoly<F> {
        if c.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        MPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone() * c)).collect() }
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> MPoly<F> {
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                add_into(&mut map, m.with_exp(var, e - 1), c.clone() * &F::from(e as i64));
            }
        }
        MPoly { ctx: self.ctx.clone(), terms: map }
    }

    pub fn derivative_named(&self, name: &str) -> Result<MPoly<F>, PolyError> {
        Ok(self.derivative(self.ctx.require(name)?))
    }

    /// Sum of the terms whose degree in the selected variables is exactly `d`.
    /// `mask = None` selects all variables.
    pub fn homogeneous_part(&self, d: u32, mask: Option<&[bool]>) -> MPoly<F> {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| match mask {
                None => m.degree() == d,
                Some(mask) => m.degree_in(mask) == d,
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MPoly { ctx: self.ctx.clone(), terms }
    }

    /// Terms of total degree below `order`.
    pub fn truncate(&self, order: u32) -> MPoly<F> {
        let terms =
            self.terms.iter().take_while(|(m, _)| m.degree() < order).map(|(m, c)| (m.clone(), c.clone())).collect();
        MPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ctx.arity(), "point arity");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`. All images
    /// must share one context, which becomes the context of the result.
    pub fn substitute(&self, images: &[MPoly<F>]) -> Result<MPoly<F>, PolyError> {
        if images.len() != self.ctx.arity() {
            return Err(PolyError::ContextMismatch);
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| p.ctx != target) {
            return Err(PolyError::ContextMismatch);
        }
        let mut powers: Vec<Vec<MPoly<F>>> = images.iter().map(|p| vec![MPoly::one(&target), p.clone()]).collect();
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            for (mm, cc) in t.terms {
                add_into(&mut acc, mm, cc);
            }
        }
        Ok(MPoly { ctx: target, terms: acc })
    }

    /// Substitutes only the listed variables (by index), keeping the others.
    /// Images live in this polynomial's context.
    pub fn substitute_some(&self, map: &[(usize, MPoly<F>)]) -> Result<MPoly<F>, PolyError> {
        let mut images: Vec<MPoly<F>> = (0..self.ctx.arity()).map(|i| MPoly::var(&self.ctx, i)).collect();
        for (i, p) in map {
            if *i >= images.len() {
                return Err(PolyError::ContextMismatch);
            }
            self.same_ctx(p)?;
            images[*i] = p.clone();
        }
        self.substitute(&images)
    }

    /// Sets variable `var` to the scalar `value`.
    pub fn specialize(&self, var: usize, value: &F) -> MPoly<F> {
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            add_into(&mut map, m.with_exp(var, 0), c.clone() * &value.pow(e));
        }
        MPoly { ctx: self.ctx.clone(), terms: map }
    }

    /// Exact quotient `self / q` by graded-lex reduction.
    pub fn exact_divide(&self, q: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
        self.same_ctx(q)?;
        let (lm_q, lc_q) = match q.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let lc_inv = lc_q.inv().expect("nonzero leading coefficient");
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((lm, lc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm_q.divides(&lm) {
                return Err(PolyError::NotDivisible);
            }
            let m = lm_q.quotient_of(&lm);
            let c = lc * &lc_inv;
            for (qm, qc) in &q.terms {
                add_into(&mut rem, qm.mul(&m), -(qc.clone() * &c));
            }
            quot.insert(m, c);
        }
        Ok(MPoly { ctx: self.ctx.clone(), terms: quot })
    }

    /// Coefficients in powers of `var`: `self = Σ_k out[k]·var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly<F>> {
        let d = self.degree_in(var) as usize;
        let mut out: Vec<BTreeMap<Monomial, F>> = vec![BTreeMap::new(); d + 1];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize].insert(m.with_exp(var, 0), c.clone());
        }
        out.into_iter().map(|t| MPoly { ctx: self.ctx.clone(), terms: t }).collect()
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            add_into(&mut map, m.clone(), f(c));
        }
        MPoly { ctx: self.ctx.clone(), terms: map }
    }

    /// Moves the polynomial into `ctx`, sending variable `i` to `mapping[i]`.
    /// Variables mapped to the same slot multiply together.
    pub fn remap(&self, ctx: &VarContext, mapping: &[usize]) -> MPoly<F> {
        assert_eq!(mapping.len(), self.ctx.arity(), "mapping length");
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; ctx.arity()];
            for (i, &x) in m.exps().iter().enumerate() {
                e[mapping[i]] += x;
            }
            add_into(&mut map, Monomial::new(e), c.clone());
        }
        MPoly { ctx: ctx.clone(), terms: map }
    }

    /// Flips the sign so the graded-lex leading coefficient is positive.
    /// Returns the normalized polynomial and whether it was negated.
    pub fn normalize_sign(&self) -> (MPoly<F>, bool) {
        match self.leading_term() {
            Some((_, c)) if !c.is_positive() => (-self, true),
            _ => (self.clone(), false),
        }
    }

    /// Exact square root `r` with `r² = self` and positive leading
    /// coefficient, if `self` is a perfect square.
    pub fn sqrt_exact(&self) -> Option<MPoly<F>> {
        let (lm, lc) = match self.leading_term() {
            None => return Some(self.clone()),
            Some(t) => t,
        };
        if lm.exps().iter().any(|e| e % 2 == 1) {
            return None;
        }
        let root_m = Monomial::new(lm.exps().iter().map(|e| e / 2).collect());
        let root_c = lc.sqrt()?;
        let root_c = if root_c.is_positive() { root_c } else { -root_c };
        let two_lc = root_c.clone() * &F::from(2);
        let mut root = MPoly::term(&self.ctx, root_m.clone(), root_c);
        let mut rem = self - &(&root * &root);
        let mut last = root_m.clone();
        // Each step cancels the leading term of the remainder; the new root
        // terms strictly decrease in graded-lex order, so this terminates.
        while let Some((m, c)) = rem.leading_term() {
            if !root_m.divides(m) {
                return None;
            }
            let q = root_m.quotient_of(m);
            if q >= last {
                return None;
            }
            last = q.clone();
            let t = MPoly::term(&self.ctx, q, c.clone() / &two_lc);
            rem = &rem - &(&(&root * &t).scale(&F::from(2)) + &(&t * &t));
            root = &root + &t;
        }
        Some(root)
    }

    /// Writes `self = c·r²` with `r` monic, returning `(r, c)`; the constant
    /// is kept apart from the root.
    pub fn square_times_constant(&self) -> Option<(MPoly<F>, F)> {
        let c = self.leading_term()?.1.clone();
        let root = self.scale(&c.inv()?).sqrt_exact()?;
        Some((root, c))
    }

    /// Dense univariate view in `var`; fails if another variable occurs.
    pub fn to_upoly(&self, var: usize) -> Result<UPoly<F>, PolyError> {
        let mut coeffs = vec![F::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.degree() != m.exp(var) {
                return Err(PolyError::NotUnivariate);
            }
            coeffs[m.exp(var) as usize] = c.clone();
        }
        Ok(UPoly::new(coeffs))
    }

    /// The only variable occurring in `self`, if there is exactly one (or
    /// none, for constants).
    pub fn univariate_var(&self) -> Result<Option<usize>, PolyError> {
        let vars = self.support_vars();
        match vars.len() {
            0 => Ok(None),
            1 => Ok(Some(vars[0])),
            _ => Err(PolyError::NotUnivariate),
        }
    }

    pub fn from_upoly(ctx: &VarContext, var: usize, u: &UPoly<F>) -> MPoly<F> {
        let n = ctx.arity();
        MPoly::from_terms(
            ctx,
            u.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; n];
                e[var] = k as u32;
                (e, c.clone())
            }),
        )
    }
}

impl MPoly<Rat> {
    pub fn to_gauss(&self) -> MPoly<GaussRat> {
        self.map_coeffs(|c| GaussRat::real(c.clone()))
    }
}

impl MPoly<GaussRat> {
    /// The polynomial over ℚ, when every coefficient is real.
    pub fn to_rational(&self) -> Option<MPoly<Rat>> {
        if self.terms.values().all(GaussRat::is_real) {
            Some(self.map_coeffs(|c| c.re.clone()))
        } else {
            None
        }
    }
}

/// Serialized as its canonical text form.
impl<F: Field> serde::Serialize for MPoly<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    /// Canonical form: graded-lex descending, coefficient first, `*`
    /// separators, no unary `+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.prints_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(
                    |(i, &e)| {
                        if e == 1 {
                            self.ctx.name(i).to_string()
                        } else {
                            format!("{}^{}", self.ctx.name(i), e)
                        }
                    },
                )
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.ctx.names().join(","), self)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, 'b, F: Field> $tr<&'b MPoly<F>> for &'a MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: &'b MPoly<F>) -> MPoly<F> {
                self.$checked(o).expect("polynomial context mismatch")
            }
        }
        impl<F: Field> $tr<MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: MPoly<F>) -> MPoly<F> {
                (&self).$m(&o)
            }
        }
        impl<'b, F: Field> $tr<&'b MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: &'b MPoly<F>) -> MPoly<F> {
                (&self).$m(o)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        MPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<F: Field> Neg for MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_times_constant_separates_scalar() {
        let ctx = VarContext::of(&["x", "y"]);
        let r = MPoly::parse("x - 2*y + 1/3", &ctx).unwrap();
        let f = (&r * &r).scale(&Rat::new(-5, 7));
        let (root, c) = f.square_times_constant().unwrap();
        assert_eq!(c, Rat::new(-5, 7));
        assert_eq!(root, r);
        assert_eq!((&root * &root).scale(&c), f);
        assert!(MPoly::parse("x^2 + y", &ctx).unwrap().square_times_constant().is_none());
        assert!(MPoly::<Rat>::zero(&ctx).square_times_constant().is_none());
    }
}
