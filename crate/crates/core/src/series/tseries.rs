use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::arith::{Field, Rat};
use crate::error::SeriesError;
use crate::poly::{MPoly, Monomial, VarContext};

/// Multivariate power series truncated at total degree `order`: terms of
/// degree `>= order` are unknown and never stored.
///
/// Stored as graded pieces; `pieces[d]` is homogeneous of degree `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries<F: Field = Rat> {
    ctx: VarContext,
    pieces: Vec<MPoly<F>>,
}

impl<F: Field> TSeries<F> {
    pub fn zero(ctx: &VarContext, order: usize) -> TSeries<F> {
        assert!(order >= 1, "truncation order must be at least 1");
        TSeries { ctx: ctx.clone(), pieces: vec![MPoly::zero(ctx); order] }
    }

    pub fn constant(ctx: &VarContext, order: usize, c: F) -> TSeries<F> {
        let mut s = TSeries::zero(ctx, order);
        s.pieces[0] = MPoly::constant(ctx, c);
        s
    }

    pub fn one(ctx: &VarContext, order: usize) -> TSeries<F> {
        TSeries::constant(ctx, order, F::one())
    }

    pub fn var(ctx: &VarContext, order: usize, i: usize) -> TSeries<F> {
        TSeries::from_poly(&MPoly::var(ctx, i), order)
    }

    /// Truncation of `p` at total degree `order`.
    pub fn from_poly(p: &MPoly<F>, order: usize) -> TSeries<F> {
        let mut s = TSeries::zero(p.ctx(), order);
        for (m, c) in p.terms() {
            let d = m.degree() as usize;
            if d >= order {
                break;
            }
            s.pieces[d] = &s.pieces[d] + &MPoly::term(p.ctx(), m.clone(), c.clone());
        }
        s
    }

    /// Builds a series from graded pieces; each must be homogeneous of its
    /// index degree.
    pub fn from_pieces(ctx: &VarContext, pieces: Vec<MPoly<F>>) -> TSeries<F> {
        assert!(!pieces.is_empty(), "truncation order must be at least 1");
        for (d, p) in pieces.iter().enumerate() {
            assert!(p.ctx() == ctx, "piece context");
            assert!(p.terms().all(|(m, _)| m.degree() as usize == d), "piece {d} not homogeneous of degree {d}");
        }
        TSeries { ctx: ctx.clone(), pieces }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.pieces.len()
    }

    pub fn piece(&self, d: usize) -> &MPoly<F> {
        &self.pieces[d]
    }

    pub fn pieces(&self) -> &[MPoly<F>] {
        &self.pieces
    }

    pub fn constant_term(&self) -> F {
        self.pieces[0].constant_term()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(MPoly::is_zero)
    }

    /// Degree of the lowest nonzero graded piece.
    pub fn valuation(&self) -> Option<usize> {
        self.pieces.iter().position(|p| !p.is_zero())
    }

    pub fn to_poly(&self) -> MPoly<F> {
        self.pieces.iter().fold(MPoly::zero(&self.ctx), |acc, p| &acc + p)
    }

    pub fn truncate(&self, order: usize) -> TSeries<F> {
        assert!(order >= 1 && order <= self.order(), "cannot raise truncation order");
        TSeries { ctx: self.ctx.clone(), pieces: self.pieces[..order].to_vec() }
    }

    fn check(&self, o: &TSeries<F>) -> Result<(), SeriesError> {
        if self.ctx == o.ctx && self.order() == o.order() {
            Ok(())
        } else {
            Err(SeriesError::Mismatch)
        }
    }

    pub fn checked_add(&self, o: &TSeries<F>) -> Result<TSeries<F>, SeriesError> {
        self.check(o)?;
        Ok(TSeries { ctx: self.ctx.clone(), pieces: self.pieces.iter().zip(&o.pieces).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, o: &TSeries<F>) -> Result<TSeries<F>, SeriesError> {
        self.check(o)?;
        Ok(TSeries { ctx: self.ctx.clone(), pieces: self.pieces.iter().zip(&o.pieces).map(|(a, b)| a - b).collect() })
    }

    pub fn checked_mul(&self, o: &TSeries<F>) -> Result<TSeries<F>, SeriesError> {
        self.check(o)?;
        let n = self.order();
        let mut pieces = vec![MPoly::zero(&self.ctx); n];
        for (i, a) in self.pieces.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.pieces.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    pieces[i + j] = &pieces[i + j] + &(a * b);
                }
            }
        }
        Ok(TSeries { ctx: self.ctx.clone(), pieces })
    }

    pub fn neg(&self) -> TSeries<F> {
        TSeries { ctx: self.ctx.clone(), pieces: self.pieces.iter().map(|p| -p).collect() }
    }

    pub fn scale(&self, c: &F) -> TSeries<F> {
        TSeries { ctx: self.ctx.clone(), pieces: self.pieces.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiplies by a monomial; terms pushed past the order are dropped.
    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> TSeries<F> {
        let n = self.order();
        let shift = m.degree() as usize;
        let mut out = TSeries::zero(&self.ctx, n);
        for d in 0..n.saturating_sub(shift) {
            out.pieces[d + shift] = self.pieces[d].mul_monomial(m, c);
        }
        out
    }

    /// Exact division by a monomial of degree `k`; the result is known to
    /// order `order - k`.
    pub fn div_monomial(&self, m: &Monomial) -> Result<TSeries<F>, SeriesError> {
        let k = m.degree() as usize;
        if k >= self.order() {
            return Err(SeriesError::Order(self.order()));
        }
        let mut pieces = Vec::with_capacity(self.order() - k);
        for d in 0..self.order() {
            let p = &self.pieces[d];
            if d < k {
                if !p.is_zero() {
                    return Err(crate::error::PolyError::NotDivisible.into());
                }
                continue;
            }
            let divisor = MPoly::term(&self.ctx, m.clone(), F::one());
            pieces.push(p.exact_divide(&divisor)?);
        }
        Ok(TSeries { ctx: self.ctx.clone(), pieces })
    }

    /// Moves the series into `ctx`, sending variable `i` to `mapping[i]`.
    pub fn remap(&self, ctx: &VarContext, mapping: &[usize]) -> TSeries<F> {
        TSeries { ctx: ctx.clone(), pieces: self.pieces.iter().map(|p| p.remap(ctx, mapping)).collect() }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> TSeries<G> {
        TSeries { ctx: self.ctx.clone(), pieces: self.pieces.iter().map(|p| p.map_coeffs(f)).collect() }
    }

    /// Whether every known coefficient is zero below `order`.
    pub fn vanishes_to(&self, order: usize) -> bool {
        self.pieces.iter().take(order).all(MPoly::is_zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.pieces.iter().flat_map(|p| p.terms())
    }
}

macro_rules! series_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, 'b, F: Field> std::ops::$tr<&'b TSeries<F>> for &'a TSeries<F> {
            type Output = TSeries<F>;
            fn $m(self, o: &'b TSeries<F>) -> TSeries<F> {
                self.$checked(o).expect("series context or order mismatch")
            }
        }
    };
}

series_binop!(Add, add, checked_add);
series_binop!(Sub, sub, checked_sub);
series_binop!(Mul, mul, checked_mul);

struct JsonTerm<'a, F: Field>(&'a Monomial, &'a F);

impl<F: Field> Serialize for JsonTerm<'_, F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("exps", self.0.exps())?;
        m.serialize_entry("coef", &self.1.to_string())?;
        m.end()
    }
}

/// `{"order": N, "terms": [{"exps": [..], "coef": "p/q"}, ...]}`, terms in
/// ascending graded-lex order.
impl<F: Field> Serialize for TSeries<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm<'_, F>> = self.terms().map(|(m, c)| JsonTerm(m, c)).collect();
        let mut st = s.serialize_struct("TSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
