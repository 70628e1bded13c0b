//! Local factorization of a quartic that is even in one variable.
//!
//! For `Q = a·v⁴ + b·v² + c` with `a` a unit, `δ = b² − 4ac` and
//! `Q± = √a·v² + (b ± √δ)/(2√a)`, so that `Q = Q⁺·Q⁻`. Each `Q±` is then split
//! into the smooth graphs `v = ±ψ` by a graded square root.

use serde::Serialize;

use super::TSeries;
use crate::arith::{Field, Rat};
use crate::error::SeriesError;
use crate::poly::{MPoly, Monomial};

/// One factor `A·v² + E` of the split, with `A = √a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticFactor<F: Field = Rat> {
    pub quadratic: TSeries<F>,
    pub constant: TSeries<F>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticSplit<F: Field = Rat> {
    pub split_var: usize,
    pub a: TSeries<F>,
    pub b: TSeries<F>,
    pub c: TSeries<F>,
    pub delta: TSeries<F>,
    /// Lowest graded piece of `δ`; its square root leads `√δ`.
    pub delta_lowest: MPoly<F>,
    pub sqrt_a: TSeries<F>,
    pub sqrt_delta: TSeries<F>,
    pub plus: QuadraticFactor<F>,
    pub minus: QuadraticFactor<F>,
}

/// `ψ` with the two smooth factors `v − ψ` and `v + ψ`, in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchPair<F: Field = Rat> {
    pub psi: TSeries<F>,
    pub factors: [TSeries<F>; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Plus,
    Minus,
}

impl<F: Field> QuadraticFactor<F> {
    /// `A·v² + E` as a single series in the full chart.
    pub fn to_series(&self, split_var: usize) -> TSeries<F> {
        let v2 = Monomial::var(self.constant.ctx().arity(), split_var).with_exp(split_var, 2);
        let n = self.constant.order();
        &self.quadratic.truncate(n).mul_monomial(&v2, &F::one()) + &self.constant
    }
}

impl<F: Field> QuarticSplit<F> {
    pub fn order(&self) -> usize {
        self.plus.constant.order()
    }

    pub fn factor(&self, which: Which) -> &QuadraticFactor<F> {
        match which {
            Which::Plus => &self.plus,
            Which::Minus => &self.minus,
        }
    }

    /// Exchanges the roles of `Q⁺` and `Q⁻` (equivalently `√δ ↦ −√δ`).
    pub fn swapped(&self) -> QuarticSplit<F> {
        let mut s = self.clone();
        std::mem::swap(&mut s.plus, &mut s.minus);
        s.sqrt_delta = s.sqrt_delta.neg();
        s
    }

    /// `Q⁺·Q⁻`, to be compared with the input quartic.
    pub fn recombine(&self) -> TSeries<F> {
        &self.plus.to_series(self.split_var) * &self.minus.to_series(self.split_var)
    }

    /// `δ = m·(lowest)` when the lowest form of `δ` is a single term.
    pub fn delta_monomial(&self) -> Option<(Monomial, F)> {
        if self.delta_lowest.len() == 1 {
            self.delta_lowest.terms().next().map(|(m, c)| (m.clone(), c.clone()))
        } else {
            None
        }
    }
}

/// Splits `qaff = a·v⁴ + b·v² + c` (with `v = split_var`) into `Q⁺·Q⁻`,
/// correct modulo total degree `order`.
///
/// `a` must have a square constant term and the lowest form of `δ` must be
/// the square of a form. The internal computation runs at a raised order so
/// that all returned series have order `order`.
pub fn factor_quartic_vertical<F: Field>(
    qaff: &MPoly<F>,
    split_var: usize,
    order: usize,
) -> Result<QuarticSplit<F>, SeriesError> {
    if order < 1 {
        return Err(SeriesError::Order(order));
    }
    if let Some((m, _)) = qaff.terms().find(|(m, _)| m.exp(split_var) % 2 == 1) {
        return Err(SeriesError::Parity(m.exp(split_var)));
    }
    let deg = qaff.degree_in(split_var);
    if deg != 4 {
        return Err(SeriesError::SplitDegree(deg));
    }
    let co = qaff.coefficients_in(split_var);
    let (a, b, c) = (&co[4], &co[2], &co[0]);
    let delta = &(b * b) - &(a * c).scale(&F::from(4));
    if delta.is_zero() {
        return Err(SeriesError::DiscriminantShape("δ = 0".into()));
    }
    let low_deg = delta.min_degree().expect("nonzero") as usize;
    if low_deg % 2 == 1 {
        return Err(SeriesError::DiscriminantShape(format!("lowest degree {low_deg} is odd")));
    }
    let delta_lowest = delta.homogeneous_part(low_deg as u32, None);
    let k = low_deg / 2;
    let hi = order + k;

    let a_s = TSeries::from_poly(a, hi);
    let b_s = TSeries::from_poly(b, hi);
    let delta_s = TSeries::from_poly(&delta, hi);
    let sqrt_a = a_s.sqrt_unit()?;
    let sqrt_delta = delta_s.sqrt_graded().map_err(|e| match e {
        SeriesError::NotASquare { .. } if delta_lowest.sqrt_exact().is_none() => {
            SeriesError::DiscriminantShape(delta_lowest.to_string())
        }
        e => e,
    })?;
    debug_assert_eq!(sqrt_delta.order(), order);

    let inv_2sqrt_a = sqrt_a.scale(&F::from(2)).inverse()?.truncate(order);
    let b_o = b_s.truncate(order);
    let make = |s: &TSeries<F>| QuadraticFactor { quadratic: sqrt_a.truncate(order), constant: s * &inv_2sqrt_a };
    let plus = make(&(&b_o + &sqrt_delta));
    let minus = make(&(&b_o - &sqrt_delta));

    Ok(QuarticSplit {
        split_var,
        a: a_s.truncate(order),
        b: b_o,
        c: TSeries::from_poly(c, order),
        delta: delta_s.truncate(order),
        delta_lowest,
        sqrt_a: sqrt_a.truncate(order),
        sqrt_delta,
        plus,
        minus,
    })
}

/// Splits `Q± = A·v² + E` as `A·(v − ψ)(v + ψ)` with `ψ² = −E/A`.
///
/// `ψ` has order `split.order() − 1`; its linear form has a positive leading
/// coefficient.
pub fn branch_split<F: Field>(split: &QuarticSplit<F>, which: Which) -> Result<BranchPair<F>, SeriesError> {
    let f = split.factor(which);
    let target = &f.constant.neg() * &f.quadratic.inverse()?;
    let psi = target.sqrt_graded()?;
    let n = psi.order();
    let v = TSeries::var(psi.ctx(), n, split.split_var);
    Ok(BranchPair { factors: [&v - &psi, &v + &psi], psi })
}
