//! Composition of truncated series.

use super::TSeries;
use crate::arith::Field;
use crate::error::SeriesError;

/// `s(images[0], images[1], ...)`, where every image has zero constant term.
///
/// The result is known to `min(s.order(), images order)`: a term of `s` of
/// degree `d` contributes only in degrees `>= d`.
pub fn compose<F: Field>(s: &TSeries<F>, images: &[TSeries<F>]) -> Result<TSeries<F>, SeriesError> {
    let arity = s.ctx().arity();
    if images.len() != arity {
        return Err(SeriesError::Arity { expected: arity, got: images.len() });
    }
    let first = images.first().ok_or(SeriesError::Arity { expected: arity, got: 0 })?;
    let target = first.ctx().clone();
    let m = images.iter().map(TSeries::order).min().expect("nonempty");
    if images.iter().any(|im| im.ctx() != &target) {
        return Err(SeriesError::Mismatch);
    }
    if images.iter().any(|im| !im.constant_term().is_zero()) {
        return Err(SeriesError::NotUnit);
    }
    let n = m.min(s.order());
    let images: Vec<TSeries<F>> = images.iter().map(|im| im.truncate(n)).collect();

    // powers[i][e] = images[i]^e, filled on demand
    let mut powers: Vec<Vec<TSeries<F>>> = vec![vec![TSeries::one(&target, n)]; arity];
    let mut out = TSeries::zero(&target, n);
    for (mono, c) in s.terms() {
        if mono.degree() as usize >= n {
            break;
        }
        let mut term = TSeries::constant(&target, n, c.clone());
        for (i, &e) in mono.exps().iter().enumerate() {
            while powers[i].len() <= e as usize {
                let next = powers[i].last().expect("seeded") * &images[i];
                powers[i].push(next);
            }
            if e > 0 {
                term = &term * &powers[i][e as usize];
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Restriction of `s` to a parametrized curve germ `t ↦ curve(t)`.
pub fn ts_substitute_curve<F: Field>(s: &TSeries<F>, curve: &[TSeries<F>]) -> Result<TSeries<F>, SeriesError> {
    if let Some(c) = curve.first() {
        if c.ctx().arity() != 1 {
            return Err(SeriesError::Arity { expected: 1, got: c.ctx().arity() });
        }
    }
    compose(s, curve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::poly::{MPoly, VarContext};

    fn xyz() -> VarContext {
        VarContext::of(&["x", "y", "z"])
    }

    fn t() -> VarContext {
        VarContext::of(&["t"])
    }

    fn ts(s: &str, n: usize) -> TSeries<Rat> {
        TSeries::from_poly(&MPoly::parse(s, &t()).unwrap(), n)
    }

    #[test]
    fn plane_through_line() {
        let s = TSeries::from_poly(&MPoly::parse("z - x", &xyz()).unwrap(), 6);
        let on = ts_substitute_curve(&s, &[ts("t", 6), ts("0", 6), ts("t", 6)]).unwrap();
        assert!(on.is_zero());
        let off = ts_substitute_curve(&s, &[ts("t", 6), ts("0", 6), ts("-t", 6)]).unwrap();
        assert_eq!(off, ts("-2*t", 6));
    }

    #[test]
    fn order_is_the_minimum() {
        let s = TSeries::from_poly(&MPoly::parse("x^2 + y", &xyz()).unwrap(), 8);
        let r = compose(&s, &[ts("t + t^2", 5), ts("t^3", 6), ts("0", 6)]).unwrap();
        assert_eq!(r.order(), 5);
        assert_eq!(r, ts("t^2 + 3*t^3 + t^4", 5));
    }

    #[test]
    fn arity_checked() {
        let s = TSeries::from_poly(&MPoly::parse("x", &xyz()).unwrap(), 4);
        assert!(matches!(ts_substitute_curve(&s, &[ts("t", 4)]), Err(SeriesError::Arity { expected: 3, got: 1 })));
        assert!(matches!(
            ts_substitute_curve(&s, &[ts("1 + t", 4), ts("t", 4), ts("t", 4)]),
            Err(SeriesError::NotUnit)
        ));
    }
}
