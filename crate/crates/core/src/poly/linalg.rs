//! Fraction-free determinants over exact rings.

use super::MPoly;
use crate::arith::{Field, GaussRat, Rat};
use crate::error::PolyError;

/// Commutative ring with exact division by known divisors.
pub trait ExactRing: Clone {
    fn ring_zero(like: &Self) -> Self;
    fn ring_one(like: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// `self / d`, where `d` is known to divide `self`.
    fn ring_div_exact(&self, d: &Self) -> Result<Self, PolyError>;
}

macro_rules! field_ring {
    ($t:ty) => {
        impl ExactRing for $t {
            fn ring_zero(_: &Self) -> Self {
                <$t as Field>::zero()
            }
            fn ring_one(_: &Self) -> Self {
                <$t as Field>::one()
            }
            fn ring_is_zero(&self) -> bool {
                Field::is_zero(self)
            }
            fn ring_mul(&self, o: &Self) -> Self {
                self * o
            }
            fn ring_sub(&self, o: &Self) -> Self {
                self - o
            }
            fn ring_neg(&self) -> Self {
                -self
            }
            fn ring_div_exact(&self, d: &Self) -> Result<Self, PolyError> {
                if Field::is_zero(d) {
                    Err(PolyError::DivisionByZero)
                } else {
                    Ok(self / d)
                }
            }
        }
    };
}

field_ring!(Rat);
field_ring!(GaussRat);

impl<F: Field> ExactRing for MPoly<F> {
    fn ring_zero(like: &Self) -> Self {
        MPoly::zero(like.ctx())
    }
    fn ring_one(like: &Self) -> Self {
        MPoly::one(like.ctx())
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        self.exact_divide(d)
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn determinant<T: ExactRing>(m: &[Vec<T>]) -> Result<T, PolyError> {
    let n = m.len();
    if let Some(bad) = m.iter().find(|r| r.len() != n) {
        return Err(PolyError::NotSquare { rows: n, cols: bad.len() });
    }
    if n == 0 {
        return Err(PolyError::NotSquare { rows: 0, cols: 0 });
    }
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut negate = false;
    let mut prev = T::ring_one(&a[0][0]);
    for k in 0..n - 1 {
        if a[k][k].ring_is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].ring_is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(T::ring_zero(&a[0][0])),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].ring_mul(&a[i][j]).ring_sub(&a[i][k].ring_mul(&a[k][j]));
                a[i][j] = num.ring_div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.ring_neg() } else { d })
}

/// A nonzero vector orthogonal to the rows of a 3×4 matrix of full rank,
/// by signed 3×3 minors. Returns `None` if the rows are dependent.
pub fn kernel_3x4<F: Field>(rows: &[[F; 4]; 3]) -> Option<[F; 4]> {
    let minor = |skip: usize| -> F {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let m: Vec<Vec<F>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        det3(&m)
    };
    let v = [minor(0), -minor(1), minor(2), -minor(3)];
    if v.iter().all(Field::is_zero) {
        None
    } else {
        Some(v)
    }
}

/// A solution of `A·x = b` by Gauss-Jordan elimination, free variables set
/// to zero; `None` if the system is inconsistent.
pub fn solve_linear<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut().skip(c) {
            *x = x.clone() * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for k in c..=cols {
                    row[k] = row[k].clone() - f.clone() * &pivot_row[k];
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

fn det3<F: Field>(m: &[Vec<F>]) -> F {
    m[0][0].clone() * &(m[1][1].clone() * &m[2][2] - m[1][2].clone() * &m[2][1])
        - m[0][1].clone() * &(m[1][0].clone() * &m[2][2] - m[1][2].clone() * &m[2][0])
        + m[0][2].clone() * &(m[1][0].clone() * &m[2][1] - m[1][1].clone() * &m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| Rat::from(x)).collect()).collect()
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let a = mat(&[&[1, 2, 0], &[0, 1, 1], &[1, 3, 1]]);
        let b: Vec<Rat> = [3, 2, 5].iter().map(|&x| Rat::from(x)).collect();
        let x = solve_linear(&a, &b).unwrap();
        for (row, want) in a.iter().zip(&b) {
            let got = row.iter().zip(&x).fold(Rat::zero(), |acc, (p, q)| acc + p.clone() * q);
            assert_eq!(&got, want);
        }
        let bad: Vec<Rat> = [3, 2, 6].iter().map(|&x| Rat::from(x)).collect();
        assert!(solve_linear(&a, &bad).is_none());
    }

    #[test]
    fn identity_and_repeated_rows() {
        let id = mat(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(determinant(&id).unwrap(), Rat::one());
        let rep = mat(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert!(determinant(&rep).unwrap().is_zero());
    }

    #[test]
    fn pivoting_and_sign() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m).unwrap(), Rat::from(-1));
        let m = mat(&[&[2, -3, 1], &[2, 0, -1], &[1, 4, 5]]);
        assert_eq!(determinant(&m).unwrap(), Rat::from(49));
    }

    #[test]
    fn non_square_rejected() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(determinant(&m), Err(PolyError::NotSquare { .. })));
    }

    #[test]
    fn kernel_of_coordinate_rows() {
        let one = Rat::one;
        let z = Rat::zero;
        let rows = [[z(), one(), z(), z()], [z(), z(), one(), z()], [z(), z(), z(), one()]];
        let v = kernel_3x4(&rows).unwrap();
        assert!(!v[0].is_zero());
        assert!(v[1..].iter().all(|c| c.is_zero()));
    }
}
