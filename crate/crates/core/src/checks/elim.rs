//! Elimination on the projective plane: generic coordinate changes,
//! projection from `(0:0:1)` by resultants, and root bookkeeping on the
//! resulting binary forms.

use rand::Rng;

use crate::arith::{Field, Rat};
use crate::models::seeded_rng;
use crate::poly::{determinant, resultant, BinaryForm, MPoly, UPoly, VarContext};

pub const ATTEMPTS: u64 = 6;

/// Stream offset for coordinate changes, apart from the model generators.
const STREAM_CHANGE: u64 = 1 << 20;

pub fn plane_ctx() -> VarContext {
    VarContext::of(&["s0", "s1", "s2"])
}

/// `s = M·s'`, with `M` invertible.
#[derive(Clone, Debug)]
pub struct PlaneChange {
    pub m: [[Rat; 3]; 3],
    pub inv: [[Rat; 3]; 3],
}

impl PlaneChange {
    /// A seeded invertible integer matrix, one per attempt.
    pub fn generic(seed: u64, attempt: u64) -> PlaneChange {
        let mut rng = seeded_rng(seed, STREAM_CHANGE + attempt);
        loop {
            let m: [[Rat; 3]; 3] =
                std::array::from_fn(|_| std::array::from_fn(|_| Rat::from(rng.gen_range(-7i64..=7))));
            let rows: Vec<Vec<Rat>> = m.iter().map(|r| r.to_vec()).collect();
            let det = determinant(&rows).expect("3x3");
            if let Some(d_inv) = det.recip() {
                let inv = std::array::from_fn(|i| std::array::from_fn(|j| cofactor(&m, j, i) * &d_inv));
                return PlaneChange { m, inv };
            }
        }
    }

    /// `p(M·s')` as a polynomial in `s'`.
    pub fn apply(&self, p: &MPoly) -> MPoly {
        let ctx = p.ctx();
        let images: Vec<MPoly> = (0..3)
            .map(|i| (0..3).fold(MPoly::zero(ctx), |acc, k| &acc + &MPoly::var(ctx, k).scale(&self.m[i][k])))
            .collect();
        p.substitute(&images).expect("same context")
    }

    /// New coordinates `M⁻¹·P` of a point.
    pub fn pull_point(&self, p: &[Rat; 3]) -> [Rat; 3] {
        std::array::from_fn(|i| (0..3).fold(Rat::zero(), |acc, k| acc + self.inv[i][k].clone() * &p[k]))
    }
}

fn cofactor(m: &[[Rat; 3]; 3], i: usize, j: usize) -> Rat {
    let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
    let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
    let d = m[r[0]][c[0]].clone() * &m[r[1]][c[1]] - m[r[0]][c[1]].clone() * &m[r[1]][c[0]];
    if (i + j).is_multiple_of(2) {
        d
    } else {
        -d
    }
}

/// A point of the projective line `(s0 : s1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineRoot {
    Finite(Rat),
    Infinity,
}

impl std::fmt::Display for LineRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LineRoot::Finite(r) => write!(f, "(1 : {r})"),
            LineRoot::Infinity => write!(f, "(0 : 1)"),
        }
    }
}

/// Projection of a point from `(0:0:1)`.
pub fn project(p: &[Rat; 3]) -> LineRoot {
    if p[0].is_zero() {
        LineRoot::Infinity
    } else {
        LineRoot::Finite(p[1].clone() / &p[0])
    }
}

/// `res_{s2}(p, q)` as a binary form in `(s0, s1)`; `None` if it vanishes.
pub fn eliminate(p: &MPoly, q: &MPoly) -> Option<BinaryForm<Rat>> {
    let r = resultant(p, q, 2).ok()?;
    if r.is_zero() {
        return None;
    }
    BinaryForm::from_mpoly(&r, 0, 1).ok()
}

/// Removes every factor vanishing at `root`; returns the multiplicity.
pub fn deflate(f: &BinaryForm<Rat>, root: &LineRoot) -> (BinaryForm<Rat>, usize) {
    match root {
        LineRoot::Infinity => {
            let k = f.infinity_multiplicity();
            (BinaryForm { degree: f.degree - k, affine: f.affine.clone() }, k)
        }
        LineRoot::Finite(r) => {
            let (affine, k) = f.affine.deflate(r);
            (BinaryForm { degree: f.degree - k, affine }, k)
        }
    }
}

pub fn vanishes_at(f: &BinaryForm<Rat>, root: &LineRoot) -> bool {
    match root {
        LineRoot::Infinity => f.infinity_multiplicity() > 0,
        LineRoot::Finite(r) => f.affine.eval(r).is_zero(),
    }
}

/// Whether `p(0, 0, 1) ≠ 0`, i.e. the projection center is off the curve and
/// `p` has full degree in `s2` with a constant leading coefficient.
pub fn center_off(p: &MPoly) -> bool {
    !p.evaluate(&[Rat::zero(), Rat::zero(), Rat::one()]).is_zero()
}

/// The restriction of `p` to the line over `root`, as a polynomial in the
/// fiber coordinate: `p(1, r, s)` or `p(0, 1, s)`.
pub fn fiber(p: &MPoly, root: &LineRoot) -> UPoly<Rat> {
    let (a, b) = match root {
        LineRoot::Finite(r) => (Rat::one(), r.clone()),
        LineRoot::Infinity => (Rat::zero(), Rat::one()),
    };
    p.specialize(0, &a).specialize(1, &b).to_upoly(2).expect("only s2 remains")
}

/// Lowest-form discriminant test for a node: `p` is an affine polynomial in
/// two variables vanishing at the origin; returns the discriminant of its
/// degree-2 part (nonzero for an ordinary double point), or `None` if the
/// lowest degree is not 2.
pub fn node_discriminant<F: Field>(p: &MPoly<F>, u: usize, w: usize) -> Option<F> {
    if p.min_degree() != Some(2) {
        return None;
    }
    let q = p.homogeneous_part(2, None);
    let e = |a: u32, b: u32| {
        let mut v = vec![0u32; p.ctx().arity()];
        v[u] = a;
        v[w] = b;
        q.coeff_of(&v)
    };
    let (a, b, c) = (e(2, 0), e(1, 1), e(0, 2));
    Some(b.clone() * &b - a * &c * &F::from(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn change_inverts() {
        let ch = PlaneChange::generic(3, 1);
        let p = [Rat::from(2), Rat::from(-1), Rat::from(5)];
        let back = ch.pull_point(&p);
        let again: [Rat; 3] =
            std::array::from_fn(|i| (0..3).fold(Rat::zero(), |a, k| a + ch.m[i][k].clone() * &back[k]));
        assert_eq!(again, p);
    }

    #[test]
    fn node_and_tacnode() {
        let ctx = VarContext::of(&["u", "w"]);
        let node = MPoly::parse("u^2 - 4*w^2 + u^3", &ctx).unwrap();
        assert_eq!(node_discriminant(&node, 0, 1), Some(Rat::from(16)));
        let tac = MPoly::parse("w^2 - u^4", &ctx).unwrap();
        assert_eq!(node_discriminant(&tac, 0, 1), Some(Rat::zero()));
        let cusp = MPoly::parse("w^2 - u^3", &ctx).unwrap();
        assert_eq!(node_discriminant(&cusp, 0, 1), Some(Rat::zero()));
        assert_eq!(node_discriminant(&MPoly::parse("w^3 - u^3", &ctx).unwrap(), 0, 1), None);
    }
}
