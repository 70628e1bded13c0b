//! Plane arrangements in P³, the companion quintic, and the two pencils.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::frame::LinForm;
use super::octic::coord_ctx;
use crate::arith::Rat;
use crate::error::ModelError;
use crate::poly::{determinant, MPoly, Monomial};

/// Stream ids keep independent draws from one seed apart.
pub const STREAM_ARRANGEMENT: u64 = 1;
pub const STREAM_QUINTIC: u64 = 2;

pub const MAX_DRAWS: usize = 1000;

/// A deterministic generator for `(seed, stream)`.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Provenance {
    Seed(u64),
    File(String),
    Given,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    pub forms: Vec<LinForm>,
    pub provenance: Provenance,
}

impl Arrangement {
    pub fn new(forms: Vec<LinForm>, provenance: Provenance) -> Result<Arrangement, ModelError> {
        for (i, f) in forms.iter().enumerate() {
            if forms[..i].contains(f) {
                return Err(ModelError::DuplicateForm(i));
            }
        }
        Ok(Arrangement { forms, provenance })
    }

    pub fn from_rows(rows: &[[i64; 4]]) -> Result<Arrangement, ModelError> {
        let forms =
            rows.iter().map(|r| LinForm::new(r.iter().map(|&c| Rat::from(c)).collect())).collect::<Result<_, _>>()?;
        Arrangement::new(forms, Provenance::Given)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// `∏ L_j` over `coord_ctx()`.
    pub fn product(&self) -> MPoly {
        let ctx = coord_ctx();
        self.forms.iter().fold(MPoly::one(&ctx), |acc, f| &acc * &f.to_poly(&ctx))
    }
}

/// Determinant of the 4×4 matrix with the given forms as rows.
pub fn quadruple_det(forms: &[&LinForm]) -> Rat {
    let rows: Vec<Vec<Rat>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
    determinant(&rows).expect("4x4")
}

fn draw_form(rng: &mut ChaCha8Rng) -> Vec<Rat> {
    (0..4).map(|_| Rat::from(rng.gen_range(-9i64..=9))).collect()
}

/// Whether the forms are linearly independent (some maximal minor is
/// nonzero).
fn independent(forms: &[&LinForm]) -> bool {
    let k = forms.len();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<Vec<Rat>> = forms.iter().map(|f| cols.iter().map(|&c| f.coeffs()[c].clone()).collect()).collect();
        if !determinant(&rows).expect("square").is_zero() {
            return true;
        }
        // next k-subset of {0..4}
        let Some(i) = (0..k).rev().find(|&i| cols[i] < 4 - k + i) else { return false };
        cols[i] += 1;
        for t in i + 1..k {
            cols[t] = cols[t - 1] + 1;
        }
    }
}

/// Whether adding `cand` keeps every subset of at most 4 forms independent.
fn keeps_general_position(forms: &[LinForm], cand: &LinForm) -> bool {
    let size = (forms.len() + 1).min(4);
    let mut idx: Vec<usize> = (0..size - 1).collect();
    loop {
        let mut sub: Vec<&LinForm> = idx.iter().map(|&i| &forms[i]).collect();
        sub.push(cand);
        if !independent(&sub) {
            return false;
        }
        let n = forms.len();
        let k = size - 1;
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return true };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// `count` seeded forms with coefficients in `{−9..9}`, every 4 of them
/// linearly independent. Candidates breaking general position are redrawn.
pub fn build_arrangement(count: usize, seed: u64) -> Result<Arrangement, ModelError> {
    if count < 4 {
        return Err(ModelError::TooFewForms(count));
    }
    let mut rng = seeded_rng(seed, STREAM_ARRANGEMENT);
    let mut forms: Vec<LinForm> = Vec::with_capacity(count);
    let mut draws = 0;
    while forms.len() < count {
        if draws == MAX_DRAWS {
            return Err(ModelError::GeneratorExhausted(draws));
        }
        draws += 1;
        let Ok(cand) = LinForm::new(draw_form(&mut rng)) else { continue };
        if keeps_general_position(&forms, &cand) {
            forms.push(cand);
        }
    }
    Arrangement::new(forms, Provenance::Seed(seed))
}

/// All exponent vectors of total degree `d` in 4 variables, graded-lex
/// descending.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            for c in (0..=d - a - b).rev() {
                out.push(Monomial::new(vec![a, b, c, d - a - b - c]));
            }
        }
    }
    out
}

/// The `attempt`-th seeded quintic: coefficients in `{−9..9}` on all 56
/// quintic monomials.
pub fn draw_quintic(seed: u64, attempt: u64) -> MPoly {
    let mut rng = seeded_rng(seed, STREAM_QUINTIC + 16 * attempt);
    let ctx = coord_ctx();
    let terms = monomials_of_degree(5).into_iter().map(|m| (m.exps().to_vec(), Rat::from(rng.gen_range(-9i64..=9))));
    MPoly::from_terms(&ctx, terms)
}

/// A basis of the plane `{L = 0}` in ℚ⁴: `e_i − (l_i/l_k)·e_k` for the pivot
/// `k` (the first nonzero coefficient) and each `i ≠ k`.
pub fn plane_basis(form: &LinForm) -> [[Rat; 4]; 3] {
    let c = form.coeffs();
    let k = c.iter().position(|x| !x.is_zero()).expect("nonzero form");
    let mut basis = Vec::with_capacity(3);
    for i in (0..4).filter(|&i| i != k) {
        let mut v: [Rat; 4] = std::array::from_fn(|_| Rat::zero());
        v[i] = Rat::one();
        v[k] = -(c[i].clone() / &c[k]);
        basis.push(v);
    }
    basis.try_into().expect("three vectors")
}

/// `p(s₀b₀ + s₁b₁ + s₂b₂)` as a form in `(s0, s1, s2)`.
pub fn restrict_to_plane(p: &MPoly, basis: &[[Rat; 4]; 3]) -> MPoly {
    let ctx = crate::poly::VarContext::of(&["s0", "s1", "s2"]);
    let images: Vec<MPoly> = (0..4)
        .map(|i| (0..3).fold(MPoly::zero(&ctx), |acc, k| &acc + &MPoly::var(&ctx, k).scale(&basis[k][i])))
        .collect();
    p.substitute(&images).expect("same context")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PencilKind {
    Planes15,
    Octic,
}

/// `base + t·deformer^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pencil {
    pub kind: PencilKind,
    pub base: MPoly,
    pub deformer: MPoly,
    pub exponent: u32,
    pub description: String,
}

impl Pencil {
    pub fn degree(&self) -> u32 {
        self.base.total_degree().unwrap_or(0)
    }

    /// The member at parameter `t`, expanded.
    pub fn member(&self, t: &Rat) -> MPoly {
        &self.base + &self.deformer.pow(self.exponent).scale(t)
    }
}

fn form_degree(p: &MPoly) -> Result<u32, ModelError> {
    if !p.is_homogeneous() || p.is_zero() {
        return Err(ModelError::File(format!("not a nonzero form: {p}")));
    }
    Ok(p.total_degree().expect("nonzero"))
}

/// `∏ L_j + t·D³`.
pub fn build_pencil_planes(arr: &Arrangement, divisor: &MPoly) -> Result<Pencil, ModelError> {
    let base = arr.product();
    let d = form_degree(divisor)?;
    let n = arr.len() as u32;
    if n != 3 * d {
        return Err(ModelError::DegreeMismatch { base: n, deformer: 3 * d });
    }
    Ok(Pencil {
        kind: PencilKind::Planes15,
        base,
        deformer: divisor.clone(),
        exponent: 3,
        description: format!("product of {n} planes + t·(degree-{d} form)^3"),
    })
}

/// `Q + t·F` with `F(p_j) ≠ 0` at all four vertices.
pub fn build_pencil_octic(q: &MPoly, f: &MPoly) -> Result<Pencil, ModelError> {
    let base_deg = form_degree(q)?;
    let d = form_degree(f)?;
    if d != base_deg {
        return Err(ModelError::DegreeMismatch { base: base_deg, deformer: d });
    }
    for j in 0..4 {
        let point: Vec<Rat> = (0..4).map(|i| Rat::from(i64::from(i == j))).collect();
        if f.evaluate(&point).is_zero() {
            return Err(ModelError::DeformerVanishesAtVertex(j));
        }
    }
    Ok(Pencil {
        kind: PencilKind::Octic,
        base: q.clone(),
        deformer: f.clone(),
        exponent: 1,
        description: "Q + t·F".into(),
    })
}

/// `z₀⁸ + z₁⁸ + z₂⁸ + z₃⁸`.
pub fn fermat_octic() -> MPoly {
    let ctx = coord_ctx();
    (0..4).fold(MPoly::zero(&ctx), |acc, i| &acc + &MPoly::var(&ctx, i).pow(8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::octic::{octic, OcticParams};

    #[test]
    fn arrangement_is_deterministic() {
        let a = build_arrangement(15, 42).unwrap();
        let b = build_arrangement(15, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 15);
        assert_ne!(a, build_arrangement(15, 43).unwrap());
        assert!(matches!(build_arrangement(3, 1), Err(ModelError::TooFewForms(3))));
    }

    #[test]
    fn four_forms_full_rank() {
        for seed in 0..5 {
            let a = build_arrangement(4, seed).unwrap();
            let f: Vec<&LinForm> = a.forms.iter().collect();
            assert!(!quadruple_det(&f).is_zero());
        }
    }

    #[test]
    fn duplicates_rejected() {
        assert!(matches!(Arrangement::from_rows(&[[1, 0, 0, 0], [2, 0, 0, 0]]), Err(ModelError::DuplicateForm(1))));
        assert!(matches!(Arrangement::from_rows(&[[0, 0, 0, 0]]), Err(ModelError::ZeroForm)));
    }

    #[test]
    fn restriction_lies_in_plane() {
        let f = LinForm::new(vec![Rat::from(2), Rat::from(-1), Rat::from(3), Rat::from(5)]).unwrap();
        let b = plane_basis(&f);
        for v in &b {
            assert!(f.eval(v).is_zero());
        }
        let z0 = MPoly::var(&coord_ctx(), 0);
        let r = restrict_to_plane(&z0.pow(5), &b);
        assert!(r.is_homogeneous());
        assert_eq!(r.total_degree(), Some(5));
    }

    #[test]
    fn pencils() {
        let arr = build_arrangement(15, 42).unwrap();
        let z = coord_ctx();
        let quartic = MPoly::var(&z, 0).pow(4);
        assert!(matches!(
            build_pencil_planes(&arr, &quartic),
            Err(ModelError::DegreeMismatch { base: 15, deformer: 12 })
        ));
        let p = build_pencil_planes(&arr, &draw_quintic(42, 0)).unwrap();
        assert_eq!(p.degree(), 15);
        assert_eq!(p.member(&Rat::zero()), arr.product());

        let q = octic(&OcticParams::default_params());
        let f = fermat_octic();
        assert!(build_pencil_octic(&q, &f).is_ok());
        let bad = &f - &MPoly::var(&z, 2).pow(8);
        assert!(matches!(build_pencil_octic(&q, &bad), Err(ModelError::DeformerVanishesAtVertex(2))));
    }
}
