//! Tangent frames, tangent-cone planes and lines, and the curve germs of the
//! double curves at each vertex.

use serde::{Deserialize, Serialize};

use super::octic::{affine_at_vertex, chart_coords, double_curve, vertex_roles, OcticParams, VertexRoles};
use crate::arith::{Field, GaussRat, Rat};
use crate::error::{ModelError, SeriesError};
use crate::poly::{MPoly, VarContext};
use crate::series::TSeries;

/// `μ = (√λ₁, √λ₂, √(−λ₃))`, all rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentFrame {
    pub mu: [Rat; 3],
}

impl TangentFrame {
    pub fn new(params: &OcticParams, mu: [Rat; 3]) -> Result<TangentFrame, ModelError> {
        let want = [params.lambda[1].clone(), params.lambda[2].clone(), -params.lambda[3].clone()];
        for (k, (m, w)) in mu.iter().zip(&want).enumerate() {
            if &(m * m) != w {
                return Err(ModelError::Frame(format!("μ{}² = {} but expected {}", k + 1, m * m, w)));
            }
        }
        Ok(TangentFrame { mu })
    }

    /// Derives `μ` from `λ`, with non-negative roots.
    pub fn auto(params: &OcticParams) -> Result<TangentFrame, ModelError> {
        let want = [params.lambda[1].clone(), params.lambda[2].clone(), -params.lambda[3].clone()];
        let mut mu = Vec::with_capacity(3);
        for w in &want {
            mu.push(w.sqrt().ok_or_else(|| ModelError::IrrationalFrame(w.to_string()))?);
        }
        let mu: [Rat; 3] = mu.try_into().expect("three roots");
        Ok(TangentFrame { mu })
    }
}

/// The frame `ν` at a vertex, over ℚ(i): `ν_v² = α_v` for the paired chart
/// variables and `ν_r² = −α_r` for the remaining one, so that the tangent
/// cone is `∏ (ν_x x ± ν_y y ± ν_z z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexFrame {
    pub vertex: usize,
    pub roles: VertexRoles,
    pub nu: [GaussRat; 3],
}

pub fn vertex_frame(params: &OcticParams, frame: &TangentFrame, j: usize) -> Result<VertexFrame, ModelError> {
    let roles = vertex_roles(j)?;
    let g = |r: &Rat| GaussRat::real(r.clone());
    let i = GaussRat::i();
    let [m1, m2, m3] = &frame.mu;
    let nu = match j {
        0 => [g(m1), g(m2), g(m3)],
        1 => [g(m1), i.clone() * g(m3), i * g(m2)],
        2 => [g(m2), g(m3), g(m1)],
        _ => [i.clone() * g(m3), i * g(m2), g(m1)],
    };
    for (k, n) in nu.iter().enumerate() {
        let a = GaussRat::real(params.lambda[roles.alpha[k]].clone());
        let want = if k == roles.rest { -a } else { a };
        if n.clone() * n != want {
            return Err(ModelError::Frame(format!("vertex p{j}: ν{k}² ≠ {want}")));
        }
    }
    Ok(VertexFrame { vertex: j, roles, nu })
}

/// A linear form, normalized so its first nonzero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinForm<F: Field = Rat> {
    coeffs: Vec<F>,
}

impl<F: Field> LinForm<F> {
    pub fn new(coeffs: Vec<F>) -> Result<LinForm<F>, ModelError> {
        let lead = coeffs.iter().find(|c| !c.is_zero()).ok_or(ModelError::ZeroForm)?;
        let inv = lead.inv().expect("nonzero");
        Ok(LinForm { coeffs: coeffs.iter().map(|c| c.clone() * &inv).collect() })
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn eval(&self, point: &[F]) -> F {
        self.coeffs.iter().zip(point).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn to_poly(&self, ctx: &VarContext) -> MPoly<F> {
        self.coeffs.iter().enumerate().fold(MPoly::zero(ctx), |acc, (i, c)| &acc + &MPoly::var(ctx, i).scale(c))
    }

    /// The linear part of a polynomial or series piece.
    pub fn from_linear(p: &MPoly<F>) -> Result<LinForm<F>, ModelError> {
        let n = p.ctx().arity();
        let coeffs = (0..n)
            .map(|i| {
                let mut e = vec![0u32; n];
                e[i] = 1;
                p.coeff_of(&e)
            })
            .collect();
        LinForm::new(coeffs)
    }
}

/// A line through the vertex, by its normalized direction.
pub type LineGerm<F = GaussRat> = LinForm<F>;

pub const PLANE_LABELS: [&str; 4] = ["P++", "P+-", "P-+", "P--"];
pub const LINE_LABELS: [&str; 6] = ["l1+", "l1-", "l2+", "l2-", "l3+", "l3-"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentConeData {
    pub vertex: usize,
    /// `P^{s₁s₂} = ν_x x + s₁ν_y y + s₂ν_z z` in label order.
    pub planes: [LinForm<GaussRat>; 4],
    /// `ℓ_k^±`: `{v_k = 0, ν_a a = ±ν_b b}` for the other two chart
    /// variables `a < b`, in label order.
    pub lines: [LineGerm; 6],
}

pub fn tangent_cone_data(vf: &VertexFrame) -> Result<TangentConeData, ModelError> {
    let [nx, ny, nz] = vf.nu.clone();
    let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
    let mut planes = Vec::with_capacity(4);
    for (s1, s2) in signs {
        planes.push(LinForm::new(vec![nx.clone(), ny.clone() * GaussRat::from(s1), nz.clone() * GaussRat::from(s2)])?);
    }
    let z = GaussRat::zero;
    let mut lines = Vec::with_capacity(6);
    for s in [1i64, -1] {
        lines.push(LinForm::new(vec![z(), nz.clone(), ny.clone() * GaussRat::from(s)])?);
    }
    for s in [1i64, -1] {
        lines.push(LinForm::new(vec![nz.clone(), z(), nx.clone() * GaussRat::from(s)])?);
    }
    for s in [1i64, -1] {
        lines.push(LinForm::new(vec![ny.clone(), nx.clone() * GaussRat::from(s), z()])?);
    }
    Ok(TangentConeData {
        vertex: vf.vertex,
        planes: planes.try_into().expect("four planes"),
        lines: lines.try_into().expect("six lines"),
    })
}

pub fn t_ctx() -> VarContext {
    VarContext::of(&["t"])
}

/// A smooth branch of a double curve through a vertex, as `t ↦ (x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveGerm<F: Field = GaussRat> {
    /// Index `m` of the double curve `S̄_m ⊂ H_m`.
    pub owner: usize,
    /// The chart variable vanishing on the germ.
    pub chart_var: usize,
    pub sign: i8,
    pub param: [TSeries<F>; 3],
}

impl<F: Field> CurveGerm<F> {
    pub fn tangent(&self) -> Result<LineGerm<F>, ModelError> {
        LinForm::new(self.param.iter().map(|s| s.piece(1).coeff_of(&[1])).collect())
    }
}

/// The six branches of `S̄ = ∪ S̄_m` at `p_j`, two per double curve through
/// the vertex, with parametrizations known to order `order`.
///
/// In the chart plane `v_k = 0` the affine curve reads
/// `αu² + βw² + γu²w² = 0`; with `u = t`, `w = ±√(−αt²/(β + γt²))`.
pub fn curve_branch_germs(params: &OcticParams, j: usize, order: usize) -> Result<Vec<CurveGerm>, ModelError> {
    if order < 4 {
        return Err(SeriesError::Order(order).into());
    }
    let coords = chart_coords(j);
    let tc = t_ctx();
    let mut out = Vec::with_capacity(6);
    for (k, &m) in coords.iter().enumerate() {
        let curve = affine_at_vertex(&double_curve(params, m)?.quartic, j).to_gauss();
        let (u, w) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let e = |a: u32, b: u32| {
            let mut v = [0u32; 3];
            v[u] = a;
            v[w] = b;
            v
        };
        let (alpha, beta, gamma) = (curve.coeff_of(&e(2, 0)), curve.coeff_of(&e(0, 2)), curve.coeff_of(&e(2, 2)));
        if curve.len() != 3 || alpha.is_zero() || beta.is_zero() {
            return Err(ModelError::Frame(format!("unexpected double curve shape at p{j}: {curve}")));
        }
        let t2 = MPoly::from_terms(&tc, [(vec![2u32], GaussRat::one())]);
        let num = TSeries::from_poly(&t2.scale(&-alpha), order + 1);
        let den = TSeries::from_poly(&(&MPoly::constant(&tc, beta) + &t2.scale(&gamma)), order + 1);
        let w_t = (&num * &den.inverse()?).sqrt_graded()?;
        let t = TSeries::var(&tc, order, 0);
        for sign in [1i8, -1] {
            let mut param: [TSeries<GaussRat>; 3] = std::array::from_fn(|_| TSeries::zero(&tc, order));
            param[u] = t.clone();
            param[w] = if sign > 0 { w_t.clone() } else { w_t.neg() };
            out.push(CurveGerm { owner: m, chart_var: k, sign, param });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::determinant;

    fn g(n: i64) -> GaussRat {
        GaussRat::from(n)
    }

    #[test]
    fn default_frames() {
        let p = OcticParams::default_params();
        let f = TangentFrame::auto(&p).unwrap();
        assert_eq!(f.mu, [Rat::from(1), Rat::from(2), Rat::from(3)]);
        let nu = |j| vertex_frame(&p, &f, j).unwrap().nu;
        assert_eq!(nu(0), [g(1), g(2), g(3)]);
        assert_eq!(nu(2), [g(2), g(3), g(1)]);
        assert_eq!(nu(1)[1], GaussRat::new(Rat::zero(), Rat::from(3)));
        assert!(TangentFrame::new(&p, [Rat::from(1), Rat::from(2), Rat::from(2)]).is_err());
        let bad = OcticParams::from_ints([1, 2, 4, -9]).unwrap();
        assert!(matches!(TangentFrame::auto(&bad), Err(ModelError::IrrationalFrame(_))));
    }

    #[test]
    fn planes_and_lines_at_p0() {
        let p = OcticParams::default_params();
        let f = TangentFrame::auto(&p).unwrap();
        let d = tangent_cone_data(&vertex_frame(&p, &f, 0).unwrap()).unwrap();
        assert_eq!(d.planes[0].coeffs(), &[g(1), g(2), g(3)]);
        let l1p = LinForm::new(vec![g(0), g(3), g(2)]).unwrap();
        assert_eq!(d.lines[0], l1p);
        let on: Vec<bool> = d.planes.iter().map(|pl| pl.eval(l1p.coeffs()).is_zero()).collect();
        assert_eq!(on, [false, true, true, false]);
        for skip in 0..4 {
            let rows: Vec<Vec<GaussRat>> =
                (0..4).filter(|&i| i != skip).map(|i| d.planes[i].coeffs().to_vec()).collect();
            assert!(!determinant(&rows).unwrap().is_zero());
        }
    }

    #[test]
    fn germ_expansion() {
        let p = OcticParams::default_params();
        let germs = curve_branch_germs(&p, 0, 8).unwrap();
        assert_eq!(germs.len(), 6);
        // S̄₃ branch: y = x/2·(1 + 9/8·x² + ...)
        let b = germs.iter().find(|g| g.owner == 3 && g.sign > 0).unwrap();
        assert_eq!(b.param[1].piece(1).coeff_of(&[1]), GaussRat::from(Rat::new(1, 2)));
        assert_eq!(b.param[1].piece(3).coeff_of(&[3]), GaussRat::from(Rat::new(9, 16)));
        assert!(b.param[2].is_zero());
    }
}
