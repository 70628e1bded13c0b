//! The singular octic `Q`, its double curves and the affine charts at the
//! four coordinate vertices.

use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::error::ModelError;
use crate::poly::{MPoly, VarContext};

pub const COORDS: [&str; 4] = ["z0", "z1", "z2", "z3"];
pub const LAMBDAS: [&str; 4] = ["l0", "l1", "l2", "l3"];
pub const CHART: [&str; 3] = ["x", "y", "z"];

/// The default parameters: every frame root and discriminant root is rational.
pub const DEFAULT_LAMBDA: [i64; 4] = [1, 1, 4, -9];
/// A second rational specialization, with frame (2, 3, 1).
pub const ALTERNATE_LAMBDA: [i64; 4] = [1, 4, 9, -1];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OcticParams {
    pub lambda: [Rat; 4],
}

impl OcticParams {
    pub fn new(lambda: [Rat; 4]) -> Result<OcticParams, ModelError> {
        for (i, l) in lambda.iter().enumerate().skip(1) {
            if l.is_zero() {
                return Err(ModelError::ZeroLambda(i));
            }
        }
        Ok(OcticParams { lambda })
    }

    pub fn from_ints(l: [i64; 4]) -> Result<OcticParams, ModelError> {
        OcticParams::new(l.map(Rat::from))
    }

    pub fn default_params() -> OcticParams {
        OcticParams::from_ints(DEFAULT_LAMBDA).expect("nonzero")
    }

    pub fn lambda(&self, i: usize) -> &Rat {
        &self.lambda[i]
    }
}

pub fn coord_ctx() -> VarContext {
    VarContext::of(&COORDS)
}

/// Coordinates followed by the four symbolic parameters.
pub fn symbolic_ctx() -> VarContext {
    VarContext::of(&[COORDS[0], COORDS[1], COORDS[2], COORDS[3], LAMBDAS[0], LAMBDAS[1], LAMBDAS[2], LAMBDAS[3]])
}

pub fn chart_ctx() -> VarContext {
    VarContext::of(&CHART)
}

/// Chart coordinates followed by the symbolic parameters.
pub fn symbolic_chart_ctx() -> VarContext {
    VarContext::of(&[CHART[0], CHART[1], CHART[2], LAMBDAS[0], LAMBDAS[1], LAMBDAS[2], LAMBDAS[3]])
}

fn octic_from(z: &[MPoly; 4], l: &[MPoly; 4]) -> MPoly {
    let sq = |p: &MPoly| p * p;
    let m = |i: usize, j: usize| &sq(&z[i]) * &sq(&z[j]);
    let two = Rat::from(2);
    let mut q = &sq(&l[1]) * &(&sq(&m(0, 1)) + &sq(&m(2, 3)));
    q = &q + &(&sq(&l[2]) * &(&sq(&m(0, 2)) + &sq(&m(1, 3))));
    q = &q + &(&sq(&l[3]) * &(&sq(&m(0, 3)) + &sq(&m(1, 2))));
    q = &q + &(&(&l[1] * &l[2]).scale(&two) * &(&(&m(0, 1) + &m(2, 3)) * &(&m(1, 3) - &m(0, 2))));
    q = &q + &(&(&l[1] * &l[3]).scale(&two) * &(&(&m(0, 1) - &m(2, 3)) * &(&m(0, 3) - &m(1, 2))));
    q = &q + &(&(&l[2] * &l[3]).scale(&two) * &(&(&m(0, 2) + &m(1, 3)) * &(&m(0, 3) + &m(1, 2))));
    &q + &(&sq(&l[0]) * &(&m(0, 1) * &m(2, 3)))
}

/// `Q` over `symbolic_ctx()`, with `λ_i` the variable `l_i`.
pub fn octic_symbolic() -> MPoly {
    let ctx = symbolic_ctx();
    let z = std::array::from_fn(|i| MPoly::var(&ctx, i));
    let l = std::array::from_fn(|i| MPoly::var(&ctx, 4 + i));
    octic_from(&z, &l)
}

/// `Q` over `coord_ctx()` at the given parameters.
pub fn octic(params: &OcticParams) -> MPoly {
    let ctx = coord_ctx();
    let z = std::array::from_fn(|i| MPoly::var(&ctx, i));
    let l = std::array::from_fn(|i| MPoly::constant(&ctx, params.lambda[i].clone()));
    octic_from(&z, &l)
}

/// `Q` in either mode: symbolic over `symbolic_ctx()`, or specialized over
/// `coord_ctx()`.
pub fn build_octic(params: &OcticParams, symbolic: bool) -> MPoly {
    if symbolic {
        octic_symbolic()
    } else {
        octic(params)
    }
}

/// Substitutes parameter values into a polynomial over `symbolic_ctx()`.
pub fn specialize_symbolic(p: &MPoly, params: &OcticParams) -> MPoly {
    let mut out = p.clone();
    for i in 0..4 {
        out = out.specialize(4 + i, &params.lambda[i]);
    }
    out.remap(&coord_ctx(), &[0, 1, 2, 3, 0, 0, 0, 0])
}

/// Signed `(coefficient index, i, k, l)` triples: `C_j = Σ ± λ_c z_i² z_k²`.
fn curve_terms(j: usize) -> [(i64, usize, usize, usize); 3] {
    match j {
        0 => [(1, 1, 2, 3), (1, 2, 1, 3), (1, 3, 1, 2)],
        1 => [(-1, 1, 2, 3), (1, 2, 0, 2), (1, 3, 0, 3)],
        2 => [(1, 1, 0, 1), (1, 2, 1, 3), (1, 3, 0, 3)],
        _ => [(-1, 1, 0, 1), (1, 2, 0, 2), (1, 3, 1, 2)],
    }
}

fn curve_from(j: usize, z: &[MPoly], l: &[MPoly]) -> MPoly {
    let ctx = z[0].ctx().clone();
    curve_terms(j).iter().fold(MPoly::zero(&ctx), |acc, &(s, c, i, k)| {
        let t = &(&l[c] * &(&z[i] * &z[i])) * &(&z[k] * &z[k]);
        &acc + &t.scale(&Rat::from(s))
    })
}

/// The double curve `S̄_j = X₀ ∩ H_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCurve {
    pub plane: usize,
    /// `C_j`, normalized so its graded-lex leading coefficient is positive;
    /// `Q|_{z_j=0} = C_j²`.
    pub quartic: MPoly,
    /// The form as printed in the literature for `j = 3`
    /// (`−λ₁z₀²z₁² + λ₂z₀²z₂² + λ₃z₁²z₂²`) and its symmetry images.
    pub display_form: MPoly,
    pub nodes: [[i64; 4]; 3],
}

fn vertex(j: usize) -> [i64; 4] {
    std::array::from_fn(|i| i64::from(i == j))
}

fn curve_nodes(j: usize) -> [[i64; 4]; 3] {
    let mut it = (0..4).filter(|&i| i != j).map(vertex);
    std::array::from_fn(|_| it.next().expect("three vertices"))
}

/// `C_j` over `symbolic_ctx()`, sign-normalized.
pub fn double_curve_symbolic(j: usize) -> Result<DoubleCurve, ModelError> {
    if j > 3 {
        return Err(ModelError::Vertex(j));
    }
    let ctx = symbolic_ctx();
    let z: Vec<MPoly> = (0..4).map(|i| MPoly::var(&ctx, i)).collect();
    let l: Vec<MPoly> = (0..4).map(|i| MPoly::var(&ctx, 4 + i)).collect();
    let display_form = curve_from(j, &z, &l);
    let (quartic, _) = display_form.normalize_sign();
    Ok(DoubleCurve { plane: j, quartic, display_form, nodes: curve_nodes(j) })
}

/// `C_j` over `coord_ctx()` at the given parameters, sign-normalized.
pub fn double_curve(params: &OcticParams, j: usize) -> Result<DoubleCurve, ModelError> {
    if j > 3 {
        return Err(ModelError::Vertex(j));
    }
    let ctx = coord_ctx();
    let z: Vec<MPoly> = (0..4).map(|i| MPoly::var(&ctx, i)).collect();
    let l: Vec<MPoly> = params.lambda.iter().map(|c| MPoly::constant(&ctx, c.clone())).collect();
    let display_form = curve_from(j, &z, &l);
    let (quartic, _) = display_form.normalize_sign();
    Ok(DoubleCurve { plane: j, quartic, display_form, nodes: curve_nodes(j) })
}

/// `β_j`: the coefficient of `z_j²` in `q`.
pub fn beta(q: &MPoly, j: usize) -> MPoly {
    q.coefficients_in(j).get(2).cloned().unwrap_or_else(|| MPoly::zero(q.ctx()))
}

/// The three coordinates other than `z_j`, in index order: the chart
/// variables `(x, y, z)` at `p_j`.
pub fn chart_coords(j: usize) -> [usize; 3] {
    let mut it = (0..4).filter(|&i| i != j);
    std::array::from_fn(|_| it.next().expect("three coordinates"))
}

/// Dehomogenizes `p` (over `coord_ctx()`) at `z_j = 1` into `chart_ctx()`.
pub fn affine_at_vertex(p: &MPoly, j: usize) -> MPoly {
    let mut mapping = [0usize; 4];
    for (k, &c) in chart_coords(j).iter().enumerate() {
        mapping[c] = k;
    }
    p.specialize(j, &Rat::one()).remap(&chart_ctx(), &mapping)
}

/// Dehomogenizes `p` (over `symbolic_ctx()`) at `z_j = 1` into
/// `symbolic_chart_ctx()`.
pub fn affine_at_vertex_symbolic(p: &MPoly, j: usize) -> MPoly {
    let mut mapping = [0usize, 0, 0, 0, 3, 4, 5, 6];
    for (k, &c) in chart_coords(j).iter().enumerate() {
        mapping[c] = k;
    }
    p.specialize(j, &Rat::one()).remap(&symbolic_chart_ctx(), &mapping)
}

/// How the parameters enter the tangent cone at `p_j`.
///
/// The degree-4 part of the affine octic is
/// `(Σ α_v v²)² − 4 α_p α_q p² q²` with `α_v = λ_{alpha[v]}` and `(p, q)` the
/// chart variables in `pair`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRoles {
    pub vertex: usize,
    pub alpha: [usize; 3],
    pub pair: (usize, usize),
    pub rest: usize,
}

pub fn vertex_roles(j: usize) -> Result<VertexRoles, ModelError> {
    let (alpha, pair, rest) = match j {
        0 => ([1, 2, 3], (0, 1), 2),
        1 => ([1, 3, 2], (0, 1), 2),
        2 => ([2, 3, 1], (0, 2), 1),
        3 => ([3, 2, 1], (0, 2), 1),
        _ => return Err(ModelError::Vertex(j)),
    };
    Ok(VertexRoles { vertex: j, alpha, pair, rest })
}

impl VertexRoles {
    /// The closed-form tangent cone over `symbolic_chart_ctx()`.
    pub fn cone_symbolic(&self) -> MPoly {
        let ctx = symbolic_chart_ctx();
        let v = |k: usize| MPoly::var(&ctx, k);
        let l = |k: usize| MPoly::var(&ctx, 3 + self.alpha[k]);
        let s = (0..3).fold(MPoly::zero(&ctx), |acc, k| &acc + &(&l(k) * &(&v(k) * &v(k))));
        let (p, q) = self.pair;
        let cross = &(&(&l(p) * &l(q)) * &(&v(p) * &v(p))) * &(&v(q) * &v(q));
        &(&s * &s) - &cross.scale(&Rat::from(4))
    }

    /// The closed-form tangent cone at the given parameters, over
    /// `chart_ctx()`.
    pub fn cone(&self, params: &OcticParams) -> MPoly {
        let mut c = self.cone_symbolic();
        for i in 0..4 {
            c = c.specialize(3 + i, &params.lambda[i]);
        }
        c.remap(&chart_ctx(), &[0, 1, 2, 0, 0, 0, 0])
    }
}
