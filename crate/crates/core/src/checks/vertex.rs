//! Local structure of the octic at the vertices `p_j`: the tangent cone is
//! four planes, `Q` splits into two quadratic factors along two different
//! routes, and into four smooth branches whose incidences with the double
//! curve germs match the plane/line incidences of the cone.

use serde::Serialize;

use super::result::CheckResult;
use crate::arith::{Field, GaussRat, Rat};
use crate::models::{
    affine_at_vertex, affine_at_vertex_symbolic, curve_branch_germs, octic, tangent_cone_data, vertex_frame,
    vertex_roles, CurveGerm, LinForm, LineGerm, OcticParams, TangentFrame, LINE_LABELS, PLANE_LABELS,
};
use crate::poly::{determinant, MPoly};
use crate::series::{
    branch_split, compose, factor_quartic_vertical, ts_substitute_curve, BranchPair, QuarticSplit, TSeries, Which,
};

pub const MIN_VERTEX_ORDER: usize = 8;

/// Chart variable split by the first route.
pub const Z_ROUTE: usize = 2;
/// Chart variable split by the cross-check route.
pub const X_ROUTE: usize = 0;

/// Planes tangent to `Q⁺` and to `Q⁻` on each route, by index into
/// `PLANE_LABELS`.
const Z_PAIRING: [[usize; 2]; 2] = [[0, 1], [2, 3]];
const X_PAIRING: [[usize; 2]; 2] = [[0, 3], [1, 2]];

type G = GaussRat;

/// The octic near `p_j` in (possibly rescaled) chart coordinates, with the
/// tangent-cone data and double-curve germs in the same coordinates.
struct LocalModel {
    qa: MPoly<G>,
    cone: MPoly<G>,
    planes: [LinForm<G>; 4],
    lines: [LineGerm; 6],
    germs: Vec<CurveGerm>,
}

fn rescale_form(f: &LinForm<G>, s: &[G; 3], inverse: bool) -> LinForm<G> {
    let c = f.coeffs().iter().zip(s).map(|(c, s)| if inverse { c.clone() / s } else { c.clone() * s }).collect();
    LinForm::new(c).expect("nonzero form")
}

fn local_model(
    params: &OcticParams,
    frame: &TangentFrame,
    q: &MPoly,
    j: usize,
    order: usize,
    scale: &[Rat; 2],
) -> Result<LocalModel, String> {
    let vf = vertex_frame(params, frame, j).map_err(|e| e.to_string())?;
    let data = tangent_cone_data(&vf).map_err(|e| e.to_string())?;
    let germs = curve_branch_germs(params, j, order).map_err(|e| e.to_string())?;
    let s: [G; 3] = [G::real(scale[0].clone()), G::real(scale[1].clone()), G::one()];
    if s.iter().any(|c| c.is_zero()) {
        return Err("chart scaling must be nonzero".into());
    }
    let qa = affine_at_vertex(q, j).to_gauss();
    let ctx = qa.ctx().clone();
    let images: Vec<MPoly<G>> = (0..3).map(|k| MPoly::var(&ctx, k).scale(&s[k])).collect();
    let sub = |p: &MPoly<G>| p.substitute(&images).expect("chart context");
    let roles = vertex_roles(j).map_err(|e| e.to_string())?;
    let germs = germs
        .into_iter()
        .map(|mut g| {
            for (c, sk) in g.param.iter_mut().zip(&s) {
                *c = c.scale(&sk.inv().expect("nonzero"));
            }
            g
        })
        .collect();
    Ok(LocalModel {
        qa: sub(&qa),
        cone: sub(&roles.cone(params).to_gauss()),
        planes: data.planes.map(|p| rescale_form(&p, &s, false)),
        lines: data.lines.map(|l| rescale_form(&l, &s, true)),
        germs,
    })
}

fn plane_polys(planes: &[LinForm<G>; 4], ctx: &crate::poly::VarContext) -> [MPoly<G>; 4] {
    std::array::from_fn(|i| planes[i].to_poly(ctx))
}

/// Indices of the planes dividing a quadratic form.
fn dividing_planes(form: &MPoly<G>, planes: &[MPoly<G>; 4]) -> Vec<usize> {
    (0..4).filter(|&i| form.exact_divide(&planes[i]).is_ok()).collect()
}

fn lowest_of(split: &QuarticSplit<G>, which: Which) -> MPoly<G> {
    split.factor(which).to_series(split.split_var).piece(2).clone()
}

/// Orients a split so that `Q⁺` is the factor tangent to `P^{++}`.
fn orient(split: QuarticSplit<G>, planes: &[MPoly<G>; 4]) -> Result<QuarticSplit<G>, String> {
    if dividing_planes(&lowest_of(&split, Which::Plus), planes).contains(&0) {
        Ok(split)
    } else if dividing_planes(&lowest_of(&split, Which::Minus), planes).contains(&0) {
        Ok(split.swapped())
    } else {
        Err("no factor is tangent to P++".into())
    }
}

/// Both local factorizations of `Q` at a vertex, oriented so that `Q⁺`
/// contains `P^{++}`.
#[derive(Clone, Debug, Serialize)]
pub struct VertexFactorization {
    pub vertex: usize,
    pub order: usize,
    pub z_split: QuarticSplit<G>,
    pub z_branches: [BranchPair<G>; 2],
    pub x_split: QuarticSplit<G>,
    pub x_branches: [BranchPair<G>; 2],
}

fn split_route(
    qa: &MPoly<G>,
    var: usize,
    order: usize,
    planes: &[MPoly<G>; 4],
) -> Result<(QuarticSplit<G>, [BranchPair<G>; 2]), String> {
    let split = factor_quartic_vertical(qa, var, order + 1).map_err(|e| e.to_string())?;
    let split = orient(split, planes)?;
    let plus = branch_split(&split, Which::Plus).map_err(|e| e.to_string())?;
    let minus = branch_split(&split, Which::Minus).map_err(|e| e.to_string())?;
    Ok((split, [plus, minus]))
}

fn factorize(model: &LocalModel, j: usize, order: usize) -> Result<VertexFactorization, String> {
    let planes = plane_polys(&model.planes, model.qa.ctx());
    let (z_split, z_branches) = split_route(&model.qa, Z_ROUTE, order, &planes).map_err(|e| format!("z-route: {e}"))?;
    let (x_split, x_branches) = split_route(&model.qa, X_ROUTE, order, &planes).map_err(|e| format!("x-route: {e}"))?;
    Ok(VertexFactorization { vertex: j, order, z_split, z_branches, x_split, x_branches })
}

/// `Q±` and the branch series `ψ` at `p_j`, correct modulo total degree
/// `order` (`ψ` modulo `order`, `Q±` modulo `order + 1`).
pub fn factor_vertex(
    params: &OcticParams,
    frame: &TangentFrame,
    j: usize,
    order: usize,
) -> Result<VertexFactorization, String> {
    let model = local_model(params, frame, &octic(params), j, order, &[Rat::one(), Rat::one()])?;
    factorize(&model, j, order)
}

fn label_set(idx: &[usize]) -> String {
    let names: Vec<&str> = idx.iter().map(|&i| PLANE_LABELS[i]).collect();
    format!("{{{}}}", names.join(", "))
}

fn tangent_plane(s: &TSeries<G>) -> Option<LinForm<G>> {
    LinForm::from_linear(s.piece(1)).ok()
}

fn matrix_string(m: &[Vec<bool>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect();
    rows.join("/")
}

/// Every row has `row` ones and every column `col` ones.
fn sums_ok(m: &[Vec<bool>], row: usize, col: usize) -> bool {
    let cols = m.first().map_or(0, Vec::len);
    m.iter().all(|r| r.iter().filter(|&&b| b).count() == row)
        && (0..cols).all(|c| m.iter().filter(|r| r[c]).count() == col)
}

fn independent_triples(forms: &[Vec<G>]) -> Result<(), String> {
    for skip in 0..forms.len() {
        let rows: Vec<Vec<G>> = (0..forms.len()).filter(|&i| i != skip).map(|i| forms[i].clone()).collect();
        if determinant(&rows).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("triple without index {skip}"));
        }
    }
    Ok(())
}

/// Inputs to the vertex check beyond the octic itself.
#[derive(Clone, Debug)]
pub struct VertexSetup<'a> {
    pub params: &'a OcticParams,
    pub frame: &'a TangentFrame,
    /// Symbolic octic over `symbolic_ctx()`, for the symbolic cone identity.
    pub q_sym: Option<&'a MPoly>,
    pub order: usize,
    /// Diagonal rescaling `(x, y) ↦ (s₀x, s₁y)` of the chart.
    pub scale: [Rat; 2],
}

impl<'a> VertexSetup<'a> {
    pub fn new(params: &'a OcticParams, frame: &'a TangentFrame, order: usize) -> VertexSetup<'a> {
        VertexSetup { params, frame, q_sym: None, order, scale: [Rat::one(), Rat::one()] }
    }
}

/// Local structure of `q` (over `coord_ctx()`) at `p_j`.
pub fn check_vertex_structure(setup: &VertexSetup, q: &MPoly, j: usize) -> CheckResult {
    let mut r = CheckResult::new(format!("octic.vertex_{j}"));
    let n = setup.order;
    if n < MIN_VERTEX_ORDER {
        r.fail("order", format!("{n} < {MIN_VERTEX_ORDER}"));
        return r;
    }
    let model = match local_model(setup.params, setup.frame, q, j, n, &setup.scale) {
        Ok(m) => m,
        Err(e) => {
            r.fail("setup", e);
            return r;
        }
    };
    let ctx = model.qa.ctx().clone();
    let planes = plane_polys(&model.planes, &ctx);

    // (a) tangent cone
    if let Some(q_sym) = setup.q_sym {
        let roles = vertex_roles(j).expect("valid vertex");
        let mask = [true, true, true, false, false, false, false];
        let got = affine_at_vertex_symbolic(q_sym, j).homogeneous_part(4, Some(&mask));
        r.require("a.cone_symbolic", got == roles.cone_symbolic(), got);
    }
    let lowest = model.qa.homogeneous_part(4, None);
    if !r.require("a.cone", model.qa.min_degree() == Some(4) && lowest == model.cone, &lowest) {
        return r;
    }
    let product = planes.iter().fold(MPoly::one(&ctx), |acc, p| &acc * p);
    let scalar = lowest.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(G::zero)
        / product.leading_term().map(|(_, c)| c.clone()).expect("nonzero product");
    r.require("a.cone_planes", lowest == product.scale(&scalar), "tangent cone is not the product of the frame planes");
    r.witness("cone", &lowest);
    r.witness("cone_scalar", &scalar);

    // (b) frame planes
    let plane_rows: Vec<Vec<G>> = model.planes.iter().map(|p| p.coeffs().to_vec()).collect();
    if let Err(e) = independent_triples(&plane_rows) {
        r.fail("b.planes_dependent", e);
    }

    // (c), (d) both routes
    let fz = match factorize(&model, j, n) {
        Ok(f) => f,
        Err(e) => {
            r.fail("c.factorization", e);
            return r;
        }
    };
    let qa_hi = TSeries::from_poly(&model.qa, n + 1);
    for (tag, split, pairing) in [("c", &fz.z_split, Z_PAIRING), ("d", &fz.x_split, X_PAIRING)] {
        r.require(format!("{tag}.recombine"), split.recombine() == qa_hi, "Q⁺·Q⁻ ≠ Q");
        r.witness(format!("{tag}.delta_lowest"), &split.delta_lowest);
        for (k, which) in [Which::Plus, Which::Minus].into_iter().enumerate() {
            let got = dividing_planes(&lowest_of(split, which), &planes);
            let name = format!("{tag}.pairing_{}", if k == 0 { "plus" } else { "minus" });
            if got == pairing[k] {
                r.witness(name, label_set(&got));
            } else {
                r.fail(name, format!("{} expected {}", label_set(&got), label_set(&pairing[k])));
            }
        }
    }
    for (k, b) in fz.z_branches.iter().enumerate() {
        r.witness(format!("c.psi{}_linear", k + 1), b.psi.piece(1));
    }

    // the z-route branches lie in exactly one x-route factor each, as paired
    let x_factors: Vec<TSeries<G>> =
        [Which::Plus, Which::Minus].iter().map(|&w| fz.x_split.factor(w).to_series(X_ROUTE)).collect();
    let z_branch_series: Vec<&TSeries<G>> = fz.z_branches.iter().flat_map(|b| b.factors.iter()).collect();
    for (bi, (pair, branch)) in fz.z_branches.iter().flat_map(|b| [(b, 1), (b, -1)]).zip(&z_branch_series).enumerate() {
        let psi = if pair.1 > 0 { pair.0.psi.clone() } else { pair.0.psi.neg() };
        let images = [TSeries::var(&ctx, n, 0), TSeries::var(&ctx, n, 1), psi];
        let hits: Vec<usize> = x_factors
            .iter()
            .enumerate()
            .filter(|(_, f)| compose(f, &images).map(|c| c.is_zero()).unwrap_or(false))
            .map(|(i, _)| i)
            .collect();
        let tangent = tangent_plane(branch).and_then(|t| model.planes.iter().position(|p| *p == t));
        let want = tangent.and_then(|t| X_PAIRING.iter().position(|pr| pr.contains(&t)));
        if hits.len() != 1 || Some(hits[0]) != want {
            r.fail("d.common_factor", format!("z-branch {bi} lies in x-factors {hits:?}"));
        }
    }

    // (e) four-branch recombination
    let a = fz.z_split.a.truncate(n);
    let v2 = &TSeries::var(&ctx, n, Z_ROUTE) * &TSeries::var(&ctx, n, Z_ROUTE);
    let four = fz.z_branches.iter().fold(a, |acc, b| &acc * &(&v2 - &(&b.psi * &b.psi)));
    r.require("e.four_branches", four == TSeries::from_poly(&model.qa, n), "a(z²−ψ₁²)(z²−ψ₂²) ≠ Q");

    // (f) lines on planes
    let line_plane: Vec<Vec<bool>> =
        model.lines.iter().map(|l| model.planes.iter().map(|p| p.eval(l.coeffs()).is_zero()).collect()).collect();
    r.witness("f.line_plane", matrix_string(&line_plane));
    r.require("f.sums", sums_ok(&line_plane, 2, 3), matrix_string(&line_plane));

    // (g) germs in branches, with branch factors ordered by tangent plane
    let branch_tangent: Vec<Option<usize>> = z_branch_series
        .iter()
        .map(|b| tangent_plane(b).and_then(|t| model.planes.iter().position(|p| *p == t)))
        .collect();
    let mut by_plane: Vec<Option<&TSeries<G>>> = vec![None; 4];
    for (b, t) in z_branch_series.iter().zip(&branch_tangent) {
        if let Some(t) = t {
            by_plane[*t] = Some(b);
        }
    }
    if by_plane.iter().any(Option::is_none) {
        r.fail("g.branch_tangents", format!("{branch_tangent:?}"));
        return r;
    }
    let mut germ_branch = vec![vec![false; 4]; 6];
    let mut line_of = [None; 6];
    for (gi, germ) in model.germs.iter().enumerate() {
        for (pi, b) in by_plane.iter().enumerate() {
            let b = b.expect("checked");
            germ_branch[gi][pi] = ts_substitute_curve(b, &germ.param).map(|s| s.vanishes_to(n - 1)).unwrap_or(false);
        }
        line_of[gi] = germ.tangent().ok().and_then(|t| model.lines.iter().position(|l| *l == t));
    }
    r.witness("g.germ_branch", matrix_string(&germ_branch));
    r.require("g.sums", sums_ok(&germ_branch, 2, 3), matrix_string(&germ_branch));
    let matches = line_of.iter().zip(&germ_branch).all(|(l, row)| l.is_some_and(|l| line_plane[l] == *row));
    let names: Vec<&str> = line_of.iter().map(|l| l.map_or("?", |l| LINE_LABELS[l])).collect();
    r.witness("g.germ_tangents", names.join(","));
    r.require("g.matches_lines", matches, format!("germ tangents {}", names.join(",")));

    // (h) branch tangent planes meet only at the vertex
    let tangents: Vec<Vec<G>> = by_plane
        .iter()
        .map(|b| b.expect("checked").piece(1).clone())
        .map(|p| (0..3).map(|k| p.coeff_of(&unit(k))).collect())
        .collect();
    if let Err(e) = independent_triples(&tangents) {
        r.fail("h.tangent_triples", e);
    }
    r
}

fn unit(k: usize) -> [u32; 3] {
    std::array::from_fn(|i| u32::from(i == k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{octic_symbolic, symbolic_ctx, OcticParams};

    fn run(j: usize, scale: [i64; 2]) -> CheckResult {
        let p = OcticParams::default_params();
        let f = TangentFrame::auto(&p).unwrap();
        let q_sym = octic_symbolic();
        let mut setup = VertexSetup::new(&p, &f, 8);
        setup.q_sym = Some(&q_sym);
        setup.scale = scale.map(Rat::from);
        check_vertex_structure(&setup, &octic(&p), j)
    }

    #[test]
    fn p0_passes() {
        let r = run(0, [1, 1]);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.witness_value("c.delta_lowest"), Some("5184*x^2*y^2"));
        assert_eq!(r.witness_value("d.delta_lowest"), Some("576*y^2*z^2"));
        assert_eq!(r.witness_value("f.line_plane"), Some("0110/1001/0101/1010/0011/1100"));
        assert_eq!(r.witness_value("g.germ_branch"), r.witness_value("f.line_plane"));
        assert_eq!(r.witness_value("c.pairing_plus"), Some("{P++, P+-}"));
        assert_eq!(r.witness_value("d.pairing_plus"), Some("{P++, P--}"));
    }

    #[test]
    fn perturbed_octic_fails() {
        let p = OcticParams::default_params();
        let f = TangentFrame::auto(&p).unwrap();
        let q = octic(&p);
        // an extra x²z⁴ in the chart at p0
        let ctx = q.ctx().clone();
        let bump = MPoly::parse("z0^2*z1^2*z3^4", &ctx).unwrap();
        let r = check_vertex_structure(&VertexSetup::new(&p, &f, 8), &(&q + &bump), 0);
        assert!(!r.passed());
    }

    #[test]
    fn every_vertex_passes() {
        for j in 1..4 {
            let r = run(j, [1, 1]);
            assert!(r.passed(), "p{j}: {r:#?}");
        }
    }

    #[test]
    fn rescaled_chart_agrees() {
        let r = run(2, [2, -3]);
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn roles_match_symbolic_cone() {
        let q = octic_symbolic();
        let mask = [true, true, true, false, false, false, false];
        for j in 0..4 {
            let got = affine_at_vertex_symbolic(&q, j).homogeneous_part(4, Some(&mask));
            assert_eq!(got, vertex_roles(j).unwrap().cone_symbolic(), "p{j}");
        }
        assert_eq!(q.ctx(), &symbolic_ctx());
    }
}
