//! Certificates for the four double curves of the octic: `Q` restricts to a
//! square on each coordinate plane, the curves are singular on `X₀`, each
//! curve is a trinodal quartic, and each carries 12 pinch points.

use rayon::prelude::*;
use serde::Serialize;

use super::elim::{
    center_off, deflate, eliminate, fiber, node_discriminant, plane_ctx, project, vanishes_at, LineRoot, PlaneChange,
    ATTEMPTS,
};
use super::result::CheckResult;
use crate::arith::Rat;
use crate::models::{beta, chart_coords, double_curve, double_curve_symbolic, OcticParams};
use crate::poly::{determinant, MPoly};

/// `p` over `coord_ctx()` restricted to `z_j = 0`, in plane coordinates
/// `s0, s1, s2` (the remaining `z` in index order).
pub fn restrict_to_coordinate_plane(p: &MPoly, j: usize) -> MPoly {
    let mut mapping = [0usize; 4];
    for (k, &c) in chart_coords(j).iter().enumerate() {
        mapping[c] = k;
    }
    p.specialize(j, &Rat::zero()).remap(&plane_ctx(), &mapping)
}

/// The coordinate vertices of a plane, in plane coordinates.
pub fn plane_vertices() -> [[Rat; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|k| Rat::from(i64::from(i == k))))
}

fn short(p: &MPoly) -> String {
    if p.len() > 40 {
        let head: Vec<String> =
            p.terms().rev().take(40).map(|(m, c)| MPoly::term(p.ctx(), m.clone(), c.clone()).to_string()).collect();
        format!("{} + … ({} terms)", head.join(" + "), p.len())
    } else {
        p.to_string()
    }
}

/// `Q|_{z_j=0} = C_j²` identically, for all four planes. `q` is over
/// `symbolic_ctx()`.
pub fn check_restriction_square(q: &MPoly) -> CheckResult {
    let mut r = CheckResult::new("octic.restriction_square");
    for j in 0..4 {
        let c = double_curve_symbolic(j).expect("valid plane").quartic;
        let diff = &q.specialize(j, &Rat::zero()) - &(&c * &c);
        if diff.is_zero() {
            r.witness(format!("C{j}"), &c);
        } else {
            r.fail(format!("difference_{j}"), short(&diff));
        }
    }
    r
}

fn z_degree(p: &MPoly) -> u32 {
    let mask = [true, true, true, true, false, false, false, false];
    p.terms().map(|(m, _)| m.degree_in(&mask)).max().unwrap_or(0)
}

/// Each `S̄_j` lies in the singular locus: `C_j² | Q|_{z_j=0}`,
/// `C_j | ∂_i Q|_{z_j=0}` for `i ≠ j`, and `∂_j Q|_{z_j=0} = 0`.
pub fn check_singular_containment(q: &MPoly) -> CheckResult {
    let mut r = CheckResult::new("octic.singular_containment");
    for j in 0..4 {
        let c = double_curve_symbolic(j).expect("valid plane").quartic;
        let restricted = q.specialize(j, &Rat::zero());
        let sq = &c * &c;
        r.require(format!("square_divides_{j}"), restricted.exact_divide(&sq).is_ok(), "Q|_{z_j=0} mod C_j² ≠ 0");
        for i in 0..4 {
            let d = q.derivative(i).specialize(j, &Rat::zero());
            if i == j {
                if !d.is_zero() {
                    r.fail(format!("odd_partial_{j}"), short(&d));
                }
                continue;
            }
            match d.exact_divide(&c) {
                Ok(quot) if z_degree(&quot) == 3 => {}
                Ok(quot) => {
                    r.fail(format!("quotient_degree_{i}_{j}"), z_degree(&quot));
                }
                Err(_) => {
                    r.fail(format!("partial_{i}_mod_C{j}"), "nonzero remainder");
                }
            }
        }
    }
    if r.passed() {
        r.note("each S̄_j is contained in Sing(X₀)");
    }
    r
}

/// Whether `p` vanishes at the projective point `x`.
fn vanishes(p: &MPoly, x: &[Rat; 3]) -> bool {
    p.evaluate(x).is_zero()
}

/// Outcome of locating the singular points of a plane curve.
#[derive(Clone, Debug, PartialEq, Eq)]
enum SingLocus {
    /// The singular points are exactly the expected ones.
    Exactly { attempt: u64 },
    /// An expected point is not singular.
    Missing(usize),
    /// A singular point outside the expected set; eliminant degree left over.
    Extra { residual_degree: usize },
    /// No attempt gave a usable projection.
    Degenerate,
}

fn point_in_fiber(x: &[Rat; 3], root: &LineRoot) -> Rat {
    match root {
        LineRoot::Finite(_) => x[2].clone() / &x[0],
        LineRoot::Infinity => x[2].clone() / &x[1],
    }
}

/// Decides whether the singular points of the plane curve `f = 0` are
/// exactly `expected`, by projecting the common zeros of the partials from
/// `(0:0:1)` after a generic coordinate change and back-substituting.
fn singular_locus(f: &MPoly, expected: &[[Rat; 3]], seed: u64) -> SingLocus {
    let grads: Vec<MPoly> = (0..3).map(|i| f.derivative(i)).collect();
    if let Some(i) = expected.iter().position(|x| !grads.iter().all(|g| vanishes(g, x))) {
        return SingLocus::Missing(i);
    }
    let mut outcome = SingLocus::Degenerate;
    for attempt in 0..ATTEMPTS {
        let ch = PlaneChange::generic(seed, attempt);
        let parts: Vec<MPoly> = grads.iter().map(|g| ch.apply(g)).collect();
        if !parts.iter().all(center_off) {
            continue;
        }
        let pulled: Vec<[Rat; 3]> = expected.iter().map(|x| ch.pull_point(x)).collect();
        let roots: Vec<LineRoot> = pulled.iter().map(project).collect();
        if (0..roots.len()).any(|a| (0..a).any(|b| roots[a] == roots[b])) {
            continue;
        }
        let (Some(r01), Some(r02)) = (eliminate(&parts[0], &parts[1]), eliminate(&parts[0], &parts[2])) else {
            continue;
        };
        let mut g = r01.gcd(&r02);
        for root in &roots {
            g = deflate(&g, root).0;
        }
        if g.degree > 0 {
            outcome = SingLocus::Extra { residual_degree: g.degree };
            continue;
        }
        // over each expected image, the only common zero is the expected point
        let clean = roots.iter().zip(&pulled).all(|(root, x)| {
            let common = parts.iter().map(|p| fiber(p, root)).reduce(|a, b| a.gcd(&b)).expect("three partials");
            common.distinct_root_count() == Ok(1) && common.eval(&point_in_fiber(x, root)).is_zero()
        });
        if clean {
            return SingLocus::Exactly { attempt };
        }
        outcome = SingLocus::Extra { residual_degree: 0 };
    }
    outcome
}

/// The affine equation of `f` at the vertex `e_k`, with the two remaining
/// plane coordinates as variables.
fn local_at_vertex(f: &MPoly, k: usize) -> (MPoly, usize, usize) {
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    (f.specialize(k, &Rat::one()), others[0], others[1])
}

fn fmt_point(x: &[Rat; 3]) -> String {
    let items: Vec<String> = x.iter().map(Rat::to_string).collect();
    format!("({})", items.join(" : "))
}

/// Certifies that the plane quartic `f(s0, s1, s2)` has exactly the three
/// coordinate vertices as singular points, each an ordinary node.
pub fn check_trinodal_quartic(id: impl Into<String>, f: &MPoly, seed: u64) -> CheckResult {
    let mut r = CheckResult::new(id);
    let vertices = plane_vertices();
    match singular_locus(f, &vertices, seed) {
        SingLocus::Exactly { attempt } => {
            let pts: Vec<String> = vertices.iter().map(fmt_point).collect();
            r.witness("singular_points", pts.join(", "));
            r.witness("elimination_attempt", attempt);
        }
        SingLocus::Missing(i) => {
            r.fail("smooth_vertex", fmt_point(&vertices[i]));
        }
        SingLocus::Extra { residual_degree } => {
            r.fail("extra_singularity", format!("residual eliminant degree {residual_degree}"));
        }
        SingLocus::Degenerate => {
            r.fail("elimination", format!("no usable projection in {ATTEMPTS} attempts"));
        }
    }
    for (k, x) in vertices.iter().enumerate() {
        let (local, u, w) = local_at_vertex(f, k);
        match node_discriminant(&local, u, w) {
            Some(d) if !d.is_zero() => {
                r.witness(format!("tangent_cone_{}", fmt_point(x)), local.homogeneous_part(2, None));
                r.witness(format!("discriminant_{}", fmt_point(x)), d);
            }
            Some(_) => {
                r.fail("degenerate_node", format!("{} has a repeated tangent", fmt_point(x)));
            }
            None => {
                r.fail("not_a_double_point", fmt_point(x));
            }
        }
    }
    let rows: Vec<Vec<Rat>> = vertices.iter().map(|v| v.to_vec()).collect();
    r.require("collinear_nodes", !determinant(&rows).expect("3x3").is_zero(), "nodes are collinear");
    if r.passed() {
        r.note(
            "a line and a cubic would force 3 collinear singular points; two conics would force 4 singular points \
             or a non-nodal one; a multiple component would make the singular locus 1-dimensional; so the quartic \
             is irreducible, and rational since its genus is 3 - 3 = 0",
        );
    }
    r
}

/// `S̄_j` is an irreducible rational quartic with nodes at the three
/// coordinate vertices of `H_j`.
pub fn check_double_curve_structure(params: &OcticParams, j: usize, seed: u64) -> CheckResult {
    let id = format!("octic.double_curve_{j}");
    let curve = match double_curve(params, j) {
        Ok(c) => c,
        Err(e) => {
            let mut r = CheckResult::new(id);
            r.fail("curve", e);
            return r;
        }
    };
    let f = restrict_to_coordinate_plane(&curve.quartic, j);
    let mut r = check_trinodal_quartic(id, &f, seed);
    r.witness("C", &curve.display_form);
    r
}

/// Pinch-point bookkeeping for one double curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePinch {
    pub plane: usize,
    /// Distinct common zeros of `C_j` and `β_j`.
    pub common_zeros: usize,
    pub nodes: usize,
    pub pinch: usize,
    pub eliminant_degree: usize,
    /// Multiplicity of each node's image in the eliminant.
    pub node_multiplicities: Vec<usize>,
    pub attempt: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinchReport {
    pub curves: Vec<CurvePinch>,
    pub total: usize,
}

/// Counts the common zeros of `C_j` and `β_j` on `H_j`.
///
/// After a generic change the resultant in `s2` has degree `4·6 = 24`. The
/// three nodes lie on both curves; their images are deflated. If what is
/// left is squarefree, its roots are the projections of distinct transverse
/// intersections, which are smooth points of `S̄_j`: the pinch points.
pub fn count_curve_pinch(params: &OcticParams, j: usize, seed: u64) -> Result<CurvePinch, String> {
    let curve = double_curve(params, j).map_err(|e| e.to_string())?;
    let f = restrict_to_coordinate_plane(&curve.quartic, j);
    let b = restrict_to_coordinate_plane(&beta(&crate::models::octic(params), j), j);
    let vertices = plane_vertices();
    let on_both: Vec<bool> = vertices.iter().map(|x| vanishes(&f, x) && vanishes(&b, x)).collect();
    let mut last = format!("no usable projection in {ATTEMPTS} attempts");
    for attempt in 0..ATTEMPTS {
        let ch = PlaneChange::generic(seed, attempt);
        let (g, h) = (ch.apply(&f), ch.apply(&b));
        if !center_off(&g) || !center_off(&h) {
            continue;
        }
        let roots: Vec<LineRoot> = vertices.iter().map(|x| project(&ch.pull_point(x))).collect();
        if (0..3).any(|a| (0..a).any(|c| roots[a] == roots[c])) {
            continue;
        }
        let Some(res) = eliminate(&g, &h) else {
            return Err("resultant vanishes identically; the parameters are degenerate".into());
        };
        if roots.iter().zip(&on_both).any(|(root, &on)| !on && vanishes_at(&res, root)) {
            last = "a common zero shares a projection with a vertex".into();
            continue;
        }
        let eliminant_degree = res.degree;
        let mut rest = res;
        let mut node_multiplicities = Vec::new();
        for (root, _) in roots.iter().zip(&on_both).filter(|(_, &on)| on) {
            let (d, k) = deflate(&rest, root);
            rest = d;
            node_multiplicities.push(k);
        }
        let distinct = rest.distinct_root_count();
        if distinct != rest.degree {
            last = format!("residual of degree {} has {distinct} distinct roots", rest.degree);
            continue;
        }
        let nodes = node_multiplicities.len();
        return Ok(CurvePinch {
            plane: j,
            common_zeros: distinct + nodes,
            nodes,
            pinch: distinct,
            eliminant_degree,
            node_multiplicities,
            attempt,
        });
    }
    Err(last)
}

pub fn count_pinch_points(params: &OcticParams, seed: u64) -> Result<PinchReport, String> {
    let curves = (0..4).into_par_iter().map(|j| count_curve_pinch(params, j, seed)).collect::<Result<Vec<_>, _>>()?;
    let total = curves.iter().map(|c| c.pinch).sum();
    Ok(PinchReport { curves, total })
}

/// 12 pinch points on each double curve, 48 in all.
pub fn check_pinch_points(params: &OcticParams, seed: u64) -> CheckResult {
    let mut r = CheckResult::new("octic.pinch_points");
    let report = match count_pinch_points(params, seed) {
        Ok(p) => p,
        Err(e) => {
            r.fail("elimination", e);
            return r;
        }
    };
    for c in &report.curves {
        let j = c.plane;
        r.witness(format!("eliminant_degree_{j}"), c.eliminant_degree);
        r.witness(format!("common_zeros_{j}"), c.common_zeros);
        r.witness(format!("nodes_{j}"), c.nodes);
        r.witness(format!("pinch_{j}"), c.pinch);
        r.require(format!("eliminant_degree_{j}_expected_24"), c.eliminant_degree == 24, c.eliminant_degree);
        r.require(format!("nodes_{j}_expected_3"), c.nodes == 3, c.nodes);
        r.require(format!("pinch_{j}_expected_12"), c.pinch == 12, c.pinch);
        let mults: Vec<String> = c.node_multiplicities.iter().map(usize::to_string).collect();
        r.witness(format!("node_multiplicities_{j}"), mults.join(","));
    }
    r.witness("total", report.total);
    r.require("total_expected_48", report.total == 48, report.total);
    if r.passed() {
        r.note("Bézout: 4·6 = 24 = 12·1 + 3·4 on each curve");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::octic_symbolic;

    #[test]
    fn restriction_square_symbolic() {
        let r = check_restriction_square(&octic_symbolic());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn restriction_square_catches_flip() {
        let q = octic_symbolic();
        let (m, c) = q.terms().find(|(m, _)| m.exp(0) == 0).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let flip = &q - &MPoly::term(q.ctx(), m, c.clone() + c);
        let r = check_restriction_square(&flip);
        assert!(!r.passed());
        assert!(r.witnesses.iter().any(|w| w.name.starts_with("difference_")));
    }

    #[test]
    fn singular_containment_symbolic() {
        let r = check_singular_containment(&octic_symbolic());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn double_curve_three_nodes() {
        let r = check_double_curve_structure(&OcticParams::default_params(), 3, 1);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.witness_value("singular_points"), Some("(1 : 0 : 0), (0 : 1 : 0), (0 : 0 : 1)"));
    }

    #[test]
    fn tacnodal_control_fails() {
        let ctx = plane_ctx();
        let f = MPoly::parse("s0^2*s2^2 - s1^4 + s0*s1^3 + s0^2*s1^2", &ctx).unwrap();
        let r = check_trinodal_quartic("control", &f, 1);
        assert!(!r.passed());
    }

    #[test]
    fn twelve_pinch_points_on_c3() {
        let c = count_curve_pinch(&OcticParams::default_params(), 3, 1).unwrap();
        assert_eq!((c.eliminant_degree, c.nodes, c.pinch, c.common_zeros), (24, 3, 12, 15));
        assert_eq!(c.node_multiplicities, vec![4, 4, 4]);
    }
}
