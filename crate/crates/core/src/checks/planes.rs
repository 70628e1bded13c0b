//! Certificates for the fifteen-plane construction: general position of the
//! planes, and the companion quintic's behaviour on the arrangement.

use rayon::prelude::*;
use serde::Serialize;

use super::elim::{center_off, eliminate, PlaneChange, ATTEMPTS};
use super::result::CheckResult;
use crate::arith::Rat;
use crate::models::{draw_quintic, plane_basis, quadruple_det, restrict_to_plane, Arrangement, LinForm};
use crate::poly::{kernel_3x4, MPoly};

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

fn one_based(idx: &[usize]) -> String {
    let items: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every 4 of the forms are linearly independent.
pub fn check_general_position(arr: &Arrangement) -> CheckResult {
    let mut r = CheckResult::new("planes.general_position");
    let n = arr.len();
    if n < 4 {
        r.fail("forms", format!("{n} < 4"));
        return r;
    }
    let mut checked = 0usize;
    for_each_subset(n, 4, |q| {
        checked += 1;
        let forms: Vec<&LinForm> = q.iter().map(|&i| &arr.forms[i]).collect();
        let d = quadruple_det(&forms);
        if d.is_zero() {
            r.fail("degenerate_quadruple", one_based(q));
            r.witness("determinant", d);
            return false;
        }
        true
    });
    r.witness("quadruples_checked", checked);
    if r.passed() {
        r.note(format!("all {} 4x4 determinants are nonzero", binomial(n, 4)));
    }
    r
}

/// The point `H_a ∩ H_b ∩ H_c`.
pub fn triple_point(arr: &Arrangement, idx: &[usize]) -> Option<[Rat; 4]> {
    let rows: [[Rat; 4]; 3] = std::array::from_fn(|k| std::array::from_fn(|c| arr.forms[idx[k]].coeffs()[c].clone()));
    kernel_3x4(&rows)
}

fn fmt_point(p: &[Rat]) -> String {
    let items: Vec<String> = p.iter().map(Rat::to_string).collect();
    format!("({})", items.join(" : "))
}

/// The quintic is nonzero at every triple point of the arrangement.
pub fn check_divisor_avoids_triple_points(quintic: &MPoly, arr: &Arrangement) -> CheckResult {
    let mut r = CheckResult::new("planes.triple_points");
    let n = arr.len();
    let mut points = Vec::new();
    let mut degenerate = None;
    for_each_subset(n, 3, |t| match triple_point(arr, t) {
        Some(p) => {
            points.push((t.to_vec(), p));
            true
        }
        None => {
            degenerate = Some(t.to_vec());
            false
        }
    });
    if let Some(t) = degenerate {
        r.status = super::Status::Skipped;
        r.note(format!("planes {} meet in a line; general position fails", one_based(&t)));
        return r;
    }
    let bad: Vec<String> = points
        .par_iter()
        .filter(|(_, p)| quintic.evaluate(p).is_zero())
        .map(|(t, p)| format!("{} at {}", one_based(t), fmt_point(p)))
        .collect();
    r.witness("triple_points_checked", points.len());
    for b in bad {
        r.fail("vanishing_point", b);
    }
    r
}

/// Outcome of the plane-curve smoothness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Smoothness {
    /// The partials have no common zero; certified by the given attempt.
    Smooth { attempt: u64 },
    /// No attempt separated the partials; the last gcd is the witness.
    NotCertified { gcd_degree: usize },
}

/// Decides whether a plane curve `f(s0, s1, s2) = 0` is smooth.
///
/// After a generic change of coordinates, the resultants in `s2` of the
/// first partial with the other two vanish at the projection of every
/// common zero. A constant gcd therefore certifies that there is none.
pub fn smooth_plane_curve(f: &MPoly, seed: u64) -> Smoothness {
    let mut last = 0;
    for attempt in 0..ATTEMPTS {
        let g = PlaneChange::generic(seed, attempt).apply(f);
        let parts: Vec<MPoly> = (0..3).map(|i| g.derivative(i)).collect();
        if !parts.iter().all(center_off) {
            continue;
        }
        let (Some(r01), Some(r02)) = (eliminate(&parts[0], &parts[1]), eliminate(&parts[0], &parts[2])) else {
            continue;
        };
        let gcd = r01.gcd(&r02);
        if gcd.degree == 0 {
            return Smoothness::Smooth { attempt };
        }
        last = gcd.degree;
    }
    Smoothness::NotCertified { gcd_degree: last }
}

/// Every plane section of the quintic is a smooth curve.
pub fn check_quintic_sections(quintic: &MPoly, arr: &Arrangement, seed: u64) -> CheckResult {
    let mut r = CheckResult::new("planes.quintic_sections");
    let outcomes: Vec<Smoothness> = arr
        .forms
        .par_iter()
        .map(|form| smooth_plane_curve(&restrict_to_plane(quintic, &plane_basis(form)), seed))
        .collect();
    for (j, o) in outcomes.iter().enumerate() {
        if let Smoothness::NotCertified { gcd_degree } = o {
            r.fail("singular_section", format!("plane {} (common-zero eliminant degree {gcd_degree})", j + 1));
        }
    }
    r.witness("sections_checked", outcomes.len());
    r.note("certifies the smooth case only; sections with up to 4 nodes are not accepted");
    r
}

/// The first seeded quintic avoiding all triple points with smooth plane
/// sections, with its two certificates and the number of draws used. After
/// `max_draws` failures the last draw is returned with its failing results.
pub fn companion_quintic(arr: &Arrangement, seed: u64, max_draws: u64) -> (MPoly, CheckResult, CheckResult, u64) {
    let mut attempt = 0;
    loop {
        let q = draw_quintic(seed, attempt);
        let tp = check_divisor_avoids_triple_points(&q, arr);
        let sec = if tp.passed() {
            check_quintic_sections(&q, arr, seed)
        } else {
            CheckResult::skipped("planes.quintic_sections", "quintic meets a triple point")
        };
        attempt += 1;
        if (tp.passed() && sec.passed()) || attempt >= max_draws {
            return (q, tp, sec, attempt);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::build_arrangement;
    use crate::poly::VarContext;

    fn coords() -> Arrangement {
        Arrangement::from_rows(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).unwrap()
    }

    #[test]
    fn coordinate_planes_general() {
        let r = check_general_position(&coords());
        assert!(r.passed());
        assert_eq!(r.witness_value("quadruples_checked"), Some("1"));
    }

    #[test]
    fn planted_dependency() {
        let arr =
            Arrangement::from_rows(&[[1, 2, 0, 1], [0, 1, 3, 0], [2, 0, 1, 1], [1, 1, 1, 1], [3, 3, 4, 2]]).unwrap();
        let r = check_general_position(&arr);
        assert!(!r.passed());
        assert_eq!(r.witness_value("degenerate_quadruple"), Some("{1,2,3,5}"));
        assert_eq!(r.witness_value("determinant"), Some("0"));
    }

    #[test]
    fn triple_points() {
        let ctx = crate::models::coord_ctx();
        let z0 = MPoly::var(&ctx, 0).pow(5);
        let arr = coords();
        let r = check_divisor_avoids_triple_points(&z0, &arr);
        assert!(!r.passed());
        // only (1:0:0:0), the triple point of z1, z2, z3, survives
        assert_eq!(r.witnesses.iter().filter(|w| w.name == "vanishing_point").count(), 3);
        let all = (0..4).fold(MPoly::zero(&ctx), |a, i| &a + &MPoly::var(&ctx, i).pow(5));
        assert!(check_divisor_avoids_triple_points(&all, &arr).passed());
    }

    #[test]
    fn fermat_and_nodal_sections() {
        let ctx = VarContext::of(&["s0", "s1", "s2"]);
        let fermat = MPoly::parse("s0^5 + s1^5 + s2^5", &ctx).unwrap();
        assert!(matches!(smooth_plane_curve(&fermat, 1), Smoothness::Smooth { .. }));
        // a node at (1:0:0)
        let nodal = MPoly::parse("s0^3*s1*s2 + s1^5 + s2^5", &ctx).unwrap();
        assert!(matches!(smooth_plane_curve(&nodal, 1), Smoothness::NotCertified { .. }));
    }

    #[test]
    fn seeded_companion() {
        let arr = build_arrangement(5, 9).unwrap();
        let (_, tp, sec, _) = companion_quintic(&arr, 9, 10);
        assert!(tp.passed() && sec.passed());
    }
}
