//! The deforming octic of the pencil `Q + t·F` avoids the vertices, so no
//! member with `t ≠ 0` passes through any `p_j`.

use super::result::CheckResult;
use crate::arith::Rat;
use crate::models::build_pencil_octic;
use crate::poly::MPoly;

pub fn check_pencil_avoids_vertices(q: &MPoly, f: &MPoly) -> CheckResult {
    let mut r = CheckResult::new("octic.pencil_vertices");
    for j in 0..4 {
        let p: Vec<Rat> = (0..4).map(|i| Rat::from(i64::from(i == j))).collect();
        r.require(format!("Q(p{j})"), q.evaluate(&p).is_zero(), "vertex not on X₀");
        r.witness(format!("F(p{j})"), f.evaluate(&p));
    }
    if let Err(e) = build_pencil_octic(q, f) {
        r.fail("pencil", e);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{coord_ctx, fermat_octic, octic, OcticParams};

    #[test]
    fn fermat_avoids_vertices() {
        let q = octic(&OcticParams::default_params());
        let r = check_pencil_avoids_vertices(&q, &fermat_octic());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.witness_value("F(p2)"), Some("1"));
        let through = &fermat_octic() - &MPoly::parse("z3^8", &coord_ctx()).unwrap();
        assert!(!check_pencil_avoids_vertices(&q, &through).passed());
    }
}
