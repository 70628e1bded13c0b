//! Seeded strategies shared by the property suites and the acceptance run.
#![allow(dead_code)]

use hyperbolic_certs::arith::Rat;
use hyperbolic_certs::poly::{MPoly, VarContext};
use hyperbolic_certs::series::TSeries;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub const CASES: u32 = 64;

pub fn config(seed: u64) -> Config {
    Config { cases: CASES, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn xy() -> VarContext {
    VarContext::of(&["x", "y"])
}

pub fn xyz() -> VarContext {
    VarContext::of(&["x", "y", "z"])
}

pub fn rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// Sparse polynomial in `arity` variables with every term of degree in
/// `lo..=hi`.
pub fn poly(ctx: VarContext, lo: u32, hi: u32, terms: usize) -> impl Strategy<Value = MPoly> {
    let arity = ctx.arity();
    prop::collection::vec((prop::collection::vec(0u32..=hi, arity), rat()), 0..=terms).prop_map(move |ts| {
        let kept = ts.into_iter().filter(|(e, _)| (lo..=hi).contains(&e.iter().sum::<u32>()));
        MPoly::from_terms(&ctx, kept)
    })
}

pub fn unit(ctx: VarContext, order: usize) -> impl Strategy<Value = TSeries> {
    (nonzero_rat(), poly(ctx.clone(), 1, order as u32, 8))
        .prop_map(move |(c, p)| TSeries::from_poly(&(&MPoly::constant(&ctx, c) + &p), order))
}

/// Nonzero homogeneous form of degree `m`, normalized to a positive leading
/// coefficient.
pub fn form(ctx: VarContext, m: u32) -> impl Strategy<Value = MPoly> {
    let arity = ctx.arity();
    prop::collection::vec((prop::collection::vec(0u32..=m, arity), nonzero_rat()), 1..=4)
        .prop_map(move |ts| {
            let kept = ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() == m);
            MPoly::from_terms(&ctx, kept).normalize_sign().0
        })
        .prop_filter("nonzero form", |p| !p.is_zero())
}

/// `u²·(z² − g₁²)(z² − g₂²)` over `x, y, z` with `g_i = l_i + higher` and
/// distinct tangent lines `l₁ ≠ ±l₂`.
pub fn split_quartic() -> impl Strategy<Value = MPoly> {
    (unit(xy(), 4), form(xy(), 1), form(xy(), 1), poly(xy(), 2, 3, 3), poly(xy(), 2, 3, 3)).prop_filter_map(
        "distinct tangent lines",
        |(u, l1, l2, t1, t2)| {
            if (&(&l1 * &l1) - &(&l2 * &l2)).is_zero() {
                return None;
            }
            let ctx = xyz();
            let lift = |p: &MPoly| p.remap(&ctx, &[0, 1]);
            let z2 = MPoly::from_terms(&ctx, [(vec![0, 0, 2], Rat::one())]);
            let g1 = lift(&(&l1 + &t1));
            let g2 = lift(&(&l2 + &t2));
            let u = lift(&u.to_poly());
            Some(&(&(&u * &u) * &(&z2 - &(&g1 * &g1))) * &(&z2 - &(&g2 * &g2)))
        },
    )
}
