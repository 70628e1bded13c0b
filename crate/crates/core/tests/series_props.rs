//! Seeded property tests for the series kernel: inverses, square roots and
//! the quartic split.

use hyperbolic_certs::arith::Rat;
use hyperbolic_certs::poly::{MPoly, Monomial};
use hyperbolic_certs::series::{branch_split, factor_quartic_vertical, TSeries, Which};
use proptest::prelude::*;

mod common;

use common::*;

proptest! {
    #![proptest_config(config(0x5eed_0001))]

    #[test]
    fn inverse_is_two_sided(s in unit(xy(), 7)) {
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, TSeries::one(&xy(), 7));
        prop_assert_eq!(inv.inverse().unwrap(), s);
    }
}

proptest! {
    #![proptest_config(config(0x5eed_0002))]

    #[test]
    fn sqrt_unit_squares_back(r in unit(xy(), 7)) {
        let s = &r * &r;
        let root = s.sqrt_unit().unwrap();
        prop_assert_eq!(&root * &root, s);
        prop_assert!(root == r || root == r.neg());
        prop_assert!(root.constant_term().is_positive());
    }
}

proptest! {
    #![proptest_config(config(0x5eed_0003))]

    #[test]
    fn sqrt_graded_recovers_root(m in 1u32..=2, rest in poly(xy(), 3, 8, 8), h1 in form(xy(), 1), h2 in form(xy(), 2)) {
        let h = if m == 1 { h1 } else { h2 };
        let order = 9;
        let r = TSeries::from_poly(&(&h + &rest), order);
        let s = &r * &r;
        let root = s.sqrt_graded().unwrap();
        let n = order - m as usize;
        prop_assert_eq!(root.order(), n);
        prop_assert_eq!(root, r.truncate(n));
    }

    #[test]
    fn sqrt_graded_rejects_non_squares(h in form(xy(), 1), c in nonzero_rat()) {
        // h² + c·x³ is not a square once the cubic term is not divisible by h
        let x3 = MPoly::from_terms(&xy(), [(vec![3, 0], c)]);
        let s = TSeries::from_poly(&(&(&h * &h) + &x3), 6);
        let divisible = x3.exact_divide(&h).is_ok();
        prop_assume!(!divisible);
        prop_assert!(s.sqrt_graded().is_err());
    }
}

proptest! {
    #![proptest_config(config(0x5eed_0004))]

    /// The split of a product quartic recombines, and each factor splits
    /// into smooth branches.
    #[test]
    fn quartic_split_recombines(q in split_quartic()) {
        let order = 8;
        let split = factor_quartic_vertical(&q, 2, order).unwrap();
        prop_assert_eq!(split.recombine(), TSeries::from_poly(&q, order));
        for which in [Which::Plus, Which::Minus] {
            let pair = branch_split(&split, which).unwrap();
            let f = split.factor(which);
            let n = pair.psi.order();
            let prod = &(&f.quadratic.truncate(n) * &pair.factors[0]) * &pair.factors[1];
            prop_assert_eq!(prod, f.to_series(2).truncate(n));
        }
    }

    #[test]
    fn monomial_shift_inverts(s in unit(xy(), 6), i in 0u32..=2, j in 0u32..=2) {
        let m = Monomial::new(vec![i, j]);
        let shifted = s.mul_monomial(&m, &Rat::one());
        let back = shifted.div_monomial(&m).unwrap();
        prop_assert_eq!(back, s.truncate(6 - (i + j) as usize));
    }
}
