//! Structural laws of `τ(a^t)` on random ideals, plus the closed forms.

mod common;

use common::{any_orthant_ideal, lv, orthant_pair, poly, q, t_values};
use proptest::prelude::*;
use tauideal::{tau, tau_is_unit, tau_veronese, veronese_maximal_ideal, BigRational, MonomialIdeal, TauRequest};

fn t_of(a: &MonomialIdeal, t: &BigRational) -> MonomialIdeal {
    tau(&TauRequest::new(a.clone(), t.clone()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tau_shrinks_as_t_grows(a in any_orthant_ideal(5), s in t_values(), t in t_values()) {
        let (s, t) = if s <= t { (s, t) } else { (t, s) };
        prop_assert!(t_of(&a, &s).contains_ideal(&t_of(&a, &t)).unwrap());
    }

    #[test]
    fn tau_grows_with_the_ideal((a, b) in orthant_pair(5), t in t_values()) {
        let big = a.sum(&b).unwrap();
        prop_assert!(t_of(&big, &t).contains_ideal(&t_of(&a, &t)).unwrap());
    }

    #[test]
    fn power_compatibility(a in any_orthant_ideal(4), n in 1u64..=3, t in t_values()) {
        let nt = &t * q(n as i64, 1);
        prop_assert_eq!(t_of(&a.power(n), &t), t_of(&a, &nt));
    }

    #[test]
    fn reductions_have_the_same_tau(a in any_orthant_ideal(5), t in t_values()) {
        let closure = a.integral_closure().unwrap();
        prop_assert_eq!(t_of(&closure, &t), t_of(&a, &t));
    }

    #[test]
    fn tau_times_ideal((a, b) in orthant_pair(4)) {
        let one = q(1, 1);
        let lhs = t_of(&a, &one).multiply(&b).unwrap();
        prop_assert!(t_of(&a.multiply(&b).unwrap(), &one).contains_ideal(&lhs).unwrap());
    }

    #[test]
    fn unit_test_matches_full_computation(a in any_orthant_ideal(5), t in t_values()) {
        let req = TauRequest::new(a.clone(), t.clone()).unwrap();
        prop_assert_eq!(tau_is_unit(&req).unwrap(), tau(&req).unwrap().is_unit());
    }

    #[test]
    fn integral_closure_lies_in_tau(a in any_orthant_ideal(5)) {
        // P(a) + Int(σ∨) ⊆ Int P(a) and w is interior to σ∨
        let one = q(1, 1);
        prop_assert!(t_of(&a, &one).contains_ideal(&a.integral_closure().unwrap()).unwrap());
    }

    #[test]
    fn tau_of_a_non_simplicial_ring_is_monotone(a in common::ideal_in(common::square_cone(), 3), t in t_values()) {
        let twice = &t * q(2, 1);
        prop_assert!(t_of(&a, &t).contains_ideal(&t_of(&a, &twice)).unwrap());
        prop_assert_eq!(t_of(&a.power(2), &t), t_of(&a, &twice));
    }
}

#[test]
fn regular_powers() {
    for d in 1..=4usize {
        let m = MonomialIdeal::variables(poly(d)).unwrap();
        for n in 1..=6u64 {
            let e = (n + 1).saturating_sub(d as u64);
            assert_eq!(t_of(&m.power(n), &q(1, 1)), m.power(e), "d = {d}, n = {n}");
        }
    }
}

#[test]
fn veronese_closed_form_matches_the_toric_model() {
    for (d, r) in [(2usize, 2u64), (2, 3), (3, 2)] {
        let m = veronese_maximal_ideal(d, r).unwrap();
        for l in 1..=4u64 {
            let e = tau_veronese(d as u64, r, l).unwrap();
            assert_eq!(t_of(&m.power(l), &q(1, 1)), m.power(e), "d = {d}, r = {r}, l = {l}");
        }
    }
}

#[test]
fn principal_ideals_shift() {
    let x = MonomialIdeal::from_i64s(poly(2), &[&[1, 0]]).unwrap();
    assert_eq!(t_of(&x, &q(1, 1)), x);
    let x2y = MonomialIdeal::from_i64s(poly(2), &[&[2, 1]]).unwrap();
    // τ((x^2 y)^t) = (x^{⌊2t⌋} y^{⌊t⌋})
    assert_eq!(t_of(&x2y, &q(1, 2)), MonomialIdeal::from_i64s(poly(2), &[&[1, 0]]).unwrap());
    assert_eq!(t_of(&x2y, &q(3, 4)), MonomialIdeal::from_i64s(poly(2), &[&[1, 0]]).unwrap());
    assert_eq!(t_of(&x2y, &q(1, 1)), MonomialIdeal::new(poly(2), vec![lv(&[2, 1])]).unwrap());
}
