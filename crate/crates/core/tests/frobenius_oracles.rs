//! The finite-q Frobenius computations against brute-force enumeration and
//! against the polyhedral engine.

mod common;

use std::sync::Arc;

use common::{any_orthant_ideal, box_points, lv, poly, q, t_values};
use proptest::prelude::*;
use tauideal::{
    frobenius_root_tau_oracle, in_star_e, socle_piece_vanishes_at_q, tau, tau_socle_oracle, BigInt, BigRational,
    FrobeniusConfig, LatticeVector, MonomialIdeal, NewtonPolyhedron, SoclePoint, TauRequest, ToricRing, VerdictStatus,
};

/// Emptiness of `(qu + qtP) ∩ ((q-1)w - σ∨) ∩ M` by scanning every lattice
/// point `x` with `x - qu` in the bounding box of the polytope
/// `{y ∈ σ∨ : ℓ(y) <= ℓ((q-1)w - qu)}`.
fn brute_vanishes(a: &MonomialIdeal, t: &BigRational, u: &LatticeVector, qq: u64) -> bool {
    let ring = a.ring();
    let d = ring.dim();
    let qr = BigRational::from_integer(BigInt::from(qq));
    let qt = t * &qr;
    let region = NewtonPolyhedron::new(a).unwrap().scale(&qt).unwrap();
    let corner = ring.w().scaled(&(&qr - BigRational::from_integer(1.into())));
    let qu = u.scaled(&BigInt::from(qq));
    let top = (&corner - &qu.to_rational()).dot_lattice(ring.degree_functional());
    let top = top.ceil().to_integer();
    let top: i64 = i64::try_from(top).unwrap();
    // every point of σ∨ with ℓ <= top fits in this box
    let bound = top * ring.sigma_dual().rays().iter().flat_map(|r| r.to_i64s().unwrap()).map(i64::abs).max().unwrap();
    for y in box_points(d, -bound, bound) {
        let y = lv(&y);
        if !region.contains(&y.to_rational(), false).unwrap() {
            continue;
        }
        let x = &y + &qu;
        let gap = &corner - &x.to_rational();
        if ring.cone_generators().iter().all(|n| gap.dot_lattice(n) >= BigRational::from_integer(0.into())) {
            return false;
        }
    }
    true
}

fn veronese_rings() -> Vec<Arc<ToricRing>> {
    vec![
        Arc::new(ToricRing::veronese(2, 2).unwrap()),
        Arc::new(ToricRing::veronese(2, 3).unwrap()),
        common::square_cone(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn socle_test_matches_brute_force_on_polynomial_rings(
        a in any_orthant_ideal(4),
        t in t_values(),
        raw_u in prop::collection::vec(0i64..=3, 3),
        qq in prop::sample::select(vec![2u64, 4, 8]),
    ) {
        let d = a.ring().dim();
        let u = -&lv(&raw_u[..d]);
        let sp = SoclePoint::new(a.ring(), u.clone()).unwrap();
        prop_assert_eq!(
            socle_piece_vanishes_at_q(&a, &t, &sp, qq, 2).unwrap(),
            brute_vanishes(&a, &t, &u, qq)
        );
    }

    #[test]
    fn socle_test_matches_brute_force_on_other_rings(
        which in 0usize..3,
        seed in any::<u64>(),
        t in t_values(),
        qq in prop::sample::select(vec![2u64, 3, 4]),
    ) {
        let ring = veronese_rings()[which].clone();
        let pts = tauideal::enumerate::points_up_to(&ring, &BigInt::from(4)).unwrap();
        let pick = |k: u64| pts[(seed.rotate_left(k as u32 * 13) % pts.len() as u64) as usize].clone();
        let a = MonomialIdeal::new(ring.clone(), vec![pick(1), pick(2)]).unwrap();
        let u = -&pick(3);
        let sp = SoclePoint::new(&ring, u.clone()).unwrap();
        let prime = if qq == 3 { 3 } else { 2 };
        prop_assert_eq!(
            socle_piece_vanishes_at_q(&a, &t, &sp, qq, prime).unwrap(),
            brute_vanishes(&a, &t, &u, qq)
        );
    }

    #[test]
    fn stabilized_verdicts_match_the_interior_test(
        a in any_orthant_ideal(5),
        t in t_values(),
        raw_m in prop::collection::vec(0i64..=4, 3),
    ) {
        let d = a.ring().dim();
        let m = lv(&raw_m[..d]);
        let sp = SoclePoint::dual_to(a.ring(), &m).unwrap();
        let v = in_star_e(&a, &t, &sp, &FrobeniusConfig::default()).unwrap();
        let p = NewtonPolyhedron::new(&a).unwrap().scale(&t).unwrap();
        let interior = p.contains(&(a.ring().w() - &(-&m).to_rational()), true).unwrap();
        match v.status {
            VerdictStatus::FailsAtQ => prop_assert!(interior),
            VerdictStatus::Stabilized => prop_assert!(!interior),
            VerdictStatus::HoldsUpToQmax => prop_assert!(false, "qmax = 128 examines seven q"),
        }
    }

    #[test]
    fn root_chain_ascends_to_tau(a in (1usize..=2).prop_flat_map(|d| common::orthant_ideal(d, 4, 5)), t in t_values()) {
        let rep = frobenius_root_tau_oracle(&a, &t, &FrobeniusConfig::default()).unwrap();
        prop_assert!(rep.ascending);
        let expect = tau(&TauRequest::new(a.clone(), t.clone()).unwrap()).unwrap();
        prop_assert_eq!(rep.ideal, Some(expect));
    }
}

#[test]
fn socle_oracle_matches_tau_on_veronese_and_square_rings() {
    let cfg = FrobeniusConfig::default();
    for ring in veronese_rings() {
        let pts = tauideal::enumerate::points_up_to(&ring, &BigInt::from(6)).unwrap();
        for (k, t) in [q(1, 2), q(1, 1), q(3, 2)].iter().enumerate() {
            for j in 0..6 {
                let gens = vec![pts[(7 * j + k + 1) % pts.len()].clone(), pts[(11 * j + 3 * k + 2) % pts.len()].clone()];
                let a = MonomialIdeal::new(ring.clone(), gens).unwrap();
                let rep = tau_socle_oracle(&a, t, &cfg).unwrap();
                let expect = tau(&TauRequest::new(a.clone(), t.clone()).unwrap()).unwrap();
                assert!(rep.inconclusive.is_empty());
                assert_eq!(rep.ideal, expect, "a = {a}, t = {t}");
            }
        }
    }
}

#[test]
fn socle_oracle_agrees_across_primes() {
    let a = MonomialIdeal::from_i64s(poly(3), &[&[3, 1, 0], &[0, 2, 2], &[1, 0, 4]]).unwrap();
    for t in [q(1, 2), q(1, 1), q(3, 2)] {
        let two = tau_socle_oracle(&a, &t, &FrobeniusConfig::default()).unwrap();
        let three = tau_socle_oracle(&a, &t, &FrobeniusConfig::new(3, 128, 8).unwrap()).unwrap();
        assert_eq!(two.ideal, three.ideal);
        let root = frobenius_root_tau_oracle(&a, &t, &FrobeniusConfig::default()).unwrap();
        assert_eq!(root.ideal, Some(two.ideal));
    }
}

#[test]
fn root_chain_at_q_eight() {
    // x^8 y^12, x^16, y^24, x^12 y^6 root to x y, x^2, y^3, x
    let a = MonomialIdeal::from_i64s(poly(2), &[&[2, 0], &[0, 3]]).unwrap();
    let rep = frobenius_root_tau_oracle(&a, &q(1, 1), &FrobeniusConfig::new(2, 8, 8).unwrap()).unwrap();
    let (qq, root) = rep.chain.last().unwrap();
    assert_eq!(*qq, 8);
    assert_eq!(root, &MonomialIdeal::variables(poly(2)).unwrap());
}
