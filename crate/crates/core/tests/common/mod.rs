#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use tauideal::{BigInt, BigRational, LatticeVector, MonomialIdeal, ToricRing};

pub fn lv(c: &[i64]) -> LatticeVector {
    LatticeVector::from_i64s(c)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn poly(d: usize) -> Arc<ToricRing> {
    Arc::new(ToricRing::polynomial(d).unwrap())
}

/// The Gorenstein cone over a unit square: four rays, not simplicial.
pub fn square_cone() -> Arc<ToricRing> {
    Arc::new(ToricRing::new(&[lv(&[1, 0, 1]), lv(&[0, 1, 1]), lv(&[-1, 0, 1]), lv(&[0, -1, 1])]).unwrap())
}

pub fn t_values() -> impl Strategy<Value = BigRational> {
    prop::sample::select(vec![(1, 3), (1, 2), (5, 6), (1, 1), (3, 2), (2, 1)]).prop_map(|(n, d)| q(n, d))
}

/// A nonzero monomial ideal of `k[x_1..x_d]` with 1 to `max_gens`
/// generators, exponents at most `max_exp`.
pub fn orthant_ideal(d: usize, max_gens: usize, max_exp: i64) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, d), 1..=max_gens).prop_map(move |rows| {
        let ring = poly(d);
        MonomialIdeal::new(ring, rows.iter().map(|r| lv(r)).collect()).unwrap()
    })
}

/// A pair of ideals over the same polynomial ring in 1 to 3 variables.
pub fn orthant_pair(max_exp: i64) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(move |d| (orthant_ideal(d, 4, max_exp), orthant_ideal(d, 4, max_exp))).prop_map(
        |(a, b)| {
            let b = MonomialIdeal::new(a.ring().clone(), b.gens().to_vec()).unwrap();
            (a, b)
        },
    )
}

pub fn any_orthant_ideal(max_exp: i64) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(move |d| orthant_ideal(d, 4, max_exp))
}

/// An ideal of `ring` generated by up to four semigroup points of degree
/// at most `max_degree`.
pub fn ideal_in(ring: Arc<ToricRing>, max_degree: i64) -> impl Strategy<Value = MonomialIdeal> {
    let pts = tauideal::enumerate::points_up_to(&ring, &BigInt::from(max_degree)).unwrap();
    prop::collection::vec(prop::sample::select(pts), 1..=4)
        .prop_map(move |gens| MonomialIdeal::new(ring.clone(), gens).unwrap())
}

/// Points of `box^d` with coordinates in `[lo, hi]`.
pub fn box_points(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}
