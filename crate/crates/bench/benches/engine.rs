use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tauideal::{
    frobenius_root_tau_oracle, tau, tau_socle_oracle, veronese_maximal_ideal, BigInt, BigRational, Cone,
    FrobeniusConfig, LatticeVector, MonomialIdeal, NewtonPolyhedron, TauRequest, ToricRing,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn poly(d: usize) -> Arc<ToricRing> {
    Arc::new(ToricRing::polynomial(d).unwrap())
}

fn tau_regular_powers(c: &mut Criterion) {
    let mut g = c.benchmark_group("tau_regular_power");
    for (d, n) in [(2, 8), (3, 8), (4, 6), (5, 8)] {
        let m = MonomialIdeal::variables(poly(d)).unwrap().power(n);
        let req = TauRequest::new(m, rat(1, 1)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(format!("d{d}_n{n}")), &req, |b, req| {
            b.iter(|| tau(black_box(req)).unwrap())
        });
    }
    g.finish();
}

fn tau_veronese_model(c: &mut Criterion) {
    let m = veronese_maximal_ideal(3, 2).unwrap().power(4);
    let req = TauRequest::new(m, rat(1, 1)).unwrap();
    c.bench_function("tau_veronese_3_2_l4", |b| b.iter(|| tau(black_box(&req)).unwrap()));
}

fn double_description(c: &mut Criterion) {
    // a cone over a hexagon and the Newton polyhedron of a staircase ideal
    let hexagon: Vec<LatticeVector> = [[2, 0, 1], [1, 2, 1], [-1, 2, 1], [-2, 0, 1], [-1, -2, 1], [1, -2, 1]]
        .iter()
        .map(|v| LatticeVector::from_i64s(v))
        .collect();
    c.bench_function("dual_cone_hexagon", |b| b.iter(|| Cone::from_rays(black_box(&hexagon)).unwrap().dual()));
    let stairs = MonomialIdeal::from_i64s(
        poly(3),
        &[&[6, 0, 0], &[0, 6, 0], &[0, 0, 6], &[3, 2, 0], &[0, 3, 2], &[2, 0, 3], &[2, 2, 2]],
    )
    .unwrap();
    c.bench_function("newton_polyhedron_d3", |b| b.iter(|| NewtonPolyhedron::new(black_box(&stairs)).unwrap()));
}

fn oracles(c: &mut Criterion) {
    let a = MonomialIdeal::from_i64s(poly(2), &[&[2, 0], &[0, 3]]).unwrap();
    let t = rat(5, 6);
    let cfg = FrobeniusConfig::default();
    c.bench_function("socle_oracle_x2y3", |b| b.iter(|| tau_socle_oracle(black_box(&a), &t, &cfg).unwrap()));
    c.bench_function("root_oracle_x2y3", |b| b.iter(|| frobenius_root_tau_oracle(black_box(&a), &t, &cfg).unwrap()));
}

criterion_group!(benches, tau_regular_powers, tau_veronese_model, double_description, oracles);
criterion_main!(benches);
