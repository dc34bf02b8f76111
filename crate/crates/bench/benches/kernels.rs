use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qplane_core::expr::parse_jet;
use qplane_core::freealg::jet_relations;
use qplane_core::hopf::verify_hopf_axioms;
use qplane_core::ideals::{buchberger, extract_bihomogeneous, DEFAULT_BUDGET};
use qplane_core::jetalg::{mul_jet, pow_jet};
use qplane_core::qcoeff::gauss_binomial;
use qplane_core::sample::{random_jetpoly, random_ncpoly, seeded};
use qplane_core::{BiDegree, JetPoly};

fn normalize(c: &mut Criterion) {
    let mut group = c.benchmark_group("normalize");
    for n in [0u32, 2] {
        let rs = jet_relations(n);
        let p = random_ncpoly(&mut seeded(1), n, 8, 6);
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| b.iter(|| rs.normalize(black_box(p))));
    }
    group.finish();
}

fn twisted_product(c: &mut Criterion) {
    let mut rng = seeded(2);
    let a = random_jetpoly(&mut rng, 2, 5, 8);
    let b = random_jetpoly(&mut rng, 2, 5, 8);
    c.bench_function("mul_jet n=2", |bench| bench.iter(|| mul_jet(black_box(&a), black_box(&b))));
    let s = &JetPoly::x(0, 0) + &JetPoly::y(0, 0);
    c.bench_function("(x+y)^10", |bench| bench.iter(|| pow_jet(black_box(&s), 10)));
}

fn gauss(c: &mut Criterion) {
    c.bench_function("gauss_binomial(20, 10)", |b| b.iter(|| gauss_binomial(black_box(20), black_box(10))));
}

fn ideals(c: &mut Criterion) {
    let gens = [
        parse_jet("x*y' - x'*y", 1).unwrap(),
        parse_jet("x^2", 1).unwrap(),
        parse_jet("y'^2 - q*y*y'", 1).unwrap(),
    ];
    c.bench_function("buchberger", |b| b.iter(|| buchberger(1, black_box(&gens), DEFAULT_BUDGET)));
    let g = parse_jet("x^2 + x*y + y + x^3*y' + 1", 1).unwrap();
    c.bench_function("extract", |b| b.iter(|| extract_bihomogeneous(black_box(&g), BiDegree::new(2, 0))));
}

fn hopf(c: &mut Criterion) {
    c.bench_function("hopf axioms", |b| b.iter(verify_hopf_axioms));
}

criterion_group!(benches, normalize, twisted_product, gauss, ideals, hopf);
criterion_main!(benches);
