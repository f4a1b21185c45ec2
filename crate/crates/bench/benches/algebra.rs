use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hopftab::hopf::{self, PosetFamily};
use hopftab::perm::Permutation;
use hopftab::poset;
use hopftab::tableau::{self, StandardTableau};

fn insertion(c: &mut Criterion) {
    let sigma: Permutation = "3,9,1,12,7,5,11,2,10,4,8,6".parse().unwrap();
    c.bench_function("rsk/12", |b| b.iter(|| tableau::rsk(black_box(&sigma))));
    let (p, q) = tableau::rsk(&sigma);
    c.bench_function("inverse_rsk/12", |b| {
        b.iter(|| tableau::inverse_rsk(black_box(&p), black_box(&q)).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for n in [6, 8] {
        g.bench_with_input(BenchmarkId::new("tableaux", n), &n, |b, &n| {
            b.iter(|| tableau::enumerate_tableaux(n))
        });
        g.bench_with_input(BenchmarkId::new("indecomposable", n), &n, |b, &n| {
            b.iter(|| tableau::count_indecomposable(n))
        });
    }
    g.finish();
}

fn posets(c: &mut Criterion) {
    let mut g = c.benchmark_group("poset");
    g.sample_size(10);
    g.bench_function("weak_order/6", |b| b.iter(|| poset::weak_order_poset(6)));
    g.bench_function("taskin/6", |b| b.iter(|| poset::taskin_poset(6).unwrap()));
    g.bench_function("mobius/taskin6", |b| {
        b.iter(|| {
            let p = poset::taskin_poset(6).unwrap();
            p.precompute_mobius();
            p
        })
    });
    g.finish();
}

fn algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("hopf");
    g.sample_size(10);
    let a: StandardTableau = "P(123)".parse().unwrap();
    g.bench_function("m_structure_constants/123x123", |b| {
        b.iter(|| {
            let family = PosetFamily::new(6);
            hopf::m_structure_constants_tab(&a, &a, &family).unwrap()
        })
    });
    let sigma: Permutation = "78465213".parse().unwrap();
    g.bench_function("delta_monomial_perm/8", |b| {
        b.iter(|| hopf::delta_monomial_perm(black_box(&sigma)))
    });
    g.bench_function("primitive_dimension/tab6", |b| {
        b.iter(|| hopf::primitive_dimension::<StandardTableau>(6))
    });
    g.finish();
}

criterion_group!(benches, insertion, enumeration, posets, algebra);
criterion_main!(benches);
