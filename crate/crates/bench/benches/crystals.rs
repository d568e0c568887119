use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use demkit_core::analysis::{sweep, ProductClassifier, SweepConfig, DEFAULT_BUDGET};
use demkit_core::demazure::{demazure_subset, recognize_demazure};
use demkit_core::tableaux::build_type_a;
use demkit_core::{CartanData, Weight, WeylElement};

fn construction(c: &mut Criterion) {
    let a2 = CartanData::from_label("A2").unwrap();
    let a3 = CartanData::from_label("A3").unwrap();
    c.bench_function("tableaux B(2,2) in A2", |b| {
        b.iter(|| build_type_a(&a2, black_box(&Weight::new(vec![2, 2]))).unwrap())
    });
    c.bench_function("tableaux B(1,1,1) in A3", |b| {
        b.iter(|| build_type_a(&a3, black_box(&Weight::new(vec![1, 1, 1]))).unwrap())
    });
    let g = build_type_a(&a2, &Weight::new(vec![2, 2])).unwrap();
    c.bench_function("tensor B(2,2) ⊗ B(2,2)", |b| {
        b.iter(|| g.tensor(black_box(&g)).unwrap())
    });
}

fn recognition(c: &mut Criterion) {
    let a3 = CartanData::from_label("A3").unwrap();
    let g = Arc::new(build_type_a(&a3, &Weight::new(vec![1, 1, 1])).unwrap());
    let w = WeylElement::parse(&a3, "s1*s2*s3*s1").unwrap();
    let s = demazure_subset(&g, &w).unwrap();
    c.bench_function("recognize B_w(rho) in A3", |b| {
        b.iter(|| recognize_demazure(black_box(&s)).unwrap())
    });
    let a2 = CartanData::from_label("A2").unwrap();
    let rho = a2.rho();
    let cl = ProductClassifier::new(&a2, &rho, &rho, DEFAULT_BUDGET).unwrap();
    let w = WeylElement::parse(&a2, "s1*s2").unwrap();
    c.bench_function("classify B_s1s2(rho) ⊗ B_s1s2(rho)", |b| {
        b.iter(|| cl.classify(&w, &w).unwrap())
    });
}

fn sweeps(c: &mut Criterion) {
    let a2 = CartanData::from_label("A2").unwrap();
    let grid: Vec<Weight> = [[1, 0], [0, 1], [2, 0], [0, 2], [1, 1]]
        .iter()
        .map(|v| Weight::new(v.to_vec()))
        .collect();
    let config = SweepConfig {
        cartan: a2,
        lambdas: grid.clone(),
        mus: grid,
        jobs: 1,
        budget: DEFAULT_BUDGET,
    };
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("A2 900 instances, one thread", |b| {
        b.iter(|| sweep(&config).unwrap())
    });
    group.finish();
}

criterion_group!(benches, construction, recognition, sweeps);
criterion_main!(benches);
