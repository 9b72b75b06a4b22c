//! Rayon path vs sequential fallback on the data-parallel inner loops:
//! Grassmannian enumeration, intersection filtering, pencil corank
//! profiling and the invariant pairing. Build with `--no-default-features`
//! to measure the fully sequential crate instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gr25::exterior::{KVector, Variance};
use gr25::geometry::{
    enumerate_grassmannian, enumerate_grassmannian_seq, intersection_points,
    intersection_points_seq, TranslateModel,
};
use gr25::invariants::{f_evaluate, f_evaluate_seq};
use gr25::quadrics::{pencil_corank_profile, pencil_corank_profile_seq, plucker_quadric};
use gr25::symfunc::{plethysm_with_e2, schur_multiplicity, Partition};
use gr25::{FieldTag, Matrix};

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_grassmannian");
    group.sample_size(10);
    for p in [5u64, 7] {
        group.bench_with_input(BenchmarkId::new("parallel", p), &p, |b, &p| {
            b.iter(|| enumerate_grassmannian(p).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", p), &p, |b, &p| {
            b.iter(|| enumerate_grassmannian_seq(p).unwrap())
        });
    }
    group.finish();
}

fn bench_intersection(c: &mut Criterion) {
    let mut group = c.benchmark_group("intersection_points");
    group.sample_size(10);
    for p in [5u64, 7] {
        let field = FieldTag::fp(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let model = TranslateModel::new(Matrix::random_sl(10, field, 40, &mut rng)).unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", p), &model, |b, m| {
            b.iter(|| intersection_points(m).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", p), &model, |b, m| {
            b.iter(|| intersection_points_seq(m).unwrap())
        });
    }
    group.finish();
}

fn bench_invariant(c: &mut Criterion) {
    let mut group = c.benchmark_group("f_evaluate_fp10007");
    let field = FieldTag::fp(10_007).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = Matrix::random_sl(10, field, 45, &mut rng);
    group.bench_function("parallel", |b| b.iter(|| f_evaluate(&g).unwrap()));
    group.bench_function("sequential", |b| b.iter(|| f_evaluate_seq(&g).unwrap()));
    group.finish();
}

fn bench_pencil_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("pencil_corank_profile_fp499");
    group.sample_size(10);
    let field = FieldTag::fp(499).unwrap();
    let q1 = plucker_quadric(&KVector::basis_vector(4, Variance::Vector, field)).unwrap();
    let q2 = plucker_quadric(&KVector::basis_vector(5, Variance::Vector, field)).unwrap();
    group.bench_function("parallel", |b| {
        b.iter(|| pencil_corank_profile(&q1, &q2).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| pencil_corank_profile_seq(&q1, &q2).unwrap())
    });
    group.finish();
}

fn bench_plethysm(c: &mut Criterion) {
    // The multiply kernel follows the crate feature: rerun with
    // --no-default-features for the sequential figure.
    let mut group = c.benchmark_group("plethysm");
    group.sample_size(10);
    for shape in [vec![4u32, 3, 2, 1], vec![5, 4, 3, 2, 1]] {
        let lam = Partition::new(shape.clone()).unwrap();
        let label = shape
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("");
        group.bench_function(BenchmarkId::new("character", &label), |b| {
            b.iter(|| plethysm_with_e2(&lam).unwrap())
        });
    }
    let staircase = plethysm_with_e2(&Partition::new(vec![5, 4, 3, 2, 1]).unwrap()).unwrap();
    let mu = Partition::new(vec![6, 6, 6, 6, 6]).unwrap();
    group.bench_function("multiplicity_extraction", |b| {
        b.iter(|| schur_multiplicity(&staircase, &mu).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_intersection,
    bench_invariant,
    bench_pencil_profile,
    bench_plethysm
);
criterion_main!(benches);
