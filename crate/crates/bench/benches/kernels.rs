use criterion::{black_box, criterion_group, criterion_main, Criterion};

use loopforge::enumerate::{enumerate_glauberman, enumerate_loops, EnumerationTask, Mode, Predicate};
use loopforge::structure::{theorem1_verify, theorem2_verify};
use loopforge::{canonical_form, envelope, CayleyLoop, PermGroup, DEFAULT_CAP};

fn bruck(n: usize) -> Vec<CayleyLoop> {
    enumerate_loops(&EnumerationTask::new(n, Predicate::Bruck).with_mode(Mode::Fast)).unwrap()
}

fn kernels(c: &mut Criterion) {
    let b8 = bruck(8).into_iter().find(|x| !x.is_associative()).unwrap();
    let b15 = bruck(15).into_iter().find(|x| !x.is_associative()).unwrap();

    c.bench_function("canonical_form/bruck8", |b| b.iter(|| canonical_form(black_box(&b8))));
    c.bench_function("canonical_form/bruck15", |b| b.iter(|| canonical_form(black_box(&b15))));

    let gens: Vec<_> = (1..15).map(|a| b15.right_translation(a)).collect();
    c.bench_function("schreier_sims/bruck15", |b| {
        b.iter(|| PermGroup::new(15, black_box(&gens)).order())
    });
    c.bench_function("envelope/bruck15", |b| {
        b.iter(|| envelope(black_box(&b15), DEFAULT_CAP).unwrap())
    });

    c.bench_function("theorem1/bruck15", |b| {
        b.iter(|| theorem1_verify(black_box(&b15), DEFAULT_CAP).unwrap())
    });
    c.bench_function("theorem2/bruck15", |b| {
        b.iter(|| theorem2_verify(black_box(&b15)).unwrap())
    });

    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    g.bench_function("bol8_fast", |b| {
        b.iter(|| enumerate_loops(&EnumerationTask::new(8, Predicate::Bol).with_mode(Mode::Fast)).unwrap())
    });
    g.bench_function("loop6_fast", |b| {
        b.iter(|| enumerate_loops(&EnumerationTask::new(6, Predicate::Loop).with_mode(Mode::Fast)).unwrap())
    });
    g.bench_function("glauberman27", |b| b.iter(|| enumerate_glauberman(27).unwrap()));
    g.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
