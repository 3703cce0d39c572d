use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use knotwidth::carving::{exact_carving_width, heuristic_carving};
use knotwidth::pipeline::run_pipeline;
use knotwidth::triangulation::{face_pairing_width, torus_complement};
use knotwidth_bench::{exact_corpus, graph_of, heuristic_corpus};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for (name, d) in exact_corpus() {
        let g = graph_of(&d);
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| exact_carving_width(g, true).unwrap().0)
        });
    }
    group.finish();
}

fn heuristic(c: &mut Criterion) {
    let mut group = c.benchmark_group("heuristic");
    for (name, d) in heuristic_corpus() {
        let g = graph_of(&d);
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| heuristic_carving(g).width())
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for (name, d) in heuristic_corpus() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &d, |b, d| {
            b.iter(|| run_pipeline(d, 16).unwrap().splitting.cost())
        });
    }
    group.finish();
}

fn triangulation(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangulation");
    for (p, q) in [(3u64, 2u64), (9, 7), (29, 17)] {
        group.bench_function(BenchmarkId::new("complement", format!("{p},{q}")), |b| {
            b.iter(|| {
                let t = torus_complement(p, q).unwrap();
                face_pairing_width(&t.triangulation).1
            })
        });
    }
    let t = torus_complement(29, 17).unwrap().triangulation;
    group.bench_function("homology 29,17", |b| b.iter(|| t.homology_h1().unwrap()));
    group.finish();
}

criterion_group!(benches, exact, heuristic, pipeline, triangulation);
criterion_main!(benches);
