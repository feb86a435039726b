use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, Criterion};

use ctrplace::pareto::{evo_place, exa_place, rnd_place, SearchBudget, DEFAULT_ENUMERATION_CAP};
use ctrplace::Topology;

fn garr() -> Topology {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/topologies/garr.graphml");
    Topology::load(path, 200.0).expect("bundled topology loads")
}

fn bench_delay_matrix(c: &mut Criterion) {
    let t = garr();
    c.bench_function("delay_matrix/garr", |b| {
        b.iter(|| black_box(t.delay_matrix()))
    });
}

fn bench_searches(c: &mut Criterion) {
    let t = garr();
    let d = t.delay_matrix();
    c.bench_function("exa_place/garr_c3", |b| {
        b.iter(|| black_box(exa_place(&d, 3, DEFAULT_ENUMERATION_CAP).unwrap()))
    });
    let budget = SearchBudget { i_max: 50, seed: 1 };
    c.bench_function("rnd_place/garr_c3_i50", |b| {
        b.iter(|| black_box(rnd_place(&d, 3, budget)))
    });
    c.bench_function("evo_place/garr_c3_i50", |b| {
        b.iter(|| black_box(evo_place(&d, 3, budget, &t)))
    });
}

criterion_group!(benches, bench_delay_matrix, bench_searches);
criterion_main!(benches);
