use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use rvc_bench::{scrambled, solver_inputs};
use rvc_core::census::census_run;
use rvc_core::{canonical_form, enumerate_graphs, is_rainbow_vertex_connected, rvc_exact, VertexColoring};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("rvc_exact");
    for (name, g) in solver_inputs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| rvc_exact(black_box(g)))
        });
    }
    group.finish();
}

fn checker(c: &mut Criterion) {
    let g = rvc_core::constructions::path_graph(40).unwrap();
    let coloring = VertexColoring::injective(40);
    c.bench_function("check_path40_injective", |b| {
        b.iter(|| is_rainbow_vertex_connected(black_box(&g), black_box(&coloring)))
    });
}

fn canon(c: &mut Criterion) {
    let graphs: Vec<_> = (0..32).map(|seed| scrambled(8, 0x9e37_79b9 + seed)).collect();
    c.bench_function("canonical_form_n8_x32", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| canonical_form(black_box(g)).unwrap().bits())
                .sum::<u64>()
        })
    });
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_dedup");
    group.sample_size(10);
    for n in [5usize, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| census_run(enumerate_graphs(n, true).unwrap(), n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact, checker, canon, census);
criterion_main!(benches);
