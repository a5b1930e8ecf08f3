use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use monok_bench::coloured_gnp;
use monok_core::constructions::harary;
use monok_core::graph::{min_spanning_k_connected, vertex_connectivity, SpanningBudget};
use monok_core::solver::mck_exact;
use monok_core::verify::{check_superpath_bound, is_monochromatic_k_connected};
use monok_core::{EdgeColouring, Graph, SearchBudget};

fn connectivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("vertex_connectivity");
    for n in [12, 24, 48] {
        let g = harary(n, 4).unwrap();
        group.bench_with_input(BenchmarkId::new("harary_k4", n), &g, |b, g| b.iter(|| vertex_connectivity(black_box(g))));
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    for n in [6, 8, 10] {
        let g = Graph::complete(n);
        let phi = EdgeColouring::single(&g);
        group.bench_with_input(BenchmarkId::new("one_colour_complete_k3", n), &(g, phi), |b, (g, phi)| {
            b.iter(|| is_monochromatic_k_connected(g, phi, 3).unwrap())
        });
    }
    let (g, phi) = coloured_gnp(11, 8, 0.6, 4);
    group.bench_function("superpath_bound_gnp8", |b| b.iter(|| check_superpath_bound(&g, &phi).unwrap()));
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let full = SearchBudget::full_search();
    for (name, g, k) in [
        ("K4_k2", Graph::complete(4), 2),
        ("K5_k2", Graph::complete(5), 2),
        ("K33_k2", Graph::complete_bipartite(3, 3), 2),
    ] {
        group.bench_function(BenchmarkId::new("mck_full", name), |b| b.iter(|| mck_exact(&g, k, &full).unwrap()));
    }
    let k5 = Graph::complete(5);
    group.bench_function("min_spanning_2_connected_K5", |b| {
        b.iter(|| min_spanning_k_connected(&k5, 2, &SpanningBudget::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, connectivity, verification, search);
criterion_main!(benches);
