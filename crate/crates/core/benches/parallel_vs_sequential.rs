//! Exhaustive sweeps on a one-thread rayon pool against a wider pool (at
//! least two threads).
//! Built with `--no-default-features` both variants run the sequential
//! fallback.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;
use semistab::orientation::{directed_cuts_toward, find_orientation};
use semistab::semistability::{enumerate_semistable, is_semistable};
use semistab::theta::{degree_g_criterion, theta_components};
use semistab::{DualGraph, Multidegree};

/// Cycle on `n` weight-0 vertices with `k` parallel edges between neighbours.
fn necklace(n: usize, k: usize) -> DualGraph {
    let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let vertices: Vec<(&str, u32)> = ids.iter().map(|s| (s.as_str(), 0)).collect();
    let edges: Vec<(&str, &str)> = (0..n)
        .flat_map(|i| std::iter::repeat_n((ids[i].as_str(), ids[(i + 1) % n].as_str()), k))
        .collect();
    DualGraph::from_ids(&vertices, &edges).unwrap()
}

fn balanced(g: &DualGraph, total: i64) -> Multidegree {
    let n = g.num_vertices() as i64;
    Multidegree::new((0..n).map(|v| total / n + i64::from(v < total.rem_euclid(n))).collect())
}

fn variants(c: &mut Criterion, name: &str, work: impl Fn() + Sync) {
    let mode = if semistab::is_parallel() { "parallel" } else { "fallback" };
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    let wide = std::thread::available_parallelism().map_or(2, |n| n.get().max(2));
    for threads in [1, wide] {
        let pool = ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let label = format!("{threads}-threads");
        group.bench_function(BenchmarkId::new(mode, label), |b| b.iter(|| pool.install(&work)));
    }
    group.finish();
}

fn benches(c: &mut Criterion) {
    let g = necklace(7, 2);
    let total = g.genus() - 1;
    variants(c, "enumerate_semistable", || {
        black_box(enumerate_semistable(&g, total).unwrap());
    });

    let big = necklace(18, 2);
    let d = balanced(&big, big.genus() - 1);
    variants(c, "is_semistable_18", || {
        black_box(is_semistable(&big, &d).unwrap());
    });

    let o = find_orientation(&big, &d).unwrap().unwrap();
    variants(c, "directed_cuts_toward_18", || {
        black_box(directed_cuts_toward(&big, &o).unwrap());
    });
    variants(c, "theta_components_18", || {
        black_box(theta_components(&big, &o).unwrap());
    });

    // d - v1 is orientable but d is not semistable: the search is exhaustive
    let mid = necklace(5, 3);
    let e = enumerate_semistable(&mid, mid.genus() - 1).unwrap().pop().unwrap();
    let dg = e.plus_vertex(0);
    assert!(!is_semistable(&mid, &dg).unwrap());
    variants(c, "degree_g_criterion", || {
        black_box(degree_g_criterion(&mid, &dg, 0).unwrap());
    });
}

criterion_group!(parallel_vs_sequential, benches);
criterion_main!(parallel_vs_sequential);
