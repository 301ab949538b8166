//! Parallel core against the sequential fallback.
//!
//! With the default `parallel` feature each workload runs twice: on the global
//! rayon pool and on a one-thread pool. `cargo bench --no-default-features`
//! runs the plain sequential build for a third data point.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spectra_forge::algebra::{FiniteGroup, GroupSubset};
use spectra_forge::finring::FiniteRing;
use spectra_forge::graphs::{cayley, mirror_dicayley, CayleyKind, Graph};
use spectra_forge::spectra::{moments, spectrum_dense_symmetric};

fn workloads() -> Vec<(&'static str, Graph)> {
    let ring: FiniteRing = "zpk:3^2*gf:2^3".parse().unwrap();
    let units = ring.units();
    let mirror = mirror_dicayley(ring.additive_group(), &units, &units, CayleyKind::Sum).unwrap();
    let g = FiniteGroup::dihedral(60).unwrap();
    let s = GroupSubset::new(&g, [1, 2, 3, 5, 60, 118]).unwrap();
    let dihedral = cayley(&g, &s, CayleyKind::Difference).unwrap();
    vec![("mirror-144", mirror), ("dihedral-120", dihedral)]
}

fn run(c: &mut Criterion, mode: &str, wrap: &dyn Fn(&mut (dyn FnMut() + Send))) {
    let mut group = c.benchmark_group(mode);
    group.sample_size(10);
    for (name, graph) in workloads() {
        if graph.is_undirected() {
            group.bench_with_input(BenchmarkId::new("jacobi", name), &graph, |b, g| {
                b.iter(|| wrap(&mut || drop(spectrum_dense_symmetric(g).unwrap())))
            });
        }
        group.bench_with_input(BenchmarkId::new("moments", name), &graph, |b, g| {
            b.iter(|| wrap(&mut || drop(moments(g, 12))))
        });
    }
    group.finish();
}

#[cfg(feature = "parallel")]
fn bench(c: &mut Criterion) {
    run(c, "rayon", &|f| f());
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    run(c, "rayon-1-thread", &|f| one.install(|| f()));
}

#[cfg(not(feature = "parallel"))]
fn bench(c: &mut Criterion) {
    run(c, "sequential", &|f| f());
}

criterion_group!(benches, bench);
criterion_main!(benches);
