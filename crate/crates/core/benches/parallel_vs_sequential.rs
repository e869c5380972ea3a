use coxlab::config::Limits;
use coxlab::factorization::{enumerate_series_formal, enumerate_series_numeric, Exec, Target};
use coxlab::groups::build_group;
use coxlab::scalar::rat;
use coxlab::towers::{standard_tower, WeightSystem};
use coxlab::zonotope::{shephard_sums, RootCatalog};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn convolution(c: &mut Criterion) {
    let lim = Limits::default();
    let mut group = c.benchmark_group("formal_convolution");
    group.sample_size(10);
    for (d, len) in [("B3", 7), ("D4", 8), ("G(3,1,3)", 7)] {
        let g = build_group(d, &lim).unwrap();
        let t = standard_tower(&g, &(0..g.rank).collect::<Vec<_>>()).unwrap();
        let ws = WeightSystem::from_tower(&g, &t);
        let target = Target::Elements(g.coxeter_class().unwrap().members);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, d), &exec, |b, &exec| {
                b.iter(|| enumerate_series_formal(&g, &ws, &target, len, &lim, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn numeric_convolution(c: &mut Criterion) {
    let lim = Limits::default();
    let mut group = c.benchmark_group("numeric_convolution");
    for d in ["H3", "B4"] {
        let g = build_group(d, &lim).unwrap();
        let w: Vec<_> = (0..g.num_reflections() as i64).map(|i| rat(i + 2, i + 1)).collect();
        let target = Target::Element(g.coxeter_class().unwrap().representative);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, d), &exec, |b, &exec| {
                b.iter(|| enumerate_series_numeric(&g, black_box(&w), &target, 12, exec))
            });
        }
    }
    group.finish();
}

fn shephard(c: &mut Criterion) {
    let lim = Limits::default();
    let mut group = c.benchmark_group("shephard_sum");
    group.sample_size(10);
    for d in ["D5", "D6"] {
        let cat = RootCatalog::parse(d).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, d), &exec, |b, &exec| {
                b.iter(|| shephard_sums(&cat, &lim, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, convolution, numeric_convolution, shephard);
criterion_main!(benches);
