use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use guillotine_bench::obstructions;
use guillotine_core::{
    count_class, enumerate_colored_trees, enumerate_dperms, is_separable, series::guillotine_gf,
    tree_to_dperm, tree_to_path,
};

fn trees(c: &mut Criterion) {
    let mut g = c.benchmark_group("colored_trees");
    for n in [4usize, 6, 8] {
        g.bench_with_input(BenchmarkId::new("d3", n), &n, |b, &n| {
            b.iter(|| enumerate_colored_trees(3, n, |_| true).unwrap().count())
        });
    }
    g.finish();
}

fn separability(c: &mut Criterion) {
    let perms: Vec<_> = enumerate_dperms(3, 5).unwrap().collect();
    c.bench_function("is_separable/d3_n5", |b| {
        b.iter(|| perms.iter().filter(|p| is_separable(p)).count())
    });
    let pats = obstructions();
    c.bench_function("count_class/d2_n7", |b| {
        b.iter(|| count_class(2, 7, black_box(&pats), u64::MAX).unwrap())
    });
}

fn bijections(c: &mut Criterion) {
    let ts: Vec<_> = enumerate_colored_trees(2, 7, |_| true).unwrap().collect();
    c.bench_function("tree_to_path/d2_n7", |b| {
        b.iter(|| {
            ts.iter()
                .map(|t| tree_to_path(t, 2).unwrap().length())
                .sum::<usize>()
        })
    });
    c.bench_function("tree_to_dperm/d2_n7", |b| {
        b.iter(|| {
            ts.iter()
                .map(|t| tree_to_dperm(t, 2).unwrap().n())
                .sum::<usize>()
        })
    });
}

fn series(c: &mut Criterion) {
    c.bench_function("guillotine_gf/q4_order40", |b| {
        b.iter(|| guillotine_gf(black_box(4), 40).unwrap())
    });
}

criterion_group!(benches, trees, separability, bijections, series);
criterion_main!(benches);
