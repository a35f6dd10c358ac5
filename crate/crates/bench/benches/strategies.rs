use contscope::evaluator::{eval_comp_tree, params, reading_tree, strat, Strategy};
use contscope_bench::model;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn direct(c: &mut Criterion) {
    let mut group = c.benchmark_group("direct");
    for n in 1..=3 {
        let m = model(n, 3).unwrap();
        for s in Strategy::ALL {
            let ps = params(s, n);
            group.bench_with_input(BenchmarkId::new(s.to_string(), n), &ps, |b, ps| {
                b.iter(|| {
                    for p in ps {
                        black_box(strat(s, p, m.quants(), m.verb()).unwrap());
                    }
                })
            });
        }
    }
    group.finish();
}

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("tree");
    for n in 1..=3 {
        let m = model(n, 3).unwrap();
        for s in Strategy::ALL {
            let ts: Vec<_> = params(s, n).iter().map(|p| reading_tree(s, p, n).unwrap()).collect();
            group.bench_with_input(BenchmarkId::new(s.to_string(), n), &ts, |b, ts| {
                b.iter(|| {
                    for t in ts {
                        black_box(eval_comp_tree(t, &m).unwrap());
                    }
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, direct, trees);
criterion_main!(benches);
