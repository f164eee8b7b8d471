use criterion::{black_box, criterion_group, criterion_main, Criterion};
use twistcox::{catalog, complexity, minimize_complexity, twist, Group, SearchLimits};
use twistcox_bench::{q3_group, twisted_q3};

fn balls(c: &mut Criterion) {
    c.bench_function("ball radius 8 in Q3", |b| {
        b.iter(|| {
            let g = q3_group();
            black_box(g.enumerate_ball(8, 1_000_000).unwrap().len())
        })
    });
    c.bench_function("F4 parabolic enumeration", |b| {
        b.iter(|| {
            let g = Group::new(catalog::linear(&[3, 4, 3]));
            let all = g.graph().all();
            black_box(g.parabolic_elements(all, 10_000).unwrap().len())
        })
    });
}

fn complexity_and_search(c: &mut Criterion) {
    c.bench_function("complexity of twisted Q3", |b| {
        b.iter(|| {
            let g = q3_group();
            black_box(complexity(&twisted_q3(&g)).unwrap())
        })
    });
    c.bench_function("minimize twisted Q3", |b| {
        b.iter(|| {
            let g = q3_group();
            black_box(
                minimize_complexity(&twisted_q3(&g), SearchLimits::default())
                    .unwrap()
                    .value,
            )
        })
    });
}

fn twists(c: &mut Criterion) {
    let q5 = catalog::q5();
    c.bench_function("twist class of Q5", |b| {
        b.iter(|| black_box(twist::twist_class(&q5, 10_000).unwrap()))
    });
}

criterion_group!(benches, balls, complexity_and_search, twists);
criterion_main!(benches);
