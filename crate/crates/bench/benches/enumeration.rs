use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hnstrat::bruhat::CosetSetup;
use hnstrat::rootdata::DEFAULT_CAP;
use hnstrat::{p1, reps, strata, Parabolic};
use hnstrat_bench::{bound, datum, unit_component, NAMED};

fn weyl_groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("weyl_group");
    for name in NAMED {
        let rd = datum(name);
        g.bench_with_input(BenchmarkId::from_parameter(name), &rd, |b, rd| {
            b.iter(|| rd.weyl_group(DEFAULT_CAP).unwrap().len())
        });
    }
    g.finish();
}

fn min_reps(c: &mut Criterion) {
    let rd = datum("SC:B3");
    let group = rd.weyl_group(DEFAULT_CAP).unwrap();
    c.bench_function("min_reps/B3_all_pairs", |b| {
        b.iter(|| {
            let mut total = 0;
            for m1 in Parabolic::all(3) {
                for m2 in Parabolic::all(3) {
                    total += CosetSetup::new(&rd, m1, m2).unwrap().min_reps(&group).len();
                }
            }
            black_box(total)
        })
    });
}

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_strata");
    for name in NAMED {
        let rd = datum(name);
        let lambda = unit_component(&rd);
        g.bench_with_input(BenchmarkId::from_parameter(name), &rd, |b, rd| {
            b.iter(|| strata::enumerate_strata(rd, &lambda, &bound(4)).unwrap().len())
        });
    }
    g.finish();
}

fn freudenthal(c: &mut Criterion) {
    let rd = datum("SC:B3");
    c.bench_function("weyl_weights/B3_222", |b| {
        b.iter(|| reps::weyl_weights(&rd, black_box(&[2, 2, 2])).unwrap().dim())
    });
}

fn poset(c: &mut Criterion) {
    c.bench_function("strata_poset/n4_d0_box3", |b| b.iter(|| p1::strata_poset(4, 0, 3).unwrap().edges.len()));
}

criterion_group!(benches, weyl_groups, min_reps, enumerate, freudenthal, poset);
criterion_main!(benches);
