use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigUint;
use std::hint::black_box;
use zmdeg_bench::{zm_105_4_62, zm_75_2_74, zm_9_4_8};
use zmdeg_core::degrees;

fn formula_benchmarks(c: &mut Criterion) {
    let small = zm_9_4_8();
    let large = zm_105_4_62();
    let dihedral = zm_75_2_74();

    c.bench_function("report ZM(9,4,8)", |b| {
        b.iter(|| degrees::report(black_box(&small)))
    });
    c.bench_function("report ZM(105,4,62)", |b| {
        b.iter(|| degrees::report(black_box(&large)))
    });
    c.bench_function("report ZM(75,2,74)", |b| {
        b.iter(|| degrees::report(black_box(&dihedral)))
    });
    c.bench_function("sd_n_prime 3^8", |b| {
        let m = BigUint::from(3u32).pow(8);
        b.iter(|| degrees::sd_n_prime(black_box(&m)))
    });
    c.bench_function("asymptotic_sweep p=3 alpha<=12", |b| {
        let p = BigUint::from(3u32);
        b.iter(|| degrees::asymptotic_sweep(black_box(&p), 12))
    });
}

criterion_group!(benches, formula_benchmarks);
criterion_main!(benches);
