use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use schur_bench::{random_word, roomy_partition};
use schur_core::rewriting::derive::derive_structured;
use schur_core::rewriting::search::{equivalent_mod_j_bfs, DEFAULT_BUDGET};
use schur_core::schur_action::{apply_word, apply_word_closed_form};
use schur_core::tableaux::rsk;
use schur_core::verify::{check_theorem, VerifyOptions};
use schur_core::Word;

fn statistics(c: &mut Criterion) {
    let word = random_word(8, 10_000, 1);
    c.bench_function("alpha/len_10000", |b| b.iter(|| black_box(&word).alpha()));
}

fn insertion(c: &mut Criterion) {
    let word = random_word(6, 300, 2);
    c.bench_function("insert/len_300", |b| b.iter(|| rsk(black_box(&word))));
}

fn action(c: &mut Criterion) {
    let word = random_word(5, 200, 3);
    let shape = roomy_partition(5, 200);
    c.bench_function("act/stepwise_len_200", |b| {
        b.iter(|| apply_word(black_box(&word), black_box(&shape)))
    });
    c.bench_function("act/closed_form_len_200", |b| {
        b.iter(|| apply_word_closed_form(black_box(&word), black_box(&shape)))
    });
}

fn joining(c: &mut Criterion) {
    let x: Word = "23443231".parse().unwrap();
    let y: Word = "23443132".parse().unwrap();
    c.bench_function("join/bfs_worked_pair", |b| {
        b.iter(|| equivalent_mod_j_bfs(black_box(&x), black_box(&y), DEFAULT_BUDGET))
    });
    c.bench_function("derive/worked_pair", |b| {
        b.iter(|| derive_structured(black_box(&x), black_box(&y)).unwrap())
    });
}

fn checking(c: &mut Criterion) {
    c.bench_function("classes/check_n3_l5", |b| {
        b.iter(|| check_theorem(black_box(3), black_box(5), &VerifyOptions::default()).unwrap())
    });
}

criterion_group!(benches, statistics, insertion, action, joining, checking);
criterion_main!(benches);
