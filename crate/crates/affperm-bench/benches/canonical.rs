use affperm::insertion::{count_reduced_words, insert_word};
use affperm::kcode::{rd, ri};
use affperm::nilcox::{h, KSchurTable};
use affperm::shapes::{to_core, BoundedPartition};
use affperm::{AffinePerm, Rank};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

/// A reduced word of length about `len`: the long cyclic staircase `... 2 1 0 k ...`.
fn long_element(k: usize, len: usize) -> AffinePerm {
    let rank = Rank::new(k).unwrap();
    let word: Vec<usize> = (0..len).map(|t| (k + 1 - t % (k + 1)) % (k + 1)).collect();
    AffinePerm::from_word(rank, &word).unwrap()
}

fn codes(c: &mut Criterion) {
    let mut g = c.benchmark_group("codes");
    for (k, len) in [(3, 64), (6, 256), (9, 1024)] {
        let x = long_element(k, len);
        g.bench_with_input(BenchmarkId::new("rd", format!("k{k}_l{}", x.length())), &x, |b, x| {
            b.iter(|| rd(black_box(x)))
        });
        g.bench_with_input(BenchmarkId::new("ri", format!("k{k}_l{}", x.length())), &x, |b, x| {
            b.iter(|| ri(black_box(x)))
        });
    }
    g.finish();
}

fn insertion(c: &mut Criterion) {
    let mut g = c.benchmark_group("insert_word");
    for (k, len) in [(3, 64), (6, 256)] {
        let x = long_element(k, len);
        let w = x.reduced_word();
        g.bench_with_input(BenchmarkId::from_parameter(format!("k{k}_l{}", w.len())), &w, |b, w| {
            b.iter(|| insert_word(x.rank(), black_box(w)).unwrap())
        });
    }
    g.finish();
    c.bench_function("count_reduced_words/k3_l12", |b| {
        let x = long_element(3, 12);
        b.iter(|| count_reduced_words(black_box(&x), 12).unwrap())
    });
}

fn algebra(c: &mut Criterion) {
    let r = Rank::new(3).unwrap();
    let (h2, h3) = (h(r, 2).unwrap(), h(r, 3).unwrap());
    c.bench_function("nil_multiply/h2_h3_k3", |b| b.iter(|| black_box(&h2).nil_multiply(&h3).unwrap()));

    let lambda = BoundedPartition::new(r, &[3, 2, 1, 1]).unwrap();
    c.bench_function("k_schur/k3_3211_cold", |b| {
        b.iter(|| KSchurTable::new(r).k_schur(black_box(&lambda)).unwrap())
    });

    let big = BoundedPartition::new(Rank::new(5).unwrap(), &[5, 5, 4, 3, 3, 2, 2, 1, 1]).unwrap();
    c.bench_function("to_core/k5_26", |b| b.iter(|| to_core(black_box(&big))));
}

criterion_group!(benches, codes, insertion, algebra);
criterion_main!(benches);
