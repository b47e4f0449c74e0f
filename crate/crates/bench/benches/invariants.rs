use criterion::{black_box, criterion_group, criterion_main, Criterion};
use monord::chains::{ell, BoundFn, DEFAULT_BUDGET};
use monord::hilbert::{self, Config};
use monord::orderings::{kb_cmp, min_type_cmp, triangle_cmp};
use monord::{ExpVec, MonomialIdeal, TermOrder};

fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(dim, gens.iter().map(|g| ExpVec::new(g.to_vec())).collect()).unwrap()
}

fn samples() -> (MonomialIdeal, MonomialIdeal) {
    let e = ideal(
        3,
        &[&[4, 0, 0], &[3, 1, 0], &[1, 2, 1], &[0, 3, 2], &[0, 0, 5], &[2, 0, 3], &[1, 1, 1]],
    );
    let f = ideal(3, &[&[3, 0, 0], &[2, 2, 0], &[0, 4, 0], &[1, 0, 2], &[0, 1, 3]]);
    (e, f)
}

fn hilbert_benches(c: &mut Criterion) {
    let (e, _) = samples();
    let cfg = Config::default();
    c.bench_function("hilbert_samuel_poly", |b| {
        b.iter(|| hilbert::hilbert_samuel_poly(black_box(&e), &cfg).unwrap())
    });
    c.bench_function("hilbert_samuel_poly_interpolated", |b| {
        b.iter(|| hilbert::hilbert_samuel_poly_interpolated(black_box(&e)))
    });
    let (p, _) = hilbert::hilbert_samuel_poly(&e, &cfg).unwrap();
    c.bench_function("psi", |b| b.iter(|| hilbert::psi(black_box(&p), 3).unwrap()));
    c.bench_function("canonical_decomposition", |b| {
        b.iter(|| hilbert::canonical_decomposition(black_box(&p), 3).unwrap())
    });
    c.bench_function("profile", |b| b.iter(|| hilbert::profile(black_box(&e), &cfg).unwrap()));
}

fn ideal_benches(c: &mut Criterion) {
    let (e, _) = samples();
    c.bench_function("irreducible_decomposition", |b| {
        b.iter(|| black_box(&e).irreducible_decomposition().unwrap())
    });
}

fn order_benches(c: &mut Criterion) {
    let (e, f) = samples();
    c.bench_function("kb_cmp", |b| {
        b.iter(|| kb_cmp(black_box(&e), black_box(&f), &TermOrder::DegLex).unwrap())
    });
    c.bench_function("triangle_cmp", |b| b.iter(|| triangle_cmp(black_box(&e), black_box(&f)).unwrap()));
    c.bench_function("min_type_cmp", |b| b.iter(|| min_type_cmp(black_box(&e), black_box(&f)).unwrap()));
}

fn chain_benches(c: &mut Criterion) {
    c.bench_function("ell_m3_affine_2_1", |b| {
        b.iter(|| ell(3, black_box(&BoundFn::affine(2u32, 1u32)), DEFAULT_BUDGET).unwrap())
    });
}

criterion_group!(benches, hilbert_benches, ideal_benches, order_benches, chain_benches);
criterion_main!(benches);
