use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gradalg::abgroup::{smith_normal_form, FgAbelianGroup, GroupHom, IntMatrix};
use gradalg::algebra::centroid;
use gradalg::catalog;
use gradalg::loops::{build_loop, split_loop};
use gradalg::scalar::Field;

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    let data: Vec<Vec<BigInt>> =
        (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-20i64..=20))).collect()).collect();
    IntMatrix::from_rows(cols, &data)
}

fn snf(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let small: Vec<IntMatrix> = (0..16).map(|_| random_matrix(&mut rng, 4, 4)).collect();
    let large: Vec<IntMatrix> = (0..4).map(|_| random_matrix(&mut rng, 10, 8)).collect();
    c.bench_function("snf 4x4", |b| b.iter(|| small.iter().for_each(|m| drop(smith_normal_form(black_box(m))))));
    c.bench_function("snf 10x8", |b| b.iter(|| large.iter().for_each(|m| drop(smith_normal_form(black_box(m))))));
}

fn centroids(c: &mut Criterion) {
    let q = Field::rationals();
    let a = catalog::sl2xsl2(&q);
    c.bench_function("centroid sl2 x sl2 over Q", |b| b.iter(|| centroid(black_box(&a))));
    let f = Field::cyclotomic(4);
    let g = catalog::z4z2();
    let k = catalog::klein();
    let pi = GroupHom::from_images(&g, &k, &[k.generator(0), k.generator(1)]).unwrap();
    let l = build_loop(&catalog::gamma2(&f).unwrap(), &pi).unwrap();
    c.bench_function("centroid of a Z/4 x Z/2 loop", |b| b.iter(|| centroid(black_box(l.algebra()))));
}

fn splitting(c: &mut Criterion) {
    let f = Field::cyclotomic(4);
    let g = catalog::z4z2();
    let k = catalog::klein();
    let pi = GroupHom::from_images(&g, &k, &[k.generator(0), k.generator(1)]).unwrap();
    let l = build_loop(&catalog::gamma2(&f).unwrap(), &pi).unwrap();
    c.bench_function("split Z/4 x Z/2 loop over Q(i)", |b| b.iter(|| split_loop(black_box(&l)).unwrap()));

    let q = Field::rationals();
    let c3 = FgAbelianGroup::from_invariants(0, &[2, 2, 2]);
    let pi = GroupHom::from_images(&c3, &k, &[k.generator(0), k.generator(1), k.zero()]).unwrap();
    let l = build_loop(&catalog::gamma2(&q).unwrap(), &pi).unwrap();
    c.bench_function("split (Z/2)^3 loop over Q", |b| b.iter(|| split_loop(black_box(&l)).unwrap()));
}

criterion_group!(kernels, snf, centroids, splitting);
criterion_main!(kernels);
