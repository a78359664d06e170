// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmarks for block elimination and the supporting kernels.

use criterion::{BenchmarkId, Criterion};
use orthoelim::random::{planted_3cnf, random_function};
use orthoelim::solver::consecutive_split;
use orthoelim::{
    brute_consistency, eliminate_blocks, extract_solution, Algebra, Budget, PhiPolicy,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn benchmarks(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(1);

    let mut group = c.benchmark_group("planted_3cnf_n20");
    let (cnf, _) = planted_3cnf(&mut rng, 20, 85);
    let f = cnf.to_function().expect("20 variables fit");
    for size in [1usize, 2, 4, 6] {
        let split = consecutive_split(20, size);
        group.bench_with_input(BenchmarkId::new("solve", size), &split, |b, split| {
            b.iter(|| {
                let t = eliminate_blocks(&f, split, PhiPolicy::Minterm).unwrap();
                extract_solution(&t).unwrap()
            })
        });
    }
    group.finish();

    let mut group = c.benchmark_group("general_algebra_n8");
    for k in [1usize, 8, 64] {
        let alg = Algebra::new(k).unwrap();
        let g = random_function(&mut rng, alg, 8);
        let split = consecutive_split(8, 4);
        group.bench_with_input(BenchmarkId::new("eliminate", k), &g, |b, g| {
            b.iter(|| eliminate_blocks(g, &split, PhiPolicy::Minterm).unwrap())
        });
    }
    group.finish();

    let g = random_function(&mut rng, Algebra::new(2).unwrap(), 8);
    c.bench_function("oracle_2^2_n8", |b| {
        b.iter(|| brute_consistency(&g, Budget::default()).unwrap())
    });
}
