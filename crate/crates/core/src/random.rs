// SPDX-License-Identifier: Apache-2.0

//! Seeded instance generators for tests, benchmarks and `verify --seed`.

use crate::algebra::{Algebra, AlgebraElement};
use crate::bits::Bits;
use crate::cnf::Cnf;
use crate::function::{BoolFunction, Expr};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, algebra: Algebra) -> AlgebraElement {
    let k = algebra.atoms();
    let words: Vec<u64> = (0..k.div_ceil(64)).map(|_| rng.random()).collect();
    algebra.element(Bits::from_words(k, &words))
}

/// Uniform random coefficient table.
pub fn random_function<R: Rng + ?Sized>(rng: &mut R, algebra: Algebra, n: usize) -> BoolFunction {
    let len = 1usize << n;
    let planes = (0..algebra.atoms())
        .map(|_| {
            let words: Vec<u64> = (0..len.div_ceil(64)).map(|_| rng.random()).collect();
            Bits::from_words(len, &words)
        })
        .collect();
    BoolFunction::from_planes(algebra, n, planes)
}

pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, algebra: Algebra, n: usize, depth: u32) -> Expr {
    if depth == 0 || rng.random_bool(0.25) {
        return if n > 0 && rng.random_bool(0.7) {
            Expr::Var(rng.random_range(0..n))
        } else {
            Expr::Const(random_element(rng, algebra))
        };
    }
    let arity = rng.random_range(2..=3);
    let op = rng.random_range(0..3);
    if op == 2 {
        return Expr::Complement(Box::new(random_expr(rng, algebra, n, depth - 1)));
    }
    let kids: Vec<Expr> = (0..arity)
        .map(|_| random_expr(rng, algebra, n, depth - 1))
        .collect();
    match op {
        0 => Expr::Sum(kids),
        _ => Expr::Product(kids),
    }
}

/// Random partition of `0..2^n` into exactly `m` nonempty blocks.
pub fn random_partition<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Vec<Vec<usize>> {
    let len = 1usize << n;
    assert!(
        m >= 1 && m <= len,
        "cannot split {len} indices into {m} blocks"
    );
    let mut idx: Vec<usize> = (0..len).collect();
    idx.shuffle(rng);
    let mut blocks = vec![Vec::new(); m];
    for (pos, &j) in idx.iter().enumerate() {
        let b = if pos < m { pos } else { rng.random_range(0..m) };
        blocks[b].push(j);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks
}

/// Random ON system of order `m`: every atom goes to exactly one member.
pub fn random_on_tuple<R: Rng + ?Sized>(
    rng: &mut R,
    algebra: Algebra,
    m: usize,
) -> Vec<AlgebraElement> {
    let k = algebra.atoms();
    let mut bits = vec![Bits::zeros(k); m];
    for a in 0..k {
        bits[rng.random_range(0..m)].set(a, true);
    }
    bits.into_iter().map(|b| algebra.element(b)).collect()
}

fn random_clause<R: Rng + ?Sized>(rng: &mut R, n: usize, width: usize) -> Vec<i32> {
    let vars: Vec<usize> = rand::seq::index::sample(rng, n, width.min(n)).into_vec();
    vars.into_iter()
        .map(|v| {
            let l = v as i32 + 1;
            if rng.random_bool(0.5) {
                l
            } else {
                -l
            }
        })
        .collect()
}

/// Uniform random 3-CNF with distinct variables per clause.
pub fn random_3cnf<R: Rng + ?Sized>(rng: &mut R, n: usize, clauses: usize) -> Cnf {
    Cnf {
        num_vars: n,
        clauses: (0..clauses).map(|_| random_clause(rng, n, 3)).collect(),
    }
}

/// Random 3-CNF satisfied by a hidden assignment, which is returned too.
pub fn planted_3cnf<R: Rng + ?Sized>(rng: &mut R, n: usize, clauses: usize) -> (Cnf, Vec<bool>) {
    let hidden: Vec<bool> = (0..n).map(|_| rng.random()).collect();
    let mut out = Vec::with_capacity(clauses);
    while out.len() < clauses {
        let c = random_clause(rng, n, 3);
        if c.iter()
            .any(|&l| hidden[l.unsigned_abs() as usize - 1] == (l > 0))
        {
            out.push(c);
        }
    }
    (
        Cnf {
            num_vars: n,
            clauses: out,
        },
        hidden,
    )
}
