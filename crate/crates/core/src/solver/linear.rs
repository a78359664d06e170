// SPDX-License-Identifier: Apache-2.0

//! Special equations with explicit solutions.

use super::Assignment;
use crate::algebra::{product, sum, Algebra, AlgebraElement};
use crate::error::SolverError;
use crate::function::{var_bit, BoolFunction};
use crate::orthonormal::OrthonormalSet;

/// `Δ_i`: the ON tuple of order `n` with `1` in place `i` and `0` elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitTuple {
    pub index: usize,
    pub order: usize,
}

impl UnitTuple {
    pub fn new(index: usize, order: usize) -> Option<Self> {
        (index < order).then_some(UnitTuple { index, order })
    }

    pub fn elements(&self, algebra: Algebra) -> Vec<AlgebraElement> {
        (0..self.order)
            .map(|i| algebra.constant(i == self.index))
            .collect()
    }
}

/// `a_i = f(Δ_i)`: an ON tuple `Z` solves `f(Z) = 0` only if `Σ a_i z_i = 0`.
pub fn associated_linear_coefficients(f: &BoolFunction) -> Vec<AlgebraElement> {
    let n = f.arity();
    (0..n).map(|i| f.coeff(1 << var_bit(n, i))).collect()
}

/// Pairwise meets are zero and the join is one.
pub fn is_on_system(algebra: Algebra, xs: &[AlgebraElement]) -> bool {
    let mut seen = algebra.zero();
    for x in xs {
        if !(&seen & x).is_zero() {
            return false;
        }
        seen.join_assign(x);
    }
    seen.is_one()
}

/// Pairwise joins are one and the meet is zero.
pub fn is_coon_system(algebra: Algebra, xs: &[AlgebraElement]) -> bool {
    let comps: Vec<_> = xs.iter().map(AlgebraElement::complement).collect();
    is_on_system(algebra, &comps)
}

fn check_permutation(sigma: &[usize], n: usize) -> Result<(), SolverError> {
    let mut seen = vec![false; n];
    if sigma.len() != n {
        return Err(SolverError::InvalidPermutation(n));
    }
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(SolverError::InvalidPermutation(n));
        }
    }
    Ok(())
}

/// ON solution of `Σ a_i χ_i = 0`, which exists iff `Π a_i = 0`.
///
/// With the visiting order `σ` (identity by default) the solution is
/// `z_σ(1) = a_σ(1)'` and `z_σ(i) = a_σ(1)..a_σ(i-1) a_σ(i)'`. Over the
/// switching algebra it selects the first vanishing coefficient in `σ` order.
pub fn solve_linear_on(
    a: &[AlgebraElement],
    sigma: Option<&[usize]>,
) -> Result<Option<Vec<AlgebraElement>>, SolverError> {
    let n = a.len();
    let first = a.first().ok_or(SolverError::ArityMismatch {
        expected: 1,
        got: 0,
    })?;
    let algebra =
        Algebra::new(first.atoms()).map_err(|_| SolverError::WrongAlgebra(first.atoms()))?;
    let identity: Vec<usize>;
    let order = match sigma {
        Some(s) => {
            check_permutation(s, n)?;
            s
        }
        None => {
            identity = (0..n).collect();
            &identity
        }
    };
    if !product(algebra, a).is_zero() {
        return Ok(None);
    }
    let mut z = vec![algebra.zero(); n];
    let mut prefix = algebra.one();
    for &i in order {
        z[i] = &prefix & &a[i].complement();
        prefix.meet_assign(&a[i]);
    }
    Ok(Some(z))
}

/// Co-ON solution of `Π (b_i + ξ_i) = 1`, which exists iff `Σ b_i = 1`:
/// `ξ_1 = b_1'` and `ξ_i = b_1 + .. + b_(i-1) + b_i'`.
pub fn solve_dual_linear_coon(b: &[AlgebraElement]) -> Option<Vec<AlgebraElement>> {
    let first = b.first()?;
    let algebra = Algebra::new(first.atoms()).ok()?;
    if !sum(algebra, b).is_one() {
        return None;
    }
    let mut prefix = algebra.zero();
    Some(
        b.iter()
            .map(|bi| {
                let xi = &prefix | &bi.complement();
                prefix.join_assign(bi);
                xi
            })
            .collect(),
    )
}

/// Solution of the minterm system `μ_j(X) = c_j` for an ON tuple `c`:
/// `x_i = Σ_{j : μ_j ≤ x_i} c_j`.
fn minterm_system_solution(algebra: Algebra, n: usize, c: &[AlgebraElement]) -> Assignment {
    let values = (0..n)
        .map(|i| {
            let bit = var_bit(n, i);
            c.iter()
                .enumerate()
                .filter(|(j, _)| (j >> bit) & 1 == 1)
                .fold(algebra.zero(), |acc, (_, cj)| acc | cj.clone())
        })
        .collect();
    Assignment::from_tuple(values)
}

/// Solves `Σ_j α_j μ_j(X) = 0`, consistent iff `Π α_j = 0`.
///
/// The minterm values `β` are the ON solution of the associated linear
/// equation with prefix products starting at `α_0`.
pub fn solve_minterm_equation(alpha: &[AlgebraElement]) -> Result<Option<Assignment>, SolverError> {
    let len = alpha.len();
    if len == 0 || !len.is_power_of_two() {
        return Err(SolverError::LengthNotPowerOfTwo(len));
    }
    let n = len.trailing_zeros() as usize;
    let algebra =
        Algebra::new(alpha[0].atoms()).map_err(|_| SolverError::WrongAlgebra(alpha[0].atoms()))?;
    Ok(solve_linear_on(alpha, None)?.map(|beta| minterm_system_solution(algebra, n, &beta)))
}

/// Which minterm of each block carries the block's constant.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum Representatives {
    /// Smallest minterm index of every block.
    #[default]
    Smallest,
    /// One minterm index per block, in block order.
    Explicit(Vec<usize>),
}

/// Solves `φ_i(X) = β_i`, consistent iff `β` is an ON tuple of order `m`.
///
/// Each block puts `β_i` on its representative minterm and `0` on the rest;
/// the resulting minterm system has the solution `x_i = Σ_{j: μ_j ≤ x_i} α_j`.
pub fn solve_on_system(
    phi: &OrthonormalSet,
    beta: &[AlgebraElement],
    reps: &Representatives,
) -> Result<Option<Assignment>, SolverError> {
    let m = phi.order();
    if beta.len() != m {
        return Err(SolverError::ArityMismatch {
            expected: m,
            got: beta.len(),
        });
    }
    let algebra = phi.algebra();
    if let Some(b) = beta.iter().find(|b| b.atoms() != algebra.atoms()) {
        return Err(crate::error::AlgebraError::Mismatch {
            left: algebra.atoms(),
            right: b.atoms(),
        }
        .into());
    }
    let chosen: Vec<usize> = match reps {
        Representatives::Smallest => phi.blocks().iter().map(|b| b[0]).collect(),
        Representatives::Explicit(v) => {
            if v.len() != m {
                return Err(SolverError::ArityMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
            for (i, &k) in v.iter().enumerate() {
                if phi.blocks()[i].binary_search(&k).is_err() {
                    return Err(SolverError::BadRepresentative { block: i, index: k });
                }
            }
            v.clone()
        }
    };
    if !is_on_system(algebra, beta) {
        return Ok(None);
    }
    let n = phi.arity();
    let mut alpha = vec![algebra.zero(); 1 << n];
    for (i, &k) in chosen.iter().enumerate() {
        alpha[k] = beta[i].clone();
    }
    Ok(Some(minterm_system_solution(algebra, n, &alpha)))
}
