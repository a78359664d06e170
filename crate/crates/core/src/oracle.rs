// SPDX-License-Identifier: Apache-2.0

//! Naive reference implementations.
//!
//! These enumerate candidates directly and share nothing with the solver
//! beyond function evaluation. They exist to cross-check the solver in tests
//! and in the CLI `verify` command.

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::OracleError;
use crate::function::{point, BoolFunction};
use crate::orthonormal::OrthonormalSet;

/// Enumeration caps, as base-2 logarithms of the candidate count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// `k·n` for consistency over `(2^k)^n`.
    pub max_point_bits: u32,
    /// `k·m` for constant `m`-tuples in the class search.
    pub max_tuple_bits: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_point_bits: 24,
            max_tuple_bits: 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub consistent: bool,
    /// First zero in enumeration order, present iff consistent.
    pub witness: Option<Vec<AlgebraElement>>,
    pub checked_points: u64,
}

/// `Z ∈ B^n` with coordinate `i` read from bits `[k(n-1-i), k(n-i))` of `code`.
fn decode_point(algebra: Algebra, n: usize, code: u64) -> Vec<AlgebraElement> {
    let k = algebra.atoms();
    if k == 0 {
        return vec![algebra.zero(); n];
    }
    let mask = (1u64 << k) - 1;
    (0..n)
        .map(|i| algebra.from_mask((code >> (k * (n - 1 - i))) & mask))
        .collect()
}

/// Searches all of `B^n` for a zero of `f`.
///
/// Over the switching algebra this is the enumeration of `{0,1}^n`.
pub fn brute_consistency(f: &BoolFunction, budget: Budget) -> Result<OracleReport, OracleError> {
    let algebra = f.algebra();
    let n = f.arity();
    let bits = algebra.atoms() * n;
    if bits > budget.max_point_bits as usize {
        return Err(OracleError::BudgetExceeded {
            what: "B^n",
            size: format!("2^{bits}"),
            budget: format!("2^{}", budget.max_point_bits),
        });
    }
    let total = 1u64 << bits;
    for code in 0..total {
        let z = decode_point(algebra, n, code);
        let v = f.evaluate(&z).expect("point has the function's arity");
        if v.is_zero() {
            return Ok(OracleReport {
                consistent: true,
                witness: Some(z),
                checked_points: code + 1,
            });
        }
    }
    Ok(OracleReport {
        consistent: false,
        witness: None,
        checked_points: total,
    })
}

/// Searches all constant tuples `(a_1..a_m)` for `Σ a_i φ_i = f`, comparing
/// at every 0/1 point.
pub fn brute_class_membership(
    f: &BoolFunction,
    phi: &OrthonormalSet,
    budget: Budget,
) -> Result<bool, OracleError> {
    if f.algebra() != phi.algebra() || f.arity() != phi.arity() {
        return Err(OracleError::ShapeMismatch);
    }
    let algebra = f.algebra();
    let (k, m, n) = (algebra.atoms(), phi.order(), f.arity());
    let bits = k * m;
    if bits > budget.max_tuple_bits as usize {
        return Err(OracleError::BudgetExceeded {
            what: "constant tuples",
            size: format!("2^{bits}"),
            budget: format!("2^{}", budget.max_tuple_bits),
        });
    }
    let members = phi.members();
    let points: Vec<Vec<AlgebraElement>> = (0..1usize << n).map(|j| point(algebra, n, j)).collect();
    let targets: Vec<AlgebraElement> = points
        .iter()
        .map(|a| f.evaluate(a).expect("arity checked"))
        .collect();
    let member_values: Vec<Vec<AlgebraElement>> = points
        .iter()
        .map(|a| {
            members
                .iter()
                .map(|m| m.evaluate(a).expect("arity checked"))
                .collect()
        })
        .collect();
    'tuples: for code in 0..1u64 << bits {
        let consts = decode_point(algebra, m, code);
        for (target, phis) in targets.iter().zip(&member_values) {
            let value = consts
                .iter()
                .zip(phis)
                .fold(algebra.zero(), |acc, (a, p)| acc | (a & p));
            if &value != target {
                continue 'tuples;
            }
        }
        return Ok(true);
    }
    Ok(false)
}
