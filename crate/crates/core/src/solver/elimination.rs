// SPDX-License-Identifier: Apache-2.0

//! Block elimination and back-substitution.
//!
//! Splitting the variables as `X = (X1, X2)`, `f` is expanded in an ON set
//! `Φ(X1)` with coefficients that are functions of `X2` only. The equation
//! `f = 0` is consistent iff the eliminant `Π α_φ(X2) = 0` is, so repeating
//! over a split `X1..Xr` ends in a constant that decides consistency.

use std::fmt::Write as _;

use super::linear::{solve_linear_on, solve_on_system, Representatives};
use super::Assignment;
use crate::algebra::{Algebra, AlgebraElement};
use crate::error::SolverError;
use crate::function::{digest_all, BoolFunction};
use crate::orthonormal::{ladder_terms, OrthonormalSet};

/// `f(x_i = 0) f(x_i = 1)`; the result no longer depends on `x_i`.
pub fn eliminate_variable(f: &BoolFunction, i: usize) -> Result<BoolFunction, SolverError> {
    Ok(f.cofactor(i, false)?.meet(&f.cofactor(i, true)?))
}

/// Eliminates every variable one at a time: the meet of `f` over all 0/1
/// points, which is `0` iff `f = 0` is consistent.
pub fn eliminate_sequentially(f: &BoolFunction) -> Result<AlgebraElement, SolverError> {
    let mut g = f.clone();
    for i in 0..f.arity() {
        g = eliminate_variable(&g, i)?;
    }
    Ok(g.coeff(0))
}

/// ON set used on each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhiPolicy {
    /// All `2^b` minterms of the block. Always applicable.
    #[default]
    Minterm,
    /// The `b + 1` terms `x1', x1 x2', .., x1..xb`. Fails on functions
    /// outside their class.
    Ladder,
}

impl PhiPolicy {
    pub fn on_set(self, algebra: Algebra, block_len: usize) -> Result<OrthonormalSet, SolverError> {
        Ok(match self {
            PhiPolicy::Minterm => OrthonormalSet::minterm_set(algebra, block_len)?,
            PhiPolicy::Ladder => OrthonormalSet::from_terms(&ladder_terms(block_len), algebra)?,
        })
    }
}

/// One expansion step: `f = Σ α_i(X2) φ_i(X1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStep {
    /// `α_i` over the remaining variables, in their original relative order.
    pub coefficients: Vec<BoolFunction>,
    pub eliminant: BoolFunction,
}

/// Expands `f` in `phi` over the variables `block` (positions in `f`) and
/// multiplies the coefficients.
///
/// Each coefficient is the join of the generalized cofactors over its
/// member's minterms. For a non-minterm `phi` the expansion exists only if
/// that join is below the meet at every 0/1 point of the remaining variables.
pub fn block_eliminant(
    f: &BoolFunction,
    block: &[usize],
    phi: &OrthonormalSet,
) -> Result<BlockStep, SolverError> {
    if phi.algebra() != f.algebra() {
        return Err(SolverError::WrongAlgebra(phi.algebra().atoms()));
    }
    if phi.arity() != block.len() {
        return Err(SolverError::ArityMismatch {
            expected: block.len(),
            got: phi.arity(),
        });
    }
    let chunks = f.block_cofactors(block)?;
    let r = f.arity() - block.len();
    let mut coefficients = Vec::with_capacity(phi.order());
    let mut eliminant = BoolFunction::one(f.algebra(), r)?;
    for (i, members) in phi.blocks().iter().enumerate() {
        let mut low = chunks[members[0]].clone();
        let mut high = low.clone();
        for &j in &members[1..] {
            low = low.join(&chunks[j]);
            high = high.meet(&chunks[j]);
        }
        if members.len() > 1 && !low.leq(&high) {
            let excess = low.meet(&high.complement());
            let point = (0..excess.table_len())
                .find(|&p| !excess.coeff(p).is_zero())
                .expect("nonzero excess has a nonzero coefficient");
            return Err(SolverError::ClassViolation {
                member: i + 1,
                point,
            });
        }
        eliminant = eliminant.meet(&low);
        coefficients.push(low);
    }
    Ok(BlockStep {
        coefficients,
        eliminant,
    })
}

/// One stage of an elimination run, with variables named by their index in
/// the source function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub block: Vec<usize>,
    pub remaining: Vec<usize>,
    pub phi: OrthonormalSet,
    pub coefficients: Vec<BoolFunction>,
    /// Function of `remaining`.
    pub eliminant: BoolFunction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationTrace {
    pub source: BoolFunction,
    pub policy: PhiPolicy,
    pub stages: Vec<Stage>,
}

impl EliminationTrace {
    pub fn algebra(&self) -> Algebra {
        self.source.algebra()
    }

    pub fn arity(&self) -> usize {
        self.source.arity()
    }

    /// The constant left after the last stage.
    pub fn final_constant(&self) -> AlgebraElement {
        match self.stages.last() {
            Some(s) => s.eliminant.coeff(0),
            None => self.source.coeff(0),
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.final_constant().is_zero()
    }

    /// One line per stage. `names` may be empty, giving `x1..xn`.
    pub fn report(&self, names: &[String]) -> String {
        let name = |v: usize| {
            names
                .get(v)
                .cloned()
                .unwrap_or_else(|| format!("x{}", v + 1))
        };
        let mut out = String::new();
        for (k, s) in self.stages.iter().enumerate() {
            let block: Vec<String> = s.block.iter().map(|&v| name(v)).collect();
            let _ = writeln!(
                out,
                "stage {}: block {{{}}} |phi|={} coeffs={} eliminant vars={} digest={}",
                k + 1,
                block.join(","),
                s.phi.order(),
                digest_all(&s.coefficients),
                s.remaining.len(),
                s.eliminant.digest(),
            );
        }
        let _ = writeln!(out, "final constant: {}", self.final_constant());
        out
    }
}

/// Consecutive blocks of at most `size` variables.
pub fn consecutive_split(n: usize, size: usize) -> Vec<Vec<usize>> {
    let size = size.max(1);
    (0..n)
        .step_by(size)
        .map(|s| (s..(s + size).min(n)).collect())
        .collect()
}

fn check_split(n: usize, split: &[Vec<usize>]) -> Result<(), SolverError> {
    let mut seen = vec![false; n];
    for (b, block) in split.iter().enumerate() {
        if block.is_empty() {
            return Err(SolverError::InvalidSplit(format!(
                "block {} is empty",
                b + 1
            )));
        }
        for &v in block {
            if v >= n {
                return Err(SolverError::InvalidSplit(format!(
                    "variable {} out of range for {n} variables",
                    v + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(SolverError::InvalidSplit(format!(
                    "variable {} appears twice",
                    v + 1
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(SolverError::InvalidSplit(format!(
            "variable {} is not covered",
            v + 1
        )));
    }
    Ok(())
}

/// Eliminates the blocks of `split` in order. Consistent iff the final
/// constant is `0`.
pub fn eliminate_blocks(
    f: &BoolFunction,
    split: &[Vec<usize>],
    policy: PhiPolicy,
) -> Result<EliminationTrace, SolverError> {
    check_split(f.arity(), split)?;
    let mut current = f.clone();
    let mut vars: Vec<usize> = (0..f.arity()).collect();
    let mut stages = Vec::with_capacity(split.len());
    for block in split {
        let local: Vec<usize> = block
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("split validated"))
            .collect();
        let phi = policy.on_set(f.algebra(), block.len())?;
        let step = block_eliminant(&current, &local, &phi)?;
        vars.retain(|v| !block.contains(v));
        current = step.eliminant.clone();
        stages.push(Stage {
            block: block.clone(),
            remaining: vars.clone(),
            phi,
            coefficients: step.coefficients,
            eliminant: step.eliminant,
        });
    }
    Ok(EliminationTrace {
        source: f.clone(),
        policy,
        stages,
    })
}

/// Back-substitution through a consistent trace.
///
/// Walking the stages from last to first, the coefficients are evaluated at
/// the values already fixed, the linear ON equation is solved and the block
/// is set by solving the ON system. The linear step visits members from last
/// to first, so over the switching algebra it picks the vanishing
/// coefficient with the largest index.
pub fn extract_solution(trace: &EliminationTrace) -> Result<Assignment, SolverError> {
    if !trace.is_consistent() {
        return Err(SolverError::InconsistentTrace);
    }
    let mut assignment = Assignment::new(trace.arity());
    for stage in trace.stages.iter().rev() {
        let fixed = assignment
            .project(&stage.remaining)
            .expect("later stages fix the remaining variables");
        let a = stage
            .coefficients
            .iter()
            .map(|c| c.evaluate(&fixed))
            .collect::<Result<Vec<_>, _>>()?;
        let sigma: Vec<usize> = (0..a.len()).rev().collect();
        let beta = solve_linear_on(&a, Some(&sigma))?.ok_or(SolverError::InconsistentTrace)?;
        let z = solve_on_system(&stage.phi, &beta, &Representatives::Smallest)?
            .and_then(|z| z.to_tuple())
            .expect("an ON solution always yields a total assignment");
        for (&v, value) in stage.block.iter().zip(z) {
            assignment.set(v, value);
        }
    }
    debug_assert!(trace
        .source
        .evaluate(&assignment.to_tuple().expect("every variable is in a block"))
        .map(|v| v.is_zero())
        .unwrap_or(false));
    Ok(assignment)
}
