// SPDX-License-Identifier: Apache-2.0

//! Consistency tests and constructive solvers.
//!
//! - [`linear`]: ON solutions of `Σ a_i χ_i = 0`, co-ON solutions of the
//!   dual equation, minterm equations and ON function systems `φ_i(X) = β_i`.
//! - [`class`]: the constant-coefficient consistency test with witness
//!   construction, the general necessary condition, and the tautology tests
//!   over the switching algebra.
//! - [`elimination`]: single-variable and block elimination, elimination
//!   traces and back-substitution.

pub mod class;
pub mod elimination;
pub mod linear;

pub use class::{
    b0_coefficient, b0_consistency, consistency_on_class, necessary_condition, B0Coefficient,
    B0Verdict, ClassCertificate, Target,
};
pub use elimination::{
    block_eliminant, consecutive_split, eliminate_blocks, eliminate_sequentially,
    eliminate_variable, extract_solution, BlockStep, EliminationTrace, PhiPolicy, Stage,
};
pub use linear::{
    associated_linear_coefficients, is_coon_system, is_on_system, solve_dual_linear_coon,
    solve_linear_on, solve_minterm_equation, solve_on_system, Representatives, UnitTuple,
};

use crate::algebra::AlgebraElement;

/// Values for variables `0..n`, filled in as a solver proceeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<Option<AlgebraElement>>,
}

impl Assignment {
    pub fn new(n: usize) -> Self {
        Assignment {
            values: vec![None; n],
        }
    }

    pub fn from_tuple(values: Vec<AlgebraElement>) -> Self {
        Assignment {
            values: values.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, var: usize) -> Option<&AlgebraElement> {
        self.values.get(var).and_then(Option::as_ref)
    }

    pub fn set(&mut self, var: usize, value: AlgebraElement) {
        self.values[var] = Some(value);
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// All values in variable order, if every variable is assigned.
    pub fn to_tuple(&self) -> Option<Vec<AlgebraElement>> {
        self.values.iter().cloned().collect()
    }

    /// Values of the given variables, if all are assigned.
    pub fn project(&self, vars: &[usize]) -> Option<Vec<AlgebraElement>> {
        vars.iter().map(|&v| self.get(v).cloned()).collect()
    }
}
