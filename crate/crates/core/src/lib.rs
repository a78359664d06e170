// SPDX-License-Identifier: Apache-2.0

//! Boolean equations `f(X) = 0` over finite Boolean algebras.
//!
//! Functions are held in minterm canonical form. Consistency is decided by
//! expanding `f` in orthonormal (ON) sets of functions and eliminating
//! blocks of variables: when every coefficient of the expansion in `Φ` is a
//! constant, `f = 0` is consistent iff the product of the coefficients is
//! `0`, and a solution is rebuilt by back-substitution.
//!
//! ```
//! use orthoelim::{parse_named, Algebra, eliminate_blocks, extract_solution, PhiPolicy};
//!
//! let names: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
//! let f = parse_named("x + x y' z + x y + x' z'", &names, Algebra::two()).unwrap();
//! let trace = eliminate_blocks(&f, &[vec![1, 2], vec![0]], PhiPolicy::Minterm).unwrap();
//! assert!(trace.is_consistent());
//! let model = extract_solution(&trace).unwrap();
//! assert!(f.evaluate(&model.to_tuple().unwrap()).unwrap().is_zero());
//! ```

pub mod algebra;
pub mod bits;
pub mod cnf;
pub mod error;
pub mod function;
pub mod oracle;
pub mod orthonormal;
pub mod random;
pub mod solver;

pub use algebra::{Algebra, AlgebraElement, Limits};
pub use cnf::Cnf;
pub use error::{
    AlgebraError, CnfError, FunctionError, OnError, OracleError, ParseError, SolverError,
};
pub use function::{parse, parse_named, BoolFunction, Exponent, Expr, Term, VarNames};
pub use oracle::{brute_class_membership, brute_consistency, Budget, OracleReport};
pub use orthonormal::{
    coefficient_interval, expand, expand_in_terms, is_in_class, ladder_terms, ClassMembership,
    CoefficientInterval, CoefficientPolicy, Expansion, OrthonormalSet,
};
pub use solver::{
    b0_coefficient, b0_consistency, block_eliminant, consistency_on_class, eliminate_blocks,
    eliminate_variable, extract_solution, necessary_condition, solve_dual_linear_coon,
    solve_linear_on, solve_minterm_equation, solve_on_system, Assignment, B0Coefficient, B0Verdict,
    ClassCertificate, EliminationTrace, PhiPolicy, Representatives, Stage, Target, UnitTuple,
};
