// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra with {atoms} atoms exceeds the configured limit of {limit}")]
    TooManyAtoms { atoms: usize, limit: usize },
    #[error("operands come from different algebras (2^{left} and 2^{right})")]
    Mismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at byte {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("variable `{name}` at byte {pos} is outside x1..x{n}")]
    VariableOutOfRange { pos: usize, name: String, n: usize },
    #[error("atom `{name}` at byte {pos} is outside a0..a{}", .atoms.saturating_sub(1))]
    AtomOutOfRange {
        pos: usize,
        name: String,
        atoms: usize,
    },
    #[error(transparent)]
    Function(#[from] FunctionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionError {
    #[error("{n} variables exceeds the configured limit of {limit}")]
    TooManyVariables { n: usize, limit: usize },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("expected a table of {expected} coefficients, got {got}")]
    TableLength { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OnError {
    /// Members are numbered from 1.
    #[error("members {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("members do not sum to 1 (minterm {missing} is not covered)")]
    NotNormal { missing: usize },
    #[error("member {0} has a coefficient outside {{0, 1}}")]
    NonIndicator(usize),
    #[error("member {0} is the zero function")]
    EmptyMember(usize),
    #[error("ON set must have at least one member")]
    NoMembers,
    #[error("members disagree on variable count or algebra")]
    ShapeMismatch,
    #[error("minterm index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indicator functions are undefined over the one-element algebra")]
    DegenerateAlgebra,
    #[error("ON-set format: {0}")]
    Format(String),
    #[error(transparent)]
    Function(#[from] FunctionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("permutation is not a bijection of 0..{0}")]
    InvalidPermutation(usize),
    #[error("coefficient list length {0} is not a power of two")]
    LengthNotPowerOfTwo(usize),
    #[error("expected {expected} constants, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("function is not in the constant-coefficient class of the ON set (member {member})")]
    InapplicableClass { member: usize },
    #[error(
        "member {member} admits no coefficient over the remaining variables (empty interval at point {point})"
    )]
    ClassViolation { member: usize, point: usize },
    #[error("block split does not partition the variables: {0}")]
    InvalidSplit(String),
    #[error("elimination trace is inconsistent; no solution to extract")]
    InconsistentTrace,
    #[error("operation requires the two-element algebra, got 2^{0}")]
    WrongAlgebra(usize),
    #[error("representative {index} is not in block {block}")]
    BadRepresentative { block: usize, index: usize },
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    On(#[from] OnError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("brute force over {what} exceeds the budget ({size} > {budget})")]
    BudgetExceeded {
        what: &'static str,
        size: String,
        budget: String,
    },
    #[error("ON set and function disagree on variable count or algebra")]
    ShapeMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCount { declared: usize, found: usize },
    #[error("literal {lit} on line {line} exceeds the declared {vars} variables")]
    VariableOutOfRange { lit: i64, line: usize, vars: usize },
    #[error(transparent)]
    Function(#[from] FunctionError),
}
