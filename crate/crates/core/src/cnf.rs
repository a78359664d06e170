// SPDX-License-Identifier: Apache-2.0

//! DIMACS CNF input.
//!
//! A CNF `C1 ∧ .. ∧ Cm` is satisfiable iff `f = 0` is consistent for
//! `f = Σ_c Π_{l ∈ c} l'`: each product is `1` exactly where its clause is
//! falsified.

use crate::algebra::Algebra;
use crate::bits::Bits;
use crate::error::CnfError;
use crate::function::{bit_plane, var_bit, BoolFunction};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    /// Literals are nonzero and `|l| <= num_vars`; `-v` negates variable `v`.
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let parsed = match parts.as_slice() {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or_else(|| CnfError::Syntax {
                    line: line_no,
                    msg: "expected `p cnf <vars> <clauses>`".into(),
                })?);
                continue;
            }
            let (vars, _) = header.ok_or(CnfError::MissingHeader)?;
            for tok in line.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|_| CnfError::Syntax {
                    line: line_no,
                    msg: format!("bad literal `{tok}`"),
                })?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > vars {
                    return Err(CnfError::VariableOutOfRange {
                        lit,
                        line: line_no,
                        vars,
                    });
                } else {
                    current.push(lit as i32);
                }
            }
        }
        let (num_vars, declared) = header.ok_or(CnfError::MissingHeader)?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != declared {
            return Err(CnfError::ClauseCount {
                declared,
                found: clauses.len(),
            });
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(s, "{l} ").unwrap();
            }
            s.push_str("0\n");
        }
        s
    }

    /// Assignment is indexed by variable, `assignment[v-1]` for DIMACS variable `v`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    /// `f = Σ_c Π_{l∈c} l'` over the switching algebra.
    pub fn to_function(&self) -> Result<BoolFunction, CnfError> {
        let algebra = Algebra::two();
        let n = self.num_vars;
        // size cap
        BoolFunction::zero(algebra, n)?;
        let len = 1usize << n;
        let mut planes: Vec<Option<Bits>> = vec![None; n];
        let mut acc = Bits::zeros(len);
        for clause in &self.clauses {
            let mut cube = Bits::ones(len);
            for &l in clause {
                let v = l.unsigned_abs() as usize - 1;
                let p = planes[v].get_or_insert_with(|| bit_plane(n, var_bit(n, v)));
                if l > 0 {
                    cube.and_not_assign(p);
                } else {
                    cube.and_assign(p);
                }
            }
            acc.or_assign(&cube);
        }
        Ok(BoolFunction::from_planes(algebra, n, vec![acc]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction_is_one() {
        let cnf = Cnf::parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap();
        assert!(cnf.to_function().unwrap().is_one());
    }

    #[test]
    fn empty_cnf_is_zero() {
        let cnf = Cnf::parse_dimacs("c nothing\np cnf 0 0\n").unwrap();
        let f = cnf.to_function().unwrap();
        assert_eq!(f.arity(), 0);
        assert!(f.is_zero());
    }

    #[test]
    fn function_is_one_where_unsatisfied() {
        let text = "p cnf 3 3\n1 -2 0\n2 3\n0\n-1 -3 0\n";
        let cnf = Cnf::parse_dimacs(text).unwrap();
        let f = cnf.to_function().unwrap();
        for j in 0..8 {
            let a: Vec<bool> = (0..3).map(|i| (j >> var_bit(3, i)) & 1 == 1).collect();
            assert_eq!(f.coeff(j).is_one(), !cnf.is_satisfied_by(&a));
        }
        assert_eq!(Cnf::parse_dimacs(&cnf.to_dimacs()).unwrap(), cnf);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(Cnf::parse_dimacs("1 0\n"), Err(CnfError::MissingHeader));
        assert!(matches!(
            Cnf::parse_dimacs("p cnf 2 1\n3 0\n"),
            Err(CnfError::VariableOutOfRange { lit: 3, .. })
        ));
        assert!(matches!(
            Cnf::parse_dimacs("p cnf 2 2\n1 0\n"),
            Err(CnfError::ClauseCount {
                declared: 2,
                found: 1
            })
        ));
        assert!(matches!(
            Cnf::parse_dimacs("p cnf x 1\n"),
            Err(CnfError::Syntax { line: 1, .. })
        ));
    }
}
