// SPDX-License-Identifier: Apache-2.0

use super::{var_bit, BoolFunction};
use crate::algebra::Algebra;
use crate::bits::Bits;
use crate::error::FunctionError;
use std::fmt;

/// Exponent of a variable in a term: `x^-1 = 1`, `x^0 = x'`, `x^1 = x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exponent {
    Free,
    Neg,
    Pos,
}

impl Exponent {
    pub fn from_i8(e: i8) -> Option<Self> {
        match e {
            -1 => Some(Exponent::Free),
            0 => Some(Exponent::Neg),
            1 => Some(Exponent::Pos),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Exponent::Free => -1,
            Exponent::Neg => 0,
            Exponent::Pos => 1,
        }
    }
}

/// A cube `x1^e1 .. xn^en`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exps: Vec<Exponent>,
}

impl Term {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Term { exps }
    }

    pub fn from_exponents(exps: &[i8]) -> Option<Self> {
        exps.iter()
            .map(|&e| Exponent::from_i8(e))
            .collect::<Option<Vec<_>>>()
            .map(Term::new)
    }

    /// The minterm `μ_j` in `n` variables.
    pub fn minterm(n: usize, j: usize) -> Self {
        Term::new(
            (0..n)
                .map(|i| {
                    if (j >> var_bit(n, i)) & 1 == 1 {
                        Exponent::Pos
                    } else {
                        Exponent::Neg
                    }
                })
                .collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    /// Minterm indices where the term is 1: a subcube of `{0,1}^n`.
    pub fn support(&self) -> Bits {
        let n = self.exps.len();
        let (mut care, mut val) = (0usize, 0usize);
        for (i, e) in self.exps.iter().enumerate() {
            let b = 1 << var_bit(n, i);
            match e {
                Exponent::Free => {}
                Exponent::Neg => care |= b,
                Exponent::Pos => {
                    care |= b;
                    val |= b;
                }
            }
        }
        Bits::from_fn(1 << n, |j| j & care == val)
    }

    pub fn to_function(&self, algebra: Algebra) -> Result<BoolFunction, FunctionError> {
        BoolFunction::zero(algebra, self.arity())?;
        Ok(BoolFunction::indicator(
            algebra,
            self.arity(),
            &self.support(),
        ))
    }
}

/// Writes literals as `x1 x2'`, or `1` for the empty product.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if *e == Exponent::Free {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if *e == Exponent::Neg {
                write!(f, "'")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
