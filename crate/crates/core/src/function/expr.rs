// SPDX-License-Identifier: Apache-2.0

//! Boolean expressions over `B`.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor (('*')? factor)*
//! factor := primary "'"*
//! primary:= var | atom | '0' | '1' | '(' expr ')'
//! ```
//!
//! Variables are `x1..xn` unless explicit names are supplied; atoms are
//! `a0..a(k-1)`. Juxtaposed factors must be separated by whitespace or
//! parentheses (`x1 x2`, `x1(x2)`), since `x1x2` reads as one identifier.

use super::{bit_plane, var_bit, BoolFunction};
use crate::algebra::{Algebra, AlgebraElement};
use crate::bits::Bits;
use crate::error::{FunctionError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Const(AlgebraElement),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Complement(Box<Expr>),
}

/// How variable identifiers resolve to indices.
#[derive(Debug, Clone)]
pub enum VarNames {
    /// `x1..xn`, mapping `x(i+1)` to index `i`.
    Indexed(usize),
    Named(Vec<String>),
}

impl VarNames {
    pub fn len(&self) -> usize {
        match self {
            VarNames::Indexed(n) => *n,
            VarNames::Named(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn name(&self, i: usize) -> String {
        match self {
            VarNames::Indexed(_) => format!("x{}", i + 1),
            VarNames::Named(v) => v[i].clone(),
        }
    }
}

impl Expr {
    /// Interprets the tree directly at `Z ∈ B^n`.
    pub fn eval(&self, algebra: Algebra, z: &[AlgebraElement]) -> AlgebraElement {
        match self {
            Expr::Var(i) => z[*i].clone(),
            Expr::Const(c) => c.clone(),
            Expr::Sum(xs) => xs
                .iter()
                .fold(algebra.zero(), |acc, e| acc | e.eval(algebra, z)),
            Expr::Product(xs) => xs
                .iter()
                .fold(algebra.one(), |acc, e| acc & e.eval(algebra, z)),
            Expr::Complement(e) => !e.eval(algebra, z),
        }
    }

    /// Minterm canonical form, built plane-wise.
    pub fn to_function(&self, algebra: Algebra, n: usize) -> Result<BoolFunction, FunctionError> {
        // validates the size cap
        BoolFunction::zero(algebra, n)?;
        if let Some(i) = self.max_var() {
            if i >= n {
                return Err(FunctionError::VariableOutOfRange { index: i, n });
            }
        }
        Ok(BoolFunction::from_planes(
            algebra,
            n,
            self.planes(algebra, n),
        ))
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Var(i) => Some(*i),
            Expr::Const(_) => None,
            Expr::Sum(xs) | Expr::Product(xs) => xs.iter().filter_map(Expr::max_var).max(),
            Expr::Complement(e) => e.max_var(),
        }
    }

    fn planes(&self, algebra: Algebra, n: usize) -> Vec<Bits> {
        let len = 1usize << n;
        let k = algebra.atoms();
        match self {
            Expr::Var(i) => vec![bit_plane(n, var_bit(n, *i)); k],
            Expr::Const(c) => (0..k)
                .map(|a| {
                    if c.has_atom(a) {
                        Bits::ones(len)
                    } else {
                        Bits::zeros(len)
                    }
                })
                .collect(),
            Expr::Sum(xs) => {
                let mut acc = vec![Bits::zeros(len); k];
                for e in xs {
                    for (a, p) in acc.iter_mut().zip(e.planes(algebra, n)) {
                        a.or_assign(&p);
                    }
                }
                acc
            }
            Expr::Product(xs) => {
                let mut acc = vec![Bits::ones(len); k];
                for e in xs {
                    for (a, p) in acc.iter_mut().zip(e.planes(algebra, n)) {
                        a.and_assign(&p);
                    }
                }
                acc
            }
            Expr::Complement(e) => {
                let mut ps = e.planes(algebra, n);
                ps.iter_mut().for_each(Bits::not_assign);
                ps
            }
        }
    }

    pub fn parse(text: &str, names: &VarNames, algebra: Algebra) -> Result<Expr, ParseError> {
        let mut p = Parser {
            src: text,
            pos: 0,
            names,
            algebra,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

/// Parses `text` as a function of `x1..xn`.
pub fn parse(text: &str, n: usize, algebra: Algebra) -> Result<BoolFunction, ParseError> {
    let names = VarNames::Indexed(n);
    Ok(Expr::parse(text, &names, algebra)?.to_function(algebra, n)?)
}

/// Parses `text` as a function of the named variables, in the given order.
pub fn parse_named(
    text: &str,
    names: &[String],
    algebra: Algebra,
) -> Result<BoolFunction, ParseError> {
    let names = VarNames::Named(names.to_vec());
    Ok(Expr::parse(text, &names, algebra)?.to_function(algebra, names.len())?)
}

/// Parses a variable-free literal such as `a0 + a2'`.
pub fn parse_constant(text: &str, algebra: Algebra) -> Result<AlgebraElement, ParseError> {
    Ok(Expr::parse(text, &VarNames::Indexed(0), algebra)?.eval(algebra, &[]))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a VarNames,
    algebra: Algebra,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(c) if c == b'(' || c == b'_' || c.is_ascii_alphanumeric() => {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.primary()?;
        while self.peek() == Some(b'\'') {
            self.pos += 1;
            e = Expr::Complement(Box::new(e));
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let len = self.src[start..]
                    .bytes()
                    .take_while(u8::is_ascii_digit)
                    .count();
                self.pos += len;
                match &self.src[start..self.pos] {
                    "0" => Ok(Expr::Const(self.algebra.zero())),
                    "1" => Ok(Expr::Const(self.algebra.one())),
                    _ => Err(ParseError::Syntax {
                        pos: start,
                        msg: "only 0 and 1 are numeric constants".into(),
                    }),
                }
            }
            Some(c) if c == b'_' || c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self.src[start..]
                    .bytes()
                    .take_while(|b| *b == b'_' || b.is_ascii_alphanumeric())
                    .count();
                self.pos += len;
                self.resolve(start, &self.src[start..self.pos])
            }
            Some(_) => Err(self.error("expected a variable, atom, constant or `(`")),
        }
    }

    fn resolve(&self, pos: usize, name: &str) -> Result<Expr, ParseError> {
        match self.names {
            VarNames::Named(v) => {
                if let Some(i) = v.iter().position(|s| s == name) {
                    return Ok(Expr::Var(i));
                }
            }
            VarNames::Indexed(n) => {
                if let Some(i) = indexed(name, 'x') {
                    if i == 0 || i > *n {
                        return Err(ParseError::VariableOutOfRange {
                            pos,
                            name: name.into(),
                            n: *n,
                        });
                    }
                    return Ok(Expr::Var(i - 1));
                }
            }
        }
        if let Some(a) = indexed(name, 'a') {
            return self
                .algebra
                .atom(a)
                .map(Expr::Const)
                .ok_or(ParseError::AtomOutOfRange {
                    pos,
                    name: name.into(),
                    atoms: self.algebra.atoms(),
                });
        }
        Err(ParseError::UnknownIdentifier {
            pos,
            name: name.into(),
        })
    }
}

/// `x12` -> 12 for prefix `x`.
fn indexed(name: &str, prefix: char) -> Option<usize> {
    let digits = name.strip_prefix(prefix)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}
