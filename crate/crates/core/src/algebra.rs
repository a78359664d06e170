// SPDX-License-Identifier: Apache-2.0

//! Finite Boolean algebras in powerset form.
//!
//! Every finite Boolean algebra is isomorphic to the powerset of its atoms,
//! so an algebra is fixed by its atom count `k` and an element is a subset of
//! `{a0, .., a(k-1)}`. Addition is union, multiplication is intersection and
//! complement is taken relative to the full atom set. `k = 1` is the
//! two-element switching algebra; `k = 0` is the degenerate algebra where
//! `0 = 1`.

use crate::bits::Bits;
use crate::error::{AlgebraError, ParseError};
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

pub const DEFAULT_MAX_ATOMS: usize = 64;
pub const DEFAULT_MAX_VARS: usize = 24;

/// Size caps applied when constructing algebras and functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_atoms: usize,
    pub max_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: DEFAULT_MAX_ATOMS,
            max_vars: DEFAULT_MAX_VARS,
        }
    }
}

/// The algebra `2^k`. Two algebras are equal when their atom counts are.
#[derive(Debug, Clone, Copy)]
pub struct Algebra {
    atoms: usize,
    limits: Limits,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(atoms: usize) -> Result<Self, AlgebraError> {
        Self::with_limits(atoms, Limits::default())
    }

    pub fn with_limits(atoms: usize, limits: Limits) -> Result<Self, AlgebraError> {
        if atoms > limits.max_atoms {
            return Err(AlgebraError::TooManyAtoms {
                atoms,
                limit: limits.max_atoms,
            });
        }
        Ok(Algebra { atoms, limits })
    }

    /// The switching algebra `{0, 1}`.
    pub fn two() -> Self {
        Algebra {
            atoms: 1,
            limits: Limits::default(),
        }
    }

    #[inline]
    pub fn atoms(&self) -> usize {
        self.atoms
    }

    #[inline]
    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn is_two_element(&self) -> bool {
        self.atoms == 1
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            bits: Bits::zeros(self.atoms),
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement {
            bits: Bits::ones(self.atoms),
        }
    }

    /// `0` or `1` as an element.
    pub fn constant(&self, v: bool) -> AlgebraElement {
        if v {
            self.one()
        } else {
            self.zero()
        }
    }

    pub fn atom(&self, i: usize) -> Option<AlgebraElement> {
        (i < self.atoms).then(|| {
            let mut bits = Bits::zeros(self.atoms);
            bits.set(i, true);
            AlgebraElement { bits }
        })
    }

    pub fn element(&self, bits: Bits) -> AlgebraElement {
        assert_eq!(bits.len(), self.atoms, "atom set has the wrong length");
        AlgebraElement { bits }
    }

    /// Element whose atom `i` is present iff bit `i` of the mask is set.
    /// Bits at or above `k` are ignored.
    pub fn from_mask(&self, mask: u64) -> AlgebraElement {
        AlgebraElement {
            bits: Bits::from_words(self.atoms, &[mask]),
        }
    }

    /// All `2^k` elements in mask order. Only sensible for small `k`.
    pub fn elements(&self) -> impl Iterator<Item = AlgebraElement> + '_ {
        assert!(
            self.atoms < 32,
            "refusing to enumerate 2^{} elements",
            self.atoms
        );
        (0u64..(1u64 << self.atoms)).map(move |m| self.from_mask(m))
    }

    pub fn parse_element(&self, text: &str) -> Result<AlgebraElement, ParseError> {
        crate::function::expr::parse_constant(text, *self)
    }
}

/// An element of `2^k`, stored as its atom set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    bits: Bits,
}

impl AlgebraElement {
    /// Atom count of the owning algebra.
    #[inline]
    pub fn atoms(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    #[inline]
    pub fn has_atom(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn iter_atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.bits.is_full()
    }

    /// Low 64 atoms as a mask.
    pub fn to_mask(&self) -> u64 {
        self.bits.words().first().copied().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.atoms() == other.atoms() {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch {
                left: self.atoms(),
                right: other.atoms(),
            })
        }
    }

    pub fn try_meet(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(AlgebraElement {
            bits: self.bits.and(&other.bits),
        })
    }

    pub fn try_join(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(AlgebraElement {
            bits: self.bits.or(&other.bits),
        })
    }

    pub fn try_leq(&self, other: &Self) -> Result<bool, AlgebraError> {
        self.check(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    /// Boolean product. Panics when the operands come from different algebras.
    pub fn meet(&self, other: &Self) -> Self {
        self.try_meet(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Boolean sum. Panics when the operands come from different algebras.
    pub fn join(&self, other: &Self) -> Self {
        self.try_join(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn complement(&self) -> Self {
        AlgebraElement {
            bits: self.bits.not(),
        }
    }

    /// `self ≤ other`, i.e. `self · other' = 0`.
    pub fn leq(&self, other: &Self) -> bool {
        self.try_leq(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn meet_assign(&mut self, other: &Self) {
        self.check(other).unwrap_or_else(|e| panic!("{e}"));
        self.bits.and_assign(&other.bits);
    }

    pub fn join_assign(&mut self, other: &Self) {
        self.check(other).unwrap_or_else(|e| panic!("{e}"));
        self.bits.or_assign(&other.bits);
    }
}

impl BitAnd for &AlgebraElement {
    type Output = AlgebraElement;
    fn bitand(self, rhs: Self) -> AlgebraElement {
        self.meet(rhs)
    }
}

impl BitAnd for AlgebraElement {
    type Output = AlgebraElement;
    fn bitand(mut self, rhs: Self) -> AlgebraElement {
        self.meet_assign(&rhs);
        self
    }
}

impl BitOr for &AlgebraElement {
    type Output = AlgebraElement;
    fn bitor(self, rhs: Self) -> AlgebraElement {
        self.join(rhs)
    }
}

impl BitOr for AlgebraElement {
    type Output = AlgebraElement;
    fn bitor(mut self, rhs: Self) -> AlgebraElement {
        self.join_assign(&rhs);
        self
    }
}

impl Not for &AlgebraElement {
    type Output = AlgebraElement;
    fn not(self) -> AlgebraElement {
        self.complement()
    }
}

impl Not for AlgebraElement {
    type Output = AlgebraElement;
    fn not(mut self) -> AlgebraElement {
        self.bits.not_assign();
        self
    }
}

/// Meet of all elements; `one` for an empty iterator.
pub fn product<'a>(
    algebra: Algebra,
    items: impl IntoIterator<Item = &'a AlgebraElement>,
) -> AlgebraElement {
    items
        .into_iter()
        .fold(algebra.one(), |acc, x| acc & x.clone())
}

/// Join of all elements; `zero` for an empty iterator.
pub fn sum<'a>(
    algebra: Algebra,
    items: impl IntoIterator<Item = &'a AlgebraElement>,
) -> AlgebraElement {
    items
        .into_iter()
        .fold(algebra.zero(), |acc, x| acc | x.clone())
}

/// Prints `0`, `1`, or the atoms joined by `+`, e.g. `a0+a3`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.is_one() {
            return write!(f, "1");
        }
        for (n, a) in self.iter_atoms().enumerate() {
            if n > 0 {
                write!(f, "+")?;
            }
            write!(f, "a{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(alg: &Algebra) -> Vec<AlgebraElement> {
        alg.elements().collect()
    }

    #[test]
    fn meet_examples() {
        let b2 = Algebra::new(2).unwrap();
        let x = b2.atom(1).unwrap();
        assert_eq!(b2.one().meet(&x), x);
        assert_eq!(x.meet(&x.complement()), b2.zero());
        assert_eq!(
            b2.from_mask(0b11).meet(&b2.from_mask(0b10)),
            b2.from_mask(0b10)
        );
    }

    #[test]
    fn join_and_leq_examples() {
        let b3 = Algebra::new(3).unwrap();
        for a in all(&b3) {
            assert!(a.join(&a.complement()).is_one());
            assert!(b3.zero().leq(&a));
        }
    }

    #[test]
    fn mixed_algebras_are_rejected() {
        let a = Algebra::new(2).unwrap().one();
        let b = Algebra::new(3).unwrap().one();
        assert_eq!(
            a.try_meet(&b),
            Err(AlgebraError::Mismatch { left: 2, right: 3 })
        );
        assert!(a.try_join(&b).is_err());
        assert!(a.try_leq(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "different algebras")]
    fn mixed_operator_panics() {
        let a = Algebra::new(2).unwrap().one();
        let b = Algebra::new(3).unwrap().one();
        let _ = &a & &b;
    }

    #[test]
    fn atom_cap_is_enforced_and_raisable() {
        assert!(matches!(
            Algebra::new(65),
            Err(AlgebraError::TooManyAtoms {
                atoms: 65,
                limit: 64
            })
        ));
        let big = Algebra::with_limits(
            130,
            Limits {
                max_atoms: 256,
                ..Limits::default()
            },
        )
        .unwrap();
        let a = big.atom(129).unwrap();
        assert!(a.leq(&big.one()));
        assert!(!a.complement().has_atom(129));
        assert!(a.complement().has_atom(0));
        assert!((a.clone() | a.complement()).is_one());
    }

    #[test]
    fn degenerate_algebra() {
        let b = Algebra::new(0).unwrap();
        assert_eq!(b.zero(), b.one());
        assert_eq!(b.elements().count(), 1);
        assert_eq!(b.one().to_string(), "0");
    }

    #[test]
    fn display() {
        let b = Algebra::new(4).unwrap();
        assert_eq!(b.zero().to_string(), "0");
        assert_eq!(b.one().to_string(), "1");
        assert_eq!(b.from_mask(0b1001).to_string(), "a0+a3");
    }

    // Exhaustive over 2^2.
    #[test]
    fn axioms_exhaustive_b4() {
        let b = Algebra::new(2).unwrap();
        let els = all(&b);
        for x in &els {
            for y in &els {
                for z in &els {
                    check_axioms(&b, x, y, z);
                }
            }
        }
    }

    fn check_axioms(b: &Algebra, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) {
        assert_eq!(x | y, y | x);
        assert_eq!(x & y, y & x);
        assert_eq!(x & &(y | z), &(x & y) | &(x & z));
        assert_eq!(x | &(y & z), &(x | y) & &(x | z));
        assert_eq!(x | &b.zero(), *x);
        assert_eq!(x & &b.one(), *x);
        assert!((x | &!x).is_one());
        assert!((x & &!x).is_zero());
        assert_eq!(x | &(x & y), *x);
        assert_eq!(x & &(x | y), *x);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn b8() -> Algebra {
            Algebra::new(8).unwrap()
        }

        proptest! {
            #[test]
            fn axioms_random_b256(x in 0u64..256, y in 0u64..256, z in 0u64..256) {
                let b = b8();
                check_axioms(&b, &b.from_mask(x), &b.from_mask(y), &b.from_mask(z));
            }

            #[test]
            fn leq_is_subset(x in 0u64..256, y in 0u64..256) {
                let b = b8();
                prop_assert_eq!(b.from_mask(x).leq(&b.from_mask(y)), x & !y == 0);
            }

            // {v : lo ≤ v ≤ hi} is nonempty iff lo ≤ hi.
            #[test]
            fn interval_nonempty_iff_leq(lo in 0u64..16, hi in 0u64..16) {
                let b = Algebra::new(4).unwrap();
                let (l, h) = (b.from_mask(lo), b.from_mask(hi));
                let nonempty = b.elements().any(|v| l.leq(&v) && v.leq(&h));
                prop_assert_eq!(nonempty, l.leq(&h));
            }
        }
    }
}
