// SPDX-License-Identifier: Apache-2.0

//! Boolean functions `B^n -> B` in minterm canonical form.
//!
//! A function is stored as its coefficient table: entry `j` is `f(A_j)` where
//! `A_j` is the 0/1 point whose coordinates are the bits of `j`, with
//! variable `x1` (index 0) as the most significant bit.
//!
//! The table is kept bit-sliced: one plane of `2^n` bits per atom of the
//! algebra, plane `a` holding the minterm indices whose coefficient contains
//! atom `a`. Over the switching algebra this is one bit per entry, and every
//! pointwise operation is word-parallel.

pub mod expr;
mod term;

pub use expr::{parse, parse_named, Expr, VarNames};
pub use term::{Exponent, Term};

use crate::algebra::{Algebra, AlgebraElement};
use crate::bits::Bits;
use crate::error::FunctionError;
use sha2::{Digest, Sha256};
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

#[derive(Clone, PartialEq, Eq)]
pub struct BoolFunction {
    algebra: Algebra,
    n: usize,
    planes: Vec<Bits>,
}

/// Bit position of variable `i` inside a minterm index.
#[inline]
pub fn var_bit(n: usize, i: usize) -> usize {
    n - 1 - i
}

/// The 0/1 point `A_j` as algebra elements.
pub fn point(algebra: Algebra, n: usize, j: usize) -> Vec<AlgebraElement> {
    (0..n)
        .map(|i| algebra.constant((j >> var_bit(n, i)) & 1 == 1))
        .collect()
}

const LOW_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Indices `j < 2^n` whose bit `p` is set.
pub(crate) fn bit_plane(n: usize, p: usize) -> Bits {
    let len = 1usize << n;
    let words = len.div_ceil(64);
    let w: Vec<u64> = if p < 6 {
        vec![LOW_PATTERNS[p]; words]
    } else {
        (0..words)
            .map(|w| if (w >> (p - 6)) & 1 == 1 { !0 } else { 0 })
            .collect()
    };
    Bits::from_words(len, &w)
}

/// `f(x_p = v)` on one plane, where `p` is a bit position.
fn cofactor_plane(plane: &Bits, p: usize, v: bool) -> Bits {
    let mut out = plane.clone();
    if p < 6 {
        let m = LOW_PATTERNS[p];
        let s = 1u32 << p;
        for w in out.words_mut() {
            *w = if v {
                let hi = *w & m;
                hi | (hi >> s)
            } else {
                let lo = *w & !m;
                lo | (lo << s)
            };
        }
        out.clear_tail();
    } else {
        let stride = 1usize << (p - 6);
        let words = out.words_mut();
        for base in (0..words.len()).step_by(2 * stride) {
            for o in 0..stride {
                let (lo, hi) = (base + o, base + o + stride);
                if v {
                    words[lo] = words[hi];
                } else {
                    words[hi] = words[lo];
                }
            }
        }
    }
    out
}

impl BoolFunction {
    fn check_size(algebra: Algebra, n: usize) -> Result<(), FunctionError> {
        let limit = algebra.limits().max_vars;
        if n > limit {
            return Err(FunctionError::TooManyVariables { n, limit });
        }
        Ok(())
    }

    pub(crate) fn from_planes(algebra: Algebra, n: usize, planes: Vec<Bits>) -> Self {
        debug_assert_eq!(planes.len(), algebra.atoms());
        debug_assert!(planes.iter().all(|p| p.len() == 1 << n));
        BoolFunction { algebra, n, planes }
    }

    pub fn constant(algebra: Algebra, n: usize, c: &AlgebraElement) -> Result<Self, FunctionError> {
        Self::check_size(algebra, n)?;
        if c.atoms() != algebra.atoms() {
            return Err(crate::error::AlgebraError::Mismatch {
                left: algebra.atoms(),
                right: c.atoms(),
            }
            .into());
        }
        let len = 1usize << n;
        let planes = (0..algebra.atoms())
            .map(|a| {
                if c.has_atom(a) {
                    Bits::ones(len)
                } else {
                    Bits::zeros(len)
                }
            })
            .collect();
        Ok(Self::from_planes(algebra, n, planes))
    }

    pub fn zero(algebra: Algebra, n: usize) -> Result<Self, FunctionError> {
        Self::constant(algebra, n, &algebra.zero())
    }

    pub fn one(algebra: Algebra, n: usize) -> Result<Self, FunctionError> {
        Self::constant(algebra, n, &algebra.one())
    }

    /// The projection `x_(i+1)`.
    pub fn var(algebra: Algebra, n: usize, i: usize) -> Result<Self, FunctionError> {
        Self::check_size(algebra, n)?;
        if i >= n {
            return Err(FunctionError::VariableOutOfRange { index: i, n });
        }
        Ok(Self::indicator(algebra, n, &bit_plane(n, var_bit(n, i))))
    }

    /// The function that is `1` on the given minterm indices and `0` elsewhere.
    pub fn indicator(algebra: Algebra, n: usize, support: &Bits) -> Self {
        assert_eq!(support.len(), 1 << n);
        Self::from_planes(algebra, n, vec![support.clone(); algebra.atoms()])
    }

    pub fn from_coeffs(
        algebra: Algebra,
        n: usize,
        coeffs: &[AlgebraElement],
    ) -> Result<Self, FunctionError> {
        Self::check_size(algebra, n)?;
        if coeffs.len() != 1 << n {
            return Err(FunctionError::TableLength {
                expected: 1 << n,
                got: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| c.atoms() != algebra.atoms()) {
            return Err(crate::error::AlgebraError::Mismatch {
                left: algebra.atoms(),
                right: c.atoms(),
            }
            .into());
        }
        Ok(Self::from_fn_unchecked(algebra, n, |j| coeffs[j].clone()))
    }

    pub fn from_fn(
        algebra: Algebra,
        n: usize,
        f: impl FnMut(usize) -> AlgebraElement,
    ) -> Result<Self, FunctionError> {
        Self::check_size(algebra, n)?;
        Ok(Self::from_fn_unchecked(algebra, n, f))
    }

    fn from_fn_unchecked(
        algebra: Algebra,
        n: usize,
        mut f: impl FnMut(usize) -> AlgebraElement,
    ) -> Self {
        let len = 1usize << n;
        let mut planes = vec![Bits::zeros(len); algebra.atoms()];
        for j in 0..len {
            let c = f(j);
            for a in c.iter_atoms() {
                planes[a].set(j, true);
            }
        }
        Self::from_planes(algebra, n, planes)
    }

    #[inline]
    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// Number of variables.
    #[inline]
    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of coefficients, `2^n`.
    #[inline]
    pub fn table_len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn planes(&self) -> &[Bits] {
        &self.planes
    }

    /// `f(A_j)`.
    pub fn coeff(&self, j: usize) -> AlgebraElement {
        assert!(j < self.table_len());
        self.algebra
            .element(Bits::from_fn(self.algebra.atoms(), |a| {
                self.planes[a].get(j)
            }))
    }

    pub fn coeffs(&self) -> Vec<AlgebraElement> {
        (0..self.table_len()).map(|j| self.coeff(j)).collect()
    }

    fn check_args(&self, z: &[AlgebraElement]) -> Result<(), FunctionError> {
        if z.len() != self.n {
            return Err(FunctionError::ArityMismatch {
                expected: self.n,
                got: z.len(),
            });
        }
        if let Some(e) = z.iter().find(|e| e.atoms() != self.algebra.atoms()) {
            return Err(crate::error::AlgebraError::Mismatch {
                left: self.algebra.atoms(),
                right: e.atoms(),
            }
            .into());
        }
        Ok(())
    }

    /// `f(Z)` for `Z ∈ B^n`.
    ///
    /// Computed atom by atom: projecting every `z_i` onto atom `a` yields a
    /// 0/1 point, and atom `a` of `f(Z)` is atom `a` of the coefficient at
    /// that point.
    pub fn evaluate(&self, z: &[AlgebraElement]) -> Result<AlgebraElement, FunctionError> {
        self.check_args(z)?;
        let k = self.algebra.atoms();
        let bits = Bits::from_fn(k, |a| {
            let idx = z.iter().enumerate().fold(0usize, |acc, (i, zi)| {
                acc | ((zi.has_atom(a) as usize) << var_bit(self.n, i))
            });
            self.planes[a].get(idx)
        });
        Ok(self.algebra.element(bits))
    }

    /// `Σ_j f(A_j) μ_j(Z)`, evaluated literally over all `2^n` minterms.
    pub fn evaluate_by_minterms(
        &self,
        z: &[AlgebraElement],
    ) -> Result<AlgebraElement, FunctionError> {
        self.check_args(z)?;
        let mut acc = self.algebra.zero();
        for j in 0..self.table_len() {
            let mut mu = self.algebra.one();
            for (i, zi) in z.iter().enumerate() {
                if (j >> var_bit(self.n, i)) & 1 == 1 {
                    mu.meet_assign(zi);
                } else {
                    mu.meet_assign(&zi.complement());
                }
            }
            acc.join_assign(&(mu & self.coeff(j)));
        }
        Ok(acc)
    }

    fn check_var(&self, i: usize) -> Result<(), FunctionError> {
        if i >= self.n {
            Err(FunctionError::VariableOutOfRange {
                index: i,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `f(x_i = v)` as a function of the same `n` variables; `x_i` becomes inert.
    pub fn cofactor(&self, i: usize, v: bool) -> Result<Self, FunctionError> {
        self.check_var(i)?;
        let p = var_bit(self.n, i);
        let planes = self
            .planes
            .iter()
            .map(|pl| cofactor_plane(pl, p, v))
            .collect();
        Ok(Self::from_planes(self.algebra, self.n, planes))
    }

    /// `(f(x_i=1), f(x_i=0))`, so that `f = x_i c1 + x_i' c0`.
    pub fn shannon_sop(&self, i: usize) -> Result<(Self, Self), FunctionError> {
        Ok((self.cofactor(i, true)?, self.cofactor(i, false)?))
    }

    /// `(f(x_i=0), f(x_i=1))`, so that `f = (x_i + c0)(x_i' + c1)`.
    pub fn shannon_pos(&self, i: usize) -> Result<(Self, Self), FunctionError> {
        Ok((self.cofactor(i, false)?, self.cofactor(i, true)?))
    }

    pub fn depends_on(&self, i: usize) -> bool {
        match (self.cofactor(i, false), self.cofactor(i, true)) {
            (Ok(a), Ok(b)) => a != b,
            _ => false,
        }
    }

    fn zip_planes(&self, other: &Self, op: impl Fn(&mut Bits, &Bits)) -> Self {
        assert!(
            self.algebra == other.algebra && self.n == other.n,
            "function shape mismatch: 2^{}/{} vars vs 2^{}/{} vars",
            self.algebra.atoms(),
            self.n,
            other.algebra.atoms(),
            other.n
        );
        let planes = self
            .planes
            .iter()
            .zip(&other.planes)
            .map(|(a, b)| {
                let mut a = a.clone();
                op(&mut a, b);
                a
            })
            .collect();
        Self::from_planes(self.algebra, self.n, planes)
    }

    pub fn meet(&self, other: &Self) -> Self {
        self.zip_planes(other, Bits::and_assign)
    }

    pub fn join(&self, other: &Self) -> Self {
        self.zip_planes(other, Bits::or_assign)
    }

    pub fn complement(&self) -> Self {
        Self::from_planes(
            self.algebra,
            self.n,
            self.planes.iter().map(Bits::not).collect(),
        )
    }

    /// Pointwise `f ≤ g`.
    pub fn leq(&self, other: &Self) -> bool {
        assert!(self.algebra == other.algebra && self.n == other.n);
        self.planes
            .iter()
            .zip(&other.planes)
            .all(|(a, b)| a.is_subset(b))
    }

    /// Multiplies a constant into every coefficient.
    pub fn scale(&self, c: &AlgebraElement) -> Self {
        let planes = self
            .planes
            .iter()
            .enumerate()
            .map(|(a, p)| {
                if c.has_atom(a) {
                    p.clone()
                } else {
                    Bits::zeros(p.len())
                }
            })
            .collect();
        Self::from_planes(self.algebra, self.n, planes)
    }

    /// The identically-zero function ("tautology" of `f = 0`).
    pub fn is_zero(&self) -> bool {
        self.planes.iter().all(Bits::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.planes.iter().all(Bits::is_full)
    }

    /// The value of a constant function.
    pub fn as_constant(&self) -> Option<AlgebraElement> {
        let bits = self
            .planes
            .iter()
            .map(|p| {
                if p.is_zero() {
                    Some(false)
                } else if p.is_full() {
                    Some(true)
                } else {
                    None
                }
            })
            .collect::<Option<Vec<bool>>>()?;
        Some(self.algebra.element(Bits::from_fn(bits.len(), |a| bits[a])))
    }

    /// Every coefficient is `0` or `1`.
    pub fn is_indicator(&self) -> bool {
        self.planes.windows(2).all(|w| w[0] == w[1])
    }

    /// Minterm indices with a nonzero coefficient.
    pub fn support(&self) -> Bits {
        let mut s = Bits::zeros(self.table_len());
        for p in &self.planes {
            s.or_assign(p);
        }
        s
    }

    /// Renames variables: variable `t` of the result is variable `order[t]`
    /// of `self`. `order` must be a permutation of `0..n`.
    pub fn permute(&self, order: &[usize]) -> Result<Self, FunctionError> {
        let n = self.n;
        if order.len() != n {
            return Err(FunctionError::ArityMismatch {
                expected: n,
                got: order.len(),
            });
        }
        let mut seen = vec![false; n];
        for &o in order {
            self.check_var(o)?;
            if std::mem::replace(&mut seen[o], true) {
                return Err(FunctionError::VariableOutOfRange { index: o, n });
            }
        }
        if order.iter().enumerate().all(|(t, &o)| t == o) {
            return Ok(self.clone());
        }
        // Per-byte lookup tables mapping new-index bits to old-index bits.
        let bytes = n.div_ceil(8);
        let tables: Vec<[usize; 256]> = (0..bytes)
            .map(|b| {
                let mut t = [0usize; 256];
                for (v, slot) in t.iter_mut().enumerate() {
                    for bit in 0..8 {
                        let new_pos = b * 8 + bit;
                        if new_pos < n && (v >> bit) & 1 == 1 {
                            let var = n - 1 - new_pos;
                            *slot |= 1 << var_bit(n, order[var]);
                        }
                    }
                }
                t
            })
            .collect();
        let old_index = |idx: usize| {
            tables
                .iter()
                .enumerate()
                .fold(0usize, |acc, (b, t)| acc | t[(idx >> (8 * b)) & 0xff])
        };
        let len = self.table_len();
        let planes = self
            .planes
            .iter()
            .map(|pl| Bits::from_fn(len, |idx| pl.get(old_index(idx))))
            .collect();
        Ok(Self::from_planes(self.algebra, n, planes))
    }

    /// Generalized cofactors with respect to a block of variables.
    ///
    /// Entry `j` is `f` with the block fixed to the bits of `j` (first block
    /// variable most significant), as a function of the remaining variables
    /// in their original relative order.
    pub fn block_cofactors(&self, block: &[usize]) -> Result<Vec<Self>, FunctionError> {
        let mut in_block = vec![false; self.n];
        for &v in block {
            self.check_var(v)?;
            if std::mem::replace(&mut in_block[v], true) {
                return Err(FunctionError::VariableOutOfRange {
                    index: v,
                    n: self.n,
                });
            }
        }
        let rest: Vec<usize> = (0..self.n).filter(|&v| !in_block[v]).collect();
        let order: Vec<usize> = block.iter().copied().chain(rest.iter().copied()).collect();
        let g = self.permute(&order)?;
        let r = rest.len();
        let chunk = 1usize << r;
        Ok((0..1usize << block.len())
            .map(|j| {
                let planes = g.planes.iter().map(|p| p.slice(j * chunk, chunk)).collect();
                Self::from_planes(self.algebra, r, planes)
            })
            .collect())
    }

    /// Short content hash of the coefficient table.
    pub fn digest(&self) -> String {
        digest_all([self])
    }

    fn feed(&self, h: &mut Sha256) {
        h.update((self.algebra.atoms() as u64).to_le_bytes());
        h.update((self.n as u64).to_le_bytes());
        for p in &self.planes {
            for w in p.words() {
                h.update(w.to_le_bytes());
            }
        }
    }
}

impl BitAnd for &BoolFunction {
    type Output = BoolFunction;
    fn bitand(self, rhs: Self) -> BoolFunction {
        self.meet(rhs)
    }
}

impl BitOr for &BoolFunction {
    type Output = BoolFunction;
    fn bitor(self, rhs: Self) -> BoolFunction {
        self.join(rhs)
    }
}

impl Not for &BoolFunction {
    type Output = BoolFunction;
    fn not(self) -> BoolFunction {
        self.complement()
    }
}

impl fmt::Debug for BoolFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BoolFunction(2^{}, n={}) [",
            self.algebra.atoms(),
            self.n
        )?;
        if self.n <= 6 {
            for j in 0..self.table_len() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.coeff(j))?;
            }
        } else {
            write!(f, "{}", self.digest())?;
        }
        write!(f, "]")
    }
}

/// Short content hash of a sequence of coefficient tables.
pub fn digest_all<'a>(fs: impl IntoIterator<Item = &'a BoolFunction>) -> String {
    let mut h = Sha256::new();
    for f in fs {
        f.feed(&mut h);
    }
    h.finalize()[..8]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
