// SPDX-License-Identifier: Apache-2.0

//! Fixed-length bitset used for atom sets and for coefficient planes.
//!
//! Bits past `len` in the last word are always kept clear, so word-wise
//! equality is set equality.

use smallvec::{smallvec, SmallVec};
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[inline]
fn tail_mask(len: usize) -> u64 {
    match len % WORD {
        0 => !0,
        r => (1u64 << r) - 1,
    }
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: smallvec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: smallvec![!0; word_count(len)],
        };
        b.clear_tail();
        b
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut b = Bits::zeros(len);
        for i in 0..len {
            if f(i) {
                b.set(i, true);
            }
        }
        b
    }

    /// Builds a bitset from raw words; bits beyond `len` are discarded.
    pub fn from_words(len: usize, words: &[u64]) -> Self {
        let mut w: SmallVec<[u64; 1]> = words.iter().copied().take(word_count(len)).collect();
        w.resize(word_count(len), 0);
        let mut b = Bits { len, words: w };
        b.clear_tail();
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub(crate) fn clear_tail(&mut self) {
        let mask = tail_mask(self.len);
        if let Some(last) = self.words.last_mut() {
            *last &= mask;
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i % WORD);
        if v {
            self.words[i / WORD] |= m;
        } else {
            self.words[i / WORD] &= !m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        let n = self.words.len();
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w == if i + 1 == n { tail_mask(self.len) } else { !0 })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the first set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Index of the first clear bit.
    pub fn first_zero(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find_map(|(i, &w)| {
                let inv = !w;
                (inv != 0).then(|| i * WORD + inv.trailing_zeros() as usize)
            })
            .filter(|&i| i < self.len)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + t)
                }
            })
        })
    }

    #[inline]
    fn assert_same_len(&self, other: &Bits) {
        assert_eq!(self.len, other.len, "bitset length mismatch");
    }

    pub fn and_assign(&mut self, other: &Bits) {
        self.assert_same_len(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    pub fn or_assign(&mut self, other: &Bits) {
        self.assert_same_len(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        self.assert_same_len(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= *b;
        }
    }

    pub fn and_not_assign(&mut self, other: &Bits) {
        self.assert_same_len(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
    }

    pub fn not_assign(&mut self) {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self.clear_tail();
    }

    pub fn and(&self, other: &Bits) -> Bits {
        let mut r = self.clone();
        r.and_assign(other);
        r
    }

    pub fn or(&self, other: &Bits) -> Bits {
        let mut r = self.clone();
        r.or_assign(other);
        r
    }

    pub fn not(&self) -> Bits {
        let mut r = self.clone();
        r.not_assign();
        r
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Bits) -> bool {
        self.assert_same_len(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Bits) -> bool {
        self.assert_same_len(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Copies `len` bits starting at `start` into a new bitset.
    pub fn slice(&self, start: usize, len: usize) -> Bits {
        assert!(start + len <= self.len);
        if start % WORD == 0 && len % WORD == 0 {
            let w0 = start / WORD;
            return Bits::from_words(len, &self.words[w0..w0 + len / WORD]);
        }
        Bits::from_fn(len, |i| self.get(start + i))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}
