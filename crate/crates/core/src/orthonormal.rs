// SPDX-License-Identifier: Apache-2.0

//! Orthonormal (ON) sets of functions and expansions in them.
//!
//! An ON set of order `m` in `n` variables is kept in partition form: `m`
//! disjoint nonempty blocks of minterm indices covering `0..2^n`, member `k`
//! being the sum of the minterms in block `k`. Any list of functions that is
//! pairwise orthogonal, sums to `1` and has 0/1 coefficients normalizes to
//! this form.
//!
//! For `f` and a member `φ`, every valid coefficient `α` in
//! `f = Σ α_i φ_i` lies pointwise in `[fφ, f + φ']`. A *constant* coefficient
//! exists iff `Σ_A f(A)φ(A) ≤ Π_A (f(A) + φ(A)')` over the 0/1 points `A`;
//! [`is_in_class`] applies that test to every member.
//!
//! # Text format
//!
//! ```text
//! # comment to end of line
//! 3 3;                 # order m, variable count n
//! M1 = {0, 5, 7};      # a block of minterm indices, x1 most significant
//! M2 = {1, 3, 6};
//! M3 = x1' x2 x3' + x1 x2' x3'   # or any expression in x1..xn
//! ```
//!
//! Entries are separated by `;` and must be labelled `M1..Mm` in order.

use crate::algebra::{product, sum, Algebra, AlgebraElement};
use crate::bits::Bits;
use crate::error::OnError;
use crate::function::{self, BoolFunction, Exponent, Term};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthonormalSet {
    algebra: Algebra,
    n: usize,
    blocks: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

impl OrthonormalSet {
    /// Builds an ON set from its index partition.
    ///
    /// Overlapping blocks are reported as non-orthogonal members and
    /// uncovered indices as a failure of normality.
    pub fn from_blocks(
        algebra: Algebra,
        n: usize,
        blocks: Vec<Vec<usize>>,
    ) -> Result<Self, OnError> {
        BoolFunction::zero(algebra, n)?;
        if blocks.is_empty() {
            return Err(OnError::NoMembers);
        }
        let len = 1usize << n;
        let mut owner = vec![usize::MAX; len];
        let mut blocks = blocks;
        for (b, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(OnError::EmptyMember(b + 1));
            }
            block.sort_unstable();
            block.dedup();
            for &j in block.iter() {
                if j >= len {
                    return Err(OnError::IndexOutOfRange { index: j, n });
                }
                if owner[j] != usize::MAX {
                    return Err(OnError::NotOrthogonal(owner[j] + 1, b + 1));
                }
                owner[j] = b;
            }
        }
        if let Some(missing) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(OnError::NotNormal { missing });
        }
        Ok(OrthonormalSet {
            algebra,
            n,
            blocks,
            owner,
        })
    }

    /// Checks that `functions` form an ON set and returns its partition form.
    pub fn verify_on(functions: &[BoolFunction]) -> Result<Self, OnError> {
        let first = functions.first().ok_or(OnError::NoMembers)?;
        let (algebra, n) = (first.algebra(), first.arity());
        if functions
            .iter()
            .any(|f| f.algebra() != algebra || f.arity() != n)
        {
            return Err(OnError::ShapeMismatch);
        }
        if algebra.atoms() == 0 {
            return Err(OnError::DegenerateAlgebra);
        }
        for (i, f) in functions.iter().enumerate() {
            if !f.is_indicator() {
                return Err(OnError::NonIndicator(i + 1));
            }
            if f.is_zero() {
                return Err(OnError::EmptyMember(i + 1));
            }
        }
        for i in 0..functions.len() {
            for j in i + 1..functions.len() {
                if !functions[i].meet(&functions[j]).is_zero() {
                    return Err(OnError::NotOrthogonal(i + 1, j + 1));
                }
            }
        }
        let total = functions
            .iter()
            .skip(1)
            .fold(first.clone(), |acc, f| acc.join(f));
        if let Some(missing) = total.planes()[0].first_zero() {
            return Err(OnError::NotNormal { missing });
        }
        let blocks = functions
            .iter()
            .map(|f| f.planes()[0].iter_ones().collect())
            .collect();
        Self::from_blocks(algebra, n, blocks)
    }

    /// The `2^n` minterms, block `j` = `{j}`.
    pub fn minterm_set(algebra: Algebra, n: usize) -> Result<Self, OnError> {
        BoolFunction::zero(algebra, n)?;
        Self::from_blocks(algebra, n, (0..1usize << n).map(|j| vec![j]).collect())
    }

    /// ON set of terms; fails unless the terms are orthonormal.
    pub fn from_terms(terms: &[Term], algebra: Algebra) -> Result<Self, OnError> {
        let n = terms.first().ok_or(OnError::NoMembers)?.arity();
        if terms.iter().any(|t| t.arity() != n) {
            return Err(OnError::ShapeMismatch);
        }
        BoolFunction::zero(algebra, n)?;
        Self::from_blocks(
            algebra,
            n,
            terms
                .iter()
                .map(|t| t.support().iter_ones().collect())
                .collect(),
        )
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of members.
    pub fn order(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block containing minterm `j`.
    pub fn owner(&self, j: usize) -> usize {
        self.owner[j]
    }

    pub fn support(&self, i: usize) -> Bits {
        let mut s = Bits::zeros(1 << self.n);
        for &j in &self.blocks[i] {
            s.set(j, true);
        }
        s
    }

    pub fn member(&self, i: usize) -> BoolFunction {
        BoolFunction::indicator(self.algebra, self.n, &self.support(i))
    }

    pub fn members(&self) -> Vec<BoolFunction> {
        (0..self.order()).map(|i| self.member(i)).collect()
    }

    /// Same partition over another algebra.
    pub fn with_algebra(&self, algebra: Algebra) -> Self {
        OrthonormalSet {
            algebra,
            ..self.clone()
        }
    }

    pub fn parse(text: &str, algebra: Algebra) -> Result<Self, OnError> {
        parse_onset(text, algebra)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {};\n", self.order(), self.n);
        for (i, b) in self.blocks.iter().enumerate() {
            let items: Vec<String> = b.iter().map(usize::to_string).collect();
            s.push_str(&format!("M{} = {{{}}};\n", i + 1, items.join(", ")));
        }
        s
    }
}

impl fmt::Display for OrthonormalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The `m + 1` terms `x1', x1 x2', .., x1..x(m-1) xm', x1..xm`.
pub fn ladder_terms(m: usize) -> Vec<Term> {
    (0..=m)
        .map(|i| {
            Term::new(
                (0..m)
                    .map(|v| match v.cmp(&i) {
                        std::cmp::Ordering::Less => Exponent::Pos,
                        std::cmp::Ordering::Equal => Exponent::Neg,
                        std::cmp::Ordering::Greater => Exponent::Free,
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Admissible constant range `[low, high]` for one member's coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientInterval {
    pub low: AlgebraElement,
    pub high: AlgebraElement,
}

impl CoefficientInterval {
    pub fn is_nonempty(&self) -> bool {
        self.low.leq(&self.high)
    }

    pub fn contains(&self, a: &AlgebraElement) -> bool {
        self.low.leq(a) && a.leq(&self.high)
    }
}

/// `[Σ_A f(A)φ(A), Π_A (f(A) + φ(A)')]` over the 0/1 points `A`.
pub fn coefficient_interval(f: &BoolFunction, phi: &BoolFunction) -> CoefficientInterval {
    assert!(
        f.algebra() == phi.algebra() && f.arity() == phi.arity(),
        "function and ON member disagree in shape"
    );
    let k = f.algebra().atoms();
    let low = Bits::from_fn(k, |a| !f.planes()[a].is_disjoint(&phi.planes()[a]));
    let high = Bits::from_fn(k, |a| phi.planes()[a].is_subset(&f.planes()[a]));
    CoefficientInterval {
        low: f.algebra().element(low),
        high: f.algebra().element(high),
    }
}

/// Interval for member `i` of `phi` read off the partition directly:
/// the join and the meet of `f` over the block.
pub(crate) fn block_interval(
    f: &BoolFunction,
    phi: &OrthonormalSet,
    i: usize,
) -> CoefficientInterval {
    let alg = f.algebra();
    let vals: Vec<AlgebraElement> = phi.blocks()[i].iter().map(|&j| f.coeff(j)).collect();
    CoefficientInterval {
        low: sum(alg, &vals),
        high: product(alg, &vals),
    }
}

/// Result of the constant-coefficient class test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMembership {
    pub intervals: Vec<CoefficientInterval>,
    /// Lower bounds of the intervals, present iff every interval is nonempty.
    pub constants: Option<Vec<AlgebraElement>>,
}

impl ClassMembership {
    pub fn in_class(&self) -> bool {
        self.constants.is_some()
    }

    /// First member with an empty interval.
    pub fn first_violation(&self) -> Option<usize> {
        self.intervals.iter().position(|iv| !iv.is_nonempty())
    }
}

fn check_shape(f: &BoolFunction, phi: &OrthonormalSet) {
    assert!(
        f.algebra() == phi.algebra() && f.arity() == phi.arity(),
        "function and ON set disagree in shape"
    );
}

/// Does `f` admit an expansion in `phi` with constant coefficients?
pub fn is_in_class(f: &BoolFunction, phi: &OrthonormalSet) -> ClassMembership {
    check_shape(f, phi);
    let intervals: Vec<_> = (0..phi.order())
        .map(|i| block_interval(f, phi, i))
        .collect();
    let constants = intervals
        .iter()
        .all(CoefficientInterval::is_nonempty)
        .then(|| intervals.iter().map(|iv| iv.low.clone()).collect());
    ClassMembership {
        intervals,
        constants,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientPolicy {
    #[default]
    Low,
    High,
}

/// Coefficients of `f = Σ α_i φ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Constants(Vec<AlgebraElement>),
    Functions(Vec<BoolFunction>),
}

impl Expansion {
    /// `Σ α_i φ_i`.
    pub fn reconstruct(&self, phi: &OrthonormalSet) -> BoolFunction {
        let mut acc =
            BoolFunction::zero(phi.algebra(), phi.arity()).expect("shape already checked");
        for i in 0..phi.order() {
            let m = phi.member(i);
            let term = match self {
                Expansion::Constants(c) => m.scale(&c[i]),
                Expansion::Functions(a) => a[i].meet(&m),
            };
            acc = acc.join(&term);
        }
        acc
    }

    pub fn constants(&self) -> Option<&[AlgebraElement]> {
        match self {
            Expansion::Constants(c) => Some(c),
            Expansion::Functions(_) => None,
        }
    }
}

/// Expands `f` in `phi`.
///
/// Inside the class the coefficients are the interval bounds selected by
/// `policy`; outside it they are the functions `f φ_i` (low) or
/// `f + φ_i'` (high).
pub fn expand(f: &BoolFunction, phi: &OrthonormalSet, policy: CoefficientPolicy) -> Expansion {
    let cm = is_in_class(f, phi);
    if cm.in_class() {
        return Expansion::Constants(
            cm.intervals
                .into_iter()
                .map(|iv| match policy {
                    CoefficientPolicy::Low => iv.low,
                    CoefficientPolicy::High => iv.high,
                })
                .collect(),
        );
    }
    Expansion::Functions(
        phi.members()
            .iter()
            .map(|m| match policy {
                CoefficientPolicy::Low => f.meet(m),
                CoefficientPolicy::High => f.join(&m.complement()),
            })
            .collect(),
    )
}

/// `f = Σ (f/t_i) t_i`, where `f/t_i` fixes every literal of `t_i` to 1.
/// The coefficient functions keep all `n` variables; fixed ones are inert.
pub fn expand_in_terms(f: &BoolFunction, terms: &[Term]) -> Result<Vec<BoolFunction>, OnError> {
    let on = OrthonormalSet::from_terms(terms, f.algebra())?;
    if on.arity() != f.arity() {
        return Err(OnError::ShapeMismatch);
    }
    terms
        .iter()
        .map(|t| {
            t.exponents()
                .iter()
                .enumerate()
                .try_fold(f.clone(), |g, (i, e)| match e {
                    Exponent::Free => Ok(g),
                    Exponent::Neg => g.cofactor(i, false),
                    Exponent::Pos => g.cofactor(i, true),
                })
                .map_err(OnError::from)
        })
        .collect()
}

fn parse_onset(text: &str, algebra: Algebra) -> Result<OrthonormalSet, OnError> {
    let fmt_err = |m: String| OnError::Format(m);
    let stripped: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let mut parts = stripped.split(';').map(str::trim).filter(|s| !s.is_empty());
    let header = parts.next().ok_or_else(|| fmt_err("empty input".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| fmt_err(format!("bad header `{header}`")))
        })
        .collect::<Result<_, _>>()?;
    let [m, n] = nums[..] else {
        return Err(fmt_err(format!("header must be `m n`, got `{header}`")));
    };
    BoolFunction::zero(algebra, n)?;

    enum Entry {
        Indices(Vec<usize>),
        Func(BoolFunction),
    }
    let mut entries = Vec::new();
    for (i, part) in parts.enumerate() {
        let (label, value) = part
            .split_once('=')
            .ok_or_else(|| fmt_err(format!("entry `{part}` lacks `=`")))?;
        if label.trim() != format!("M{}", i + 1) {
            return Err(fmt_err(format!(
                "expected label M{}, got `{}`",
                i + 1,
                label.trim()
            )));
        }
        let value = value.trim();
        if let Some(inner) = value.strip_prefix('{') {
            let inner = inner
                .strip_suffix('}')
                .ok_or_else(|| fmt_err(format!("unterminated set in M{}", i + 1)))?;
            let idx = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| fmt_err(format!("bad index `{s}` in M{}", i + 1)))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            entries.push(Entry::Indices(idx));
        } else {
            let f = function::parse(value, n, algebra)
                .map_err(|e| fmt_err(format!("M{}: {e}", i + 1)))?;
            entries.push(Entry::Func(f));
        }
    }
    if entries.len() != m {
        return Err(fmt_err(format!(
            "header declares {m} members, found {}",
            entries.len()
        )));
    }
    if entries.iter().all(|e| matches!(e, Entry::Indices(_))) {
        let blocks = entries
            .into_iter()
            .map(|e| match e {
                Entry::Indices(v) => v,
                Entry::Func(_) => unreachable!(),
            })
            .collect();
        return OrthonormalSet::from_blocks(algebra, n, blocks);
    }
    let len = 1usize << n;
    let funcs = entries
        .into_iter()
        .map(|e| match e {
            Entry::Func(f) => Ok(f),
            Entry::Indices(v) => {
                if let Some(&j) = v.iter().find(|&&j| j >= len) {
                    return Err(OnError::IndexOutOfRange { index: j, n });
                }
                Ok(BoolFunction::indicator(
                    algebra,
                    n,
                    &Bits::from_fn(len, |j| v.contains(&j)),
                ))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    OrthonormalSet::verify_on(&funcs)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::function::{parse, parse_named};

    fn b0() -> Algebra {
        Algebra::two()
    }

    fn xyz() -> Vec<String> {
        ["x", "y", "z"].map(String::from).to_vec()
    }

    pub(crate) fn on3_members(alg: Algebra) -> Vec<BoolFunction> {
        [
            "x'y'z' + x y'z + x y z",
            "x'y'z + x'y z + x y z'",
            "x'y z' + x y'z'",
        ]
        .iter()
        .map(|s| parse_named(s, &xyz(), alg).unwrap())
        .collect()
    }

    #[test]
    fn verify_on_examples() {
        let x = parse("x1", 1, b0()).unwrap();
        let on = OrthonormalSet::verify_on(&[x.clone(), x.complement()]).unwrap();
        assert_eq!(on.blocks(), &[vec![1], vec![0]]);

        let on = OrthonormalSet::verify_on(&on3_members(b0())).unwrap();
        let sizes: Vec<usize> = on.blocks().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 2]);
        assert_eq!(on.blocks(), &[vec![0, 5, 7], vec![1, 3, 6], vec![2, 4]]);

        assert_eq!(
            OrthonormalSet::verify_on(&[x.clone(), x.clone()]),
            Err(OnError::NotOrthogonal(1, 2))
        );
    }

    #[test]
    fn verify_on_failures() {
        let b = Algebra::new(2).unwrap();
        let x = parse("x1", 2, b).unwrap();
        let y = parse("x1' x2", 2, b).unwrap();
        assert_eq!(
            OrthonormalSet::verify_on(&[x.clone(), y.clone()]),
            Err(OnError::NotNormal { missing: 0 })
        );
        let scaled = parse("a0 x1", 2, b).unwrap();
        assert_eq!(
            OrthonormalSet::verify_on(&[scaled, x.complement()]),
            Err(OnError::NonIndicator(1))
        );
        let zero = BoolFunction::zero(b, 2).unwrap();
        assert_eq!(
            OrthonormalSet::verify_on(&[x.clone(), x.complement(), zero]),
            Err(OnError::EmptyMember(3))
        );
        let other = parse("x1", 1, b).unwrap();
        assert_eq!(
            OrthonormalSet::verify_on(&[x, other]),
            Err(OnError::ShapeMismatch)
        );
    }

    #[test]
    fn minterm_sets() {
        let on1 = OrthonormalSet::minterm_set(b0(), 1).unwrap();
        assert_eq!(on1.members()[0], parse("x1'", 1, b0()).unwrap());
        assert_eq!(on1.members()[1], parse("x1", 1, b0()).unwrap());
        assert_eq!(OrthonormalSet::minterm_set(b0(), 2).unwrap().order(), 4);
        assert!(OrthonormalSet::minterm_set(b0(), 25).is_err());
    }

    #[test]
    fn ladder_examples() {
        let t1 = ladder_terms(1);
        assert_eq!(
            t1.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            vec!["x1'", "x1"]
        );
        let t2 = ladder_terms(2);
        assert_eq!(
            t2.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            vec!["x1'", "x1 x2'", "x1 x2"]
        );
        let on = OrthonormalSet::from_terms(&t2, b0()).unwrap();
        assert_eq!(on.order(), 3);
        let fns: Vec<_> = t2.iter().map(|t| t.to_function(b0()).unwrap()).collect();
        assert!(OrthonormalSet::verify_on(&fns).is_ok());
    }

    #[test]
    fn ladder_four_pairwise_disjoint() {
        let terms = ladder_terms(4);
        assert_eq!(terms.len(), 5);
        let sets: Vec<Vec<usize>> = terms
            .iter()
            .map(|t| {
                let f = t.to_function(b0()).unwrap();
                (0..16).filter(|&j| f.coeff(j).is_one()).collect()
            })
            .collect();
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(sets[i].iter().all(|a| !sets[j].contains(a)));
            }
        }
        assert_eq!(sets.iter().map(Vec::len).sum::<usize>(), 16);
    }

    #[test]
    fn interval_examples() {
        let x = parse("x1", 1, b0()).unwrap();
        let iv = coefficient_interval(&x, &x);
        assert!(iv.low.is_one() && iv.high.is_one());
        let zero = BoolFunction::zero(b0(), 1).unwrap();
        let iv = coefficient_interval(&zero, &x);
        assert!(iv.low.is_zero() && iv.high.is_zero());
    }

    // f_xyz as a function of (y, z) with coefficients in the free algebra on x:
    // atom a0 stands for x, atom a1 for x'.
    #[test]
    fn interval_with_function_coefficients() {
        let bx = Algebra::new(2).unwrap();
        let x = bx.from_mask(0b01);
        let yz: Vec<String> = ["y", "z"].map(String::from).to_vec();
        // f(x,y,z) = x + x'z' written over (y,z): a0 + a1 z'
        let f = parse_named("a0 + a1 z'", &yz, bx).unwrap();
        let phi = parse_named("y z", &yz, bx).unwrap();
        let iv = coefficient_interval(&f, &phi);
        assert_eq!(iv.low, x);
        assert_eq!(iv.high, x);
        let phi = parse_named("y' z", &yz, bx).unwrap();
        assert_eq!(coefficient_interval(&f, &phi).low, x);
    }

    #[test]
    fn class_examples() {
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(3);
        let b = Algebra::new(3).unwrap();
        let f = crate::random::random_function(&mut rng, b, 3);
        let mt = OrthonormalSet::minterm_set(b, 3).unwrap();
        let cm = is_in_class(&f, &mt);
        assert_eq!(cm.constants.unwrap(), f.coeffs());

        // x1 x2 + x1' x2' has no constant expansion in {x1, x1'}.
        let g = parse("x1 x2 + x1' x2'", 2, b0()).unwrap();
        let x1 = parse("x1", 2, b0()).unwrap();
        let phi = OrthonormalSet::verify_on(&[x1.clone(), x1.complement()]).unwrap();
        let cm = is_in_class(&g, &phi);
        assert!(!cm.in_class());
        assert!(cm.intervals[0].low.is_one() && cm.intervals[0].high.is_zero());
        let exhaustive = b0().elements().any(|a1| {
            b0().elements()
                .any(|a2| &x1.scale(&a1) | &x1.complement().scale(&a2) == g)
        });
        assert!(!exhaustive);

        // β1 φ1 + β2 φ2 + β3 φ3 over 2^3 with atoms as β.
        let members = on3_members(b);
        let phi = OrthonormalSet::verify_on(&members).unwrap();
        let beta: Vec<_> = (0..3).map(|i| b.atom(i).unwrap()).collect();
        let f = members
            .iter()
            .zip(&beta)
            .fold(BoolFunction::zero(b, 3).unwrap(), |acc, (m, c)| {
                acc.join(&m.scale(c))
            });
        assert_eq!(is_in_class(&f, &phi).constants.unwrap(), beta);
    }

    #[test]
    fn expand_examples() {
        let b = Algebra::new(2).unwrap();
        let f = parse("a0 x1 + a1 x1'", 1, b).unwrap();
        let x = parse("x1", 1, b).unwrap();
        let phi = OrthonormalSet::verify_on(&[x.clone(), x.complement()]).unwrap();
        let e = expand(&f, &phi, CoefficientPolicy::Low);
        assert_eq!(e.constants().unwrap(), &[f.coeff(1), f.coeff(0)]);
        let one = BoolFunction::one(b, 1).unwrap();
        let e = expand(&one, &phi, CoefficientPolicy::High);
        assert!(e.constants().unwrap().iter().all(AlgebraElement::is_one));
        assert_eq!(e.reconstruct(&phi), one);

        let g = parse("x1 x2 + x1' x2'", 2, b).unwrap();
        let x1 = parse("x1", 2, b).unwrap();
        let phi = OrthonormalSet::verify_on(&[x1.clone(), x1.complement()]).unwrap();
        for policy in [CoefficientPolicy::Low, CoefficientPolicy::High] {
            let e = expand(&g, &phi, policy);
            assert!(matches!(e, Expansion::Functions(_)));
            assert_eq!(e.reconstruct(&phi), g);
        }
    }

    #[test]
    fn expand_in_terms_examples() {
        let b = b0();
        let f = parse("x1 x2' + x2 x3", 3, b).unwrap();
        let t = vec![
            Term::from_exponents(&[0, -1, -1]).unwrap(),
            Term::from_exponents(&[1, -1, -1]).unwrap(),
        ];
        let coeffs = expand_in_terms(&f, &t).unwrap();
        let (c1, c0) = f.shannon_sop(0).unwrap();
        assert_eq!(coeffs, vec![c0, c1]);

        let c = BoolFunction::one(b, 3).unwrap();
        let ladder: Vec<Term> = ladder_terms(3);
        assert!(expand_in_terms(&c, &ladder)
            .unwrap()
            .iter()
            .all(BoolFunction::is_one));

        let bad = vec![t[0].clone(), t[0].clone()];
        assert_eq!(expand_in_terms(&f, &bad), Err(OnError::NotOrthogonal(1, 2)));
    }

    // f_xyz with the minterm terms of (y, z): f/t equals the interval lows.
    #[test]
    fn expand_in_terms_matches_block_lows() {
        let f = parse_named("x + x y' z + x y + x' z' + x y' + x y z", &xyz(), b0()).unwrap();
        let terms: Vec<Term> = (0..4)
            .map(|j| {
                let yz = Term::minterm(2, j);
                let mut e = vec![Exponent::Free];
                e.extend_from_slice(yz.exponents());
                Term::new(e)
            })
            .collect();
        let coeffs = expand_in_terms(&f, &terms).unwrap();
        let chunks = f.block_cofactors(&[1, 2]).unwrap();
        for (j, c) in coeffs.iter().enumerate() {
            // c is a function of x alone; compare with the block cofactor.
            let over_x = c.block_cofactors(&[1, 2]).unwrap();
            assert!(over_x.iter().all(|g| g == &chunks[j]));
        }
    }

    #[test]
    fn text_format() {
        let text = "# Example\n3 3;\nM1 = {0, 5, 7};\nM2 = {1,3,6};\nM3={2 4}\n";
        let on = OrthonormalSet::parse(text, b0()).unwrap();
        assert_eq!(on.order(), 3);
        assert_eq!(OrthonormalSet::parse(&on.to_text(), b0()).unwrap(), on);

        let dup = "2 1; M1 = x1; M2 = x1";
        assert_eq!(
            OrthonormalSet::parse(dup, b0()),
            Err(OnError::NotOrthogonal(1, 2))
        );
        let overlap = "2 1; M1 = {0,1}; M2 = {1}";
        assert_eq!(
            OrthonormalSet::parse(overlap, b0()),
            Err(OnError::NotOrthogonal(1, 2))
        );
        assert!(matches!(
            OrthonormalSet::parse("2 1; M1 = {0}", b0()),
            Err(OnError::Format(_))
        ));
        assert!(matches!(
            OrthonormalSet::parse("1 1; M2 = {0,1}", b0()),
            Err(OnError::Format(_))
        ));
        let mixed = "2 2; M1 = x1; M2 = {0, 1}";
        let on = OrthonormalSet::parse(mixed, b0()).unwrap();
        assert_eq!(on.blocks(), &[vec![2, 3], vec![0, 1]]);
    }

    mod props {
        use super::*;
        use crate::random;
        use proptest::prelude::*;
        use rand::{rngs::StdRng, SeedableRng};

        proptest! {
            #[test]
            fn partition_round_trips(seed in any::<u64>(), n in 1usize..5) {
                let mut rng = StdRng::seed_from_u64(seed);
                let m = 1 + (seed as usize) % (1 << n);
                let blocks = random::random_partition(&mut rng, n, m);
                let on = OrthonormalSet::from_blocks(b0(), n, blocks).unwrap();
                let again = OrthonormalSet::verify_on(&on.members()).unwrap();
                prop_assert_eq!(&again, &on);
                prop_assert_eq!(OrthonormalSet::parse(&on.to_text(), b0()).unwrap(), on);
            }

            // Any in-interval constant choice reconstructs f.
            #[test]
            fn expansion_soundness(seed in any::<u64>()) {
                let mut rng = StdRng::seed_from_u64(seed);
                let b = Algebra::new(2).unwrap();
                let n = 3;
                let m = 1 + (seed as usize) % 8;
                let phi = OrthonormalSet::from_blocks(b, n, random::random_partition(&mut rng, n, m)).unwrap();
                let consts: Vec<_> = (0..m).map(|_| random::random_element(&mut rng, b)).collect();
                let f = Expansion::Constants(consts).reconstruct(&phi);
                let cm = is_in_class(&f, &phi);
                prop_assert!(cm.in_class());
                let pick: Vec<_> = cm.intervals.iter().map(|iv| {
                    iv.low.clone() | (random::random_element(&mut rng, b) & iv.high.clone())
                }).collect();
                prop_assert!(pick.iter().zip(&cm.intervals).all(|(p, iv)| iv.contains(p)));
                prop_assert_eq!(Expansion::Constants(pick).reconstruct(&phi), f);
            }

            #[test]
            fn minterm_set_always_in_class(seed in any::<u64>()) {
                let mut rng = StdRng::seed_from_u64(seed);
                let b = Algebra::new(3).unwrap();
                let f = random::random_function(&mut rng, b, 3);
                let mt = OrthonormalSet::minterm_set(b, 3).unwrap();
                prop_assert!(is_in_class(&f, &mt).in_class());
                // Sum of the minterms is one at random points of B^3.
                let z: Vec<_> = (0..3).map(|_| random::random_element(&mut rng, b)).collect();
                let s = mt.members().iter().fold(b.zero(), |acc, m| acc | m.evaluate(&z).unwrap());
                prop_assert!(s.is_one());
            }

            #[test]
            fn block_interval_matches_range_formula(seed in any::<u64>()) {
                let mut rng = StdRng::seed_from_u64(seed);
                let b = Algebra::new(3).unwrap();
                let f = random::random_function(&mut rng, b, 3);
                let phi = OrthonormalSet::from_blocks(b, 3, random::random_partition(&mut rng, 3, 3)).unwrap();
                for i in 0..3 {
                    prop_assert_eq!(block_interval(&f, &phi, i), coefficient_interval(&f, &phi.member(i)));
                }
            }
        }

        // Class test vs. exhaustive constant search on 2^2, n ≤ 2, m ≤ 3.
        #[test]
        fn class_test_matches_exhaustive_search() {
            let b = Algebra::new(2).unwrap();
            let els: Vec<_> = b.elements().collect();
            let mut rng = StdRng::seed_from_u64(11);
            for n in 1..=2usize {
                for m in 1..=3usize.min(1 << n) {
                    for _ in 0..40 {
                        let phi = OrthonormalSet::from_blocks(
                            b,
                            n,
                            random::random_partition(&mut rng, n, m),
                        )
                        .unwrap();
                        let f = random::random_function(&mut rng, b, n);
                        let mut found = false;
                        let total = els.len().pow(m as u32);
                        for mut code in 0..total {
                            let c: Vec<_> = (0..m)
                                .map(|_| {
                                    let e = els[code % 4].clone();
                                    code /= 4;
                                    e
                                })
                                .collect();
                            if Expansion::Constants(c).reconstruct(&phi) == f {
                                found = true;
                                break;
                            }
                        }
                        assert_eq!(is_in_class(&f, &phi).in_class(), found);
                    }
                }
            }
        }
    }
}
