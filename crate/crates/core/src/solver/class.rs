// SPDX-License-Identifier: Apache-2.0

//! Consistency tests driven by an expansion in an ON set.

use super::linear::{solve_linear_on, solve_on_system, Representatives};
use super::Assignment;
use crate::algebra::{product, AlgebraElement};
use crate::error::{OnError, SolverError};
use crate::function::BoolFunction;
use crate::orthonormal::{block_interval, is_in_class, OrthonormalSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCertificate {
    pub consistent: bool,
    /// Lower-bound constants `α_i` of `f = Σ α_i φ_i`.
    pub constants: Vec<AlgebraElement>,
    /// `Π α_i`.
    pub product: AlgebraElement,
    /// ON solution `β` of `Σ α_i β_i = 0`.
    pub beta: Option<Vec<AlgebraElement>>,
    /// `Z` with `φ_i(Z) = β_i`, hence `f(Z) = 0`.
    pub witness: Option<Assignment>,
}

fn check_shape(f: &BoolFunction, phi: &OrthonormalSet) -> Result<(), SolverError> {
    if f.algebra() != phi.algebra() || f.arity() != phi.arity() {
        return Err(OnError::ShapeMismatch.into());
    }
    Ok(())
}

/// Decides `f(X) = 0` for `f` with constant coefficients in `phi`:
/// consistent iff `Π α_i = 0`.
pub fn consistency_on_class(
    f: &BoolFunction,
    phi: &OrthonormalSet,
) -> Result<ClassCertificate, SolverError> {
    check_shape(f, phi)?;
    let cm = is_in_class(f, phi);
    let constants = match cm.constants {
        Some(c) => c,
        None => {
            return Err(SolverError::InapplicableClass {
                member: cm.first_violation().map_or(0, |i| i + 1),
            })
        }
    };
    let product = product(f.algebra(), &constants);
    let beta = solve_linear_on(&constants, None)?;
    let witness = match &beta {
        Some(b) => solve_on_system(phi, b, &Representatives::Smallest)?,
        None => None,
    };
    if let Some(w) = &witness {
        let z = w.to_tuple().expect("ON system solution is total");
        debug_assert!(f.evaluate(&z)?.is_zero());
    }
    Ok(ClassCertificate {
        consistent: beta.is_some(),
        constants,
        product,
        beta,
        witness,
    })
}

/// `Π α_i(X)`; if `f(Z) = 0` then this product vanishes at `Z` too.
///
/// A member whose constant interval is nonempty contributes its lower
/// bound, any other member contributes `f φ_i`. Inside the class the result
/// is the constant `Π α_i`, so the test is exact there and only necessary
/// outside it.
pub fn necessary_condition(
    f: &BoolFunction,
    phi: &OrthonormalSet,
) -> Result<BoolFunction, SolverError> {
    check_shape(f, phi)?;
    let mut acc = BoolFunction::one(f.algebra(), f.arity())?;
    for i in 0..phi.order() {
        let iv = block_interval(f, phi, i);
        let coeff = if iv.is_nonempty() {
            BoolFunction::constant(f.algebra(), f.arity(), &iv.low)?
        } else {
            f.meet(&phi.member(i))
        };
        acc = acc.meet(&coeff);
    }
    Ok(acc)
}

/// Constant coefficient of a single ON member over the switching algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B0Coefficient {
    /// `f φ ≡ 0`.
    Zero,
    /// `f' φ ≡ 0`.
    One,
    NonConstant,
}

/// Tautology test for the coefficient of `phi_member` in an expansion of `f`.
/// A zero member has coefficient `0`.
pub fn b0_coefficient(
    f: &BoolFunction,
    phi_member: &BoolFunction,
) -> Result<B0Coefficient, SolverError> {
    let alg = f.algebra();
    if !alg.is_two_element() {
        return Err(SolverError::WrongAlgebra(alg.atoms()));
    }
    if phi_member.algebra() != alg || phi_member.arity() != f.arity() {
        return Err(OnError::ShapeMismatch.into());
    }
    let on = &phi_member.planes()[0];
    let fp = &f.planes()[0];
    Ok(if on.is_disjoint(fp) {
        B0Coefficient::Zero
    } else if on.is_subset(fp) {
        B0Coefficient::One
    } else {
        B0Coefficient::NonConstant
    })
}

/// Right-hand side of the equation tested by [`b0_consistency`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Target {
    #[default]
    Zero,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum B0Verdict {
    /// `f` takes the target on the whole of member `member`; `point` is its
    /// smallest minterm index.
    Consistent { member: usize, point: usize },
    /// No member qualifies and `f` has constant coefficients in `Φ`.
    Inconsistent,
    /// No member qualifies but `f` lies outside the class, so no verdict.
    Undetermined,
}

/// Over the switching algebra, `f(X) = 0` (or `= 1`) with `f` in the class
/// of `phi` is consistent iff some coefficient equals the target.
pub fn b0_consistency(
    f: &BoolFunction,
    phi: &OrthonormalSet,
    target: Target,
) -> Result<B0Verdict, SolverError> {
    let alg = f.algebra();
    if !alg.is_two_element() {
        return Err(SolverError::WrongAlgebra(alg.atoms()));
    }
    check_shape(f, phi)?;
    let fp = &f.planes()[0];
    for (i, block) in phi.blocks().iter().enumerate() {
        let hit = match target {
            Target::Zero => block.iter().all(|&j| !fp.get(j)),
            Target::One => block.iter().all(|&j| fp.get(j)),
        };
        if hit {
            return Ok(B0Verdict::Consistent {
                member: i,
                point: block[0],
            });
        }
    }
    Ok(if is_in_class(f, phi).in_class() {
        B0Verdict::Inconsistent
    } else {
        B0Verdict::Undetermined
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::function::{parse, parse_named, point};
    use crate::oracle::{brute_consistency, Budget};
    use crate::orthonormal::tests::on3_members;
    use crate::random;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn xyz() -> Vec<String> {
        ["x", "y", "z"].map(String::from).to_vec()
    }

    fn f_xyz(alg: Algebra) -> BoolFunction {
        parse_named("x + x y' z + x y + x' z' + x y' + x y z", &xyz(), alg).unwrap()
    }

    fn combine(phi: &OrthonormalSet, c: &[AlgebraElement]) -> BoolFunction {
        let mut acc = BoolFunction::zero(phi.algebra(), phi.arity()).unwrap();
        for (i, ci) in c.iter().enumerate() {
            acc = acc.join(&phi.member(i).scale(ci));
        }
        acc
    }

    #[test]
    fn on3_combination_is_consistent() {
        let alg = Algebra::new(3).unwrap();
        let phi = OrthonormalSet::verify_on(&on3_members(alg)).unwrap();
        let beta = vec![
            alg.from_mask(0b001),
            alg.from_mask(0b010),
            alg.from_mask(0b100),
        ];
        let f = combine(&phi, &beta);
        let cert = consistency_on_class(&f, &phi).unwrap();
        assert!(cert.consistent && cert.product.is_zero());
        assert_eq!(cert.constants, beta);
        let z = cert.witness.unwrap().to_tuple().unwrap();
        assert!(f.evaluate(&z).unwrap().is_zero());
    }

    #[test]
    fn constant_one_is_inconsistent() {
        let alg = Algebra::new(2).unwrap();
        let phi = OrthonormalSet::verify_on(&on3_members(alg)).unwrap();
        let one = BoolFunction::one(alg, 3).unwrap();
        let cert = consistency_on_class(&one, &phi).unwrap();
        assert!(!cert.consistent && cert.witness.is_none());
        assert!(cert.constants.iter().all(AlgebraElement::is_one));
        let nc = necessary_condition(&one, &phi).unwrap();
        assert!(nc.is_one());
    }

    #[test]
    fn outside_class_is_rejected() {
        let b0 = Algebra::two();
        let f = parse("x1", 1, b0).unwrap();
        let phi = OrthonormalSet::from_blocks(b0, 1, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            consistency_on_class(&f, &phi),
            Err(SolverError::InapplicableClass { member: 1 })
        );
    }

    #[test]
    fn class_decision_matches_oracle_b0() {
        let b0 = Algebra::two();
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..300 {
            let n = rng.random_range(1..=4);
            let m = rng.random_range(1..=(1 << n));
            let phi = OrthonormalSet::from_blocks(b0, n, random::random_partition(&mut rng, n, m))
                .unwrap();
            let c: Vec<_> = (0..m)
                .map(|_| random::random_element(&mut rng, b0))
                .collect();
            let f = combine(&phi, &c);
            let cert = consistency_on_class(&f, &phi).unwrap();
            let oracle = brute_consistency(&f, Budget::default()).unwrap();
            assert_eq!(cert.consistent, oracle.consistent);
            let nc = necessary_condition(&f, &phi).unwrap();
            assert_eq!(nc.as_constant(), Some(cert.product.clone()));
        }
    }

    #[test]
    fn necessary_condition_vanishes_at_solutions() {
        let alg = Algebra::new(2).unwrap();
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.random_range(1..=3);
            let m = rng.random_range(1..=(1 << n));
            let phi = OrthonormalSet::from_blocks(alg, n, random::random_partition(&mut rng, n, m))
                .unwrap();
            let f = random::random_function(&mut rng, alg, n);
            let nc = necessary_condition(&f, &phi).unwrap();
            if let Some(z) = brute_consistency(&f, Budget::default()).unwrap().witness {
                assert!(nc.evaluate(&z).unwrap().is_zero());
            }
            for j in 0..1 << n {
                let a = point(alg, n, j);
                if f.evaluate(&a).unwrap().is_zero() {
                    assert!(nc.evaluate(&a).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn b0_single_variable() {
        let b0 = Algebra::two();
        let x = parse("x1", 1, b0).unwrap();
        let phi = OrthonormalSet::verify_on(&[x.clone(), x.complement()]).unwrap();
        assert_eq!(
            b0_coefficient(&x, &x.complement()).unwrap(),
            B0Coefficient::Zero
        );
        assert_eq!(b0_coefficient(&x, &x).unwrap(), B0Coefficient::One);
        assert_eq!(
            b0_consistency(&x, &phi, Target::Zero).unwrap(),
            B0Verdict::Consistent {
                member: 1,
                point: 0
            }
        );
        assert_eq!(
            b0_consistency(&x, &phi, Target::One).unwrap(),
            B0Verdict::Consistent {
                member: 0,
                point: 1
            }
        );
        let one = BoolFunction::one(b0, 1).unwrap();
        assert_eq!(
            b0_consistency(&one, &phi, Target::Zero).unwrap(),
            B0Verdict::Inconsistent
        );
    }

    // With x = 0 fixed, the coefficient of y z among the (y,z) minterms vanishes.
    #[test]
    fn b0_xyz_function_at_x0() {
        let b0 = Algebra::two();
        let f = f_xyz(b0).cofactor(0, false).unwrap();
        let yz = parse_named("y z", &xyz(), b0).unwrap();
        let y_z_ = parse_named("y' z'", &xyz(), b0).unwrap();
        assert_eq!(b0_coefficient(&f, &yz).unwrap(), B0Coefficient::Zero);
        assert_eq!(b0_coefficient(&f, &y_z_).unwrap(), B0Coefficient::One);
        let nc = parse_named("y z", &xyz(), b0).unwrap();
        assert_eq!(
            b0_coefficient(&f_xyz(b0), &nc).unwrap(),
            B0Coefficient::NonConstant
        );
    }

    #[test]
    fn b0_rejects_larger_algebras() {
        let alg = Algebra::new(2).unwrap();
        let f = BoolFunction::zero(alg, 1).unwrap();
        let phi = OrthonormalSet::minterm_set(alg, 1).unwrap();
        assert_eq!(
            b0_consistency(&f, &phi, Target::Zero),
            Err(SolverError::WrongAlgebra(2))
        );
        assert_eq!(b0_coefficient(&f, &f), Err(SolverError::WrongAlgebra(2)));
    }

    #[test]
    fn b0_matches_oracle_inside_class() {
        let b0 = Algebra::two();
        let mut rng = StdRng::seed_from_u64(29);
        let mut decided = 0;
        for _ in 0..400 {
            let n = rng.random_range(1..=8);
            let m = rng.random_range(1..=(1usize << n).min(12));
            let phi = OrthonormalSet::from_blocks(b0, n, random::random_partition(&mut rng, n, m))
                .unwrap();
            let f = if rng.random_bool(0.5) {
                let c: Vec<_> = (0..m)
                    .map(|_| random::random_element(&mut rng, b0))
                    .collect();
                combine(&phi, &c)
            } else {
                random::random_function(&mut rng, b0, n)
            };
            let sat = brute_consistency(&f, Budget::default()).unwrap().consistent;
            match b0_consistency(&f, &phi, Target::Zero).unwrap() {
                B0Verdict::Consistent { point, .. } => {
                    assert!(sat);
                    assert!(f.coeff(point).is_zero());
                    decided += 1;
                }
                B0Verdict::Inconsistent => {
                    assert!(!sat);
                    decided += 1;
                }
                B0Verdict::Undetermined => assert!(!is_in_class(&f, &phi).in_class()),
            }
            // f = 1 via the complement.
            let dual = b0_consistency(&f, &phi, Target::One).unwrap();
            let comp = b0_consistency(&f.complement(), &phi, Target::Zero).unwrap();
            assert_eq!(dual, comp);
        }
        assert!(decided > 200);
    }
}
