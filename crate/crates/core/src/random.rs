//! Random test inputs: rationals, basis changes, catalog parameters and
//! left-symmetric dialgebras.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Algebra, BasisChange};
use crate::catalog::{instantiate, ClassId, ClassSpec};
use crate::linalg::QMatrix;
use crate::rational::Rational;
use crate::weights::WeightTriple;

/// `p/q` with `p ∈ [-num, num]`, `q ∈ [1, den]`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, num: i64, den: i64) -> Rational {
    loop {
        let r = rational(rng, num, den);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn triple<R: Rng + ?Sized>(rng: &mut R) -> WeightTriple {
    WeightTriple::new(rational(rng, 4, 3), rational(rng, 4, 3), rational(rng, 4, 3))
}

/// Invertible `n x n` matrix with integer entries in `[-bound, bound]`.
pub fn basis_change<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> BasisChange {
    loop {
        let entries = (0..n * n)
            .map(|_| Rational::from(rng.gen_range(-bound..=bound)))
            .collect();
        let m = QMatrix::from_row_major(n, n, entries).expect("n² entries");
        if let Ok(p) = BasisChange::new(m) {
            return p;
        }
    }
}

/// Parameters for `id` drawn at random, resampled until they satisfy the
/// class constraints.
pub fn class_spec<R: Rng + ?Sized>(rng: &mut R, id: ClassId) -> ClassSpec {
    loop {
        let spec = ClassSpec::with_params(
            id,
            Some(rational(rng, 6, 4)),
            Some(rational(rng, 6, 4)),
            Some(rational(rng, 6, 4)),
        );
        if spec.validate().is_ok() {
            return spec;
        }
    }
}

fn table(n: usize, entries: &[(usize, usize, usize)]) -> Vec<Rational> {
    let mut t = vec![Rational::zero(); n * n * n];
    for &(i, j, k) in entries {
        t[(i * n + j) * n + k] = Rational::one();
    }
    t
}

/// A few associative algebras, each lifted with both products equal.
pub fn associative_lifts() -> Vec<Algebra> {
    let lift = |n, e: &[(usize, usize, usize)]| Algebra::from_single_product(n, table(n, e)).expect("valid table");
    vec![
        // K × K
        lift(2, &[(0, 0, 0), (1, 1, 1)]),
        // K[x]/(x²), basis 1, x
        lift(2, &[(0, 0, 0), (0, 1, 1), (1, 0, 1)]),
        // K[x]/(x³)
        lift(3, &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 2, 2), (2, 0, 2), (1, 1, 2)]),
        // upper-triangular 2x2: E11, E12, E22
        lift(3, &[(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)]),
        // full 2x2 matrices, basis E11, E12, E21, E22 with E_ab E_cd = δ_bc E_ad
        lift(
            4,
            &[
                (0, 0, 0),
                (0, 1, 1),
                (1, 2, 0),
                (1, 3, 1),
                (2, 0, 2),
                (2, 1, 3),
                (3, 2, 2),
                (3, 3, 3),
            ],
        ),
        // left-zero semigroup algebra: x y = x
        lift(2, &[(0, 0, 0), (0, 1, 0), (1, 0, 1), (1, 1, 1)]),
    ]
}

/// A random two-dimensional algebra with constants in {−1, 0, 1}; it
/// may or may not satisfy any axiom.
pub fn sparse_algebra<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Algebra {
    let draw = |rng: &mut R| {
        (0..n * n * n)
            .map(|_| match rng.gen_range(0..6) {
                0 => Rational::one(),
                1 => -Rational::one(),
                _ => Rational::zero(),
            })
            .collect::<Vec<_>>()
    };
    let left = draw(rng);
    let right = draw(rng);
    Algebra::from_tensors(n, left, right).expect("n³ constants")
}

/// A random left-symmetric dialgebra: a catalog class at random
/// parameters, an associative lift, or an accepted random sparse
/// algebra, transported by a random basis change.
pub fn left_symmetric_algebra<R: Rng + ?Sized>(rng: &mut R) -> Algebra {
    let base = match rng.gen_range(0..3) {
        0 => {
            let id = *ClassId::ALL.choose(rng).expect("nonempty");
            instantiate(&class_spec(rng, id)).expect("constraints hold")
        }
        1 => associative_lifts().choose(rng).expect("nonempty").clone(),
        _ => {
            let mut found = None;
            for _ in 0..200 {
                let a = sparse_algebra(rng, 2);
                if !a.is_zero() && a.check_left_symmetric().satisfied() {
                    found = Some(a);
                    break;
                }
            }
            found.unwrap_or_else(|| associative_lifts()[0].clone())
        }
    };
    let p = basis_change(rng, base.dim(), 2);
    base.change_basis(&p).expect("square basis change")
}
