//! `(ρ, τ, σ)`-derivations: the membership predicate, the assembled linear
//! system and its exact kernel.
//!
//! A linear map `d` (column convention: column `j` of its matrix is
//! `d(e_j)`) is a `(ρ, τ, σ)`-derivation when, for both products `∗`,
//!
//! ```text
//! ρ d(p ∗ q) = τ d(p) ∗ q + σ p ∗ d(q)
//! ```
//!
//! [`derivation_residual`] evaluates this identity directly on basis pairs
//! and serves as the membership oracle. [`derivation_system`] assembles the
//! same conditions as a coefficient matrix over the column-major
//! vectorization of `d`; the two are computed independently so each can
//! check the other.

use serde::Serialize;

use crate::algebra::{Algebra, Product};
use crate::error::{Error, Result};
use crate::linalg::{span_basis, QMatrix, QVector};
use crate::weights::WeightTriple;

fn check_square(alg: &Algebra, d: &QMatrix) -> Result<()> {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::shape(format!("{n}x{n}"), format!("{}x{}", d.rows(), d.cols())));
    }
    Ok(())
}

/// Stacked residuals `ρ d(e_i∗e_j) − τ d(e_i)∗e_j − σ e_i∗d(e_j)` over
/// both products and all basis pairs, in the same row order as
/// [`derivation_system`]. Zero exactly when `d` is a derivation.
pub fn derivation_residual(alg: &Algebra, t: &WeightTriple, d: &QMatrix) -> Result<QVector> {
    check_square(alg, d)?;
    let n = alg.dim();
    let images: Vec<QVector> = (0..n).map(|j| d.column(j)).collect();
    let mut out = Vec::with_capacity(2 * n * n * n);
    for which in Product::BOTH {
        for i in 0..n {
            for j in 0..n {
                let e_i = QVector::unit(n, i);
                let e_j = QVector::unit(n, j);
                let lhs = d.mul_vec(&alg.basis_product(which, i, j))?.scaled(&t.rho);
                let first = alg.product(which, &images[i], &e_j)?.scaled(&t.tau);
                let second = alg.product(which, &e_i, &images[j])?.scaled(&t.sigma);
                out.extend(lhs.sub(&first).sub(&second).0);
            }
        }
    }
    Ok(QVector(out))
}

pub fn is_derivation(alg: &Algebra, t: &WeightTriple, d: &QMatrix) -> Result<bool> {
    Ok(derivation_residual(alg, t, d)?.is_zero())
}

/// The `2n³ × n²` coefficient matrix whose kernel is the derivation space.
///
/// Row `((w·n + i)·n + j)·n + m` is component `m` of the identity for
/// product `w` (⊣ then ⊢) on the pair `(e_i, e_j)`; column `l·n + k` is the
/// unknown `d[k][l]`.
pub fn derivation_system(alg: &Algebra, t: &WeightTriple) -> QMatrix {
    let n = alg.dim();
    let var = |row: usize, col: usize| col * n + row;
    let mut sys = QMatrix::zeros(2 * n * n * n, n * n);
    for (w, which) in Product::BOTH.into_iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                for m in 0..n {
                    let r = ((w * n + i) * n + j) * n + m;
                    for k in 0..n {
                        // ρ Σ_k c_ij^k d[m][k]
                        let c = alg.constant(which, i, j, k);
                        if !c.is_zero() {
                            sys[(r, var(m, k))] += &t.rho * c;
                        }
                        // −τ Σ_k d[k][i] c_kj^m
                        let c = alg.constant(which, k, j, m);
                        if !c.is_zero() {
                            sys[(r, var(k, i))] -= &t.tau * c;
                        }
                        // −σ Σ_k d[k][j] c_ik^m
                        let c = alg.constant(which, i, k, m);
                        if !c.is_zero() {
                            sys[(r, var(k, j))] -= &t.sigma * c;
                        }
                    }
                }
            }
        }
    }
    sys
}

/// A basis of `Der_(ρ,τ,σ)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationSpace {
    pub triple: WeightTriple,
    pub n: usize,
    pub basis: Vec<QMatrix>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectorized(&self) -> Vec<QVector> {
        self.basis.iter().map(QMatrix::vectorize).collect()
    }

    /// Row-reduced stacked vectorization; equal for two spaces iff they
    /// are the same subspace.
    pub fn canonical_span(&self) -> Vec<QVector> {
        span_basis(self.n * self.n, &self.vectorized())
    }

    pub fn same_subspace(&self, other: &DerivationSpace) -> bool {
        self.n == other.n && self.canonical_span() == other.canonical_span()
    }

    pub fn contains(&self, d: &QMatrix) -> bool {
        crate::linalg::solve_in_span(&self.vectorized(), &d.vectorize()).is_some()
    }
}

pub fn derivation_space(alg: &Algebra, t: &WeightTriple) -> DerivationSpace {
    let n = alg.dim();
    let basis = derivation_system(alg, t)
        .nullspace()
        .iter()
        .map(|v| QMatrix::unvectorize(n, n, v).expect("kernel vector has n² entries"))
        .collect();
    DerivationSpace {
        triple: t.clone(),
        n,
        basis,
    }
}

/// Rank of the residual map computed through the membership oracle alone:
/// the residuals of the `n²` elementary matrices `E_kl`, stacked as columns.
/// The derivation space has dimension `n² − oracle_rank`.
pub fn oracle_rank(alg: &Algebra, t: &WeightTriple) -> usize {
    let n = alg.dim();
    let columns: Vec<QVector> = (0..n * n)
        .map(|idx| {
            let e = QMatrix::unvectorize(n, n, &QVector::unit(n * n, idx)).expect("n² unit");
            derivation_residual(alg, t, &e).expect("square")
        })
        .collect();
    span_basis(2 * n * n * n, &columns).len()
}

/// `[d1, d2] = d1∘d2 − d2∘d1`
pub fn bracket(d1: &QMatrix, d2: &QMatrix) -> Result<QMatrix> {
    if !d1.is_square() || d1.rows() != d2.rows() || d1.cols() != d2.cols() {
        return Err(Error::shape(
            format!("{}x{}", d1.rows(), d1.cols()),
            format!("{}x{}", d2.rows(), d2.cols()),
        ));
    }
    d1.matmul(d2)?.sub(&d2.matmul(d1)?)
}

/// Checks that commutators of basis derivations at `t` are derivations at
/// `(ρ², τ², σ²)`.
pub fn verify_bracket_closure(alg: &Algebra, t: &WeightTriple) -> bool {
    let space = derivation_space(alg, t);
    let squared = t.squared();
    let b = &space.basis;
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let c = bracket(&b[i], &b[j]).expect("same shape");
            if !is_derivation(alg, &squared, &c).expect("square") {
                return false;
            }
        }
    }
    true
}
