//! Lie structure of the ordinary derivation algebra and characteristic
//! nilpotency.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::derivation::{bracket, derivation_space};
use crate::error::{Error, Result};
use crate::linalg::{solve_in_span, span_basis, QMatrix, QVector};
use crate::rational::Rational;
use crate::weights::WeightTriple;

/// A finite-dimensional Lie algebra with basis `B_0..B_{m-1}` and
/// `[B_i, B_j] = Σ_k constants[(i*m + j)*m + k] B_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieStructure {
    pub dim: usize,
    pub constants: Vec<Rational>,
    /// The matrices realizing the basis.
    pub basis: Vec<QMatrix>,
}

impl LieStructure {
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_coords(&self, x: &QVector, y: &QVector) -> QVector {
        let m = self.dim;
        let mut out = QVector::zeros(m);
        for i in 0..m {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..m {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Dimensions of `L¹ = L, L^{k+1} = [L, L^k]` until the series hits
    /// zero or stops shrinking. The last entry repeats when it stabilizes
    /// at a nonzero dimension.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let m = self.dim;
        let whole: Vec<QVector> = (0..m).map(|i| QVector::unit(m, i)).collect();
        let mut current = whole.clone();
        let mut dims = vec![current.len()];
        while !current.is_empty() {
            let products: Vec<QVector> = whole
                .iter()
                .flat_map(|x| current.iter().map(move |y| (x, y)))
                .map(|(x, y)| self.bracket_coords(x, y))
                .filter(|v| !v.is_zero())
                .collect();
            let next = span_basis(m, &products);
            let stalled = next.len() == current.len();
            dims.push(next.len());
            if stalled {
                break;
            }
            current = next;
        }
        dims
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }
}

/// Bracket structure constants of `Der(S) = Der_(1,1,1)(S)` in its
/// canonical basis.
pub fn der_lie_structure(alg: &Algebra) -> Result<LieStructure> {
    let space = derivation_space(alg, &WeightTriple::from_i64(1, 1, 1));
    let basis = space.basis;
    let m = basis.len();
    let vecs: Vec<QVector> = basis.iter().map(QMatrix::vectorize).collect();
    let mut constants = vec![Rational::zero(); m * m * m];
    for i in 0..m {
        for j in 0..m {
            let c = bracket(&basis[i], &basis[j])?;
            let coords = solve_in_span(&vecs, &c.vectorize()).ok_or_else(|| {
                Error::InternalInconsistency(format!("[B{i}, B{j}] = {c} lies outside the derivation space"))
            })?;
            for (k, x) in coords.into_iter().enumerate() {
                constants[(i * m + j) * m + k] = x;
            }
        }
    }
    Ok(LieStructure {
        dim: m,
        constants,
        basis,
    })
}

pub fn is_characteristically_nilpotent(alg: &Algebra) -> Result<bool> {
    Ok(der_lie_structure(alg)?.is_nilpotent())
}
