//! Finite-dimensional algebras with two bilinear products given by
//! structure constants, and the dialgebra axiom checkers.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, QVector};
use crate::rational::Rational;

/// Which of the two products: `Left` is ⊣, `Right` is ⊢.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Product {
    Left,
    Right,
}

impl Product {
    pub const BOTH: [Product; 2] = [Product::Left, Product::Right];

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Left => "⊣",
            Product::Right => "⊢",
        }
    }
}

/// An `n`-dimensional vector space with products ⊣ and ⊢.
///
/// `left[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i ⊣ e_j`, and
/// likewise `right` for ⊢. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    dim: usize,
    left: Vec<Rational>,
    right: Vec<Rational>,
}

impl Algebra {
    /// The algebra with both products identically zero. Panics if `dim == 0`.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "algebra dimension must be at least 1");
        let n3 = dim * dim * dim;
        Algebra {
            dim,
            left: vec![Rational::zero(); n3],
            right: vec![Rational::zero(); n3],
        }
    }

    /// Ex. 2.5-style lift: both products equal to a single product with
    /// constants `table` (same layout as `left`).
    pub fn from_single_product(dim: usize, table: Vec<Rational>) -> Result<Self> {
        Self::from_tensors(dim, table.clone(), table)
    }

    pub fn from_tensors(dim: usize, left: Vec<Rational>, right: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::shape("dimension >= 1", "0"));
        }
        let n3 = dim * dim * dim;
        for t in [&left, &right] {
            if t.len() != n3 {
                return Err(Error::shape(format!("{n3} structure constants"), t.len()));
            }
        }
        Ok(Algebra { dim, left, right })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim;
        assert!(i < n && j < n && k < n, "basis index out of range");
        (i * n + j) * n + k
    }

    fn tensor(&self, which: Product) -> &[Rational] {
        match which {
            Product::Left => &self.left,
            Product::Right => &self.right,
        }
    }

    /// Coefficient of `e_k` in `e_i * e_j`.
    pub fn constant(&self, which: Product, i: usize, j: usize, k: usize) -> &Rational {
        &self.tensor(which)[self.offset(i, j, k)]
    }

    pub fn set_constant(&mut self, which: Product, i: usize, j: usize, k: usize, c: Rational) {
        let o = self.offset(i, j, k);
        match which {
            Product::Left => self.left[o] = c,
            Product::Right => self.right[o] = c,
        }
    }

    /// Sets `e_i * e_j` to the given coordinate vector.
    pub fn set_product(&mut self, which: Product, i: usize, j: usize, value: &QVector) {
        assert_eq!(value.len(), self.dim);
        for k in 0..self.dim {
            self.set_constant(which, i, j, k, value[k].clone());
        }
    }

    pub fn left_constants(&self) -> &[Rational] {
        &self.left
    }

    pub fn right_constants(&self) -> &[Rational] {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.left.iter().chain(&self.right).all(Rational::is_zero)
    }

    /// `e_i * e_j` as a coordinate vector.
    pub fn basis_product(&self, which: Product, i: usize, j: usize) -> QVector {
        let o = self.offset(i, j, 0);
        QVector(self.tensor(which)[o..o + self.dim].to_vec())
    }

    /// `x * y` by bilinear extension.
    pub fn product(&self, which: Product, x: &QVector, y: &QVector) -> Result<QVector> {
        let n = self.dim;
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::shape(
                    format!("vector of length {n}"),
                    format!("length {}", v.len()),
                ));
            }
        }
        let t = self.tensor(which);
        let mut out = QVector::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                let o = (i * n + j) * n;
                for k in 0..n {
                    if !t[o + k].is_zero() {
                        out[k] += &xy * &t[o + k];
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn product_left(&self, x: &QVector, y: &QVector) -> Result<QVector> {
        self.product(Product::Left, x, y)
    }

    pub fn product_right(&self, x: &QVector, y: &QVector) -> Result<QVector> {
        self.product(Product::Right, x, y)
    }

    /// Structure constants of the same algebra expressed in the basis
    /// `f_j = Σ_k P[k][j] e_k`.
    pub fn change_basis(&self, p: &BasisChange) -> Result<Algebra> {
        let n = self.dim;
        if p.matrix().rows() != n {
            return Err(Error::shape(
                format!("{n}x{n} basis change"),
                format!("{}x{}", p.matrix().rows(), p.matrix().cols()),
            ));
        }
        let inv = p.inverse();
        let cols: Vec<QVector> = (0..n).map(|j| p.matrix().column(j)).collect();
        let mut out = Algebra::zero(n);
        for which in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    let old = self.product(which, &cols[i], &cols[j])?;
                    let new = inv.mul_vec(&old)?;
                    out.set_product(which, i, j, &new);
                }
            }
        }
        Ok(out)
    }

    /// Left-symmetric dialgebra identities LS1..LS4 on every basis triple.
    pub fn check_left_symmetric(&self) -> AxiomReport {
        self.check(&AxiomId::LEFT_SYMMETRIC)
    }

    /// Diassociative identities DI1..DI3 plus associativity of both products.
    pub fn check_diassociative(&self) -> AxiomReport {
        self.check(&AxiomId::DIASSOCIATIVE)
    }

    fn check(&self, axioms: &[AxiomId]) -> AxiomReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for &axiom in axioms {
            for p in 0..n {
                for q in 0..n {
                    for r in 0..n {
                        let residual = axiom.residual(self, p, q, r);
                        if !residual.is_zero() {
                            violations.push(Violation {
                                axiom,
                                triple: (p, q, r),
                                residual,
                            });
                        }
                    }
                }
            }
        }
        AxiomReport { violations }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim={}", self.dim)?;
        for which in Product::BOTH {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let v = self.basis_product(which, i, j);
                    if !v.is_zero() {
                        write!(f, ", e{}{}e{}={}", i + 1, which.symbol(), j + 1, v)?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

/// Invertible change of basis; column `j` holds the old coordinates of
/// the new basis vector `f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    matrix: QMatrix,
    inverse: QMatrix,
}

impl BasisChange {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        let inverse = matrix.invert()?;
        Ok(BasisChange { matrix, inverse })
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &QMatrix {
        &self.inverse
    }

    pub fn inverted(&self) -> BasisChange {
        BasisChange {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }
}

/// Whether the linear map with matrix `p` (column convention, shape
/// `dim(dst) x dim(src)`) preserves both products.
pub fn is_morphism(src: &Algebra, dst: &Algebra, p: &QMatrix) -> Result<bool> {
    if p.rows() != dst.dim() || p.cols() != src.dim() {
        return Err(Error::shape(
            format!("{}x{}", dst.dim(), src.dim()),
            format!("{}x{}", p.rows(), p.cols()),
        ));
    }
    let images: Vec<QVector> = (0..src.dim()).map(|j| p.column(j)).collect();
    for which in Product::BOTH {
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = p.mul_vec(&src.basis_product(which, i, j))?;
                let rhs = dst.product(which, &images[i], &images[j])?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Identity labels, in the order the identities are displayed in the
/// defining axiom lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomId {
    /// p ⊣ (q ⊣ r) = p ⊣ (q ⊢ r)
    LS1,
    /// (p ⊢ q) ⊢ r = (p ⊣ q) ⊢ r
    LS2,
    /// p⊣(q⊣r) − (p⊣q)⊣r = q⊢(p⊣r) − (q⊢p)⊣r
    LS3,
    /// p⊢(q⊢r) − (p⊢q)⊢r = q⊢(p⊢r) − (q⊢p)⊢r
    LS4,
    /// p ⊣ (q ⊣ r) = p ⊣ (q ⊢ r)
    DI1,
    /// (p ⊢ q) ⊣ r = p ⊢ (q ⊣ r)
    DI2,
    /// (p ⊢ q) ⊢ r = (p ⊣ q) ⊢ r
    DI3,
    /// (p ⊣ q) ⊣ r = p ⊣ (q ⊣ r)
    AssocLeft,
    /// (p ⊢ q) ⊢ r = p ⊢ (q ⊢ r)
    AssocRight,
}

impl AxiomId {
    pub const LEFT_SYMMETRIC: [AxiomId; 4] = [AxiomId::LS1, AxiomId::LS2, AxiomId::LS3, AxiomId::LS4];
    pub const DIASSOCIATIVE: [AxiomId; 5] = [
        AxiomId::DI1,
        AxiomId::DI2,
        AxiomId::DI3,
        AxiomId::AssocLeft,
        AxiomId::AssocRight,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AxiomId::LS1 => "LS1",
            AxiomId::LS2 => "LS2",
            AxiomId::LS3 => "LS3",
            AxiomId::LS4 => "LS4",
            AxiomId::DI1 => "DI1",
            AxiomId::DI2 => "DI2",
            AxiomId::DI3 => "DI3",
            AxiomId::AssocLeft => "ASSOC-L",
            AxiomId::AssocRight => "ASSOC-R",
        }
    }

    /// Left side minus right side on basis vectors `e_p, e_q, e_r`.
    pub fn residual(self, alg: &Algebra, p: usize, q: usize, r: usize) -> QVector {
        use Product::{Left as L, Right as R};
        let n = alg.dim();
        let e = |i| QVector::unit(n, i);
        // a * (b * c) and (a * b) * c with basis a, b, c
        let inner = |o1, a, o2, b, c| {
            let bc = alg.basis_product(o2, b, c);
            alg.product(o1, &e(a), &bc).expect("dimension checked")
        };
        let outer = |o1, a, b, o2, c| {
            let ab = alg.basis_product(o1, a, b);
            alg.product(o2, &ab, &e(c)).expect("dimension checked")
        };
        match self {
            AxiomId::LS1 | AxiomId::DI1 => inner(L, p, L, q, r).sub(&inner(L, p, R, q, r)),
            AxiomId::LS2 | AxiomId::DI3 => outer(R, p, q, R, r).sub(&outer(L, p, q, R, r)),
            AxiomId::LS3 => {
                let lhs = inner(L, p, L, q, r).sub(&outer(L, p, q, L, r));
                let rhs = inner(R, q, L, p, r).sub(&outer(R, q, p, L, r));
                lhs.sub(&rhs)
            }
            AxiomId::LS4 => {
                let lhs = inner(R, p, R, q, r).sub(&outer(R, p, q, R, r));
                let rhs = inner(R, q, R, p, r).sub(&outer(R, q, p, R, r));
                lhs.sub(&rhs)
            }
            AxiomId::DI2 => outer(R, p, q, L, r).sub(&inner(R, p, L, q, r)),
            AxiomId::AssocLeft => outer(L, p, q, L, r).sub(&inner(L, p, L, q, r)),
            AxiomId::AssocRight => outer(R, p, q, R, r).sub(&inner(R, p, R, q, r)),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: AxiomId,
    /// 0-based basis indices `(p, q, r)`.
    pub triple: (usize, usize, usize),
    pub residual: QVector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, r) = self.triple;
        write!(
            f,
            "{} at (e{}, e{}, e{}): residual {}",
            self.axiom,
            p + 1,
            q + 1,
            r + 1,
            self.residual
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn satisfied(&self) -> bool {
        self.violations.is_empty()
    }
}
