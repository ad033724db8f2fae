//! The six isomorphism classes of two-dimensional left-symmetric
//! dialgebras, and the published dimension table for their derivation
//! spaces.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Algebra, Product};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, QVector};
use crate::rational::Rational;
use crate::weights::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
}

impl ClassId {
    pub const ALL: [ClassId; 6] = [
        ClassId::L1,
        ClassId::L2,
        ClassId::L3,
        ClassId::L4,
        ClassId::L5,
        ClassId::L6,
    ];

    /// Parameter names the class takes, in display order.
    pub fn params(self) -> &'static [Param] {
        match self {
            ClassId::L1 => &[Param::A, Param::B],
            ClassId::L2 => &[Param::B, Param::C],
            ClassId::L3 => &[Param::B],
            ClassId::L4 => &[Param::C],
            ClassId::L5 => &[Param::A, Param::C],
            ClassId::L6 => &[Param::A],
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.index() + 1)
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "L1" => Ok(ClassId::L1),
            "L2" => Ok(ClassId::L2),
            "L3" => Ok(ClassId::L3),
            "L4" => Ok(ClassId::L4),
            "L5" => Ok(ClassId::L5),
            "L6" => Ok(ClassId::L6),
            _ => Err(Error::parse("class", format!("unknown class {s:?}, expected L1..L6"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Param {
    A,
    B,
    C,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::C => "c",
        }
    }
}

pub const DEFAULT_A: i64 = 2;
pub const DEFAULT_B: i64 = 3;
pub const DEFAULT_C: i64 = 5;
pub const DEFAULT_DELTA: i64 = 7;

/// A class together with values for the parameters it uses.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClassSpec {
    pub id: ClassId,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub c: Option<Rational>,
}

impl ClassSpec {
    /// Uses the given values where the class takes the parameter and the
    /// default otherwise; values for parameters the class does not take
    /// are dropped.
    pub fn with_params(id: ClassId, a: Option<Rational>, b: Option<Rational>, c: Option<Rational>) -> Self {
        let takes = |p| id.params().contains(&p);
        let pick = |p, v: Option<Rational>, default: i64| takes(p).then(|| v.unwrap_or_else(|| default.into()));
        ClassSpec {
            id,
            a: pick(Param::A, a, DEFAULT_A),
            b: pick(Param::B, b, DEFAULT_B),
            c: pick(Param::C, c, DEFAULT_C),
        }
    }

    pub fn param(&self, p: Param) -> Option<&Rational> {
        match p {
            Param::A => self.a.as_ref(),
            Param::B => self.b.as_ref(),
            Param::C => self.c.as_ref(),
        }
    }

    fn require(&self, p: Param) -> Result<&Rational> {
        self.param(p)
            .ok_or_else(|| Error::ConstraintViolation(format!("{} requires parameter {}", self.id, p.name())))
    }

    /// Checks the class's inequality constraints.
    pub fn validate(&self) -> Result<()> {
        for &p in self.id.params() {
            self.require(p)?;
        }
        let violated = match self.id {
            ClassId::L1 if self.require(Param::A)?.is_zero() => Some("a ≠ 0"),
            ClassId::L2 if self.require(Param::C)?.is_zero() => Some("c ≠ 0"),
            ClassId::L5 if self.require(Param::A)?.is_one() => Some("a ≠ 1"),
            ClassId::L6 if self.require(Param::A)?.is_zero() => Some("a ≠ 0"),
            _ => None,
        };
        match violated {
            Some(msg) => Err(Error::ConstraintViolation(msg.to_string())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.id)?;
        for (idx, &p) in self.id.params().iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            match self.param(p) {
                Some(v) => write!(f, "{}={}", p.name(), v)?,
                None => write!(f, "{}=?", p.name())?,
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn default_sample_params(id: ClassId) -> ClassSpec {
    ClassSpec::with_params(id, None, None, None)
}

/// The class's algebra: exactly the listed nonzero products on `e1, e2`.
pub fn instantiate(spec: &ClassSpec) -> Result<Algebra> {
    spec.validate()?;
    let one = Rational::one;
    let zero = Rational::zero;
    let p = |x: Param| spec.param(x).cloned().expect("validated");
    let mut alg = Algebra::zero(2);
    let mut set = |w, i, j, v: [Rational; 2]| alg.set_product(w, i, j, &QVector(v.to_vec()));
    use Product::{Left as L, Right as R};
    match spec.id {
        ClassId::L1 => {
            set(L, 0, 1, [one(), zero()]);
            set(L, 1, 1, [zero(), one()]);
            set(R, 1, 0, [p(Param::A), zero()]);
            set(R, 1, 1, [p(Param::B), one()]);
        }
        ClassId::L2 => {
            set(L, 0, 1, [one(), zero()]);
            set(L, 1, 1, [p(Param::C), one()]);
            set(R, 1, 1, [p(Param::B), one()]);
        }
        ClassId::L3 => {
            set(L, 0, 1, [one(), zero()]);
            set(L, 1, 1, [zero(), one()]);
            set(R, 1, 1, [p(Param::B), one()]);
        }
        ClassId::L4 => {
            set(L, 1, 1, [p(Param::C), one()]);
            set(R, 1, 0, [one(), zero()]);
            set(R, 1, 1, [zero(), one()]);
        }
        ClassId::L5 => {
            let (a, c) = (p(Param::A), p(Param::C));
            let c_one_minus_a = &c * &(Rational::one() - &a);
            set(L, 1, 1, [c, one()]);
            set(R, 1, 0, [a, zero()]);
            set(R, 1, 1, [c_one_minus_a, one()]);
        }
        ClassId::L6 => {
            set(L, 1, 1, [zero(), one()]);
            set(R, 1, 0, [p(Param::A), zero()]);
            set(R, 1, 1, [zero(), one()]);
        }
    }
    Ok(alg)
}

/// Published dimensions, per class, in [`Family::TABLE_ORDER`].
const EXPECTED_DIMS: [[usize; 8]; 6] = [
    [1, 1, 1, 0, 0, 0, 0, 1],
    [0, 1, 1, 0, 0, 2, 0, 1],
    [1, 2, 1, 0, 0, 2, 0, 1],
    [1, 2, 2, 0, 0, 0, 2, 1],
    [1, 1, 2, 0, 0, 0, 2, 1],
    [1, 1, 2, 0, 0, 0, 2, 2],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRow {
    pub class: ClassId,
    pub family: Family,
    pub expected_dim: usize,
}

fn family_index(family: Family) -> Option<usize> {
    Family::TABLE_ORDER.iter().position(|&f| f == family)
}

/// The published dimension of `Der` for `id` at `family`; `None` for
/// `EndS`, which the table does not list.
pub fn expected_dimension(id: ClassId, family: Family) -> Option<usize> {
    family_index(family).map(|f| EXPECTED_DIMS[id.index()][f])
}

/// All 48 published rows, class-major in table order.
pub fn expected_rows() -> Vec<ExpectedRow> {
    ClassId::ALL
        .iter()
        .flat_map(|&class| {
            Family::TABLE_ORDER.iter().map(move |&family| ExpectedRow {
                class,
                family,
                expected_dim: expected_dimension(class, family).expect("table family"),
            })
        })
        .collect()
}

/// The published basis pattern for a cell, instantiated at `spec`'s
/// parameters (one matrix per free entry, that entry set to 1).
///
/// `None` when the cell cannot be instantiated: the `L4 (1,1,0)` cell uses
/// a parameter `b` that `L4` does not have, and the `L1 (1,1,1)` cell
/// divides by `b`.
pub fn expected_pattern(spec: &ClassSpec, family: Family) -> Option<Vec<QMatrix>> {
    let m = |rows: [[Rational; 2]; 2]| QMatrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).expect("2x2");
    let z = Rational::zero;
    let o = Rational::one;
    let identity = || vec![QMatrix::identity(2)];
    let upper_row = || vec![m([[o(), z()], [z(), z()]]), m([[z(), o()], [z(), z()]])];
    // [[d11, -x d11 + x d22], [0, d22]]
    let sheared = |x: &Rational| vec![m([[o(), -x], [z(), z()]]), m([[z(), x.clone()], [z(), o()]])];
    let param = |p| spec.param(p).cloned();

    use Family::*;
    let pattern = match (spec.id, family) {
        (_, D100 | D011) => vec![],
        (_, EndS) => return None,

        (ClassId::L1, D111) => {
            let (a, b) = (param(Param::A)?, param(Param::B)?);
            let ratio = (&a - &Rational::one()) * b.recip()?;
            vec![m([[ratio, o()], [z(), z()]])]
        }
        (ClassId::L1 | ClassId::L2, D110 | D101 | D01Delta) => identity(),
        (ClassId::L1, D001 | D010) => vec![],

        (ClassId::L2, D111) => vec![],
        (ClassId::L2, D001) => upper_row(),
        (ClassId::L2, D010) => vec![],

        (ClassId::L3, D111) => vec![m([[o(), -param(Param::B)?], [z(), z()]])],
        (ClassId::L3, D110) => sheared(&param(Param::B)?),
        (ClassId::L3, D101 | D01Delta) => identity(),
        (ClassId::L3, D001) => upper_row(),
        (ClassId::L3, D010) => vec![],

        (ClassId::L4 | ClassId::L5, D111) => vec![m([[o(), -param(Param::C)?], [z(), z()]])],
        (ClassId::L4, D110) => return None,
        (ClassId::L5, D110) => identity(),
        (ClassId::L4 | ClassId::L5, D101) => sheared(&param(Param::C)?),
        (ClassId::L4 | ClassId::L5, D001) => vec![],
        (ClassId::L4 | ClassId::L5 | ClassId::L6, D010) => upper_row(),
        (ClassId::L4 | ClassId::L5, D01Delta) => identity(),

        (ClassId::L6, D111) => vec![m([[o(), z()], [z(), z()]])],
        (ClassId::L6, D110) => identity(),
        (ClassId::L6, D101) => vec![m([[o(), z()], [z(), z()]]), m([[z(), z()], [z(), o()]])],
        (ClassId::L6, D001) => vec![],
        (ClassId::L6, D01Delta) => upper_row(),
    };
    Some(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: ClassId, a: Option<i64>, b: Option<i64>, c: Option<i64>) -> ClassSpec {
        ClassSpec::with_params(id, a.map(Into::into), b.map(Into::into), c.map(Into::into))
    }

    #[test]
    fn constraint_violations() {
        assert_eq!(
            instantiate(&spec(ClassId::L1, Some(0), None, None)),
            Err(Error::ConstraintViolation("a ≠ 0".into()))
        );
        assert_eq!(
            instantiate(&spec(ClassId::L5, Some(1), None, Some(1))),
            Err(Error::ConstraintViolation("a ≠ 1".into()))
        );
        assert_eq!(
            instantiate(&spec(ClassId::L2, None, None, Some(0))),
            Err(Error::ConstraintViolation("c ≠ 0".into()))
        );
        assert_eq!(
            instantiate(&spec(ClassId::L6, Some(0), None, None)),
            Err(Error::ConstraintViolation("a ≠ 0".into()))
        );
        let missing = ClassSpec {
            id: ClassId::L4,
            a: None,
            b: None,
            c: None,
        };
        assert!(matches!(instantiate(&missing), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn l3_with_zero_b() {
        let alg = instantiate(&spec(ClassId::L3, None, Some(0), None)).unwrap();
        let v = |x: &[i64]| QVector::from_i64(x);
        assert_eq!(alg.basis_product(Product::Left, 0, 1), v(&[1, 0]));
        assert_eq!(alg.basis_product(Product::Left, 1, 1), v(&[0, 1]));
        assert_eq!(alg.basis_product(Product::Right, 1, 1), v(&[0, 1]));
        assert!(alg.basis_product(Product::Left, 0, 0).is_zero());
        assert!(alg.basis_product(Product::Left, 1, 0).is_zero());
        for (i, j) in [(0, 0), (0, 1), (1, 0)] {
            assert!(alg.basis_product(Product::Right, i, j).is_zero());
        }
    }

    #[test]
    fn l2_products() {
        let alg = instantiate(&spec(ClassId::L2, None, Some(1), Some(1))).unwrap();
        assert_eq!(
            alg.product_left(&QVector::unit(2, 0), &QVector::unit(2, 1)).unwrap(),
            QVector::from_i64(&[1, 0])
        );
        assert_eq!(
            alg.product_right(&QVector::unit(2, 1), &QVector::unit(2, 1)).unwrap(),
            QVector::from_i64(&[1, 1])
        );
    }

    #[test]
    fn l5_right_square() {
        let alg = instantiate(&spec(ClassId::L5, Some(3), None, Some(2))).unwrap();
        // c(1 − a) e1 + e2 = −4 e1 + e2
        assert_eq!(alg.basis_product(Product::Right, 1, 1), QVector::from_i64(&[-4, 1]));
        assert_eq!(alg.basis_product(Product::Right, 1, 0), QVector::from_i64(&[3, 0]));
        assert_eq!(alg.basis_product(Product::Left, 1, 1), QVector::from_i64(&[2, 1]));
    }

    #[test]
    fn defaults() {
        let l1 = default_sample_params(ClassId::L1);
        assert_eq!(
            (l1.a.clone(), l1.b.clone(), l1.c.clone()),
            (Some(2.into()), Some(3.into()), None)
        );
        assert_eq!(default_sample_params(ClassId::L4).c, Some(5.into()));
        let l5 = default_sample_params(ClassId::L5);
        assert_eq!((l5.a, l5.c), (Some(2.into()), Some(5.into())));
        for id in ClassId::ALL {
            assert!(instantiate(&default_sample_params(id)).is_ok());
        }
    }

    #[test]
    fn irrelevant_params_are_dropped() {
        let s = spec(ClassId::L4, Some(9), Some(9), Some(1));
        assert_eq!((s.a, s.b, s.c), (None, None, Some(1.into())));
    }

    #[test]
    fn expected_table() {
        assert_eq!(expected_dimension(ClassId::L2, Family::D111), Some(0));
        assert_eq!(expected_dimension(ClassId::L4, Family::D010), Some(2));
        assert_eq!(expected_dimension(ClassId::L6, Family::D01Delta), Some(2));
        assert_eq!(expected_dimension(ClassId::L1, Family::EndS), None);
        let rows = expected_rows();
        assert_eq!(rows.len(), 48);
        assert!(rows.iter().all(|r| r.expected_dim <= 2));
    }

    #[test]
    fn patterns_agree_with_stored_dimensions() {
        for id in ClassId::ALL {
            let s = default_sample_params(id);
            for f in Family::TABLE_ORDER {
                if let Some(p) = expected_pattern(&s, f) {
                    assert_eq!(Some(p.len()), expected_dimension(id, f), "{id} {f}");
                }
            }
        }
        assert!(expected_pattern(&default_sample_params(ClassId::L4), Family::D110).is_none());
        assert!(expected_pattern(&spec(ClassId::L1, Some(2), Some(0), None), Family::D111).is_none());
    }

    #[test]
    fn class_ids_parse() {
        assert_eq!("l4".parse::<ClassId>().unwrap(), ClassId::L4);
        assert!("L7".parse::<ClassId>().is_err());
        assert_eq!(ClassId::L6.to_string(), "L6");
    }
}
