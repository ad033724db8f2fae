//! Exact computation of `(ρ, τ, σ)`-derivation spaces of finite-dimensional
//! algebras with two products, with checkers for the diassociative and
//! left-symmetric dialgebra axioms and the catalog of two-dimensional
//! left-symmetric dialgebras.

pub mod algebra;
pub mod catalog;
pub mod derivation;
pub mod error;
pub mod io;
pub mod linalg;
pub mod nilpotency;
pub mod random;
pub mod rational;
pub mod report;
pub mod weights;

pub use algebra::{is_morphism, Algebra, AxiomId, AxiomReport, BasisChange, Product, Violation};
pub use catalog::{default_sample_params, expected_dimension, instantiate, ClassId, ClassSpec};
pub use derivation::{
    bracket, derivation_residual, derivation_space, derivation_system, is_derivation, oracle_rank,
    verify_bracket_closure, DerivationSpace,
};
pub use error::{Error, Result};
pub use linalg::{QMatrix, QVector, Rref};
pub use nilpotency::{der_lie_structure, is_characteristically_nilpotent, LieStructure};
pub use rational::Rational;
pub use weights::{canonicalize_triple, CanonicalWeightClass, Family, SignReading, WeightTriple};
