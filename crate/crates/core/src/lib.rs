//! Exact computations on finite-dimensional algebras given by structure
//! constants, aimed at Zinbiel algebras: identity checks, multiplication
//! operators, inner derivations (symbolic and as a subspace), the full
//! derivation algebra, annihilators, and the classified algebras of
//! dimensions 2 to 4 with their reference inner-derivation tables.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod io;
pub mod linalg;
mod render;
pub mod sampling;
pub mod scalar;

pub use algebra::{AlgebraSpec, IdealWitness, ZinbielViolation};
pub use derivation::{DerivationKind, DerivationSpace, LinearForm, SymbolicAdMatrix};
pub use error::{Error, Result};
pub use linalg::{Matrix, OperatorMatrix, Subspace, Vector};
pub use scalar::Scalar;
