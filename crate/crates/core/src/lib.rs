//! Exact structure theory for finite-dimensional Novikov algebras over `Q`
//! and `GF(p)`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod field;
pub mod format;
pub mod generators;
pub mod lattice;
pub mod linalg;
pub mod report;
pub mod structure;
pub mod theorems;

pub use algebra::{Algebra, AnyAlgebra, IdentityId};
pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use linalg::{Matrix, Subspace};
pub use structure::{IdealHandle, Sidedness};
