//! Exact computations with finite-dimensional right Leibniz algebras given by
//! structure constants over the rationals.

pub mod algebra;
pub mod analysis;
pub mod builders;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod modules;
pub mod poly;

pub use algebra::{AlgebraTable, DerivedSeries, Quotient};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
pub use modules::{Component, ComponentKind, ModuleAction};
