//! Finite-dimensional associative algebras given by structure constants.

mod idempotent;
mod loewy;
mod radical;
mod structure;

pub use idempotent::IdempotentDecomposition;
pub use loewy::LoewyProfile;
pub use radical::{commutative_radical, trace_radical};
pub use structure::{AlgElement, StructureAlgebra};
