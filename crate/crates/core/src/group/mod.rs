//! Permutation groups: enumeration, classes, subgroups and the catalog.

pub mod catalog;
mod finite;
pub mod frobenius;
mod perm;
mod spec;
mod subgroup;

pub use catalog::{abelian, cyclic, cyclic_semidirect, dihedral, modular_group, semidirect, symmetric};
pub use finite::{ConjugacyClass, FiniteGroup, GroupRef, DEFAULT_ORDER_CAP};
pub use frobenius::{large_frobenius_group, matrix_class_count, matrix_closure, FrobeniusGroup, Mat2};
pub use perm::{Perm, MAX_DEGREE};
pub use spec::{default_catalog, GroupSpec};
pub use subgroup::{
    abelian_type, centralizer, centralizer_of, normalizer, sylow_subgroup, AbelianType, Subgroup,
};

