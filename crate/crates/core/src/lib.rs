//! Finite quandle-like structures as Cayley tables.
//!
//! The crate decides the axioms of oriented singquandles, stuquandles and
//! oriented bondles in both of their presentations, builds the standard
//! example families, and enumerates small structures up to isomorphism.

pub mod agreement;
pub mod axioms;
pub mod constructions;
pub mod enumerate;
pub mod format;
pub mod tables;

pub use axioms::{CheckReport, Failure, Law};
pub use tables::{OpTable, Perm, PermGroup, Role, StructureBundle, TableError};
