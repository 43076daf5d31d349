//! Graded Betti numbers of quotients by monomial ideals.
//!
//! Over the ambient polynomial ring resolutions are finite and computed exactly
//! from the lcm lattice. Over the Clements–Lindström ring itself they are
//! infinite and computed in a truncated window.

mod ambient;
mod bounds;
pub(crate) mod field;
mod oracle;
mod quadratic;
mod table;

pub use ambient::{betti_ambient, betti_eliahou_kervaire, LATTICE_GENERATOR_LIMIT};
pub use bounds::{bounds_report, degrees_grow_fast, provenance, BoundsReport, Provenance};
pub use field::FieldSpec;
pub use oracle::{betti_resolution_oracle, default_window};
pub use quadratic::betti_quadratic_recursion;
pub use table::{BettiTable, Over, Window};
