//! Green's relations, stability and minimal conditions for finite
//! semigroups and biacts, plus decision procedures for a catalog of
//! infinite examples and a harness that checks the structural theory
//! against all of them.
//!
//! The main entry points:
//!
//! - [`FiniteSemigroup`] and [`FiniteBiact`] build and validate finite
//!   objects (tables, transformation closures, quotients, Rees quotients,
//!   relative and product biacts).
//! - [`GreenStructure`] computes L, R, J, H, D with their class posets.
//! - [`props`] evaluates stability, periodicity and the minimal conditions.
//! - [`symbolic`] holds the infinite witnesses (bicyclic monoid, free
//!   semigroups, `(ℕ,+)`, ...) and the `U(S,T;A)` / `U(S,A)` extensions.
//! - [`enumerate`] lists small semigroups and biacts; [`verify`] runs the
//!   claim registry over them.

pub mod actions;
pub mod biact;
pub mod bitset;
pub mod cli;
pub mod congruence;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod green;
pub mod iso;
pub mod props;
pub mod semigroup;
pub mod symbolic;
pub mod verify;

pub use actions::Actions;
pub use biact::{FiniteBiact, Subact};
pub use congruence::{
    congruence_closure, quotient_biact, quotient_semigroup, Congruence, Partition,
};
pub use error::{Error, Result};
pub use green::{green_index, GreenIndexResult, GreenStructure, Preorder, Relation};
pub use semigroup::{Adjoin, FiniteSemigroup, Monoidization, Role, SubsetRole};
