//! Exact root systems and epsilon-canonical Chevalley bases of the finite
//! dimensional simple Lie algebras.
//!
//! The crate builds the full multiplication table of the basis
//! `{h_i} ∪ {e_alpha}` in two independent ways and checks them against each
//! other:
//!
//! * [`canonical::build_inductive`] works for every type and follows the
//!   defining ladder relations of the canonical basis through the Jacobi
//!   identity, height by height.
//! * [`closed_form`] evaluates a sign formula in the simply-laced types
//!   (A, D, E), and [`folding`] obtains B, C, F and G as fixed points of a
//!   diagram automorphism of a simply-laced algebra.
//!
//! Everything is integer arithmetic; nothing is approximated.

pub mod canonical;
pub mod cartan;
pub mod closed_form;
pub mod error;
pub mod folding;
pub mod io;
pub mod report;
pub mod roots;
pub mod table;
pub mod verify;

#[cfg(feature = "cli")]
pub mod cli;

pub use canonical::{build_inductive, build_inductive_with, flip_epsilon_table, omega_check, SplitRule};
pub use cartan::{
    build_cartan, default_epsilon, folding_source, standard_automorphism, CartanMatrix, CartanType,
    DiagramAutomorphism, Family, SignFunction,
};
pub use error::{Error, Result};
pub use report::{VerificationReport, Violation};
pub use roots::{generate_roots, CorootVector, Root, RootSystem};
pub use table::BracketTable;
