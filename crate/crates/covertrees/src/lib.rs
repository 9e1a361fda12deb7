//! Exact spanning-tree counting for multigraphs and their (Z/2Z)^m covers.
//!
//! The crate stays in arbitrary-precision integer arithmetic end to end:
//! Laplacians and twisted Laplacians are integer matrices, determinants are
//! computed fraction-free, and tree counts are exact however large.
//!
//! Modules:
//! - [`exact_linalg`]: integer matrices and Bareiss determinants.
//! - [`multigraph`]: multigraphs, the theta / B / hypercube families,
//!   Laplacians, and the edge-list text format.
//! - [`spanning`]: Matrix-Tree counts, a deletion-contraction oracle, and
//!   closed forms.
//! - [`covers`]: voltage graphs, derived covers, characters, and twisted
//!   determinants.
//! - [`identities`]: verification runs tying all routes together.
//! - [`report`]: the structured result of a verification run.

pub mod covers;
pub mod error;
pub mod exact_linalg;
pub mod identities;
pub mod multigraph;
pub mod report;
pub mod spanning;

#[cfg(test)]
pub(crate) mod testutil;

pub use covers::{enumerate_characters, Character, VoltageGraph};
pub use error::{Error, Result};
pub use exact_linalg::IntMatrix;
pub use multigraph::Multigraph;
pub use report::{CensusRow, Check, VerificationReport};
pub use spanning::TreeCount;
