//! Exact symbolic engine for boundary and interior noncommutative residues of
//! perturbed de Rham Hodge operators, with an independent floating-point oracle.

pub mod algebra;
pub mod error;

pub use algebra::{GaussianRational, Generator, Monomial, Poly};
pub use error::{Error, Result};

/// Engine version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod clifford;
pub mod geometry;
pub mod matrix;
pub mod par;
pub mod xi;
pub mod jets;
pub mod drivers;
pub mod numcheck;
