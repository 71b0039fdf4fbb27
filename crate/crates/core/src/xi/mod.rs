//! Calculus in the normal covariable `ξ_n` on the co-sphere `|ξ'| = 1`.

mod rational;
mod sphere;
mod symbol;

pub use rational::RationalXi;
pub use sphere::{sphere_integrate, sphere_moment};
pub use symbol::MatrixSymbol;
