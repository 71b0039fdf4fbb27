//! Exact scalars: Gaussian rationals and sparse polynomials over them.

mod gaussian;
mod generator;
mod poly;

pub use gaussian::{parse_rational, rational_to_string, GaussianRational};
pub use generator::Generator;
pub use poly::{Monomial, Poly};
