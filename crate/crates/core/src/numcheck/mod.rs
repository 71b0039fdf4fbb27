//! Independent floating-point oracle for the boundary case values.
//!
//! Nothing here reuses the exact symbol calculus: Clifford matrices are Kronecker
//! products, normal derivatives are finite differences of a model metric, `π⁺` is a
//! Cauchy integral on a circle around `i`, the `ξ_n` integral is adaptive
//! quadrature and the sphere integral is a sampling rule.

pub mod cliff;
pub mod cmat;
pub mod crosscheck;
pub mod quad;
pub mod scenario;
pub mod series;
pub mod sphere;
pub mod symbols;

pub use crosscheck::{
    crosscheck, monte_carlo_contribution, numeric_boundary, numeric_evaluate_case, numeric_fibers, pair_tuples, NumericEstimate, Tolerance, Verdict,
    VerdictTable,
};
pub use quad::QuadConfig;
pub use scenario::{ContourConfig, NumericScenario, SphereRule};
