//! End-to-end pipelines: boundary case sums and interior residues.

pub mod cases;
pub mod interior;

pub use cases::{
    boundary_phi, boundary_phi_with, enumerate_cases, evaluate_case, pair_symbols, supported_pair, BoundaryResult,
    CaseReport, CaseTuple, VStarMode,
};
pub use interior::{build_e_prime, interior_prefactor, interior_wres, EndomorphismData, InteriorResult, InteriorVariant};
