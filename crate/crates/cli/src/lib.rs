//! Front end for the `wres` binary: job specs, report rendering and reference tables.

pub mod identities;
pub mod job;
pub mod latex;
pub mod reference;
pub mod report;
pub mod run;
