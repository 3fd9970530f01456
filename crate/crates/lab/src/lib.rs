//! Command-line front end for `schroder-core`: CSV curve data for the
//! potentials, branches and trajectories, and JSON verification reports.

pub mod cli;
pub mod commands;
pub mod error;
pub mod parse;
pub mod table;
pub mod verify;

pub use error::{LabError, LabResult};
