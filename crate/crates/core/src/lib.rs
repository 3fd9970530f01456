#![no_std]
//! Numerical machinery for the potentials underlying the logistic map
//! `x ↦ s x (1 - x)`: exact power-series engines, the Schröder/Poincaré
//! pair, switchback potential branches, transit-time quadrature and the
//! `s = 1` asymptotics. Needs only `core` and `alloc`.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod asymptotics;
pub mod dynamics;
pub mod error;
pub(crate) mod math;
pub mod potentials;
pub mod quadrature;
pub mod report;
pub mod schroder;
pub mod series;

pub use algebra::Scalar;
pub use error::{Error, Result};
