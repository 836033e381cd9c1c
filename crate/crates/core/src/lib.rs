//! Toric Gröbner bases, standard pairs, Stanley filtrations and the
//! geometry of Δ-normal configurations, all in exact arithmetic.

pub mod error;
pub mod families;
pub mod geometry;
pub mod ideals;
pub mod linalg;
pub mod report;
pub mod stanley;
pub mod toric;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use report::{CertificateReport, CheckItem};
