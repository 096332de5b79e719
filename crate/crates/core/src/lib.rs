//! Hydrogen pseudo-eigenfunctions built from Legendre functions of the
//! second kind, and their exact decomposition onto the bound states.
//!
//! The exact path works in ℚ(π²) end to end; [`quadrature`] provides an
//! independent floating-point oracle for every exact quantity.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hydrogen;
pub mod quadrature;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};
