//! Exact and numeric tools for generalized two-point quadrature rules
//! with Peano-kernel remainders and Grüss/Ostrowski-type bounds.

pub mod error;
pub mod funcmodel;
pub mod appell;
pub mod bounds;
pub mod cli;
pub mod kernels;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod rules;

pub use error::{Error, Result};
