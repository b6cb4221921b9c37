//! Demazure atoms and characters through crystals, Gelfand-Tsetlin
//! patterns and colored five-vertex lattice models.

pub mod binf;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod keys;
pub mod lattice;
pub mod laurent;
pub mod suite;
pub mod weyl;

pub use crystal::{GTPattern, StringPattern, Tableau};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use weyl::Permutation;
