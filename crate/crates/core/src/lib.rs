pub mod automorphisms;
pub mod cli;
pub mod coefficients;
pub mod error;
pub mod free_algebra;
pub mod hopf;
pub mod pbw;

pub use coefficients::{Exponents, LaurentPoly, RationalPoint, Ring, Scalar, Var};
pub use error::{Error, Result};
