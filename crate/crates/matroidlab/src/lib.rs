//! Exact analysis of 3-connected matroids at desk scale: connectivity
//! functions, vertical and cyclic 3-separations, fans, segments, theta
//! separators, and the deletable/contractible/elastic classification of
//! every element, with exhaustive verifiers for the structural theorems the
//! classification obeys.

pub mod catalog;
pub mod cli;
pub mod connectivity;
pub mod core;
pub mod elasticity;
pub mod error;
pub mod io;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
