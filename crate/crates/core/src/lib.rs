//! Subword complexes of nu-Tamari lattices, brick vectors and the bounded
//! faces of the brick polyhedron.

pub mod check;
pub mod coxeter;
pub mod error;
pub mod export;
pub mod faces;
pub mod grid;
pub mod linalg;
pub mod oracle;
pub mod pipedream;
pub mod projection;
pub mod subword;
pub mod trees;

pub use error::{Error, Result};
