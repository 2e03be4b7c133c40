//! Hecke algebras of Coxeter systems with independent parameters.

pub mod collapse;
pub mod commutative;
pub mod coxeter;
pub mod diagram;
pub mod error;
pub mod fib;
pub mod grothendieck;
pub mod hecke;
pub mod scalar;

pub use diagram::{CoxeterDiagram, EdgeWeight, SimpleGraph, VertexSet};
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
