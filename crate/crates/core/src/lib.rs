//! Exact computations for Jacobi-Jordan algebras: cohomology, Massey brackets,
//! formal and versal deformations, symplectic and pseudo-euclidean structures.

pub mod algebra;
pub mod bilinear;
pub mod catalog;
pub mod cohomology;
pub mod deformation;
pub mod cochain;
pub mod error;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod reference;
pub mod versal;

pub use algebra::{JJAlgebra, LinearMap};
pub use cochain::SymCochain;
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace};
