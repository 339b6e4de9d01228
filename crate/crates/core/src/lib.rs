//! Exact computation of generalized homology for complexes with `d^N = 0`.

pub mod error;
pub mod linalg;
pub mod ncomplex;
pub mod qdga;
pub mod random;
pub mod rings;
pub mod simplicial;

pub use error::{Error, Result};
pub use linalg::{Matrix, Quotient, Subspace, Vector};
pub use rings::{Assumptions, Elem, Field, QContext};
