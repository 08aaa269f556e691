pub mod error;
pub mod field;
pub mod group;
pub mod liealg;
pub mod linalg;
pub mod orbits;
pub mod par;
pub mod poly;
pub mod proof;
pub mod sample;
pub mod slicegeom;
mod sparse;

pub use error::{Error, Result};
pub use field::GaussRat;
pub use linalg::{Matrix, Subspace};
pub use par::Exec;
pub use poly::{Membership, MultiPoly, VarSet};
