//! Exact verification workbench for contramodules over finite-dimensional
//! Hopf algebras over prime fields.

pub mod algebra;
pub mod catalog;
pub mod certificate;
pub mod comodcontra;
pub mod error;
pub mod functors;
pub mod hopf;
pub mod interchange;
pub mod linalg;
pub mod mockproj;
pub mod poly;
pub mod repthy;
pub mod suite;

pub use certificate::Certificate;
pub use error::{Error, Result};
pub use linalg::{LinearMap, Matrix};
