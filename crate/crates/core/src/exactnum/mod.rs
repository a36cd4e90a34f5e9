//! Exact arithmetic over the Gaussian rationals and dense linear algebra on top.

mod echelon;
mod gauss;
mod matrix;

pub use echelon::EchelonBasis;
pub use gauss::GaussRational;
pub use matrix::{span_dim, ExactMatrix};
