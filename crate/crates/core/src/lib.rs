//! Exact-arithmetic toolkit for the geometry of the G2 adjoint variety, its
//! central Weyl involution and the rational curves fixed by it.
//!
//! Everything is computed over the Gaussian rationals `Q(i)`; nothing in the
//! crate rounds.  The modules build on each other bottom-up:
//!
//! * [`exactnum`] – field arithmetic and dense exact linear algebra,
//! * [`binforms`] – homogeneous binary forms in `(u, v)`,
//! * [`p1bundles`] – splitting types of kernel bundles on the projective line,
//! * [`ratcurves`] – parametrized rational curves, normal bundles, projections
//!   and secant analysis,
//! * [`g2lie`] – the Chevalley model of `g2`, its involutions and Hilbert
//!   functions of the fixed curves,
//! * [`models`] – small classical models (Segre conic, `(1,6)` scroll, genus
//!   and trace bookkeeping, the `GL(2)` unipotent check).

pub mod binforms;
pub mod error;
pub mod exactnum;
pub mod g2lie;
pub mod models;
pub mod p1bundles;
pub mod ratcurves;

pub use error::{Error, Result};
pub use exactnum::{ExactMatrix, GaussRational};
