//! Parametrized rational curves in projective space: reduction, immersion
//! tests, normal bundles, projections, catalecticants and join scrolls.

mod curve;
mod join;
mod secant;
mod sweep;
mod types;

pub use curve::{complement_functionals, reduce, same_point, NormalBundle, Projection, RatCurve};
pub use join::{join_scroll_degree, join_scroll_degree_seeded, ruling_determinant, JoinDegree};
pub use secant::{
    apolar_quadric, hankel_matrix, hankel_rank, power_vector, reconstructs,
    sylvester_secant_params, tangent_vector, SecantVerdict,
};
pub use sweep::{
    bernardi_centers, bernardi_sweep, random_curves, BernardiReport, CenterCase, CenterKind,
    ProjectionOutcome,
};
pub use types::{admissible_types, generic_splitting};
