//! The simple Lie algebra of type G2, its central Weyl involution and the
//! fixed curves on hyperplane sections of the adjoint variety.

mod algebra;
mod hilbert;
mod involution;
mod omega;
mod roots;

pub use algebra::{build_g2, G2Algebra, G2Checks, DIM, H1, H2};
pub use hilbert::{
    fixed_curve_hilbert, fixed_curve_tables, hilbert_function, minus_hyperplane, regular_h_stream,
    restrict_quadric, FixedCurves, HilbertTable,
};
pub use involution::{
    chevalley_eigenbases, chevalley_involution, in_normalizer_not_torus, involution_checks,
    is_automorphism, simple_reflection_lift, weyl_lift_w0, InvolutionChecks, LinearInvolution,
    WeylLift,
};
pub use omega::{
    omega_quadrics, omega_quadrics_capped, on_adjoint_variety, quadratic_monomials, quadratic_row,
    sample_omega_points, OmegaQuadrics, QuadraticIdeal, RootFlows, BATCH, DEFAULT_CAP,
    VALIDATION_POINTS,
};
pub use roots::{cartan_integer, Root, RootCoords, RootSystemG2, CARTAN};
