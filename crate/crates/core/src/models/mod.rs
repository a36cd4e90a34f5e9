//! Small classical models: the fixed quartic on `P^2 × P^2`, the `(1,6)`
//! scroll, arithmetic genus of reducible curves, Lefschetz parity and the
//! nilpotent subgroups of `GL(2)` inverted by the Cartan involution.

mod genus;
mod gl2;
mod lefschetz;
mod scroll;
mod sigma;

pub use genus::{hironaka_genus, line_curve_mult, required_lambda_degree, CurveConfig};
pub use gl2::{gl2_weyl_check, Gl2Branch, Gl2Report};
pub use lefschetz::{lefschetz_parity, CohomologyTraces, LefschetzReport};
pub use scroll::{scroll16_model, Scroll16Report};
pub use sigma::{sigma_fixed_conic, SigmaReport};
