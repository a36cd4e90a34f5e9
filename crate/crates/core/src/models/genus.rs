//! Arithmetic genus of a union of curves and intersection lengths of a line
//! with a parametrized branch.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::binforms::{BinForm, ParamPoint};
use crate::error::{Error, Result};
use crate::exactnum::{span_dim, GaussRational};
use crate::ratcurves::RatCurve;

/// Components with their arithmetic genera, and singular points with their
/// contribution `i(Λ, P)` to the singularity cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct CurveConfig {
    components: Vec<(String, i64)>,
    singular_points: Vec<(String, u64)>,
}

#[derive(Deserialize)]
struct RawConfig {
    components: Vec<(String, i64)>,
    #[serde(default)]
    singular_points: Vec<(String, u64)>,
}

impl TryFrom<RawConfig> for CurveConfig {
    type Error = Error;
    fn try_from(r: RawConfig) -> Result<Self> {
        CurveConfig::new(r.components, r.singular_points)
    }
}

impl CurveConfig {
    pub fn new(
        components: Vec<(String, i64)>,
        singular_points: Vec<(String, u64)>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Input(
                "a configuration needs at least one component".into(),
            ));
        }
        if let Some((label, _)) = singular_points.iter().find(|(_, i)| *i == 0) {
            return Err(Error::Input(format!(
                "singular point {label} has contribution 0"
            )));
        }
        Ok(CurveConfig {
            components,
            singular_points,
        })
    }

    pub fn components(&self) -> &[(String, i64)] {
        &self.components
    }

    pub fn singular_points(&self) -> &[(String, u64)] {
        &self.singular_points
    }

    pub fn lambda_degree(&self) -> i64 {
        self.singular_points.iter().map(|(_, i)| *i as i64).sum()
    }
}

/// `p_a = Σ p_a(C_i) + deg Λ - (r - 1)`.
pub fn hironaka_genus(config: &CurveConfig) -> i64 {
    let r = config.components.len() as i64;
    config.components.iter().map(|(_, g)| g).sum::<i64>() + config.lambda_degree() - (r - 1)
}

/// `deg Λ` forced by the genera of the components and the total genus.
pub fn required_lambda_degree(component_genera: &[i64], total: i64) -> i64 {
    total - component_genera.iter().sum::<i64>() + component_genera.len() as i64 - 1
}

/// Intersection length at `C(t0)` of the line cut out by `functionals`:
/// the least vanishing order of `λ_j(C(t))` at `t0`.
pub fn line_curve_mult(
    functionals: &[Vec<GaussRational>],
    c: &RatCurve,
    t0: &ParamPoint,
) -> Result<usize> {
    let n1 = c.ambient_dim() + 1;
    if let Some(l) = functionals.iter().find(|l| l.len() != n1) {
        return Err(Error::DimensionMismatch {
            expected: n1,
            found: l.len(),
        });
    }
    if functionals.is_empty() || span_dim(functionals)? != functionals.len() {
        return Err(Error::Input("the functionals are not independent".into()));
    }
    let pulled: Vec<BinForm> = functionals
        .iter()
        .map(|l| BinForm::linear_combination(l, c.components()))
        .collect::<Result<_>>()?;
    if pulled.iter().any(|f| !f.eval_at(t0).is_zero()) {
        return Err(Error::Input(format!(
            "the curve does not meet the linear space at {t0}"
        )));
    }
    pulled
        .iter()
        .filter_map(|f| f.order_at(t0))
        .min()
        .ok_or_else(|| Error::Input("the curve lies in the linear space".into()))
}
