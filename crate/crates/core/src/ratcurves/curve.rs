use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binforms::{self, BinForm, ParamPoint};
use crate::error::{Error, Result};
use crate::exactnum::{EchelonBasis, ExactMatrix, GaussRational};
use crate::p1bundles::{splitting_type_of_kernel, GradedMap, SplittingType};

/// A base-point-free map `P^1 → P^n` given by `n + 1` forms of degree `d`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CurveFile", into = "CurveFile")]
pub struct RatCurve {
    ambient_dim: usize,
    degree: usize,
    components: Vec<BinForm>,
}

/// On-disk layout: `{"ambient_dim": n, "degree": d, "components": [[coeff, ...], ...]}`.
#[derive(Serialize, Deserialize)]
struct CurveFile {
    ambient_dim: usize,
    degree: usize,
    components: Vec<Vec<GaussRational>>,
}

impl TryFrom<CurveFile> for RatCurve {
    type Error = Error;
    fn try_from(file: CurveFile) -> Result<Self> {
        if file.components.len() != file.ambient_dim + 1 {
            return Err(Error::DimensionMismatch {
                expected: file.ambient_dim + 1,
                found: file.components.len(),
            });
        }
        let mut forms = Vec::with_capacity(file.components.len());
        for c in file.components {
            if c.len() != file.degree + 1 {
                return Err(Error::DimensionMismatch {
                    expected: file.degree + 1,
                    found: c.len(),
                });
            }
            forms.push(BinForm::new(c)?);
        }
        RatCurve::new(forms)
    }
}

impl From<RatCurve> for CurveFile {
    fn from(c: RatCurve) -> Self {
        CurveFile {
            ambient_dim: c.ambient_dim,
            degree: c.degree,
            components: c.components.iter().map(|f| f.coeffs().to_vec()).collect(),
        }
    }
}

/// Outcome of a linear projection `π_P: P^n ⇢ P^(n-1)`.
#[derive(Clone, Debug, Serialize)]
pub struct Projection {
    pub center: Vec<GaussRational>,
    pub functionals: Vec<Vec<GaussRational>>,
    pub curve: RatCurve,
    /// `deg C - deg π_P(C)`, the multiplicity of the center on the curve.
    pub degree_drop: usize,
}

/// Splitting type of the normal bundle together with the ambient space it
/// was computed in.
#[derive(Clone, Debug, Serialize)]
pub struct NormalBundle {
    pub splitting: SplittingType,
    pub ambient_dim: usize,
    /// Whether the curve was first restricted to its linear span.
    pub restricted: bool,
}

impl RatCurve {
    /// Validates equal degrees, `d >= 1` and the absence of base points.
    pub fn new(components: Vec<BinForm>) -> Result<Self> {
        let c = RatCurve::unchecked(components)?;
        let g = binforms::gcd_all(&c.components)?;
        if g.degree() > 0 {
            return Err(Error::Input(format!("components share the factor {g}")));
        }
        Ok(c)
    }

    fn unchecked(components: Vec<BinForm>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Input("a curve needs at least one component".into()));
        };
        let degree = first.degree();
        if let Some(bad) = components.iter().find(|f| f.degree() != degree) {
            return Err(Error::DimensionMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        if components.iter().all(BinForm::is_zero) {
            return Err(Error::Input("all components vanish".into()));
        }
        if degree == 0 {
            return Err(Error::Input("the map is constant".into()));
        }
        Ok(RatCurve {
            ambient_dim: components.len() - 1,
            degree,
            components,
        })
    }

    /// The rational normal curve `(u^n : u^(n-1) v : ... : v^n)`.
    pub fn rational_normal(n: usize) -> Self {
        RatCurve::monomial(n, &(0..=n).collect::<Vec<_>>())
    }

    /// Monomial curve with components `u^(d-k) v^k` for the given `k`.
    pub fn monomial(d: usize, v_exponents: &[usize]) -> Self {
        let forms = v_exponents
            .iter()
            .map(|&k| BinForm::monomial(d, k, GaussRational::one()))
            .collect();
        RatCurve::new(forms).expect("monomial curve with a base point")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[BinForm] {
        &self.components
    }

    pub fn point_at(&self, p: &ParamPoint) -> Vec<GaussRational> {
        self.components.iter().map(|f| f.eval_at(p)).collect()
    }

    /// The curve placed in coordinates `offset..offset+n+1` of `P^ambient`.
    pub fn embed(&self, ambient_dim: usize, offset: usize) -> Result<RatCurve> {
        if offset + self.ambient_dim > ambient_dim {
            return Err(Error::Input(format!(
                "cannot place P^{} at offset {offset} inside P^{ambient_dim}",
                self.ambient_dim
            )));
        }
        let mut comps = vec![BinForm::zero(self.degree); ambient_dim + 1];
        comps[offset..offset + self.components.len()].clone_from_slice(&self.components);
        Ok(RatCurve {
            ambient_dim,
            degree: self.degree,
            components: comps,
        })
    }

    /// `(n + 1) × (d + 1)` matrix of coefficients; its columns span `⟨C⟩`.
    pub fn coefficient_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_rows(
            self.components
                .iter()
                .map(|f| f.coeffs().to_vec())
                .collect(),
        )
        .expect("components share a degree")
    }

    /// Vector-space dimension of the linear span of the curve.
    pub fn span_dim(&self) -> usize {
        self.coefficient_matrix().rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.span_dim() == self.ambient_dim + 1
    }

    /// The curve inside its own span, in the coordinates of a maximal set of
    /// independent components.
    pub fn restrict_to_span(&self) -> RatCurve {
        let mut e = EchelonBasis::new(self.degree + 1);
        let keep: Vec<BinForm> = self
            .components
            .iter()
            .filter(|f| e.insert(f.coeffs()))
            .cloned()
            .collect();
        RatCurve::new(keep).expect("a subset of spanning components has no base points")
    }

    /// `2 × (n + 1)` Jacobian rows `∂f_i/∂u` and `∂f_i/∂v`.
    pub fn jacobian(&self) -> (Vec<BinForm>, Vec<BinForm>) {
        self.components.iter().map(BinForm::derivatives).unzip()
    }

    /// The Jacobian as a sheaf map `O^(n+1) → O(d-1)^2`.
    pub fn jacobian_map(&self) -> GradedMap {
        let (du, dv) = self.jacobian();
        let t = self.degree as i64 - 1;
        GradedMap::new(vec![0; self.components.len()], vec![t, t], vec![du, dv])
            .expect("derivatives have degree d - 1")
    }

    /// Monic gcd of the `2 × 2` minors of the Jacobian; `None` if all vanish.
    pub fn jacobian_minor_gcd(&self) -> Option<BinForm> {
        let (du, dv) = self.jacobian();
        let n = du.len();
        let mut minors = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                minors.push(&(&du[a] * &dv[b]) - &(&du[b] * &dv[a]));
            }
        }
        binforms::gcd_all(&minors).ok()
    }

    /// Whether the Jacobian has rank 2 at every parameter.
    pub fn is_unramified(&self) -> bool {
        self.jacobian_minor_gcd().is_some_and(|g| g.degree() == 0)
    }

    /// Splitting type of `N_f`, via `N_f^∨(d) = ker(J: O^(n+1) → O(d-1)^2)`.
    pub fn normal_bundle(&self) -> Result<NormalBundle> {
        if !self.is_unramified() {
            return Err(Error::NotImmersed);
        }
        let restricted = !self.is_nondegenerate();
        let curve = if restricted {
            self.restrict_to_span()
        } else {
            self.clone()
        };
        let kernel = splitting_type_of_kernel(&curve.jacobian_map())?;
        let d = curve.degree as i64;
        let n = curve.ambient_dim as i64;
        let splitting = kernel.dual().twist(d);
        if splitting.rank() as i64 != n - 1 || splitting.c1() != (n + 1) * d - 2 {
            return Err(Error::Inconsistent(format!(
                "normal bundle {splitting} of a degree {d} curve in P^{n} violates rank or c1"
            )));
        }
        Ok(NormalBundle {
            splitting,
            ambient_dim: curve.ambient_dim,
            restricted,
        })
    }

    pub fn normal_bundle_type(&self) -> Result<SplittingType> {
        self.normal_bundle().map(|nb| nb.splitting)
    }

    /// Projection from `center` using the given functionals, which must be
    /// `n` independent linear forms vanishing at the center.
    pub fn project(
        &self,
        center: &[GaussRational],
        functionals: &[Vec<GaussRational>],
    ) -> Result<Projection> {
        let n = self.ambient_dim;
        if center.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: center.len(),
            });
        }
        if center.iter().all(Zero::is_zero) {
            return Err(Error::Input("the center is the zero vector".into()));
        }
        if functionals.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: functionals.len(),
            });
        }
        if crate::exactnum::span_dim(functionals)? != n || functionals[0].len() != n + 1 {
            return Err(Error::Input(
                "projection functionals are not independent".into(),
            ));
        }
        for l in functionals {
            if !dot(l, center).is_zero() {
                return Err(Error::Input(
                    "a projection functional does not vanish at the center".into(),
                ));
            }
        }
        let images = functionals
            .iter()
            .map(|l| BinForm::linear_combination(l, &self.components))
            .collect::<Result<Vec<_>>>()?;
        let curve = reduce(&images)?;
        Ok(Projection {
            center: center.to_vec(),
            functionals: functionals.to_vec(),
            degree_drop: self.degree - curve.degree,
            curve,
        })
    }

    /// Projection from `center` with [`complement_functionals`].
    pub fn project_from(&self, center: &[GaussRational]) -> Result<Projection> {
        let f = complement_functionals(center)?;
        self.project(center, &f)
    }
}

/// Divides a list of forms by their common gcd.
pub fn reduce(raw: &[BinForm]) -> Result<RatCurve> {
    if raw.is_empty() || raw.iter().all(BinForm::is_zero) {
        return Err(Error::Input(
            "cannot reduce an all-zero list of forms".into(),
        ));
    }
    let g = binforms::gcd_all(raw)?;
    let d = raw[0].degree();
    if raw.iter().any(|f| f.degree() != d) {
        return Err(Error::Input("forms of different degrees".into()));
    }
    let nd = d - g.degree();
    let comps = raw
        .iter()
        .map(|f| {
            if f.is_zero() {
                BinForm::zero(nd)
            } else {
                f.div_exact(&g).expect("gcd divides every component")
            }
        })
        .collect();
    RatCurve::unchecked(comps)
}

fn dot(a: &[GaussRational], b: &[GaussRational]) -> GaussRational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// `n` independent functionals vanishing at `center`.
///
/// When every coordinate of the center is nonzero this is the chain
/// `L_k = P_(k+1) x_k - P_k x_(k+1)`, which keeps the projected curve close to
/// the monomial coordinates; otherwise a kernel basis of `center^T`.
pub fn complement_functionals(center: &[GaussRational]) -> Result<Vec<Vec<GaussRational>>> {
    let n1 = center.len();
    if n1 < 2 || center.iter().all(Zero::is_zero) {
        return Err(Error::Input(
            "center must be a nonzero vector of length >= 2".into(),
        ));
    }
    let chain: Vec<Vec<GaussRational>> = (0..n1 - 1)
        .map(|k| {
            let mut l = vec![GaussRational::zero(); n1];
            l[k] = center[k + 1].clone();
            l[k + 1] = -&center[k];
            l
        })
        .collect();
    if crate::exactnum::span_dim(&chain)? == n1 - 1 {
        return Ok(chain);
    }
    let row = ExactMatrix::from_rows(vec![center.to_vec()])?;
    Ok(row.kernel())
}

/// Whether two nonzero vectors represent the same projective point.
pub fn same_point(a: &[GaussRational], b: &[GaussRational]) -> bool {
    if a.len() != b.len() || a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
        return false;
    }
    crate::exactnum::span_dim(&[a.to_vec(), b.to_vec()]).is_ok_and(|r| r == 1)
}

impl fmt::Display for RatCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {} curve in P^{}: (",
            self.degree, self.ambient_dim
        )?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
