//! Catalecticant analysis of points relative to the rational normal curve
//! `C_n = {(u^n : u^(n-1) v : ... : v^n)}`.
//!
//! Coordinates are the plain monomial ones, so points of `C_n` are exactly
//! the power vectors and the catalecticant is the unweighted Hankel matrix
//! `H_(jk) = P_(j+k)`.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::binforms::{BinForm, ParamPoint};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRational};

/// Position of a point relative to the secant variety of `C_n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[allow(clippy::large_enum_variant)] // built once per query, never stored in bulk
pub enum SecantVerdict {
    /// Catalecticant of rank 3: on no secant or tangent line.
    NotOnSecant,
    /// Catalecticant of rank 1: the point lies on `C_n` itself.
    OnCurve(ParamPoint),
    /// On the chord through two distinct points of `C_n`.
    SecantPair(ParamPoint, ParamPoint),
    /// On the tangent line at one point of `C_n`.
    TangentDouble(ParamPoint),
    /// On a chord whose endpoints are conjugate over a quadratic extension of `Q(i)`.
    IrreducibleQuadratic(BinForm),
}

impl SecantVerdict {
    pub fn is_on_secant_variety(&self) -> bool {
        !matches!(self, SecantVerdict::NotOnSecant)
    }
}

/// `3 × (n-1)` Hankel matrix of a point of `P^n`.
pub fn hankel_matrix(p: &[GaussRational]) -> Result<ExactMatrix> {
    if p.len() < 5 {
        return Err(Error::Input(format!(
            "catalecticant needs n >= 4, got a point of P^{}",
            p.len().saturating_sub(1)
        )));
    }
    let cols = p.len() - 2;
    let rows = (0..3).map(|j| p[j..j + cols].to_vec()).collect();
    ExactMatrix::from_rows(rows)
}

pub fn hankel_rank(p: &[GaussRational]) -> Result<usize> {
    if p.iter().all(Zero::is_zero) {
        return Err(Error::Input("zero vector is not a point".into()));
    }
    Ok(hankel_matrix(p)?.rank())
}

/// The point `f(p) = (u^n, u^(n-1) v, ..., v^n)` of `C_n`.
pub fn power_vector(p: &ParamPoint, n: usize) -> Vec<GaussRational> {
    let mut upow = vec![GaussRational::one(); n + 1];
    let mut vpow = vec![GaussRational::one(); n + 1];
    for k in 1..=n {
        upow[k] = &upow[k - 1] * p.u();
        vpow[k] = &vpow[k - 1] * p.v();
    }
    (0..=n).map(|k| &upow[n - k] * &vpow[k]).collect()
}

/// Tangent direction of `C_n` at `p`: `∂f/∂v` at affine points, `∂f/∂u` at infinity.
pub fn tangent_vector(p: &ParamPoint, n: usize) -> Vec<GaussRational> {
    let at_infinity = p.u().is_zero();
    let (a, b) = if at_infinity {
        (p.v(), p.u())
    } else {
        (p.u(), p.v())
    };
    (0..=n)
        .map(|k| {
            // differentiate u^(n-k) v^k in the variable that is not normalized to 1
            let (e, rest) = if at_infinity { (n - k, k) } else { (k, n - k) };
            if e == 0 {
                return GaussRational::zero();
            }
            let c = GaussRational::from_int(e as i64);
            &(&c * &a.pow(rest as u32)) * &b.pow(e as u32 - 1)
        })
        .collect()
}

/// Apolar quadric `c0 u^2 + c1 uv + c2 v^2` of a point with catalecticant
/// rank 2: its coefficients span the kernel of the `(n-1) × 3` Hankel matrix.
pub fn apolar_quadric(p: &[GaussRational]) -> Result<Option<BinForm>> {
    let h = hankel_matrix(p)?;
    let ker = h.transpose().kernel();
    Ok(match ker.as_slice() {
        [c] => Some(BinForm::new(c.clone())?),
        _ => None,
    })
}

fn cmp_gauss(a: &GaussRational, b: &GaussRational) -> Ordering {
    a.re().cmp(b.re()).then_with(|| a.im().cmp(b.im()))
}

/// Affine points ordered by their coordinate, the point at infinity last.
fn order_pair(a: ParamPoint, b: ParamPoint) -> (ParamPoint, ParamPoint) {
    let key = |p: &ParamPoint| p.u().is_zero();
    let swap = match (key(&a), key(&b)) {
        (true, false) => true,
        (false, true) => false,
        _ => cmp_gauss(a.v(), b.v()) == Ordering::Greater,
    };
    if swap {
        (b, a)
    } else {
        (a, b)
    }
}

/// Roots of a binary quadric over `Q(i)`.
fn quadric_roots(q: &BinForm) -> SecantVerdict {
    let c = q.coeffs();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    if c2.is_zero() {
        // v^2 coefficient vanishes, so (0:1) is a root
        if c1.is_zero() {
            return SecantVerdict::TangentDouble(ParamPoint::infinity());
        }
        let other = ParamPoint::affine(-&(c0 / c1));
        let (a, b) = order_pair(other, ParamPoint::infinity());
        return SecantVerdict::SecantPair(a, b);
    }
    // roots of c2 t^2 + c1 t + c0 give the points (1 : t)
    let four = GaussRational::from_int(4);
    let two_c2 = c2 * &GaussRational::from_int(2);
    let disc = &(c1 * c1) - &(&four * &(c0 * c2));
    if disc.is_zero() {
        return SecantVerdict::TangentDouble(ParamPoint::affine(-&(c1 / &two_c2)));
    }
    match disc.sqrt() {
        Some(s) => {
            let t1 = &(&-c1 + &s) / &two_c2;
            let t2 = &(&-c1 - &s) / &two_c2;
            let (a, b) = order_pair(ParamPoint::affine(t1), ParamPoint::affine(t2));
            SecantVerdict::SecantPair(a, b)
        }
        None => SecantVerdict::IrreducibleQuadratic(q.monic()),
    }
}

/// Locates `p` with respect to secant and tangent lines of `C_n`.
pub fn sylvester_secant_params(p: &[GaussRational]) -> Result<SecantVerdict> {
    let n = p.len() - 1;
    match hankel_rank(p)? {
        1 => {
            let t = if p[0].is_zero() {
                ParamPoint::infinity()
            } else {
                ParamPoint::affine(&p[1] / &p[0])
            };
            debug_assert!(crate::ratcurves::same_point(&power_vector(&t, n), p));
            Ok(SecantVerdict::OnCurve(t))
        }
        2 => {
            let q = apolar_quadric(p)?.ok_or_else(|| {
                Error::Inconsistent("rank 2 catalecticant without a unique apolar quadric".into())
            })?;
            Ok(quadric_roots(&q))
        }
        _ => Ok(SecantVerdict::NotOnSecant),
    }
}

/// Coefficients `(a, b)` with `p = a·x + b·y`, if they exist.
fn combination(
    p: &[GaussRational],
    x: &[GaussRational],
    y: &[GaussRational],
) -> Result<Option<(GaussRational, GaussRational)>> {
    let m = ExactMatrix::from_columns(&[x.to_vec(), y.to_vec()])?;
    Ok(m.solve(p)?.map(|s| (s[0].clone(), s[1].clone())))
}

/// Checks a verdict by rebuilding the point from the curve data it names.
pub fn reconstructs(verdict: &SecantVerdict, p: &[GaussRational]) -> Result<bool> {
    let n = p.len() - 1;
    Ok(match verdict {
        SecantVerdict::NotOnSecant => hankel_rank(p)? == 3,
        SecantVerdict::OnCurve(t) => crate::ratcurves::same_point(&power_vector(t, n), p),
        SecantVerdict::SecantPair(s, t) => {
            s != t && combination(p, &power_vector(s, n), &power_vector(t, n))?.is_some()
        }
        SecantVerdict::TangentDouble(s) => {
            combination(p, &power_vector(s, n), &tangent_vector(s, n))?.is_some()
        }
        SecantVerdict::IrreducibleQuadratic(q) => {
            // the quadric must annihilate every shifted window of the point
            let h = hankel_matrix(p)?;
            h.transpose().mul_vec(q.coeffs())?.iter().all(Zero::is_zero)
        }
    })
}
