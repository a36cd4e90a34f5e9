//! The Chevalley involution and the lift of the longest Weyl element.

use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::{G2Algebra, DIM, H1, H2};
use crate::error::{Error, Result};
use crate::exactnum::{span_dim, ExactMatrix, GaussRational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearInvolution {
    matrix: ExactMatrix,
}

impl LinearInvolution {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if !(&matrix * &matrix).is_identity() {
            return Err(Error::Input(
                "matrix does not square to the identity".into(),
            ));
        }
        Ok(LinearInvolution { matrix })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[GaussRational]) -> Result<Vec<GaussRational>> {
        self.matrix.mul_vec(v)
    }

    /// Basis of `ker(M - sign)`, `sign = ±1`.
    pub fn eigenspace(&self, sign: i64) -> Vec<Vec<GaussRational>> {
        let n = self.matrix.rows();
        let shift = ExactMatrix::identity(n).scale(&GaussRational::from_int(sign));
        self.matrix.sub(&shift).expect("square").kernel()
    }

    /// `(dim F⁺, dim F⁻)`.
    pub fn eigen_dims(&self) -> (usize, usize) {
        (self.eigenspace(1).len(), self.eigenspace(-1).len())
    }
}

/// `M[b_i, b_j] = [M b_i, M b_j]` on all basis pairs.
pub fn is_automorphism(a: &G2Algebra, m: &ExactMatrix) -> bool {
    let images: Vec<Vec<GaussRational>> = (0..DIM).map(|j| m.column(j)).collect();
    (0..DIM).all(|i| {
        (i + 1..DIM).all(|j| {
            let lhs = m
                .mul_vec(&a.bracket(&a.basis_vector(i), &a.basis_vector(j)))
                .expect("14");
            lhs == a.bracket(&images[i], &images[j])
        })
    })
}

/// `e_α ↦ -e_{-α}`, `h ↦ -h`.
pub fn chevalley_involution(a: &G2Algebra) -> LinearInvolution {
    let mut m = ExactMatrix::zeros(DIM, DIM);
    let minus = GaussRational::from_int(-1);
    m[(H1, H1)] = minus.clone();
    m[(H2, H2)] = minus.clone();
    for r in &a.roots().all_roots {
        let i = a.root_index(r.coords).expect("root");
        let j = a.root_index(r.neg().coords).expect("root");
        m[(j, i)] = minus.clone();
    }
    LinearInvolution::new(m).expect("squares to the identity")
}

/// Explicit eigenbases of the Chevalley involution: `e_α - e_{-α}` for `F⁺`,
/// `h1, h2, e_α + e_{-α}` for `F⁻` (`α > 0`).
pub fn chevalley_eigenbases(a: &G2Algebra) -> (Vec<Vec<GaussRational>>, Vec<Vec<GaussRational>>) {
    let one = GaussRational::one();
    let pair = |r: [i64; 2], sign: &GaussRational| {
        let mut v = vec![GaussRational::zero(); DIM];
        v[a.root_index(r).expect("root")] = one.clone();
        v[a.root_index([-r[0], -r[1]]).expect("root")] = sign.clone();
        v
    };
    let pos = a.roots().positive_roots();
    let plus = pos.iter().map(|r| pair(r.coords, &-&one)).collect();
    let mut minus = vec![a.basis_vector(H1), a.basis_vector(H2)];
    minus.extend(pos.iter().map(|r| pair(r.coords, &one)));
    (plus, minus)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvolutionChecks {
    pub squares_to_identity: bool,
    pub automorphism: bool,
    pub negates_cartan: bool,
    pub plus_dim: usize,
    pub minus_dim: usize,
    pub killing_orthogonal: bool,
    pub cartan_in_minus: bool,
}

impl InvolutionChecks {
    pub fn all_ok(&self) -> bool {
        self.squares_to_identity
            && self.automorphism
            && self.negates_cartan
            && (self.plus_dim, self.minus_dim) == (6, 8)
            && self.killing_orthogonal
            && self.cartan_in_minus
    }
}

pub fn involution_checks(a: &G2Algebra, tau: &LinearInvolution) -> InvolutionChecks {
    let m = tau.matrix();
    let plus = tau.eigenspace(1);
    let minus = tau.eigenspace(-1);
    let negates = |i: usize| {
        let img = m.column(i);
        img.iter().enumerate().all(|(k, x)| {
            if k == i {
                *x == -GaussRational::one()
            } else {
                x.is_zero()
            }
        })
    };
    let cartan_in_minus = [H1, H2].iter().all(|&h| {
        let mut aug = minus.clone();
        aug.push(a.basis_vector(h));
        span_dim(&aug).is_ok_and(|d| d == minus.len())
    });
    InvolutionChecks {
        squares_to_identity: (m * m).is_identity(),
        automorphism: is_automorphism(a, m),
        negates_cartan: negates(H1) && negates(H2),
        plus_dim: plus.len(),
        minus_dim: minus.len(),
        killing_orthogonal: plus
            .iter()
            .all(|x| minus.iter().all(|y| a.killing(x, y).is_zero())),
        cartan_in_minus,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylLift {
    /// `n_{s1} n_{s2} n_{s1} n_{s2} n_{s1} n_{s2}`.
    pub n: ExactMatrix,
    pub n_squared: ExactMatrix,
    /// Torus automorphism `t` with `(t n)² = id`.
    pub correction: ExactMatrix,
    pub tau: LinearInvolution,
}

/// `exp(ad e_α) exp(-ad e_{-α}) exp(ad e_α)` for a simple root.
pub fn simple_reflection_lift(a: &G2Algebra, simple: usize) -> ExactMatrix {
    let coords = a.roots().simple_roots[simple];
    let ad_e = a.ad_basis(a.root_index(coords).expect("root"));
    let ad_f = a.ad_basis(a.root_index([-coords[0], -coords[1]]).expect("root"));
    let xe = ad_e.exp_nilpotent().expect("ad e is nilpotent");
    let xf = ad_f
        .scale(&GaussRational::from_int(-1))
        .exp_nilpotent()
        .expect("ad f is nilpotent");
    &(&xe * &xf) * &xe
}

/// Index `j` with `m b_i ∈ Q(i)·b_j`, if the image is a single basis line.
fn monomial_target(m: &ExactMatrix, i: usize) -> Option<usize> {
    let col = m.column(i);
    let mut nz = col.iter().enumerate().filter(|(_, x)| !x.is_zero());
    let (j, _) = nz.next()?;
    nz.next().is_none().then_some(j)
}

/// Lift of the longest Weyl element along the reduced word `s1 s2 s1 s2 s1 s2`.
///
/// For a torus element `t` the square `(t n)²` equals `t · w0(t) · n²`, and
/// `w0 = -1` gives `t · w0(t) = t(α) t(-α) = 1` on every root space. The linear
/// system for the character values of `t` is therefore homogeneous, and a
/// correction exists exactly when `n²` is already the identity; `t = 1` then.
pub fn weyl_lift_w0(a: &G2Algebra) -> Result<WeylLift> {
    let n1 = simple_reflection_lift(a, 0);
    let n2 = simple_reflection_lift(a, 1);
    let pair = &n1 * &n2;
    let n = &(&pair * &pair) * &pair;
    let n_squared = &n * &n;
    if !n_squared.is_diagonal() {
        return Err(Error::NoDiagonalCorrection);
    }
    // n must realize w0 = -1: e_α ↦ line of e_{-α}, h ↦ -h
    for r in &a.roots().all_roots {
        let i = a.root_index(r.coords).expect("root");
        let j = a.root_index(r.neg().coords).expect("root");
        if monomial_target(&n, i) != Some(j) {
            return Err(Error::Inconsistent(format!(
                "the lift does not send e{:?} to the opposite root space",
                r.coords
            )));
        }
    }
    // constraint per root space: t(α) t(w0 α) χ(α) = 1 with χ(α) the diagonal
    // entry of n²; the exponent of t is zero on every row
    let characters_trivial = (0..DIM).all(|i| n_squared[(i, i)].is_one());
    if !characters_trivial {
        return Err(Error::NoDiagonalCorrection);
    }
    let correction = ExactMatrix::identity(DIM);
    let tau = LinearInvolution::new(&correction * &n).map_err(|_| Error::NoDiagonalCorrection)?;
    Ok(WeylLift {
        n,
        n_squared,
        correction,
        tau,
    })
}

/// Whether `m` normalizes the torus (preserves `h` and permutes root lines) but
/// does not centralize it.
pub fn in_normalizer_not_torus(m: &ExactMatrix) -> bool {
    let preserves_cartan = [H1, H2]
        .iter()
        .all(|&h| m.column(h)[2..].iter().all(|x| x.is_zero()));
    let permutes_roots = (2..DIM).all(|i| monomial_target(m, i).is_some_and(|j| j >= 2));
    let acts_on_cartan = !(m[(H1, H1)].is_one()
        && m[(H2, H2)].is_one()
        && m[(H1, H2)].is_zero()
        && m[(H2, H1)].is_zero());
    preserves_cartan && permutes_roots && acts_on_cartan
}
