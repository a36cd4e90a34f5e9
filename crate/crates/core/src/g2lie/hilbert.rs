//! Hilbert functions of the fixed loci `E⁺ = Ω ∩ PF⁺` and
//! `E⁻ = Ω ∩ P(F⁻ ∩ h^⊥)` from the restricted quadrics.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::{G2Algebra, DIM};
use super::involution::LinearInvolution;
use super::omega::{quadratic_monomials, QuadraticIdeal};
use crate::error::{Error, Result};
use crate::exactnum::{EchelonBasis, ExactMatrix, GaussRational};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HilbertTable {
    pub locus: String,
    pub num_vars: usize,
    /// Independent quadrics after restriction.
    pub quadrics: usize,
    /// `HF(k)` for `k = 1..=kmax`.
    pub values: Vec<usize>,
    /// `HF(1) = num_vars` and `6k + 1` from `k = 2` on.
    pub expected: Vec<usize>,
}

impl HilbertTable {
    pub fn matches(&self) -> bool {
        self.values == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedCurves {
    pub h: [i64; 2],
    pub plus: HilbertTable,
    pub minus: HilbertTable,
}

/// Pulls a quadric in `N` variables back along `x = Σ_a y_a B_a`.
pub fn restrict_quadric(q: &[GaussRational], basis: &[Vec<GaussRational>]) -> Vec<GaussRational> {
    let n = basis.first().map_or(0, |b| b.len());
    let m = basis.len();
    let mut sym = vec![vec![GaussRational::zero(); n]; n];
    let half = GaussRational::from_ratio(1, 2);
    for ((i, j), c) in quadratic_monomials(n).into_iter().zip(q) {
        if i == j {
            sym[i][i] = c.clone();
        } else {
            sym[i][j] = c * &half;
            sym[j][i] = sym[i][j].clone();
        }
    }
    let gram = |a: usize, b: usize| -> GaussRational {
        let mut t = GaussRational::zero();
        for i in 0..n {
            if basis[a][i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !sym[i][j].is_zero() && !basis[b][j].is_zero() {
                    t += &(&(&basis[a][i] * &sym[i][j]) * &basis[b][j]);
                }
            }
        }
        t
    };
    quadratic_monomials(m)
        .into_iter()
        .map(|(a, b)| {
            let g = gram(a, b);
            if a == b {
                g
            } else {
                &g + &g
            }
        })
        .collect()
}

/// `HF(k) = dim S_k - dim(I₂ · S_{k-2})` for `k = 1..=kmax`; `HF(1) = m`
/// since the ideal is generated by quadrics.
pub fn hilbert_function(quadrics: &[Vec<GaussRational>], m: usize, kmax: usize) -> Vec<usize> {
    let pairs = quadratic_monomials(m);
    let mut out = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        if k == 1 {
            out.push(m);
            continue;
        }
        let monos: Vec<Vec<usize>> = multisets(m, k);
        let index: HashMap<&[usize], usize> = monos
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_slice(), i))
            .collect();
        let mut eb = EchelonBasis::new(monos.len());
        for q in quadrics {
            for shift in multisets(m, k - 2) {
                let mut row = vec![GaussRational::zero(); monos.len()];
                for (&(a, b), c) in pairs.iter().zip(q) {
                    if c.is_zero() {
                        continue;
                    }
                    let mut key = shift.clone();
                    key.extend([a, b]);
                    key.sort_unstable();
                    row[index[key.as_slice()]] += c;
                }
                eb.insert(&row);
            }
        }
        out.push(monos.len() - eb.rank());
    }
    out
}

/// Nondecreasing index sequences of length `k` over `0..m`.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..m).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

fn table(
    locus: &str,
    ideal: &QuadraticIdeal,
    basis: &[Vec<GaussRational>],
    kmax: usize,
) -> HilbertTable {
    let m = basis.len();
    let mut eb = EchelonBasis::new(m * (m + 1) / 2);
    let restricted: Vec<Vec<GaussRational>> = ideal
        .basis()
        .iter()
        .map(|q| restrict_quadric(q, basis))
        .filter(|r| eb.insert(r))
        .collect();
    let expected = (1..=kmax)
        .map(|k| if k == 1 { m } else { 6 * k + 1 })
        .collect();
    HilbertTable {
        locus: locus.to_string(),
        num_vars: m,
        quadrics: restricted.len(),
        values: hilbert_function(&restricted, m, kmax),
        expected,
    }
}

/// Basis of `F⁻ ∩ h^⊥` for the Killing form.
pub fn minus_hyperplane(
    a: &G2Algebra,
    minus: &[Vec<GaussRational>],
    h: &[GaussRational],
) -> Vec<Vec<GaussRational>> {
    let values: Vec<GaussRational> = minus.iter().map(|v| a.killing(h, v)).collect();
    let functional = ExactMatrix::from_rows(vec![values]).expect("one row");
    functional
        .kernel()
        .iter()
        .map(|c| {
            (0..DIM)
                .map(|i| c.iter().zip(minus).map(|(ck, v)| ck * &v[i]).sum())
                .collect()
        })
        .collect()
}

/// Both tables without judging them.
pub fn fixed_curve_tables(
    a: &G2Algebra,
    ideal: &QuadraticIdeal,
    tau: &LinearInvolution,
    h: [i64; 2],
    kmax: usize,
) -> Result<FixedCurves> {
    if ideal.num_vars() != DIM {
        return Err(Error::DimensionMismatch {
            expected: DIM,
            found: ideal.num_vars(),
        });
    }
    if !a.roots().is_regular(h) {
        return Err(Error::Input(format!("h = {h:?} is not regular")));
    }
    let hv = a.cartan_vector(h);
    let image = tau.apply(&hv)?;
    if image.iter().zip(&hv).any(|(x, y)| *x != -y) {
        return Err(Error::Input(
            "the involution does not act as -1 on h".into(),
        ));
    }
    let plus = tau.eigenspace(1);
    let minus = minus_hyperplane(a, &tau.eigenspace(-1), &hv);
    Ok(FixedCurves {
        h,
        plus: table("E+", ideal, &plus, kmax),
        minus: table("E-", ideal, &minus, kmax),
    })
}

/// [`fixed_curve_tables`], failing with the first table that is not `6k + 1`.
pub fn fixed_curve_hilbert(
    a: &G2Algebra,
    ideal: &QuadraticIdeal,
    tau: &LinearInvolution,
    h: [i64; 2],
    kmax: usize,
) -> Result<FixedCurves> {
    let fc = fixed_curve_tables(a, ideal, tau, h, kmax)?;
    for (locus, t) in [("E+", &fc.plus), ("E-", &fc.minus)] {
        if !t.matches() {
            return Err(Error::HilbertMismatch {
                locus,
                h: h.iter().map(|c| c.to_string()).collect(),
                table: Box::new(t.clone()),
            });
        }
    }
    Ok(fc)
}

/// Distinct regular Cartan vectors with coordinates in `-4..=4`.
pub fn regular_h_stream(a: &G2Algebra, seed: u64) -> impl Iterator<Item = [i64; 2]> + '_ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    std::iter::from_fn(move || loop {
        let h = [rng.random_range(-4..=4), rng.random_range(-4..=4)];
        if a.roots().is_regular(h) && seen.insert(h) {
            return Some(h);
        }
    })
}
