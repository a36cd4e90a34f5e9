//! Points of the adjoint variety `Ω ⊂ P^13` and the quadrics through it.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::{G2Algebra, DIM};
use crate::error::{Error, Result};
use crate::exactnum::{span_dim, EchelonBasis, ExactMatrix, GaussRational};

/// Flow parameters `t` for `exp(t ad e_α)`.
const PARAMETERS: [(i64, i64); 8] = [
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (1, 2),
    (-1, 2),
    (3, 1),
    (-3, 1),
];
const WORD_LENGTH: usize = 4;
pub const BATCH: usize = 20;
pub const DEFAULT_CAP: usize = 400;
pub const VALIDATION_POINTS: usize = 50;

/// `x ∈ Ω` iff `(ad x)²` maps into the line of `x`.
pub fn on_adjoint_variety(a: &G2Algebra, x: &[GaussRational]) -> Result<bool> {
    if x.len() != DIM {
        return Err(Error::DimensionMismatch {
            expected: DIM,
            found: x.len(),
        });
    }
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::Input("the zero vector is not a point".into()));
    }
    let ad = a.ad(x);
    let sq = &ad * &ad;
    let mut cols: Vec<Vec<GaussRational>> = vec![x.to_vec()];
    cols.extend((0..DIM).map(|j| sq.column(j)));
    Ok(ExactMatrix::from_columns(&cols)?.rank() == 1)
}

/// Nilpotent flows `exp(t ad e_α)` applied to vectors without forming the
/// exponential.
#[derive(Clone, Debug)]
pub struct RootFlows {
    /// `powers[r][k]` is `(ad e_α)^(k+1) / (k+1)!` for the `r`-th root.
    powers: Vec<Vec<ExactMatrix>>,
}

impl RootFlows {
    pub fn new(a: &G2Algebra) -> Self {
        let powers = (2..DIM)
            .map(|i| {
                let ad = a.ad_basis(i);
                let mut out = Vec::new();
                let mut term = ad.clone();
                let mut k = 1;
                while !term.is_zero() {
                    out.push(term.clone());
                    k += 1;
                    term = (&term * &ad).scale(&GaussRational::from_ratio(1, k));
                }
                out
            })
            .collect();
        RootFlows { powers }
    }

    pub fn root_count(&self) -> usize {
        self.powers.len()
    }

    /// `exp(t ad e_α) v` for the `root`-th root (basis index `root + 2`).
    pub fn apply(&self, root: usize, t: &GaussRational, v: &[GaussRational]) -> Vec<GaussRational> {
        let mut out = v.to_vec();
        let mut tk = GaussRational::from_int(1);
        for p in &self.powers[root] {
            tk = &tk * t;
            let w = p.mul_vec(v).expect("14");
            for (o, x) in out.iter_mut().zip(&w) {
                *o += &(&tk * x);
            }
        }
        out
    }

    /// A random word of flows applied to `v`.
    pub fn random_word(&self, rng: &mut ChaCha8Rng, v: &[GaussRational]) -> Vec<GaussRational> {
        let mut x = v.to_vec();
        for _ in 0..WORD_LENGTH {
            let root = rng.random_range(0..self.root_count());
            let (num, den) = PARAMETERS[rng.random_range(0..PARAMETERS.len())];
            x = self.apply(root, &GaussRational::from_ratio(num, den), &x);
        }
        x
    }
}

fn highest_root_vector(a: &G2Algebra) -> Vec<GaussRational> {
    a.e(a.roots().highest_root().coords)
}

fn draw(
    a: &G2Algebra,
    flows: &RootFlows,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Vec<Vec<GaussRational>> {
    let theta = highest_root_vector(a);
    (0..count).map(|_| flows.random_word(rng, &theta)).collect()
}

/// `count` points of `Ω`, each `e_θ` moved by a word of root flows.
pub fn sample_omega_points(a: &G2Algebra, count: usize, seed: u64) -> Vec<Vec<GaussRational>> {
    let flows = RootFlows::new(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw(a, &flows, &mut rng, count)
}

/// Degree-2 monomials `x_i x_j`, `i <= j`, in lexicographic order.
pub fn quadratic_monomials(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

pub fn quadratic_row(x: &[GaussRational]) -> Vec<GaussRational> {
    quadratic_monomials(x.len())
        .into_iter()
        .map(|(i, j)| &x[i] * &x[j])
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadraticIdeal {
    num_vars: usize,
    basis: Vec<Vec<GaussRational>>,
}

impl QuadraticIdeal {
    pub fn new(num_vars: usize, basis: Vec<Vec<GaussRational>>) -> Result<Self> {
        let width = num_vars * (num_vars + 1) / 2;
        if let Some(q) = basis.iter().find(|q| q.len() != width) {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: q.len(),
            });
        }
        if !basis.is_empty() && span_dim(&basis)? != basis.len() {
            return Err(Error::Input("quadrics are linearly dependent".into()));
        }
        Ok(QuadraticIdeal { num_vars, basis })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn basis(&self) -> &[Vec<GaussRational>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn eval(q: &[GaussRational], x: &[GaussRational]) -> GaussRational {
        q.iter().zip(quadratic_row(x)).map(|(c, m)| c * &m).sum()
    }

    pub fn vanishes_at(&self, x: &[GaussRational]) -> bool {
        let row = quadratic_row(x);
        self.basis.iter().all(|q| {
            q.iter()
                .zip(&row)
                .map(|(c, m)| c * m)
                .sum::<GaussRational>()
                .is_zero()
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OmegaQuadrics {
    pub ideal: QuadraticIdeal,
    /// Kernel dimension after the initial samples and after each batch.
    pub history: Vec<usize>,
    pub samples_used: usize,
    pub validation_points: usize,
}

/// Quadrics through `Ω`: the kernel of the evaluation matrix of the 105
/// monomials, grown in batches of [`BATCH`] fresh points until the kernel
/// dimension is unchanged across two batches, then checked on
/// [`VALIDATION_POINTS`] further points.
pub fn omega_quadrics(
    a: &G2Algebra,
    samples: &[Vec<GaussRational>],
    seed: u64,
) -> Result<OmegaQuadrics> {
    omega_quadrics_capped(a, samples, seed, DEFAULT_CAP)
}

pub fn omega_quadrics_capped(
    a: &G2Algebra,
    samples: &[Vec<GaussRational>],
    seed: u64,
    cap: usize,
) -> Result<OmegaQuadrics> {
    if let Some(s) = samples.iter().find(|s| s.len() != DIM) {
        return Err(Error::DimensionMismatch {
            expected: DIM,
            found: s.len(),
        });
    }
    if samples.is_empty() || span_dim(samples)? != DIM {
        return Err(Error::Input(
            "the samples do not span all 14 coordinates".into(),
        ));
    }
    let width = DIM * (DIM + 1) / 2;
    let mut eb = EchelonBasis::new(width);
    for s in samples {
        eb.insert(&quadratic_row(s));
    }
    let flows = RootFlows::new(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0001);
    let mut used = samples.len();
    let mut history = vec![width - eb.rank()];
    while history.len() < 3
        || history[history.len() - 3..]
            .iter()
            .any(|&d| d != history[history.len() - 1])
    {
        if used + BATCH > cap {
            return Err(Error::NonStabilizing { cap, history });
        }
        for s in draw(a, &flows, &mut rng, BATCH) {
            eb.insert(&quadratic_row(&s));
        }
        used += BATCH;
        history.push(width - eb.rank());
    }
    let ideal = QuadraticIdeal::new(DIM, eb.kernel())?;
    let mut check_rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0002);
    for p in draw(a, &flows, &mut check_rng, VALIDATION_POINTS) {
        if !ideal.vanishes_at(&p) {
            return Err(Error::Inconsistent(
                "a quadric does not vanish on an out-of-sample point of the adjoint variety".into(),
            ));
        }
    }
    Ok(OmegaQuadrics {
        ideal,
        history,
        samples_used: used,
        validation_points: VALIDATION_POINTS,
    })
}

#[cfg(test)]
mod tests {
    use super::super::algebra::{build_g2, H1, H2};
    use super::*;

    #[test]
    fn membership_examples() {
        let a = build_g2();
        let theta = highest_root_vector(&a);
        assert!(on_adjoint_variety(&a, &theta).unwrap());
        let mut h = a.basis_vector(H1);
        h[H2] = GaussRational::from_int(2);
        assert!(!on_adjoint_variety(&a, &h).unwrap());
        let flows = RootFlows::new(&a);
        let moved = flows.apply(1, &GaussRational::from_int(1), &theta);
        assert!(on_adjoint_variety(&a, &moved).unwrap());
        assert!(on_adjoint_variety(&a, &vec![GaussRational::zero(); DIM]).is_err());
        // short root vectors are nilpotent but not in the minimal orbit
        assert!(!on_adjoint_variety(&a, &a.e([0, 1])).unwrap());
        assert!(on_adjoint_variety(&a, &a.e([1, 0])).unwrap());
    }

    #[test]
    fn flows_match_matrix_exponential() {
        let a = build_g2();
        let flows = RootFlows::new(&a);
        let t = GaussRational::from_ratio(-1, 2);
        let v: Vec<GaussRational> = (0..DIM as i64).map(GaussRational::from_int).collect();
        for r in 0..12 {
            let exp = a.ad_basis(r + 2).scale(&t).exp_nilpotent().unwrap();
            assert_eq!(flows.apply(r, &t, &v), exp.mul_vec(&v).unwrap());
        }
    }

    #[test]
    fn samples_are_deterministic_members() {
        let a = build_g2();
        let s = sample_omega_points(&a, 40, 9);
        assert_eq!(s, sample_omega_points(&a, 40, 9));
        assert!(s.iter().all(|x| on_adjoint_variety(&a, x).unwrap()));
        assert_eq!(span_dim(&s).unwrap(), 14);
    }

    #[test]
    fn membership_is_orbit_invariant() {
        let a = build_g2();
        let flows = RootFlows::new(&a);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let start = sample_omega_points(&a, 5, 2);
        let mut h = a.basis_vector(H1);
        h[H2] = GaussRational::from_int(2);
        for i in 0..20 {
            let p = flows.random_word(&mut rng, &start[i % start.len()]);
            assert!(on_adjoint_variety(&a, &p).unwrap());
            let q = flows.random_word(&mut rng, &h);
            assert!(!on_adjoint_variety(&a, &q).unwrap());
        }
    }

    #[test]
    fn quadrics_of_omega() {
        let a = build_g2();
        let samples = sample_omega_points(&a, 160, 1);
        let q = omega_quadrics(&a, &samples, 1).unwrap();
        assert_eq!(q.ideal.dim(), 28, "history {:?}", q.history);
        assert!(q.ideal.vanishes_at(&highest_root_vector(&a)));
        let mut h = a.basis_vector(H1);
        h[H2] = GaussRational::from_int(2);
        assert!(!q.ideal.vanishes_at(&h));
        let hist = &q.history;
        assert!(hist.len() >= 3 && hist[hist.len() - 3..].iter().all(|&d| d == 28));
    }

    #[test]
    fn quadrics_need_spanning_samples() {
        let a = build_g2();
        let theta = highest_root_vector(&a);
        assert!(matches!(
            omega_quadrics(&a, &[theta], 1),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn tiny_cap_does_not_stabilize() {
        let a = build_g2();
        let samples = sample_omega_points(&a, 30, 1);
        assert!(matches!(
            omega_quadrics_capped(&a, &samples, 1, 50),
            Err(Error::NonStabilizing { cap: 50, .. })
        ));
    }
}
