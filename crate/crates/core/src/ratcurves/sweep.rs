//! Seeded randomized checks over families of curves and projection centers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::secant::{power_vector, tangent_vector};
use super::{hankel_rank, same_point, sylvester_secant_params, RatCurve, SecantVerdict};
use crate::binforms::{BinForm, ParamPoint};
use crate::error::{Error, Result};
use crate::exactnum::GaussRational;
use crate::p1bundles::SplittingType;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CenterKind {
    Random,
    Secant,
    Tangent,
    ConjugateChord,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum ProjectionOutcome {
    Immersed(SplittingType),
    Ramified,
    /// The center lies on the curve and the degree drops.
    DegreeDrop(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterCase {
    pub kind: CenterKind,
    pub center: Vec<GaussRational>,
    pub hankel_rank: usize,
    pub verdict: SecantVerdict,
    pub outcome: ProjectionOutcome,
    /// For chords over `Q(i)`: the two parameters have the same image.
    pub self_intersection: Option<bool>,
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BernardiReport {
    pub n: usize,
    pub cases: Vec<CenterCase>,
    pub off_secant: usize,
    pub on_secant: usize,
    pub counterexamples: usize,
}

fn small_rational(rng: &mut ChaCha8Rng) -> GaussRational {
    let num = rng.random_range(-5..=5);
    let den = rng.random_range(1..=3);
    GaussRational::from_ratio(num, den)
}

fn combine(
    a: &GaussRational,
    x: &[GaussRational],
    b: &GaussRational,
    y: &[GaussRational],
) -> Vec<GaussRational> {
    x.iter().zip(y).map(|(p, q)| &(a * p) + &(b * q)).collect()
}

/// Centers in `P^n`: `random` draws with small rational coordinates (points
/// of the curve are skipped) followed by chord, tangent and conjugate-chord
/// centers built from the same stream.
pub fn bernardi_centers(
    n: usize,
    random: usize,
    seed: u64,
) -> Vec<(CenterKind, Vec<GaussRational>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < random {
        let p: Vec<GaussRational> = (0..=n).map(|_| small_rational(&mut rng)).collect();
        if hankel_rank(&p).is_ok_and(|r| r > 1) {
            out.push((CenterKind::Random, p));
        }
    }
    let param = |rng: &mut ChaCha8Rng| {
        ParamPoint::affine(GaussRational::from_int(rng.random_range(-3..=3)))
    };
    let mut secants = vec![(
        ParamPoint::affine(GaussRational::from_int(1)),
        ParamPoint::infinity(),
    )];
    while secants.len() < 10 {
        let (s, t) = (param(&mut rng), param(&mut rng));
        if s != t {
            secants.push((s, t));
        }
    }
    for (s, t) in secants {
        let (a, b) = (small_nonzero(&mut rng), small_nonzero(&mut rng));
        out.push((
            CenterKind::Secant,
            combine(&a, &power_vector(&s, n), &b, &power_vector(&t, n)),
        ));
    }
    let mut tangents: Vec<ParamPoint> = (0..5).map(|_| param(&mut rng)).collect();
    tangents.push(ParamPoint::infinity());
    for s in tangents {
        let b = small_nonzero(&mut rng);
        let one = GaussRational::from_int(1);
        out.push((
            CenterKind::Tangent,
            combine(&one, &power_vector(&s, n), &b, &tangent_vector(&s, n)),
        ));
    }
    // f(√2) + f(-√2) and f(√3) + f(-√3): chords with endpoints outside Q(i)
    for c in [2i64, 3] {
        let p = (0..=n)
            .map(|k| match k % 2 {
                0 => GaussRational::from_int(2 * c.pow(k as u32 / 2)),
                _ => GaussRational::from_int(0),
            })
            .collect();
        out.push((CenterKind::ConjugateChord, p));
    }
    out
}

fn small_nonzero(rng: &mut ChaCha8Rng) -> GaussRational {
    loop {
        let x = rng.random_range(-3..=3);
        if x != 0 {
            return GaussRational::from_int(x);
        }
    }
}

fn analyse(c: &RatCurve, kind: CenterKind, center: Vec<GaussRational>) -> Result<CenterCase> {
    let rank = hankel_rank(&center)?;
    let verdict = sylvester_secant_params(&center)?;
    let proj = c.project_from(&center)?;
    let outcome = if proj.degree_drop > 0 {
        ProjectionOutcome::DegreeDrop(proj.degree_drop)
    } else {
        match proj.curve.normal_bundle_type() {
            Ok(t) => ProjectionOutcome::Immersed(t),
            Err(Error::NotImmersed) => ProjectionOutcome::Ramified,
            Err(e) => return Err(e),
        }
    };
    let self_intersection = match &verdict {
        SecantVerdict::SecantPair(s, t) => {
            Some(same_point(&proj.curve.point_at(s), &proj.curve.point_at(t)))
        }
        _ => None,
    };
    let n = c.ambient_dim() as i64;
    let smooth_type = SplittingType::new(
        std::iter::repeat_n(n + 2, (n - 4) as usize)
            .chain([n + 3, n + 3])
            .collect(),
    );
    let is_smooth_type = outcome == ProjectionOutcome::Immersed(smooth_type);
    let consistent = if rank == 3 {
        is_smooth_type
    } else {
        // on a chord or tangent: the image is singular, so never the smooth type,
        // and a chord over Q(i) must show its double point
        !is_smooth_type && self_intersection != Some(false)
    };
    Ok(CenterCase {
        kind,
        center,
        hankel_rank: rank,
        verdict,
        outcome,
        self_intersection,
        consistent,
    })
}

/// Projects `C_n` from every center of [`bernardi_centers`] and checks that the
/// image has the smooth splitting type `O(n+2)^(n-4) ⊕ O(n+3)^2` exactly when
/// the catalecticant has rank 3.
pub fn bernardi_sweep(n: usize, random: usize, seed: u64) -> Result<BernardiReport> {
    if n < 4 {
        return Err(Error::Input(format!("the sweep needs n >= 4, got {n}")));
    }
    let c = RatCurve::rational_normal(n);
    let centers = bernardi_centers(n, random, seed);
    let cases = centers
        .into_par_iter()
        .map(|(kind, p)| analyse(&c, kind, p))
        .collect::<Result<Vec<_>>>()?;
    let off_secant = cases.iter().filter(|c| c.hankel_rank == 3).count();
    let counterexamples = cases.iter().filter(|c| !c.consistent).count();
    Ok(BernardiReport {
        n,
        on_secant: cases.len() - off_secant,
        off_secant,
        cases,
        counterexamples,
    })
}

/// Seeded corpus of reduced, unramified, nondegenerate curves with
/// `n` in `n_range` and `n <= d <= d_max`.
pub fn random_curves(
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    d_max: usize,
    seed: u64,
) -> Vec<RatCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(n_range.clone());
        if n > d_max {
            continue;
        }
        let d = rng.random_range(n..=d_max);
        let forms: Vec<BinForm> = (0..=n)
            .map(|_| {
                let cs: Vec<i64> = (0..=d).map(|_| rng.random_range(-3..=3)).collect();
                BinForm::from_ints(&cs)
            })
            .collect();
        let Ok(c) = RatCurve::new(forms) else {
            continue;
        };
        if c.is_nondegenerate() && c.is_unramified() {
            out.push(c);
        }
    }
    out
}
