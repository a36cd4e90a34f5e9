//! Degree of the scroll swept by the lines joining `C1(t)` and `C2(t)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::RatCurve;
use crate::binforms::BinForm;
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRational};

const MAX_DRAWS: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct JoinDegree {
    pub degree: usize,
    pub functionals: [Vec<GaussRational>; 2],
    /// Number of functional pairs drawn before a generic one was found.
    pub draws: usize,
}

fn check_scroll(c1: &RatCurve, c2: &RatCurve) -> Result<()> {
    if c1.ambient_dim() != c2.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: c1.ambient_dim(),
            found: c2.ambient_dim(),
        });
    }
    let cols: Vec<Vec<GaussRational>> = [c1, c2]
        .iter()
        .flat_map(|c| {
            let m = c.coefficient_matrix();
            (0..m.cols()).map(move |j| m.column(j))
        })
        .collect();
    let joint = ExactMatrix::from_columns(&cols)?.rank();
    if joint != c1.span_dim() + c2.span_dim() {
        return Err(Error::JoinNotScroll);
    }
    Ok(())
}

/// `det [[λ1 C1, λ1 C2], [λ2 C1, λ2 C2]]`, vanishing where the ruling through
/// `C1(t)` and `C2(t)` meets the center `{λ1 = λ2 = 0}`.
pub fn ruling_determinant(
    c1: &RatCurve,
    c2: &RatCurve,
    l: &[Vec<GaussRational>; 2],
) -> Result<BinForm> {
    let a1 = BinForm::linear_combination(&l[0], c1.components())?;
    let a2 = BinForm::linear_combination(&l[1], c1.components())?;
    let b1 = BinForm::linear_combination(&l[0], c2.components())?;
    let b2 = BinForm::linear_combination(&l[1], c2.components())?;
    (&a1 * &b2).checked_sub(&(&b1 * &a2))
}

/// Degree of the join scroll counted by the given functionals; errors if
/// they are not generic (the determinant vanishes or has a repeated root).
pub fn join_scroll_degree(
    c1: &RatCurve,
    c2: &RatCurve,
    l: &[Vec<GaussRational>; 2],
) -> Result<usize> {
    check_scroll(c1, c2)?;
    degree_for(c1, c2, l)?
        .ok_or_else(|| Error::Input("the functionals are not generic for this join".into()))
}

fn degree_for(c1: &RatCurve, c2: &RatCurve, l: &[Vec<GaussRational>; 2]) -> Result<Option<usize>> {
    let det = ruling_determinant(c1, c2, l)?;
    if det.is_zero() || !det.is_squarefree()? {
        return Ok(None);
    }
    Ok(Some(det.degree()))
}

/// [`join_scroll_degree`] with functionals drawn from a seeded stream of
/// small integers, redrawn until generic.
pub fn join_scroll_degree_seeded(c1: &RatCurve, c2: &RatCurve, seed: u64) -> Result<JoinDegree> {
    check_scroll(c1, c2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = c1.ambient_dim() + 1;
    let mut draw = || -> Vec<GaussRational> {
        (0..len)
            .map(|_| GaussRational::from_int(rng.random_range(-3..=3)))
            .collect()
    };
    for draws in 1..=MAX_DRAWS {
        let l = [draw(), draw()];
        if let Some(degree) = degree_for(c1, c2, &l)? {
            return Ok(JoinDegree {
                degree,
                functionals: l,
                draws,
            });
        }
    }
    Err(Error::Inconsistent(format!(
        "no generic pair of functionals in {MAX_DRAWS} draws"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(c: &RatCurve) -> (RatCurve, RatCurve) {
        let n = c.ambient_dim();
        let amb = 2 * n + 1;
        (c.embed(amb, 0).unwrap(), c.embed(amb, n + 1).unwrap())
    }

    #[test]
    fn classical_joins() {
        for (n, expect) in [(1, 2), (3, 6), (6, 12)] {
            let (a, b) = skew(&RatCurve::rational_normal(n));
            let j = join_scroll_degree_seeded(&a, &b, 7).unwrap();
            assert_eq!(j.degree, expect, "n = {n}");
            assert_eq!(join_scroll_degree(&a, &b, &j.functionals).unwrap(), expect);
        }
    }

    #[test]
    fn degree_is_independent_of_the_draw() {
        let (a, b) = skew(&RatCurve::rational_normal(3));
        for seed in 0..20 {
            assert_eq!(join_scroll_degree_seeded(&a, &b, seed).unwrap().degree, 6);
        }
    }

    #[test]
    fn overlapping_spans_are_rejected() {
        let c = RatCurve::rational_normal(3);
        assert!(matches!(
            join_scroll_degree_seeded(&c, &c, 1),
            Err(Error::JoinNotScroll)
        ));
    }

    #[test]
    fn special_functionals_are_rejected() {
        let (a, b) = skew(&RatCurve::rational_normal(1));
        let q = GaussRational::from_int;
        // both functionals only see the first line
        let l = [vec![q(1), q(0), q(0), q(0)], vec![q(0), q(1), q(0), q(0)]];
        assert!(join_scroll_degree(&a, &b, &l).is_err());
    }
}
