//! The conic `a = (u² - v², i(u² + v²), 2uv)` and its Segre square in `P^8`.

use serde::Serialize;

use crate::binforms::BinForm;
use crate::error::Result;
use crate::exactnum::GaussRational;
use crate::ratcurves::{reduce, RatCurve};

#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    pub segre_degree: usize,
    pub factor_degrees: [usize; 2],
    /// `x1 y1 + x2 y2 + x3 y3` along the curve.
    pub trace_form_vanishes: bool,
    /// `Σ a_i² = 0` on the conic.
    pub conic_on_trace_quadric: bool,
    /// All 2x2 minors of `(x_i y_j)` vanish.
    pub on_segre: bool,
}

impl SigmaReport {
    pub fn pass(&self) -> bool {
        self.segre_degree == 4
            && self.factor_degrees == [2, 2]
            && self.trace_form_vanishes
            && self.conic_on_trace_quadric
            && self.on_segre
    }
}

fn conic() -> [BinForm; 3] {
    let i = GaussRational::i();
    let z = GaussRational::from_int(0);
    let q = GaussRational::from_int;
    [
        BinForm::from_ints(&[1, 0, -1]),
        BinForm::new(vec![i.clone(), z, i]).expect("degree 2"),
        BinForm::new(vec![q(0), q(2), q(0)]).expect("degree 2"),
    ]
}

/// The curve `reduce(a ⊗ a)` with components `a_i a_j` (row-major) and its checks.
pub fn sigma_fixed_conic() -> Result<(RatCurve, SigmaReport)> {
    let a = conic();
    let raw: Vec<BinForm> = a
        .iter()
        .flat_map(|x| a.iter().map(move |y| x * y))
        .collect();
    let curve = reduce(&raw)?;
    let c = curve.components();
    let at = |i: usize, j: usize| &c[3 * i + j];
    let trace = at(0, 0).checked_add(at(1, 1))?.checked_add(at(2, 2))?;
    let squares = a
        .iter()
        .map(|x| x * x)
        .try_fold(BinForm::zero(4), |s, f| s.checked_add(&f))?;
    let mut on_segre = true;
    for (i, k) in [(0, 1), (0, 2), (1, 2)] {
        for (j, l) in [(0, 1), (0, 2), (1, 2)] {
            let minor = (at(i, j) * at(k, l)).checked_sub(&(at(i, l) * at(k, j)))?;
            on_segre &= minor.is_zero();
        }
    }
    // first factor: a column (x_i y_j)_i with y_j ≢ 0; second: a row
    let j0 = (0..3)
        .find(|&j| !at(0, j).is_zero() || !at(1, j).is_zero())
        .unwrap_or(0);
    let first = reduce(&(0..3).map(|i| at(i, j0).clone()).collect::<Vec<_>>())?;
    let i0 = (0..3)
        .find(|&i| !at(i, 0).is_zero() || !at(i, 1).is_zero())
        .unwrap_or(0);
    let second = reduce(&(0..3).map(|j| at(i0, j).clone()).collect::<Vec<_>>())?;
    let report = SigmaReport {
        segre_degree: curve.degree(),
        factor_degrees: [first.degree(), second.degree()],
        trace_form_vanishes: trace.is_zero(),
        conic_on_trace_quadric: squares.is_zero(),
        on_segre,
    };
    Ok((curve, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binforms::ParamPoint;

    #[test]
    fn quartic_with_conic_projections() {
        let (c, r) = sigma_fixed_conic().unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(c.ambient_dim(), 8);
        assert_eq!(c.degree(), r.factor_degrees[0] + r.factor_degrees[1]);
    }

    #[test]
    fn trace_vanishes_pointwise() {
        let (c, _) = sigma_fixed_conic().unwrap();
        for t in -3..=3 {
            let p = c.point_at(&ParamPoint::affine(GaussRational::from_int(t)));
            let tr = &(&p[0] + &p[4]) + &p[8];
            assert_eq!(tr, GaussRational::from_int(0));
        }
    }
}
