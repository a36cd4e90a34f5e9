//! The scroll `Φ(s, t; u, v) = (s·C6(u, v); t·C6(u, v))` of type `(1, 6)`.

use serde::Serialize;

use crate::binforms::ParamPoint;
use crate::error::Result;
use crate::exactnum::{span_dim, GaussRational};
use crate::ratcurves::{join_scroll_degree_seeded, RatCurve};

#[derive(Clone, Debug, Serialize)]
pub struct Scroll16Report {
    pub directrix_degrees: [usize; 2],
    /// Linear dimensions of the directrix spans in the 14-dimensional space.
    pub directrix_span_dims: [usize; 2],
    pub span_intersection_dim: usize,
    pub join_degree: usize,
    pub ruling_parameter: GaussRational,
    /// Projective dimension of the span of the tangent planes at three points
    /// of the ruling.
    pub ruling_tangent_dim: usize,
    pub tangent_span_contains_ruling: bool,
}

impl Scroll16Report {
    pub fn pass(&self) -> bool {
        self.directrix_degrees == [6, 6]
            && self.directrix_span_dims == [7, 7]
            && self.span_intersection_dim == 0
            && self.join_degree == 12
            && self.ruling_tangent_dim == 3
            && self.tangent_span_contains_ruling
    }
}

fn block(first: &[GaussRational], second: &[GaussRational]) -> Vec<GaussRational> {
    first.iter().chain(second).cloned().collect()
}

pub fn scroll16_model(seed: u64) -> Result<Scroll16Report> {
    let c6 = RatCurve::rational_normal(6);
    let d1 = c6.embed(13, 0)?;
    let d2 = c6.embed(13, 7)?;
    let (s1, s2) = (d1.span_dim(), d2.span_dim());
    let both: Vec<Vec<GaussRational>> = [&d1, &d2]
        .iter()
        .flat_map(|c| {
            let m = c.coefficient_matrix();
            (0..m.cols()).map(move |j| m.column(j))
        })
        .collect();
    let join = join_scroll_degree_seeded(&d1, &d2, seed)?;

    let t0 = GaussRational::from_int(2);
    let p = ParamPoint::affine(t0.clone());
    let point = c6.point_at(&p);
    // d/dt of C6(1, t)
    let velocity: Vec<GaussRational> = c6
        .components()
        .iter()
        .map(|f| f.derivatives().1.eval_at(&p))
        .collect();
    let zero = vec![GaussRational::from_int(0); 7];
    let ruling = vec![block(&point, &zero), block(&zero, &point)];
    // the affine tangent space at (s, t) is spanned by ∂_s Φ, ∂_t Φ and the
    // parameter derivative (s C'; t C')
    let mut tangent = ruling.clone();
    for (s, t) in [(1, 0), (0, 1), (1, 1)] {
        let (s, t) = (GaussRational::from_int(s), GaussRational::from_int(t));
        let sv: Vec<_> = velocity.iter().map(|x| &s * x).collect();
        let tv: Vec<_> = velocity.iter().map(|x| &t * x).collect();
        tangent.push(block(&sv, &tv));
    }
    let tangent_dim = span_dim(&tangent)?;
    let mut with_ruling = tangent.clone();
    with_ruling.extend(ruling);
    Ok(Scroll16Report {
        directrix_degrees: [d1.degree(), d2.degree()],
        directrix_span_dims: [s1, s2],
        span_intersection_dim: s1 + s2 - span_dim(&both)?,
        join_degree: join.degree,
        ruling_parameter: t0,
        ruling_tangent_dim: tangent_dim - 1,
        tangent_span_contains_ruling: span_dim(&with_ruling)? == tangent_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scroll_checks() {
        let r = scroll16_model(1).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}
