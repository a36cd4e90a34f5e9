//! Nilpotent `n ∈ gl(2)` with `-nᵗ = λ n`, and the one-parameter groups
//! `exp(t n)` inverted by the Cartan involution `g ↦ (gᵗ)⁻¹`.

use num_traits::Zero;
use serde::Serialize;

use crate::exactnum::{ExactMatrix, GaussRational};

#[derive(Clone, Debug, Serialize)]
pub struct Gl2Branch {
    pub sign: i64,
    pub n: ExactMatrix,
    pub n_squared_zero: bool,
    pub trace_zero: bool,
    /// `λ` with `-nᵗ = λ n`, if any.
    pub lambda: Option<GaussRational>,
    /// `exp(t n) = [[1+t, ±it], [±it, 1-t]]` at every sampled `t`.
    pub exp_matches_display: bool,
    /// `c(exp(t n)) = exp(-t n) = exp(t n)⁻¹` at every sampled `t`.
    pub involution_inverts: bool,
    pub exp_at_one: ExactMatrix,
    pub cartan_of_exp_at_one: ExactMatrix,
}

impl Gl2Branch {
    pub fn pass(&self) -> bool {
        self.n_squared_zero
            && self.trace_zero
            && self.lambda == Some(GaussRational::from_int(-1))
            && self.exp_matches_display
            && self.involution_inverts
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Gl2Report {
    pub branches: Vec<Gl2Branch>,
    /// `[[1, ±i], [±i, 1]]` as displayed for `n^±`.
    pub printed_n: ExactMatrix,
    pub printed_trace: GaussRational,
    pub printed_n_squared_zero: bool,
    pub note: String,
}

impl Gl2Report {
    pub fn pass(&self) -> bool {
        self.branches.iter().all(Gl2Branch::pass)
    }
}

fn mat(entries: [[GaussRational; 2]; 2]) -> ExactMatrix {
    ExactMatrix::from_rows(entries.into_iter().map(Vec::from).collect()).expect("2 x 2")
}

fn cartan(g: &ExactMatrix) -> ExactMatrix {
    g.transpose().inverse().expect("invertible")
}

fn branch(sign: i64) -> Gl2Branch {
    let q = GaussRational::from_int;
    let si = &GaussRational::i() * &q(sign);
    let n = mat([[q(1), si.clone()], [si.clone(), q(-1)]]);
    let neg_t = n.transpose().scale(&q(-1));
    // -nᵗ = λ n, read off at the (0,0) entry
    let lambda =
        Some(&neg_t[(0, 0)] * &n[(0, 0)].inv().expect("nonzero")).filter(|l| n.scale(l) == neg_t);
    let samples = [
        q(1),
        q(2),
        GaussRational::from_ratio(-1, 2),
        GaussRational::i(),
    ];
    let mut exp_ok = true;
    let mut inv_ok = true;
    for t in &samples {
        let e = n.scale(t).exp_nilpotent().expect("nilpotent");
        let display = mat([[&q(1) + t, &si * t], [&si * t, &q(1) - t]]);
        exp_ok &= e == display;
        let e_neg = n.scale(&-t).exp_nilpotent().expect("nilpotent");
        inv_ok &= cartan(&e) == e_neg && e.inverse().as_ref() == Some(&e_neg);
    }
    let exp_at_one = n.exp_nilpotent().expect("nilpotent");
    let cartan_of_exp_at_one = cartan(&exp_at_one);
    Gl2Branch {
        sign,
        n_squared_zero: (&n * &n).is_zero(),
        trace_zero: n.trace().is_zero(),
        n,
        lambda,
        exp_matches_display: exp_ok,
        involution_inverts: inv_ok,
        exp_at_one,
        cartan_of_exp_at_one,
    }
}

/// Checks both signs with `n^± = [[1, ±i], [±i, -1]]` and records why the
/// displayed `[[1, ±i], [±i, 1]]` cannot be meant.
pub fn gl2_weyl_check() -> Gl2Report {
    let q = GaussRational::from_int;
    let printed = mat([[q(1), GaussRational::i()], [GaussRational::i(), q(1)]]);
    let printed_trace = printed.trace();
    let printed_n_squared_zero = (&printed * &printed).is_zero();
    Gl2Report {
        branches: vec![branch(1), branch(-1)],
        note: format!(
            "the displayed n = [[1, ±i], [±i, 1]] has trace {printed_trace} and n² ≠ 0; \
             exp(tn) = [[1+t, ±it], [±it, 1-t]] forces n = [[1, ±i], [±i, -1]], which is used here"
        ),
        printed_n: printed,
        printed_trace,
        printed_n_squared_zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrected_matrix() {
        let r = gl2_weyl_check();
        assert!(r.pass(), "{r:#?}");
        assert!(!r.printed_n_squared_zero);
        assert_eq!(r.printed_trace, GaussRational::from_int(2));
        let q = GaussRational::from_int;
        let i = GaussRational::i();
        let b = &r.branches[0];
        assert_eq!(b.exp_at_one, mat([[q(2), i.clone()], [i.clone(), q(0)]]));
        let mi = -&i;
        assert_eq!(
            b.cartan_of_exp_at_one,
            mat([[q(0), mi.clone()], [mi, q(2)]])
        );
    }
}
