//! The 14-dimensional algebra in a Chevalley basis.
//!
//! Basis order: `h1, h2`, then `e_α` for the positive roots by height, then
//! `e_{-α}` in the same order. Structure constants are read off the 7-dimensional
//! representation, with `e_γ = [e_s, e_β]/(p+1)` and
//! `e_{-γ} = -[e_{-s}, e_{-β}]/(p+1)` for `γ = s + β`, `s` simple and `p` the
//! length of the `s`-string below `β`.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::roots::{Root, RootCoords, RootSystemG2};
use crate::exactnum::{span_dim, ExactMatrix, GaussRational};

pub const DIM: usize = 14;
pub const H1: usize = 0;
pub const H2: usize = 1;

#[derive(Clone, Debug)]
pub struct G2Algebra {
    roots: RootSystemG2,
    /// `structure[(i * DIM + j) * DIM + k]` is the `b_k` coordinate of `[b_i, b_j]`.
    structure: Vec<i64>,
    killing: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct G2Checks {
    pub dim: usize,
    pub long_roots: usize,
    pub short_roots: usize,
    pub strings_consistent: bool,
    pub antisymmetric: bool,
    pub jacobi_failures: usize,
    pub killing_invariance_failures: usize,
    pub killing_rank: usize,
    pub chevalley_relations: bool,
}

impl G2Checks {
    pub fn all_ok(&self) -> bool {
        self.dim == DIM
            && self.long_roots == 6
            && self.short_roots == 6
            && self.strings_consistent
            && self.antisymmetric
            && self.jacobi_failures == 0
            && self.killing_invariance_failures == 0
            && self.killing_rank == DIM
            && self.chevalley_relations
    }
}

fn unit(i: usize, j: usize, c: i64) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(7, 7);
    m[(i - 1, j - 1)] = GaussRational::from_int(c);
    m
}

fn sum(ms: &[ExactMatrix]) -> ExactMatrix {
    ms.iter()
        .skip(1)
        .fold(ms[0].clone(), |acc, m| acc.add(m).expect("7x7"))
}

fn comm(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    (a * b).sub(&(b * a)).expect("7x7")
}

/// Basis matrices of the 7-dimensional representation, in basis order.
fn seven_dim_basis(rs: &RootSystemG2) -> Vec<ExactMatrix> {
    let e = [
        sum(&[unit(2, 3, 1), unit(5, 6, 1)]),
        sum(&[unit(1, 2, 1), unit(3, 4, 2), unit(4, 5, 1), unit(6, 7, 1)]),
    ];
    let f = [
        sum(&[unit(3, 2, 1), unit(6, 5, 1)]),
        sum(&[unit(2, 1, 1), unit(4, 3, 1), unit(5, 4, 2), unit(7, 6, 1)]),
    ];
    let mut pos: Vec<(RootCoords, ExactMatrix, ExactMatrix)> = Vec::new();
    for root in rs.positive_roots() {
        let g = root.coords;
        let simple = [[1, 0], [0, 1]].iter().position(|s| *s == g);
        if let Some(s) = simple {
            pos.push((g, e[s].clone(), f[s].clone()));
            continue;
        }
        let (s, beta) = [[1, 0], [0, 1]]
            .iter()
            .enumerate()
            .map(|(s, sc)| (s, [g[0] - sc[0], g[1] - sc[1]]))
            .find(|(_, b)| pos.iter().any(|(c, _, _)| c == b))
            .expect("every positive root is a simple root plus a lower one");
        let (p, _) = rs.string(rs.simple_roots[s], beta);
        let (_, eb, fb) = pos
            .iter()
            .find(|(c, _, _)| *c == beta)
            .expect("found above");
        let w = GaussRational::from_ratio(1, p + 1);
        let eg = comm(&e[s], eb).scale(&w);
        let fg = comm(&f[s], fb).scale(&-&w);
        pos.push((g, eg, fg));
    }
    let mut basis = vec![comm(&e[0], &f[0]), comm(&e[1], &f[1])];
    basis.extend(pos.iter().map(|(_, e, _)| e.clone()));
    basis.extend(pos.iter().map(|(_, _, f)| f.clone()));
    basis
}

fn to_int(x: &GaussRational) -> i64 {
    assert!(
        x.is_real() && x.re().is_integer(),
        "non-integral structure constant {x}"
    );
    x.re()
        .to_integer()
        .to_i64()
        .expect("small structure constant")
}

impl G2Algebra {
    fn from_representation() -> Self {
        let roots = RootSystemG2::new();
        let basis = seven_dim_basis(&roots);
        let columns: Vec<Vec<GaussRational>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let frame = ExactMatrix::from_columns(&columns).expect("49 x 14");
        let mut structure = vec![0; DIM * DIM * DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let b = comm(&basis[i], &basis[j]);
                let c = frame
                    .solve(b.entries())
                    .expect("shape")
                    .expect("the basis spans a Lie subalgebra");
                for (k, x) in c.iter().enumerate() {
                    structure[(i * DIM + j) * DIM + k] = to_int(x);
                }
            }
        }
        let mut alg = G2Algebra {
            roots,
            structure,
            killing: Vec::new(),
        };
        alg.killing = (0..DIM)
            .flat_map(|i| (0..DIM).map(move |j| (i, j)))
            .map(|(i, j)| alg.killing_basis_int(i, j))
            .collect();
        alg
    }

    pub fn roots(&self) -> &RootSystemG2 {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        DIM
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out = vec!["h1".to_string(), "h2".to_string()];
        out.extend(
            self.roots
                .all_roots
                .iter()
                .map(|r| format!("e({},{})", r.coords[0], r.coords[1])),
        );
        out
    }

    /// Basis index of `e_α`.
    pub fn root_index(&self, coords: RootCoords) -> Option<usize> {
        self.roots.index_of(coords).map(|r| r + 2)
    }

    pub fn root_at(&self, index: usize) -> Option<Root> {
        index
            .checked_sub(2)
            .and_then(|r| self.roots.all_roots.get(r).copied())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<GaussRational> {
        let mut v = vec![GaussRational::zero(); DIM];
        v[i] = GaussRational::from_int(1);
        v
    }

    pub fn e(&self, coords: RootCoords) -> Vec<GaussRational> {
        self.basis_vector(self.root_index(coords).expect("a root"))
    }

    /// `c1 h1 + c2 h2`.
    pub fn cartan_vector(&self, h: [i64; 2]) -> Vec<GaussRational> {
        let mut v = vec![GaussRational::zero(); DIM];
        v[H1] = GaussRational::from_int(h[0]);
        v[H2] = GaussRational::from_int(h[1]);
        v
    }

    /// `[b_i, b_j]` in coordinates.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[i64] {
        let s = (i * DIM + j) * DIM;
        &self.structure[s..s + DIM]
    }

    pub fn bracket(&self, x: &[GaussRational], y: &[GaussRational]) -> Vec<GaussRational> {
        let mut out = vec![GaussRational::zero(); DIM];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * yj;
                for (k, &s) in self.structure_constants(i, j).iter().enumerate() {
                    if s != 0 {
                        out[k] += &(&c * &GaussRational::from_int(s));
                    }
                }
            }
        }
        out
    }

    /// `ad b_i` with `(ad b_i)[k][j]` the `b_k` coordinate of `[b_i, b_j]`.
    pub fn ad_basis(&self, i: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(DIM, DIM);
        for j in 0..DIM {
            for (k, &s) in self.structure_constants(i, j).iter().enumerate() {
                m[(k, j)] = GaussRational::from_int(s);
            }
        }
        m
    }

    pub fn ad(&self, x: &[GaussRational]) -> ExactMatrix {
        let columns: Vec<Vec<GaussRational>> = (0..DIM)
            .map(|j| self.bracket(x, &self.basis_vector(j)))
            .collect();
        ExactMatrix::from_columns(&columns).expect("14 columns")
    }

    fn killing_basis_int(&self, i: usize, j: usize) -> i64 {
        // tr(ad b_i ad b_j) = Σ_{k,l} c_{i,l}^k c_{j,k}^l
        let mut t = 0;
        for k in 0..DIM {
            for l in 0..DIM {
                t += self.structure_constants(i, l)[k] * self.structure_constants(j, k)[l];
            }
        }
        t
    }

    pub fn killing_matrix(&self) -> ExactMatrix {
        ExactMatrix::new(
            DIM,
            DIM,
            self.killing
                .iter()
                .map(|&k| GaussRational::from_int(k))
                .collect(),
        )
        .expect("14 x 14")
    }

    pub fn killing_entry(&self, i: usize, j: usize) -> i64 {
        self.killing[i * DIM + j]
    }

    pub fn killing(&self, x: &[GaussRational], y: &[GaussRational]) -> GaussRational {
        let mut t = GaussRational::zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let k = self.killing[i * DIM + j];
                if k != 0 {
                    t += &(&(xi * yj) * &GaussRational::from_int(k));
                }
            }
        }
        t
    }

    /// `h_α = [e_α, e_{-α}]`.
    pub fn coroot(&self, coords: RootCoords) -> Vec<GaussRational> {
        let neg = [-coords[0], -coords[1]];
        self.bracket(&self.e(coords), &self.e(neg))
    }

    fn int_bracket(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0; DIM];
        for (i, &xi) in x.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, c)| **c != 0) {
                for (k, s) in self.structure_constants(i, j).iter().enumerate() {
                    out[k] += xi * yj * s;
                }
            }
        }
        out
    }

    fn int_killing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut t = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                t += xi * yj * self.killing[i * DIM + j];
            }
        }
        t
    }

    fn chevalley_relations(&self) -> bool {
        let unit = |i: usize| {
            let mut v = vec![0; DIM];
            v[i] = 1;
            v
        };
        self.roots.all_roots.iter().all(|r| {
            let ei = self.root_index(r.coords).expect("root");
            let weights_ok = (0..2).all(|h| {
                let mut expect = vec![0; DIM];
                expect[ei] = r.on_coroot(h);
                self.int_bracket(&unit(h), &unit(ei)) == expect
            });
            let fi = self.root_index(r.neg().coords).expect("root");
            let hr = self.int_bracket(&unit(ei), &unit(fi));
            let in_cartan = hr[2..].iter().all(|&c| c == 0);
            let value = hr[H1] * r.on_coroot(0) + hr[H2] * r.on_coroot(1);
            weights_ok && in_cartan && value == 2
        })
    }

    /// Exhaustive check of the defining identities on basis elements.
    pub fn verify(&self) -> G2Checks {
        let unit = |i: usize| {
            let mut v = vec![0; DIM];
            v[i] = 1;
            v
        };
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let mut antisymmetric = true;
        for i in 0..DIM {
            for j in 0..DIM {
                if self.structure_constants(i, j) != neg(self.structure_constants(j, i)).as_slice()
                {
                    antisymmetric = false;
                }
            }
        }
        let mut jacobi_failures = 0;
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    let (a, b, c) = (unit(i), unit(j), unit(k));
                    let t1 = self.int_bracket(&a, &self.int_bracket(&b, &c));
                    let t2 = self.int_bracket(&b, &self.int_bracket(&c, &a));
                    let t3 = self.int_bracket(&c, &self.int_bracket(&a, &b));
                    if (0..DIM).any(|m| t1[m] + t2[m] + t3[m] != 0) {
                        jacobi_failures += 1;
                    }
                }
            }
        }
        let mut killing_invariance_failures = 0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let (x, y, z) = (unit(i), unit(j), unit(k));
                    let lhs = self.int_killing(&self.int_bracket(&x, &y), &z)
                        + self.int_killing(&y, &self.int_bracket(&x, &z));
                    if lhs != 0 {
                        killing_invariance_failures += 1;
                    }
                }
            }
        }
        let long_roots = self.roots.long_count();
        G2Checks {
            dim: DIM,
            long_roots,
            short_roots: self.roots.all_roots.len() - long_roots,
            strings_consistent: self.roots.strings_consistent(),
            antisymmetric,
            jacobi_failures,
            killing_invariance_failures,
            killing_rank: self.killing_matrix().rank(),
            chevalley_relations: self.chevalley_relations(),
        }
    }

    /// Whether the span of `vectors` is closed under the bracket.
    pub fn is_subalgebra(&self, vectors: &[Vec<GaussRational>]) -> bool {
        let Ok(d) = span_dim(vectors) else {
            return false;
        };
        vectors.iter().all(|x| {
            vectors.iter().all(|y| {
                let mut aug = vectors.to_vec();
                aug.push(self.bracket(x, y));
                span_dim(&aug).is_ok_and(|e| e == d)
            })
        })
    }
}

/// Builds the algebra and checks every structural identity; panics only if the
/// fixed construction is wrong.
pub fn build_g2() -> G2Algebra {
    let alg = G2Algebra::from_representation();
    let checks = alg.verify();
    assert!(
        checks.all_ok(),
        "G2 construction failed its checks: {checks:?}"
    );
    alg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        let a = build_g2();
        let c = a.verify();
        assert!(c.all_ok(), "{c:?}");
        assert_eq!(a.labels().len(), 14);
    }

    #[test]
    fn chevalley_examples() {
        let a = build_g2();
        let h1 = a.basis_vector(H1);
        let e1 = a.e([1, 0]);
        let two_e1: Vec<_> = e1.iter().map(|x| x * &GaussRational::from_int(2)).collect();
        assert_eq!(a.bracket(&h1, &e1), two_e1);

        let theta = a.roots().highest_root();
        let h_theta = a.coroot(theta.coords);
        let value = &(&h_theta[H1] * &GaussRational::from_int(theta.on_coroot(0)))
            + &(&h_theta[H2] * &GaussRational::from_int(theta.on_coroot(1)));
        assert_eq!(value, GaussRational::from_int(2));
    }

    #[test]
    fn killing_matches_trace() {
        let a = build_g2();
        let e = a.e([2, 3]);
        let f = a.e([-2, -3]);
        let trace = (&a.ad(&e) * &a.ad(&f)).trace();
        assert_eq!(a.killing(&e, &f), trace);
        assert!(!trace.is_zero());
        // on the Cartan subalgebra
        assert_eq!(a.killing_entry(H1, H1), 16);
        assert_eq!(a.killing_entry(H1, H2), -24);
        assert_eq!(a.killing_entry(H2, H2), 48);
    }

    /// Killing form on `h` recomputed from the roots alone:
    /// `κ(h, h') = Σ_α α(h) α(h')`.
    #[test]
    fn killing_on_cartan_from_roots() {
        let a = build_g2();
        for i in 0..2 {
            for j in 0..2 {
                let s: i64 = a
                    .roots()
                    .all_roots
                    .iter()
                    .map(|r| r.on_coroot(i) * r.on_coroot(j))
                    .sum();
                assert_eq!(a.killing_entry(i, j), s);
            }
        }
    }

    #[test]
    fn root_spaces_are_weight_spaces() {
        let a = build_g2();
        for r in &a.roots().all_roots {
            let i = a.root_index(r.coords).unwrap();
            let ad = a.ad_basis(i);
            // ad e_α shifts weights by α
            for j in 2..DIM {
                let col = ad.column(j);
                if let Some(k) = col.iter().position(|x| !x.is_zero()) {
                    let (rj, rk) = (a.root_at(j).unwrap(), a.root_at(k));
                    if let Some(rk) = rk {
                        assert_eq!(
                            rk.coords,
                            [rj.coords[0] + r.coords[0], rj.coords[1] + r.coords[1]]
                        );
                    }
                }
            }
        }
    }
}
