use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{EchelonBasis, GaussRational};
use crate::error::{Error, Result};

/// Dense row-major matrix over `Q(i)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<GaussRational>>", into = "Vec<Vec<GaussRational>>")]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussRational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        let nrows = rows.len();
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<GaussRational>]) -> Result<Self> {
        Ok(ExactMatrix::from_rows(columns.to_vec())?.transpose())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| GaussRational::from_int(x)).collect())
            .collect();
        ExactMatrix::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn diagonal(diag: &[GaussRational]) -> Self {
        let mut m = ExactMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussRational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[GaussRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<GaussRational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<GaussRational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == ExactMatrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussRational]) -> Result<Vec<GaussRational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &ExactMatrix,
        f: impl Fn(&GaussRational, &GaussRational) -> GaussRational,
    ) -> Result<ExactMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &GaussRational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> GaussRational {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// `exp(self)` for a nilpotent matrix; `None` if some power up to the
    /// dimension fails to vanish.
    pub fn exp_nilpotent(&self) -> Option<ExactMatrix> {
        let n = self.rows;
        let mut out = ExactMatrix::identity(n);
        let mut term = ExactMatrix::identity(n);
        for k in 1..=n + 1 {
            term = (&term * self).scale(&GaussRational::from_ratio(1, k as i64));
            if term.is_zero() {
                return Some(out);
            }
            out = out.add(&term).ok()?;
        }
        None
    }

    pub fn echelon(&self) -> EchelonBasis {
        let mut e = EchelonBasis::new(self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r));
        }
        e
    }

    /// Rank over `Q(i)`.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the right null space; `cols - rank` vectors with `M·v = 0`.
    pub fn kernel(&self) -> Vec<Vec<GaussRational>> {
        self.echelon().kernel()
    }

    /// Some solution of `M·x = rhs`, if the system is consistent.
    pub fn solve(&self, rhs: &[GaussRational]) -> Result<Option<Vec<GaussRational>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let mut aug = EchelonBasis::new(self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            let mut row = self.row(r).to_vec();
            row.push(-b);
            aug.insert(&row);
        }
        let sol = aug
            .kernel()
            .into_iter()
            .find(|v| !v[self.cols].is_zero())
            .map(|v| {
                let last = v[self.cols].clone();
                v[..self.cols].iter().map(|x| x / &last).collect()
            });
        Ok(sol)
    }

    pub fn determinant(&self) -> Result<GaussRational> {
        if !self.is_square() {
            return Err(Error::Input(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = GaussRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(GaussRational::zero());
            };
            if p != col {
                for c in 0..n {
                    a.entries.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det = &det * &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pivot;
                for c in col..n {
                    let v = &f * &a[(col, c)];
                    a[(r, c)] -= &v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut e = EchelonBasis::new(2 * n);
        for r in 0..n {
            let mut row = self.row(r).to_vec();
            row.extend((0..n).map(|c| {
                if c == r {
                    GaussRational::one()
                } else {
                    GaussRational::zero()
                }
            }));
            e.insert(&row);
        }
        let reduced = e.reduced_rows();
        if reduced.len() != n || reduced.iter().enumerate().any(|(i, (c, _))| *c != i) {
            return None;
        }
        let rows = reduced.into_iter().map(|(_, r)| r[n..].to_vec()).collect();
        ExactMatrix::from_rows(rows).ok()
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussRational {
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussRational {
        &mut self.entries[r * self.cols + c]
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    /// Panics on incompatible shapes; use [`ExactMatrix::matmul`] otherwise.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs).expect("incompatible matrix shapes")
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

impl TryFrom<Vec<Vec<GaussRational>>> for ExactMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<GaussRational>>) -> Result<Self> {
        ExactMatrix::from_rows(rows)
    }
}

impl From<ExactMatrix> for Vec<Vec<GaussRational>> {
    fn from(m: ExactMatrix) -> Self {
        m.row_vecs()
    }
}

/// Dimension of the linear span of equally long vectors.
pub fn span_dim(vectors: &[Vec<GaussRational>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let n = first.len();
    let mut e = EchelonBasis::new(n);
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        e.insert(v);
    }
    Ok(e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRational {
        GaussRational::from_int(n)
    }

    /// 3x(n-1) Hankel matrix of a point of P^n.
    fn hankel(p: &[GaussRational]) -> ExactMatrix {
        let n = p.len() - 1;
        let rows = (0..3)
            .map(|j| (0..n - 1).map(|k| p[j + k].clone()).collect())
            .collect();
        ExactMatrix::from_rows(rows).unwrap()
    }

    fn secant_point() -> Vec<GaussRational> {
        // (1, λ, ..., λ^5, λ^5 μ) with λ = 1, μ = 2
        [1, 1, 1, 1, 1, 1, 2].iter().map(|&x| q(x)).collect()
    }

    /// All k×k minors of a matrix, by brute-force enumeration.
    fn minors(m: &ExactMatrix, k: usize) -> Vec<GaussRational> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut out = Vec::new();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let rows = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[(r, c)].clone()).collect())
                    .collect();
                out.push(ExactMatrix::from_rows(rows).unwrap().determinant().unwrap());
            }
        }
        out
    }

    #[test]
    fn rank_of_basic_matrices() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
        assert_eq!(ExactMatrix::zeros(4, 5).rank(), 0);
    }

    #[test]
    fn hankel_rank_matches_minor_oracle() {
        let h = hankel(&secant_point());
        assert_eq!((h.rows(), h.cols()), (3, 5));
        // oracle: every 3x3 minor vanishes, some 2x2 minor does not
        assert!(minors(&h, 3).iter().all(Zero::is_zero));
        assert!(minors(&h, 2).iter().any(|m| !m.is_zero()));
        assert_eq!(h.rank(), 2);
        let ker = h.kernel();
        assert_eq!(ker.len(), 3);
        for v in &ker {
            assert!(h.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(4).kernel().is_empty());
        let m = ExactMatrix::from_int_rows(&[&[1, 1]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert_eq!(&ker[0][0], &-&ker[0][1]);
        assert!(!ker[0][0].is_zero());
    }

    #[test]
    fn span_dims() {
        let e1 = vec![q(1), q(0)];
        let e2 = vec![q(0), q(1)];
        let s = vec![q(1), q(1)];
        assert_eq!(span_dim(&[e1.clone(), e2, s]).unwrap(), 2);
        assert_eq!(span_dim(&[]).unwrap(), 0);
        assert!(span_dim(&[e1, vec![q(1)]]).is_err());
    }

    #[test]
    fn gaussian_entries() {
        let i = GaussRational::i();
        // [[1, i], [i, -1]] is nilpotent of rank 1
        let n =
            ExactMatrix::from_rows(vec![vec![q(1), i.clone()], vec![i.clone(), q(-1)]]).unwrap();
        assert_eq!(n.rank(), 1);
        assert!((&n * &n).is_zero());
        let ker = n.kernel();
        assert_eq!(ker.len(), 1);
        assert!(n.mul_vec(&ker[0]).unwrap().iter().all(Zero::is_zero));
        assert_eq!(n.determinant().unwrap(), q(0));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = ExactMatrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant().unwrap(), q(18));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = ExactMatrix::from_int_rows(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = m.solve(&[q(3), q(1), q(4)]).unwrap().unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(m.solve(&[q(3), q(1), q(5)]).unwrap().is_none());
    }

    #[test]
    fn serde_as_nested_arrays() {
        let m = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -2]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/1","0/1"],["0/1","-2/1"]]"#);
        let back: ExactMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix() -> impl Strategy<Value = ExactMatrix> {
            (1usize..6, 1usize..7).prop_flat_map(|(r, c)| arb_shaped(r, c))
        }

        fn arb_square() -> impl Strategy<Value = ExactMatrix> {
            (1usize..6).prop_flat_map(|n| arb_shaped(n, n))
        }

        fn arb_shaped(r: usize, c: usize) -> impl Strategy<Value = ExactMatrix> {
            proptest::collection::vec((-3i64..4, -1i64..2), r * c).prop_map(move |xs| {
                // low-entropy entries so rank deficiency actually happens
                let entries = xs
                    .into_iter()
                    .map(|(a, b)| GaussRational::from_parts((a, 1), (b, 2)))
                    .collect();
                ExactMatrix::new(r, c, entries).unwrap()
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in arb_matrix()) {
                let ker = m.kernel();
                prop_assert_eq!(m.rank() + ker.len(), m.cols());
                for v in &ker {
                    prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
                }
            }

            #[test]
            fn rank_of_transpose(m in arb_matrix()) {
                prop_assert_eq!(m.rank(), m.transpose().rank());
            }

            #[test]
            fn square_rank_matches_determinant(m in arb_square()) {
                let full = m.rank() == m.rows();
                prop_assert_eq!(full, !m.determinant().unwrap().is_zero());
            }
        }
    }
}
