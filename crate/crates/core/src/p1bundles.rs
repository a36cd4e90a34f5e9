//! Vector bundles on `P^1` presented as kernels of graded maps
//! `⊕_j O(a_j) → ⊕_i O(b_i)`, and their splitting types.
//!
//! The splitting type is read off from the dimensions of twisted global
//! sections: for `E = ⊕ O(e_i)`, `h0(E(k)) - h0(E(k-1)) = #{i : e_i >= -k}`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::binforms::BinForm;
use crate::error::{Error, Result};
use crate::exactnum::{EchelonBasis, ExactMatrix, GaussRational};

/// Degrees of the line-bundle summands, sorted in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType {
    degrees: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { degrees }
    }

    /// `value` repeated `count` times.
    pub fn balanced(value: i64, count: usize) -> Self {
        SplittingType::new(vec![value; count])
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// First Chern class, the sum of the degrees.
    pub fn c1(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn dual(&self) -> Self {
        SplittingType::new(self.degrees.iter().map(|e| -e).collect())
    }

    pub fn twist(&self, k: i64) -> Self {
        SplittingType::new(self.degrees.iter().map(|e| e + k).collect())
    }

    /// `h0(E(k)) = Σ max(0, e_i + k + 1)`.
    pub fn h0(&self, k: i64) -> usize {
        self.degrees
            .iter()
            .map(|e| (e + k + 1).max(0) as usize)
            .sum()
    }

    pub fn is_balanced(&self) -> bool {
        match (self.degrees.first(), self.degrees.last()) {
            (Some(hi), Some(lo)) => hi - lo <= 1,
            _ => true,
        }
    }
}

impl From<Vec<i64>> for SplittingType {
    fn from(v: Vec<i64>) -> Self {
        SplittingType::new(v)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(t: SplittingType) -> Self {
        t.degrees
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sheaf map `⊕_j O(a_j) → ⊕_i O(b_i)`; entry `(i, j)` is a form of
/// degree `b_i - a_j`, or a zero form of any degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct GradedMap {
    source_twists: Vec<i64>,
    target_twists: Vec<i64>,
    entries: Vec<Vec<BinForm>>,
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    source_twists: Vec<i64>,
    target_twists: Vec<i64>,
    entries: Vec<Vec<BinForm>>,
}

impl TryFrom<RawMap> for GradedMap {
    type Error = Error;
    fn try_from(raw: RawMap) -> Result<Self> {
        GradedMap::new(raw.source_twists, raw.target_twists, raw.entries)
    }
}

impl From<GradedMap> for RawMap {
    fn from(m: GradedMap) -> Self {
        RawMap {
            source_twists: m.source_twists,
            target_twists: m.target_twists,
            entries: m.entries,
        }
    }
}

/// `h0` of the kernel at one twist.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GradedPiece {
    pub twist: i64,
    pub h0: usize,
}

impl GradedMap {
    pub fn new(
        source_twists: Vec<i64>,
        target_twists: Vec<i64>,
        entries: Vec<Vec<BinForm>>,
    ) -> Result<Self> {
        if entries.len() != target_twists.len() {
            return Err(Error::DimensionMismatch {
                expected: target_twists.len(),
                found: entries.len(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != source_twists.len() {
                return Err(Error::DimensionMismatch {
                    expected: source_twists.len(),
                    found: row.len(),
                });
            }
            for (j, f) in row.iter().enumerate() {
                let want = target_twists[i] - source_twists[j];
                if !f.is_zero() && f.degree() as i64 != want {
                    return Err(Error::Input(format!(
                        "entry ({i},{j}) has degree {} but the twists require {want}",
                        f.degree()
                    )));
                }
            }
        }
        Ok(GradedMap {
            source_twists,
            target_twists,
            entries,
        })
    }

    /// The zero map between the given sums of line bundles.
    pub fn zero(source_twists: Vec<i64>, target_twists: Vec<i64>) -> Self {
        let entries = target_twists
            .iter()
            .map(|_| source_twists.iter().map(|_| BinForm::zero(0)).collect())
            .collect();
        GradedMap {
            source_twists,
            target_twists,
            entries,
        }
    }

    pub fn source_twists(&self) -> &[i64] {
        &self.source_twists
    }

    pub fn target_twists(&self) -> &[i64] {
        &self.target_twists
    }

    pub fn entry(&self, i: usize, j: usize) -> &BinForm {
        &self.entries[i][j]
    }

    /// The linear map `⊕_j S_{k+a_j} → ⊕_i S_{k+b_i}` on degree-`k` pieces.
    pub fn graded_piece_matrix(&self, k: i64) -> ExactMatrix {
        let src: Vec<usize> = self
            .source_twists
            .iter()
            .map(|a| piece_dim(k + a))
            .collect();
        let tgt: Vec<usize> = self
            .target_twists
            .iter()
            .map(|b| piece_dim(k + b))
            .collect();
        let ncols: usize = src.iter().sum();
        let nrows: usize = tgt.iter().sum();
        let mut m = ExactMatrix::zeros(nrows, ncols);
        let mut row0 = 0;
        for (i, &ti) in tgt.iter().enumerate() {
            let mut col0 = 0;
            for (j, &sj) in src.iter().enumerate() {
                let f = &self.entries[i][j];
                if ti > 0 && sj > 0 && !f.is_zero() {
                    // column m of block j is the monomial u^(deg-m) v^m; the
                    // product with f lands at index m + p in the target block
                    for mono in 0..sj {
                        for (p, c) in f.coeffs().iter().enumerate() {
                            if !c.is_zero() {
                                m[(row0 + mono + p, col0 + mono)] = c.clone();
                            }
                        }
                    }
                }
                col0 += sj;
            }
            row0 += ti;
        }
        m
    }

    /// `dim H0((ker φ)(k))`.
    pub fn kernel_sections_dim(&self, k: i64) -> usize {
        let m = self.graded_piece_matrix(k);
        if m.cols() == 0 {
            return 0;
        }
        m.cols() - m.rank()
    }

    /// Rank of the map at a general point of `P^1`.
    pub fn generic_rank(&self) -> usize {
        let nt = self.target_twists.len();
        let ns = self.source_twists.len();
        let full = nt.min(ns);
        // a nonvanishing r×r minor has degree at most the sum of the r largest
        // entry degrees, so it is nonzero at one of that many + 1 points
        let max_deg = self
            .entries
            .iter()
            .flatten()
            .filter(|f| !f.is_zero())
            .map(BinForm::degree)
            .max()
            .unwrap_or(0);
        let bound = full * max_deg;
        let mut best = 0;
        for t in 0..=bound as i64 {
            let (u, v) = (GaussRational::from_int(1), GaussRational::from_int(t));
            let mut e = EchelonBasis::new(ns);
            for row in &self.entries {
                let vals: Vec<GaussRational> = row.iter().map(|f| f.eval(&u, &v)).collect();
                e.insert(&vals);
            }
            best = best.max(e.rank());
            if best == full {
                break;
            }
        }
        best
    }

    /// Whether some maximal minor is not identically zero.
    pub fn is_generically_surjective(&self) -> bool {
        self.generic_rank() == self.target_twists.len()
    }

    /// Lower bound for the twist at which the scan starts; below it the
    /// kernel has no sections.
    fn scan_start(&self) -> i64 {
        let max_a = self.source_twists.iter().copied().max().unwrap_or(0);
        let spread: i64 = self
            .target_twists
            .iter()
            .flat_map(|b| self.source_twists.iter().map(move |a| (b - a).abs()))
            .sum();
        -max_a - 1 - spread
    }
}

fn piece_dim(deg: i64) -> usize {
    if deg < 0 {
        0
    } else {
        deg as usize + 1
    }
}

/// Result of scanning twisted sections of a kernel bundle.
#[derive(Clone, Debug, Serialize)]
pub struct KernelScan {
    pub splitting: SplittingType,
    pub rank: usize,
    pub window: Vec<GradedPiece>,
}

/// Splitting type of `ker φ` from the jumps of `h0((ker φ)(k))`.
pub fn splitting_type_of_kernel(phi: &GradedMap) -> Result<SplittingType> {
    scan_kernel(phi).map(|s| s.splitting)
}

/// Like [`splitting_type_of_kernel`], also returning the scanned `h0` values.
pub fn scan_kernel(phi: &GradedMap) -> Result<KernelScan> {
    let rank = phi.source_twists.len() - phi.generic_rank();
    if rank == 0 {
        return Ok(KernelScan {
            splitting: SplittingType::new(vec![]),
            rank,
            window: vec![],
        });
    }
    let k0 = phi.scan_start();
    // below the smallest source twist everything vanishes, so jump ahead
    let min_a = phi.source_twists.iter().copied().min().unwrap_or(0);
    let mut k = k0.max(-phi.source_twists.iter().copied().max().unwrap_or(0) - 1);
    let mut window = Vec::new();
    let mut prev = phi.kernel_sections_dim(k);
    if prev != 0 {
        return Err(Error::Inconsistent(format!(
            "kernel has sections at twist {k}, below the scan start"
        )));
    }
    window.push(GradedPiece { twist: k, h0: prev });
    let mut diffs: Vec<(i64, usize)> = Vec::new();
    let mut saturated = 0;
    // the difference cannot stay below the rank beyond this twist
    let limit = -min_a + 2 + phi.scan_start().abs();
    while saturated < 2 {
        k += 1;
        if k > limit {
            return Err(Error::Inconsistent(format!(
                "twisted sections did not reach rank {rank} by twist {limit}"
            )));
        }
        let h = phi.kernel_sections_dim(k);
        window.push(GradedPiece { twist: k, h0: h });
        let d = h
            .checked_sub(prev)
            .ok_or_else(|| Error::Inconsistent(format!("h0 decreased at twist {k}")))?;
        if let Some(&(_, last)) = diffs.last() {
            if d < last {
                return Err(Error::Inconsistent(format!(
                    "section jumps not monotone at twist {k}"
                )));
            }
        }
        if d > rank {
            return Err(Error::Inconsistent(format!(
                "section jump {d} exceeds rank {rank} at twist {k}"
            )));
        }
        diffs.push((k, d));
        saturated = if d == rank { saturated + 1 } else { 0 };
        prev = h;
    }
    // #{e_i = -k} = diff(k) - diff(k-1)
    let mut degrees = Vec::with_capacity(rank);
    let mut last = 0;
    for &(k, d) in &diffs {
        degrees.extend(std::iter::repeat_n(-k, d - last));
        last = d;
    }
    let splitting = SplittingType::new(degrees);
    for piece in &window {
        if splitting.h0(piece.twist) != piece.h0 {
            return Err(Error::Inconsistent(format!(
                "type {splitting} predicts h0 = {} at twist {}, computed {}",
                splitting.h0(piece.twist),
                piece.twist,
                piece.h0
            )));
        }
    }
    Ok(KernelScan {
        splitting,
        rank,
        window,
    })
}

/// Whether every entry of the matrix product `φ · columns` vanishes; used to
/// check candidate kernel sections.
pub fn annihilates(phi: &GradedMap, sections: &[BinForm]) -> Result<bool> {
    if sections.len() != phi.source_twists.len() {
        return Err(Error::DimensionMismatch {
            expected: phi.source_twists.len(),
            found: sections.len(),
        });
    }
    for row in &phi.entries {
        let mut acc: Option<BinForm> = None;
        for (f, g) in row.iter().zip(sections) {
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let p = f * g;
            acc = Some(match acc {
                None => p,
                Some(a) => a.checked_add(&p)?,
            });
        }
        if acc.is_some_and(|a| !a.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn euler_map() -> GradedMap {
        GradedMap::new(
            vec![-1, -1],
            vec![0],
            vec![vec![BinForm::u(), BinForm::v()]],
        )
        .unwrap()
    }

    /// Normalized Jacobian `O^{n+1} → O(d-1)^2` of a list of forms.
    fn jacobian(forms: &[BinForm]) -> GradedMap {
        let d = forms[0].degree() as i64;
        let (du, dv): (Vec<_>, Vec<_>) = forms.iter().map(BinForm::derivatives).unzip();
        GradedMap::new(vec![0; forms.len()], vec![d - 1, d - 1], vec![du, dv]).unwrap()
    }

    fn twisted_cubic() -> Vec<BinForm> {
        (0..4)
            .map(|k| BinForm::monomial(3, k, GaussRational::from_int(1)))
            .collect()
    }

    /// Kernel dimension by a plain rational elimination, independent of the
    /// library's echelon engine.  Only for real entries.
    fn oracle_kernel_dim(m: &ExactMatrix) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .map(|x| {
                        assert!(x.is_real());
                        x.re().clone()
                    })
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    let pivot = a[rank].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        m.cols() - rank
    }

    #[test]
    fn euler_sequence_kernel() {
        let phi = euler_map();
        assert_eq!(phi.kernel_sections_dim(2), 1);
        assert_eq!(phi.kernel_sections_dim(1), 0);
        assert_eq!(
            splitting_type_of_kernel(&phi).unwrap(),
            SplittingType::new(vec![-2])
        );
    }

    #[test]
    fn zero_map_keeps_the_source() {
        let phi = GradedMap::zero(vec![0, 0], vec![1]);
        for k in 0..5 {
            assert_eq!(phi.kernel_sections_dim(k), 2 * (k as usize + 1));
        }
        assert_eq!(
            splitting_type_of_kernel(&phi).unwrap(),
            SplittingType::new(vec![0, 0])
        );
    }

    #[test]
    fn twisted_cubic_jacobian() {
        let phi = jacobian(&twisted_cubic());
        let expected = SplittingType::new(vec![-2, -2]);
        for k in 0..3 {
            let m = phi.graded_piece_matrix(k);
            assert_eq!(phi.kernel_sections_dim(k), oracle_kernel_dim(&m), "k = {k}");
            assert_eq!(phi.kernel_sections_dim(k), expected.h0(k));
        }
        assert_eq!(splitting_type_of_kernel(&phi).unwrap(), expected);
    }

    #[test]
    fn monomial_sextic_jacobian() {
        let forms: Vec<BinForm> = [0, 1, 2, 4, 5, 6]
            .iter()
            .map(|&k| BinForm::monomial(6, k, GaussRational::from_int(1)))
            .collect();
        let e = splitting_type_of_kernel(&jacobian(&forms)).unwrap();
        // normal bundle degrees are d - e'
        let n = e.dual().twist(6);
        assert_eq!(n, SplittingType::new(vec![9, 9, 8, 8]));
    }

    #[test]
    fn entries_must_match_twists() {
        let bad = GradedMap::new(vec![0], vec![2], vec![vec![BinForm::u()]]);
        assert!(bad.is_err());
        let zero_ok = GradedMap::new(vec![3], vec![0], vec![vec![BinForm::zero(0)]]);
        assert!(zero_ok.is_ok());
    }

    #[test]
    fn rank_deficient_target_uses_generic_rank() {
        // both rows equal: the image is a line bundle
        let row = vec![BinForm::u(), BinForm::v()];
        let phi = GradedMap::new(vec![-1, -1], vec![0, 0], vec![row.clone(), row]).unwrap();
        assert_eq!(phi.generic_rank(), 1);
        assert!(!phi.is_generically_surjective());
        assert_eq!(
            splitting_type_of_kernel(&phi).unwrap(),
            SplittingType::new(vec![-2])
        );
    }

    #[test]
    fn koszul_section_is_annihilated() {
        let phi = euler_map();
        assert!(annihilates(&phi, &[BinForm::v(), -&BinForm::u()]).unwrap());
        assert!(!annihilates(&phi, &[BinForm::v(), BinForm::u()]).unwrap());
    }

    #[test]
    fn splitting_type_basics() {
        let t = SplittingType::new(vec![8, 9, 8, 9]);
        assert_eq!(t.degrees(), &[9, 9, 8, 8]);
        assert_eq!(t.to_string(), "{9,9,8,8}");
        assert_eq!(t.c1(), 34);
        assert_eq!(t.dual().degrees(), &[-8, -8, -9, -9]);
        assert!(t.is_balanced());
        assert_eq!(serde_json::to_string(&t).unwrap(), "[9,9,8,8]");
        assert_eq!(SplittingType::new(vec![-2]).h0(2), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_form(d: usize) -> impl Strategy<Value = BinForm> {
            proptest::collection::vec(-4i64..5, d + 1).prop_map(|c| BinForm::from_ints(&c))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn koszul_kernel_of_coprime_pair(
                (f, g) in (1usize..5).prop_flat_map(|d| (arb_form(d), arb_form(d))),
                a in -2i64..3,
            ) {
                let d = f.degree() as i64;
                prop_assume!(!f.is_zero() && !g.is_zero());
                prop_assume!(!crate::binforms::resultant(&f, &g).unwrap().is_zero());
                let phi = GradedMap::new(vec![a, a], vec![a + d], vec![vec![f, g]]).unwrap();
                let t = splitting_type_of_kernel(&phi).unwrap();
                prop_assert_eq!(t, SplittingType::new(vec![a - d]));
            }

            #[test]
            fn diagonal_maps_split_as_sums(
                twists in proptest::collection::vec(-3i64..4, 1..4),
            ) {
                // zero map from a sum of line bundles has the sum as its kernel
                let phi = GradedMap::zero(twists.clone(), vec![0]);
                let t = splitting_type_of_kernel(&phi).unwrap();
                prop_assert_eq!(t.clone(), SplittingType::new(twists));
                for k in -5..5 {
                    prop_assert_eq!(t.h0(k), phi.kernel_sections_dim(k));
                }
            }

            #[test]
            fn dual_twist_algebra(v in proptest::collection::vec(-6i64..7, 0..6), k in -3i64..4) {
                let t = SplittingType::new(v);
                prop_assert_eq!(t.dual().dual(), t.clone());
                prop_assert_eq!(t.twist(k).c1(), t.c1() + k * t.rank() as i64);
                prop_assert_eq!(t.twist(k).dual(), t.dual().twist(-k));
            }
        }
    }

    #[test]
    fn rational_oracle_sanity() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(oracle_kernel_dim(&m), 1);
    }
}
