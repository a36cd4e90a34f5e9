//! Fraction-free row echelon forms over `Z` and `Z[i]`.
//!
//! Rows are scaled to integral vectors on entry.  Elimination keeps them
//! integral (`r ← p·r − c·q`) and divides every updated row by the integer
//! content of its entries, which keeps coefficient growth in check.  Matrices
//! whose entries are all real never touch Gaussian integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GaussRational;

pub(crate) trait ElimRing: Clone + PartialEq + Sized {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// `self · scale` where `scale` clears the denominators of `g`.
    fn from_scaled(g: &GaussRational, scale: &BigInt) -> Self;
    fn to_gauss(&self) -> GaussRational;
    fn fold_gcd(&self, acc: &mut BigInt);
    fn div_int(&self, d: &BigInt) -> Self;
}

impl ElimRing for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        One::is_one(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn from_scaled(g: &GaussRational, scale: &BigInt) -> Self {
        let q = g.re() * BigRational::from_integer(scale.clone());
        debug_assert!(q.is_integer() && g.is_real());
        q.to_integer()
    }
    fn to_gauss(&self) -> GaussRational {
        GaussRational::from(self.clone())
    }
    fn fold_gcd(&self, acc: &mut BigInt) {
        if !Zero::is_zero(self) && !One::is_one(acc) {
            *acc = acc.gcd(self);
        }
    }
    fn div_int(&self, d: &BigInt) -> Self {
        self / d
    }
}

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl ElimRing for GaussInt {
    fn nil() -> Self {
        GaussInt {
            re: <BigInt as Zero>::zero(),
            im: <BigInt as Zero>::zero(),
        }
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn is_unit(&self) -> bool {
        One::is_one(&self.re) && Zero::is_zero(&self.im)
    }
    fn mul(&self, o: &Self) -> Self {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return GaussInt {
                re: &self.re * &o.re,
                im: <BigInt as Zero>::zero(),
            };
        }
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn from_scaled(g: &GaussRational, scale: &BigInt) -> Self {
        let s = BigRational::from_integer(scale.clone());
        GaussInt {
            re: (g.re() * &s).to_integer(),
            im: (g.im() * &s).to_integer(),
        }
    }
    fn to_gauss(&self) -> GaussRational {
        GaussRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
    fn fold_gcd(&self, acc: &mut BigInt) {
        self.re.fold_gcd(acc);
        self.im.fold_gcd(acc);
    }
    fn div_int(&self, d: &BigInt) -> Self {
        GaussInt {
            re: &self.re / d,
            im: &self.im / d,
        }
    }
}

impl GaussInt {
    fn int_gcd(&self, other: &Self) -> BigInt {
        let mut g = <BigInt as Zero>::zero();
        for x in [&self.re, &self.im, &other.re, &other.im] {
            g = g.gcd(x);
        }
        g
    }
}

trait PairGcd {
    fn pair_gcd(&self, other: &Self) -> BigInt;
}

impl PairGcd for BigInt {
    fn pair_gcd(&self, other: &Self) -> BigInt {
        self.gcd(other)
    }
}

impl PairGcd for GaussInt {
    fn pair_gcd(&self, other: &Self) -> BigInt {
        self.int_gcd(other)
    }
}

fn normalize_content<R: ElimRing>(row: &mut [R]) {
    let mut g = <BigInt as Zero>::zero();
    for x in row.iter() {
        x.fold_gcd(&mut g);
        if One::is_one(&g) {
            return;
        }
    }
    if Zero::is_zero(&g) || One::is_one(&g) {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_nil() {
            *x = x.div_int(&g);
        }
    }
}

/// `target ← p·target − c·pivot_row` where `p = pivot_row[col]`, `c = target[col]`.
fn eliminate<R: ElimRing + PairGcd>(target: &mut [R], pivot_row: &[R], col: usize) {
    let c = &target[col];
    if c.is_nil() {
        return;
    }
    let p = &pivot_row[col];
    let g = p.pair_gcd(c);
    let (p, c) = if One::is_one(&g) || Zero::is_zero(&g) {
        (p.clone(), c.clone())
    } else {
        (p.div_int(&g), c.div_int(&g))
    };
    let p_is_one = p.is_unit();
    for j in 0..target.len() {
        let t = &target[j];
        let q = &pivot_row[j];
        let scaled = if t.is_nil() {
            None
        } else if p_is_one {
            Some(t.clone())
        } else {
            Some(t.mul(&p))
        };
        target[j] = match (scaled, q.is_nil()) {
            (None, true) => continue,
            (Some(s), true) => s,
            (None, false) => R::nil().sub(&c.mul(q)),
            (Some(s), false) => s.sub(&c.mul(q)),
        };
    }
    normalize_content(target);
}

#[derive(Clone, Debug)]
struct Echelon<R> {
    ncols: usize,
    // pivot column -> row whose first nonzero entry sits in that column
    rows: BTreeMap<usize, Vec<R>>,
}

impl<R: ElimRing + PairGcd> Echelon<R> {
    fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    fn reduce(&self, row: &mut [R]) {
        for (&col, prow) in &self.rows {
            eliminate(row, prow, col);
        }
    }

    fn insert(&mut self, mut row: Vec<R>) -> bool {
        self.reduce(&mut row);
        match row.iter().position(|x| !x.is_nil()) {
            Some(col) => {
                normalize_content(&mut row);
                self.rows.insert(col, row);
                true
            }
            None => false,
        }
    }

    /// Reduced row echelon form, each row normalized so its pivot is 1.
    fn reduced(&self) -> Vec<(usize, Vec<GaussRational>)> {
        let mut rows: Vec<(usize, Vec<R>)> =
            self.rows.iter().map(|(&c, r)| (c, r.clone())).collect();
        for i in (0..rows.len()).rev() {
            let (col, pivot_row) = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                eliminate(&mut row.1, &pivot_row, col);
            }
        }
        rows.into_iter()
            .map(|(c, r)| {
                let p = r[c].to_gauss();
                let r = r.iter().map(|x| &x.to_gauss() / &p).collect();
                (c, r)
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
enum Engine {
    Real(Echelon<BigInt>),
    Complex(Echelon<GaussInt>),
}

/// Incrementally maintained row echelon basis of a subspace of `Q(i)^n`.
///
/// Pivots are chosen as the first nonzero entry in column order, so the
/// result only depends on the order in which rows are inserted.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    engine: Engine,
}

fn scale_of(row: &[GaussRational]) -> BigInt {
    row.iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator_lcm()))
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis {
            engine: Engine::Real(Echelon::new(ncols)),
        }
    }

    pub fn ncols(&self) -> usize {
        match &self.engine {
            Engine::Real(e) => e.ncols,
            Engine::Complex(e) => e.ncols,
        }
    }

    pub fn rank(&self) -> usize {
        match &self.engine {
            Engine::Real(e) => e.rows.len(),
            Engine::Complex(e) => e.rows.len(),
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        match &self.engine {
            Engine::Real(e) => e.rows.keys().copied().collect(),
            Engine::Complex(e) => e.rows.keys().copied().collect(),
        }
    }

    fn promote(&mut self) {
        if let Engine::Real(e) = &self.engine {
            let rows = e
                .rows
                .iter()
                .map(|(&c, r)| {
                    let row = r
                        .iter()
                        .map(|x| GaussInt {
                            re: x.clone(),
                            im: <BigInt as Zero>::zero(),
                        })
                        .collect();
                    (c, row)
                })
                .collect();
            self.engine = Engine::Complex(Echelon {
                ncols: e.ncols,
                rows,
            });
        }
    }

    /// Adds a row; returns whether it was independent of the current basis.
    ///
    /// Panics if the row length differs from the column count.
    pub fn insert(&mut self, row: &[GaussRational]) -> bool {
        assert_eq!(row.len(), self.ncols(), "row length mismatch");
        let scale = scale_of(row);
        if row.iter().any(|x| !x.is_real()) {
            self.promote();
        }
        match &mut self.engine {
            Engine::Real(e) => {
                e.insert(row.iter().map(|x| BigInt::from_scaled(x, &scale)).collect())
            }
            Engine::Complex(e) => e.insert(
                row.iter()
                    .map(|x| GaussInt::from_scaled(x, &scale))
                    .collect(),
            ),
        }
    }

    pub fn contains(&self, row: &[GaussRational]) -> bool {
        let mut probe = self.clone();
        !probe.insert(row)
    }

    pub fn reduced_rows(&self) -> Vec<(usize, Vec<GaussRational>)> {
        match &self.engine {
            Engine::Real(e) => e.reduced(),
            Engine::Complex(e) => e.reduced(),
        }
    }

    /// Basis of the right null space of the matrix whose rows span this space.
    pub fn kernel(&self) -> Vec<Vec<GaussRational>> {
        let n = self.ncols();
        let reduced = self.reduced_rows();
        let pivots: Vec<usize> = reduced.iter().map(|(c, _)| *c).collect();
        (0..n)
            .filter(|j| !pivots.contains(j))
            .map(|free| {
                let mut v = vec![GaussRational::zero(); n];
                v[free] = GaussRational::one();
                for (col, row) in &reduced {
                    if !row[free].is_zero() {
                        v[*col] = -&row[free];
                    }
                }
                v
            })
            .collect()
    }
}
