//! Homogeneous binary forms in `(u, v)` over `Q(i)`.
//!
//! A form of degree `d` is stored as `d + 1` coefficients, index `k` holding
//! the coefficient of `u^(d-k) v^k`.  The degree is part of the value, so the
//! zero form of degree 3 and the zero form of degree 5 are different objects.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRational};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawForm", into = "RawForm")]
pub struct BinForm {
    degree: usize,
    coeffs: Vec<GaussRational>,
}

#[derive(Serialize, Deserialize)]
struct RawForm {
    degree: usize,
    coeffs: Vec<GaussRational>,
}

impl TryFrom<RawForm> for BinForm {
    type Error = Error;
    fn try_from(raw: RawForm) -> Result<Self> {
        if raw.coeffs.len() != raw.degree + 1 {
            return Err(Error::DimensionMismatch {
                expected: raw.degree + 1,
                found: raw.coeffs.len(),
            });
        }
        Ok(BinForm {
            degree: raw.degree,
            coeffs: raw.coeffs,
        })
    }
}

impl From<BinForm> for RawForm {
    fn from(f: BinForm) -> Self {
        RawForm {
            degree: f.degree,
            coeffs: f.coeffs,
        }
    }
}

impl BinForm {
    /// Form from its coefficient list; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<GaussRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Input(
                "a binary form needs at least one coefficient".into(),
            ));
        }
        Ok(BinForm {
            degree: coeffs.len() - 1,
            coeffs,
        })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinForm::new(coeffs.iter().map(|&c| GaussRational::from_int(c)).collect())
            .expect("empty coefficient list")
    }

    pub fn zero(degree: usize) -> Self {
        BinForm {
            degree,
            coeffs: vec![GaussRational::zero(); degree + 1],
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        BinForm {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// `c · u^(degree-k) v^k`.
    pub fn monomial(degree: usize, k: usize, c: GaussRational) -> Self {
        assert!(k <= degree, "monomial index out of range");
        let mut f = BinForm::zero(degree);
        f.coeffs[k] = c;
        f
    }

    pub fn u() -> Self {
        BinForm::from_ints(&[1, 0])
    }

    pub fn v() -> Self {
        BinForm::from_ints(&[0, 1])
    }

    /// `a·u + b·v`.
    pub fn linear(a: GaussRational, b: GaussRational) -> Self {
        BinForm {
            degree: 1,
            coeffs: vec![a, b],
        }
    }

    /// The linear form vanishing exactly at the parameter point `p`.
    pub fn vanishing_at(p: &ParamPoint) -> Self {
        BinForm::linear(p.v.clone(), -&p.u)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &GaussRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0 && !self.is_zero()
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn last_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Exponent of the largest power of `v` dividing the form.
    pub fn v_valuation(&self) -> Option<usize> {
        self.first_nonzero()
    }

    /// Exponent of the largest power of `u` dividing the form.
    pub fn u_valuation(&self) -> Option<usize> {
        self.last_nonzero().map(|k| self.degree - k)
    }

    /// Rescaled so the first nonzero coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.first_nonzero() {
            Some(k) if !self.coeffs[k].is_one() => self.scale(&self.coeffs[k].inv().unwrap()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        BinForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_add(&self, other: &BinForm) -> Result<BinForm> {
        self.same_degree(other)?;
        Ok(BinForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &BinForm) -> Result<BinForm> {
        self.same_degree(other)?;
        Ok(BinForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn same_degree(&self, other: &BinForm) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn pow(&self, e: usize) -> BinForm {
        let mut out = BinForm::constant(GaussRational::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, u: &GaussRational, v: &GaussRational) -> GaussRational {
        // Horner in t = v/u would need u != 0; evaluate the homogeneous sum directly.
        let mut upow = vec![GaussRational::one(); self.degree + 1];
        let mut vpow = vec![GaussRational::one(); self.degree + 1];
        for k in 1..=self.degree {
            upow[k] = &upow[k - 1] * u;
            vpow[k] = &vpow[k - 1] * v;
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| &(c * &upow[self.degree - k]) * &vpow[k])
            .sum()
    }

    pub fn eval_at(&self, p: &ParamPoint) -> GaussRational {
        self.eval(&p.u, &p.v)
    }

    /// `(∂f/∂u, ∂f/∂v)`, both of degree `d - 1`.  Constants map to a pair of
    /// zero constants.
    pub fn derivatives(&self) -> (BinForm, BinForm) {
        let d = self.degree;
        if d == 0 {
            return (BinForm::zero(0), BinForm::zero(0));
        }
        let mut du = BinForm::zero(d - 1);
        let mut dv = BinForm::zero(d - 1);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                du.coeffs[k] = c * &GaussRational::from_int((d - k) as i64);
            }
            if k > 0 {
                dv.coeffs[k - 1] = c * &GaussRational::from_int(k as i64);
            }
        }
        (du, dv)
    }

    /// `self / g` if `g` divides `self` exactly.
    pub fn div_exact(&self, g: &BinForm) -> Option<BinForm> {
        if g.degree > self.degree {
            return None;
        }
        let s = g.first_nonzero()?;
        let m = self.degree - g.degree;
        let lead = g.coeffs[s].inv().unwrap();
        let mut q = vec![GaussRational::zero(); m + 1];
        for i in 0..=m {
            if i + s > self.degree {
                break;
            }
            let mut acc = self.coeffs[i + s].clone();
            for (j, qj) in q.iter().enumerate().take(i) {
                let gk = i + s - j;
                if gk <= g.degree && !qj.is_zero() && !g.coeffs[gk].is_zero() {
                    acc -= &(qj * &g.coeffs[gk]);
                }
            }
            q[i] = &acc * &lead;
        }
        let q = BinForm {
            degree: m,
            coeffs: q,
        };
        (&q * g == *self).then_some(q)
    }

    /// Multiplicity of the parameter point `p` as a root; `None` for the zero form.
    pub fn order_at(&self, p: &ParamPoint) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let l = BinForm::vanishing_at(p);
        let mut f = self.clone();
        let mut n = 0;
        while f.degree > 0 && f.eval_at(p).is_zero() {
            f = f
                .div_exact(&l)
                .expect("linear factor must divide a form vanishing at its root");
            n += 1;
        }
        Some(n)
    }

    /// The form divided by its repeated factors (monic).
    pub fn squarefree_part(&self) -> Result<BinForm> {
        if self.degree == 0 {
            return Ok(self.monic());
        }
        let (du, dv) = self.derivatives();
        let nonzero: Vec<&BinForm> = [&du, &dv].into_iter().filter(|f| !f.is_zero()).collect();
        let mut g = self.clone();
        for h in nonzero {
            g = gcd(&g, h)?;
        }
        Ok(self.div_exact(&g).expect("gcd divides").monic())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(!self.is_zero() && self.squarefree_part()?.degree == self.degree)
    }

    /// `Σ c_j f_j` over forms of equal degree.
    pub fn linear_combination(coeffs: &[GaussRational], forms: &[BinForm]) -> Result<BinForm> {
        if coeffs.len() != forms.len() {
            return Err(Error::DimensionMismatch {
                expected: forms.len(),
                found: coeffs.len(),
            });
        }
        let Some(first) = forms.first() else {
            return Err(Error::Input("empty linear combination".into()));
        };
        let mut out = BinForm::zero(first.degree);
        for (c, f) in coeffs.iter().zip(forms) {
            out.same_degree(f)?;
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.coeffs.iter_mut().zip(&f.coeffs) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        Ok(out)
    }

    /// Dehomogenized polynomial in `t = v/u`, low degree first.
    fn dehomogenize(&self) -> Vec<GaussRational> {
        let mut p = self.coeffs.clone();
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    fn homogenize(p: &[GaussRational], degree: usize) -> BinForm {
        let mut f = BinForm::zero(degree);
        f.coeffs[..p.len()].clone_from_slice(p);
        f
    }
}

// --- univariate helpers in t = v/u, coefficient vectors low degree first ---

fn poly_trim(p: &mut Vec<GaussRational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_is_zero(p: &[GaussRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn poly_rem(a: &[GaussRational], b: &[GaussRational]) -> Vec<GaussRational> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].inv().expect("nonzero divisor");
    while r.len() > db && !poly_is_zero(&r) {
        let shift = r.len() - 1 - db;
        let f = &r[r.len() - 1] * &lead;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[shift + j] -= &(&f * bj);
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[GaussRational], b: &[GaussRational]) -> Vec<GaussRational> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !poly_is_zero(&b) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Monic greatest common divisor.
pub fn gcd(f: &BinForm, g: &BinForm) -> Result<BinForm> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::Input("gcd of two zero forms".into())),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    let (fv, gv) = (f.v_valuation().unwrap(), g.v_valuation().unwrap());
    let (fu, gu) = (f.u_valuation().unwrap(), g.u_valuation().unwrap());
    // strip v^a and u^b; the remaining polynomials in t have nonzero constant term
    let pf = f.dehomogenize()[fv..].to_vec();
    let pg = g.dehomogenize()[gv..].to_vec();
    let core = poly_gcd(&pf, &pg);
    let core_deg = core.len() - 1;
    let (a, b) = (fv.min(gv), fu.min(gu));
    let mut coeffs = vec![GaussRational::zero(); a];
    coeffs.extend(core);
    let out = BinForm::homogenize(&coeffs, a + core_deg + b);
    Ok(out.monic())
}

/// Monic gcd of a nonempty list of forms, ignoring zero entries.
pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a BinForm>) -> Result<BinForm> {
    let mut acc: Option<BinForm> = None;
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => f.monic(),
            Some(g) => gcd(&g, f)?,
        });
        if acc.as_ref().is_some_and(|g| g.degree == 0) {
            break;
        }
    }
    acc.ok_or_else(|| Error::Input("gcd of zero forms".into()))
}

/// Sylvester resultant.
pub fn resultant(f: &BinForm, g: &BinForm) -> Result<GaussRational> {
    let (m, n) = (f.degree, g.degree);
    if m == 0 || n == 0 {
        return Err(Error::Input(
            "resultant needs forms of positive degree".into(),
        ));
    }
    let size = m + n;
    let mut s = ExactMatrix::zeros(size, size);
    for r in 0..n {
        for (k, c) in f.coeffs.iter().enumerate() {
            s[(r, r + k)] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.coeffs.iter().enumerate() {
            s[(n + r, r + k)] = c.clone();
        }
    }
    s.determinant()
}

impl Mul for &BinForm {
    type Output = BinForm;
    fn mul(self, rhs: &BinForm) -> BinForm {
        let degree = self.degree + rhs.degree;
        let mut coeffs = vec![GaussRational::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        BinForm { degree, coeffs }
    }
}

impl Add for &BinForm {
    type Output = BinForm;
    /// Panics on a degree mismatch; see [`BinForm::checked_add`].
    fn add(self, rhs: &BinForm) -> BinForm {
        self.checked_add(rhs)
            .expect("adding forms of different degree")
    }
}

impl Sub for &BinForm {
    type Output = BinForm;
    /// Panics on a degree mismatch; see [`BinForm::checked_sub`].
    fn sub(self, rhs: &BinForm) -> BinForm {
        self.checked_sub(rhs)
            .expect("subtracting forms of different degree")
    }
}

impl Neg for &BinForm {
    type Output = BinForm;
    fn neg(self) -> BinForm {
        self.scale(&GaussRational::from_int(-1))
    }
}

impl fmt::Display for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match d - k {
                0 => {}
                1 => write!(f, "*u")?,
                e => write!(f, "*u^{e}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "*v")?,
                e => write!(f, "*v^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [deg {d}]")
    }
}

impl fmt::Debug for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point `(u : v)` of the parameter line, normalized to `(1 : t)` or `(0 : 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamPoint {
    u: GaussRational,
    v: GaussRational,
}

impl ParamPoint {
    pub fn new(u: GaussRational, v: GaussRational) -> Result<Self> {
        if u.is_zero() {
            if v.is_zero() {
                return Err(Error::Input("(0:0) is not a point".into()));
            }
            return Ok(ParamPoint {
                u: GaussRational::zero(),
                v: GaussRational::one(),
            });
        }
        let v = &v / &u;
        Ok(ParamPoint {
            u: GaussRational::one(),
            v,
        })
    }

    /// The affine point `(1 : t)`.
    pub fn affine(t: GaussRational) -> Self {
        ParamPoint {
            u: GaussRational::one(),
            v: t,
        }
    }

    pub fn infinity() -> Self {
        ParamPoint {
            u: GaussRational::zero(),
            v: GaussRational::one(),
        }
    }

    pub fn u(&self) -> &GaussRational {
        &self.u
    }

    pub fn v(&self) -> &GaussRational {
        &self.v
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.u, self.v)
    }
}

impl fmt::Debug for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
