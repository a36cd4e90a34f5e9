use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element `re + im·i` of the Gaussian rationals `Q(i)`.
///
/// Both parts are arbitrary-precision rationals kept in lowest terms, so two
/// equal field elements are always structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::real(BigRational::from_integer(n.into()))
    }

    /// `num/den` as a real element. Panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRational::real(BigRational::new(num.into(), den.into()))
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRational {
            re: BigRational::new(re.0.into(), re.1.into()),
            im: BigRational::new(im.0.into(), im.1.into()),
        }
    }

    pub fn real(re: BigRational) -> Self {
        GaussRational {
            re,
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Field norm `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = GaussRational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// A square root in `Q(i)` if one exists.
    ///
    /// For `z = a + bi` with root `x + yi` we need `x² = (a + |z|)/2` and
    /// `y² = (|z| - a)/2` with `|z|` rational, and the sign of `xy` fixed by `b`.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRational::zero());
        }
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&self.re + &modulus) / &two))?;
        let y = rational_sqrt(&((&modulus - &self.re) / &two))?;
        let root = if self.im.is_negative() {
            GaussRational::new(x, -y)
        } else {
            GaussRational::new(x, y)
        };
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }

    /// Smallest positive integer `m` such that `m·self` has integral parts.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::lcm(self.re.denom().clone(), self.im.denom().clone())
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::real(BigRational::one())
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl From<BigInt> for GaussRational {
    fn from(n: BigInt) -> Self {
        GaussRational::real(BigRational::from_integer(n))
    }
}

impl From<BigRational> for GaussRational {
    fn from(q: BigRational) -> Self {
        GaussRational::real(q)
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    /// Panics on division by zero, like the integer types do.
    fn div(self, rhs: &GaussRational) -> GaussRational {
        if rhs.im.is_zero() {
            return GaussRational {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &GaussRational) -> GaussRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussRational> for &'a GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, rhs: &GaussRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussRational {
    fn sum<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussRational> for GaussRational {
    fn sum<I: Iterator<Item = &'a GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GaussRational {
    fn product<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::one(), |acc, x| &acc * &x)
    }
}

fn fmt_ratio(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `a/b` for real elements, `a/b+c/d*i` otherwise; always lowest terms.
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_ratio(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*i",
            fmt_ratio(&self.re),
            sign,
            fmt_ratio(&self.im.abs())
        )
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Accepts the canonical output of `Display` as well as the shorthands
/// `3`, `-1/2`, `i`, `-i`, `2*i` and `1+i`.
impl FromStr for GaussRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(&t).map(GaussRational::real).ok_or_else(err);
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other).ok_or_else(err)?,
        };
        let re = parse_rational(re_str).ok_or_else(err)?;
        Ok(GaussRational::new(re, im))
    }
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

struct GaussVisitor;

impl Visitor<'_> for GaussVisitor {
    type Value = GaussRational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a field element string such as \"1/2-3/1*i\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<GaussRational, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<GaussRational, E> {
        Ok(GaussRational::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<GaussRational, E> {
        Ok(GaussRational::from(BigInt::from(v)))
    }
}

impl<'de> Deserialize<'de> for GaussRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(GaussVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    #[test]
    fn display_is_lowest_terms_with_explicit_sign() {
        assert_eq!(GaussRational::from_ratio(6, -4).to_string(), "-3/2");
        assert_eq!(GaussRational::from_int(0).to_string(), "0/1");
        assert_eq!(
            GaussRational::from_parts((1, 2), (-2, 4)).to_string(),
            "1/2-1/2*i"
        );
        assert_eq!(GaussRational::i().to_string(), "0/1+1/1*i");
    }

    #[test]
    fn parse_shorthands() {
        assert_eq!(g("i"), GaussRational::i());
        assert_eq!(g("-i"), -GaussRational::i());
        assert_eq!(g("2*i"), &GaussRational::from_int(2) * &GaussRational::i());
        assert_eq!(g("1+i"), GaussRational::from_parts((1, 1), (1, 1)));
        assert_eq!(g("-1/2-3/4*i"), GaussRational::from_parts((-1, 2), (-3, 4)));
        assert_eq!(g("7"), GaussRational::from_int(7));
        assert!("1/0".parse::<GaussRational>().is_err());
        assert!("abc".parse::<GaussRational>().is_err());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, GaussRational::from_int(-1));
    }

    #[test]
    fn square_roots() {
        // (u^2 + v^2) has discriminant -4, whose root is 2i
        assert_eq!(g("-4").sqrt(), Some(g("2*i")));
        assert_eq!(g("2*i").sqrt(), Some(g("1+i")));
        assert_eq!(g("-2*i").sqrt(), Some(g("1-i")));
        assert_eq!(g("9/4").sqrt(), Some(g("3/2")));
        assert_eq!(g("2").sqrt(), None);
        assert_eq!(g("i").sqrt(), None);
    }

    #[test]
    fn serde_uses_strings() {
        let x = g("1/3-2*i");
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"1/3-2/1*i\"");
        let back: GaussRational = serde_json::from_str("\"1/3-2/1*i\"").unwrap();
        assert_eq!(back, x);
        let int: GaussRational = serde_json::from_str("-5").unwrap();
        assert_eq!(int, GaussRational::from_int(-5));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb() -> impl Strategy<Value = GaussRational> {
            (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
                .prop_map(|(a, b, c, d)| GaussRational::from_parts((a, b), (c, d)))
        }

        proptest! {
            #[test]
            fn inverse_round_trip(x in arb()) {
                prop_assume!(!x.is_zero());
                let inv = x.inv().unwrap();
                prop_assert_eq!(&x * &inv, GaussRational::one());
                prop_assert_eq!(&(&x / &x), &GaussRational::one());
            }

            #[test]
            fn conjugation_is_involutive_automorphism(x in arb(), y in arb()) {
                prop_assert_eq!(x.conj().conj(), x.clone());
                prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
                prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            }

            #[test]
            fn display_parse_round_trip(x in arb()) {
                prop_assert_eq!(x.to_string().parse::<GaussRational>().unwrap(), x);
            }

            #[test]
            fn square_has_root(x in arb()) {
                let sq = &x * &x;
                let r = sq.sqrt().unwrap();
                prop_assert!(r == x || r == -x.clone());
            }
        }
    }
}
