//! Exact arithmetic in the Gaussian rationals ℚ(i).
//!
//! Every scalar in the crate is a [`GaussRat`]. Both components are
//! arbitrary-precision fractions kept in lowest terms by `num-rational`, so
//! derived equality is equality of values.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat { re: BigRational::from_integer(n.into()), im: BigRational::zero() }
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        GaussRat { re: BigRational::new(num.into(), den.into()), im: BigRational::zero() }
    }

    /// `re + im·i` from integer parts.
    pub fn complex(re: i64, im: i64) -> Self {
        GaussRat { re: BigRational::from_integer(re.into()), im: BigRational::from_integer(im.into()) }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    /// `re² + im²`, the field norm down to ℚ.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussRat { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, rhs: &GaussRat) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of the first nonzero component, real part first. Used to pick a
    /// canonical representative of `{v, -v}`.
    pub fn sign_key(&self) -> i8 {
        if self.re.is_positive() {
            1
        } else if self.re.is_negative() {
            -1
        } else if self.im.is_positive() {
            1
        } else if self.im.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Largest numerator/denominator magnitude, a coarse height.
    pub fn height_bits(&self) -> u64 {
        [self.re.numer(), self.re.denom(), self.im.numer(), self.im.denom()].iter().map(|b| b.bits()).max().unwrap_or(0)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

impl From<BigRational> for GaussRat {
    fn from(r: BigRational) -> Self {
        GaussRat { re: r, im: BigRational::zero() }
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        GaussRat { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

/// Panics on division by zero; use [`GaussRat::checked_div`] for the
/// fallible form.
impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self.checked_div(rhs).expect("GaussRat division by zero")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, rhs: &GaussRat) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: `p/q`, `r/si`, or `p/q+r/si` (`-` when the imaginary
/// part is negative). The imaginary coefficient is always written, so `i`
/// prints as `1i`.
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid scalar `{whole}`"));
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() || body.starts_with(['+', '-']) {
        return Err(bad());
    }
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n * sign, d))
}

/// Accepts the canonical form plus a few conveniences: surrounding
/// whitespace, the Unicode minus sign, and a bare `i` / `-i`.
impl FromStr for GaussRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.trim().replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = cleaned.strip_suffix('i') else {
            return Ok(GaussRat::from(parse_rational(&cleaned, s)?));
        };
        // split at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        let (re_txt, im_txt) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im_txt = match im_txt {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re = if re_txt.is_empty() { BigRational::zero() } else { parse_rational(re_txt, s)? };
        Ok(GaussRat { re, im: parse_rational(im_txt, s)? })
    }
}

impl serde::Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussRat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
