use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::exact::forward_owned;
use super::{parse, ArithmeticError, ExactScalar, ParseError, Rational, Scalar, ScalarPath};

/// A complex number `re + im*i` with both parts in Q(sqrt2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactComplex {
    re: ExactScalar,
    im: ExactScalar,
}

impl ExactComplex {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactScalar) -> Self {
        Self::new(re, ExactScalar::zero())
    }

    pub fn imag(im: ExactScalar) -> Self {
        Self::new(ExactScalar::zero(), im)
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn from_ratios(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            ExactScalar::ratio(re.0, re.1),
            ExactScalar::ratio(im.0, im.1),
        )
    }

    pub fn from_rationals(re: Rational, im: Rational) -> Self {
        Self::new(re.into(), im.into())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(ExactScalar::one())
    }

    pub fn i() -> Self {
        Self::imag(ExactScalar::one())
    }

    pub fn re(&self) -> &ExactScalar {
        &self.re
    }

    pub fn im(&self) -> &ExactScalar {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> ExactScalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        let n = self.norm_sqr().inverse()?;
        Ok(Self::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    /// Floating approximation `(re, im)`.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl From<ExactScalar> for ExactComplex {
    fn from(re: ExactScalar) -> Self {
        Self::real(re)
    }
}

impl From<i64> for ExactComplex {
    fn from(n: i64) -> Self {
        Self::real(ExactScalar::from_int(n))
    }
}

impl<'a> Add<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        if self.im.is_zero() {
            return ExactComplex::new(&self.re * &rhs.re, &self.re * &rhs.im);
        }
        if rhs.im.is_zero() {
            return ExactComplex::new(&self.re * &rhs.re, &self.im * &rhs.re);
        }
        ExactComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-&self.re, -&self.im)
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re, -self.im)
    }
}

forward_owned!(ExactComplex: Add add, Sub sub, Mul mul);

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})i", self.re, self.im)
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactComplex({self})")
    }
}

impl FromStr for ExactComplex {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse::parse_exact_complex(s)
    }
}

impl Scalar for ExactComplex {
    type Real = ExactScalar;
    type Imag = ExactScalar;

    const PATH: ScalarPath = ScalarPath::Complex;

    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::real(ExactScalar::one())
    }
    fn sqrt2() -> Self {
        Self::real(ExactScalar::sqrt2())
    }
    fn from_real(r: ExactScalar) -> Self {
        Self::real(r)
    }
    fn from_imag(v: &ExactScalar) -> Self {
        Self::imag(v.clone())
    }
    fn conj(&self) -> Self {
        ExactComplex::conj(self)
    }
    fn re(&self) -> ExactScalar {
        self.re.clone()
    }
    fn im(&self) -> ExactScalar {
        self.im.clone()
    }
    fn norm_sqr(&self) -> ExactScalar {
        ExactComplex::norm_sqr(self)
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        ExactComplex::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.norm_sqr().to_f64().sqrt()
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}
