use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{parse, ArithmeticError, ImagPart, ParseError, RealScalar};

/// Arbitrary-precision rational. `num_rational` keeps it in lowest terms with
/// a positive denominator.
pub type Rational = BigRational;

/// An element `a + b*sqrt2` of Q(sqrt2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    a: Rational,
    b: Rational,
}

pub(crate) fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl ExactScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den`, rational part only.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    /// `(a_num/a_den) + (b_num/b_den)*sqrt2`.
    pub fn from_parts(a: (i64, i64), b: (i64, i64)) -> Self {
        Self::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Coefficient of 1.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of sqrt2.
    pub fn sqrt2_part(&self) -> &Rational {
        &self.b
    }

    /// The value as a plain rational, if the sqrt2 coefficient vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The Galois conjugate `a - b*sqrt2`.
    pub fn galois_conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// The field norm `a^2 - 2b^2`.
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - rat(2, 1) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        // a^2 - 2b^2 vanishes only at zero because sqrt2 is irrational.
        let n = self.field_norm();
        Ok(Self::new(&self.a / &n, -&self.b / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.a * q, &self.b * q)
    }

    /// Exact sign of `a + b*sqrt2`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            (sa, sb) => {
                // opposite signs: the larger of a^2 and 2b^2 wins
                let a2 = &self.a * &self.a;
                let b2 = rat(2, 1) * &self.b * &self.b;
                if a2 > b2 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<Rational> for ExactScalar {
    fn from(a: Rational) -> Self {
        Self::from_rational(a)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, true) => return ExactScalar::from_rational(&self.a * &rhs.a),
            (true, false) => return ExactScalar::new(&self.a * &rhs.a, &self.a * &rhs.b),
            (false, true) => return ExactScalar::new(&self.a * &rhs.a, &self.b * &rhs.a),
            (false, false) => {}
        }
        let two = rat(2, 1);
        ExactScalar::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.a, -&self.b)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($ty:ty: $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(ExactScalar: Add add, Sub sub, Mul mul);

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*sqrt2", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}*sqrt2", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

impl FromStr for ExactScalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let z = parse::parse_exact_complex(s).map_err(|e| ParseError {
            kind: "ExactScalar",
            ..e
        })?;
        if !z.im().is_zero() {
            return Err(ParseError::new(
                "ExactScalar",
                s,
                "value has an imaginary part",
            ));
        }
        Ok(z.re().clone())
    }
}

impl RealScalar for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ExactScalar::ratio(num, den)
    }
    fn to_f64(&self) -> f64 {
        ExactScalar::to_f64(self)
    }
    fn sign_within(&self, _scale: f64, _tol: f64) -> Ordering {
        self.signum()
    }
}

impl ImagPart for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}
