use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{float_sign, parse, ImagPart, ParseError, Scalar, ScalarPath};

/// Hamilton quaternion `r0 + r1 i + r2 j + r3 k` over `f64`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub r0: f64,
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(r0: f64, r1: f64, r2: f64, r3: f64) -> Self {
        Self { r0, r1, r2, r3 }
    }

    pub const fn real(r0: f64) -> Self {
        Self::new(r0, 0.0, 0.0, 0.0)
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.r0 * k, self.r1 * k, self.r2 * k, self.r3 * k)
    }

    pub fn conj(self) -> Self {
        Self::new(self.r0, -self.r1, -self.r2, -self.r3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.r0 * self.r0 + self.r1 * self.r1 + self.r2 * self.r2 + self.r3 * self.r3
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `(conj q, |q|)`.
    pub fn conj_norm(self) -> (Self, f64) {
        (self.conj(), self.norm())
    }

    /// Real part Re(q) = r0.
    pub fn re(self) -> f64 {
        self.r0
    }

    /// Imaginary part Im(q) = r1 i + r2 j + r3 k.
    pub fn im(self) -> ImaginaryQuat {
        ImaginaryQuat::new(self.r1, self.r2, self.r3)
    }

    pub fn inverse(self) -> Option<Self> {
        let n = self.norm_sqr();
        (n > 0.0).then(|| self.conj().scale(1.0 / n))
    }

    /// Euclidean distance `|self - other|`.
    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, q: Self) -> Self {
        Self::new(
            self.r0 + q.r0,
            self.r1 + q.r1,
            self.r2 + q.r2,
            self.r3 + q.r3,
        )
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, q: Self) -> Self {
        Self::new(
            self.r0 - q.r0,
            self.r1 - q.r1,
            self.r2 - q.r2,
            self.r3 - q.r3,
        )
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.r0, -self.r1, -self.r2, -self.r3)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.r0 * q.r0 - p.r1 * q.r1 - p.r2 * q.r2 - p.r3 * q.r3,
            p.r0 * q.r1 + p.r1 * q.r0 + p.r2 * q.r3 - p.r3 * q.r2,
            p.r0 * q.r2 - p.r1 * q.r3 + p.r2 * q.r0 + p.r3 * q.r1,
            p.r0 * q.r3 + p.r1 * q.r2 - p.r2 * q.r1 + p.r3 * q.r0,
        )
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, x: f64, unit: &str) -> fmt::Result {
    if x < 0.0 {
        write!(f, "-{}{unit}", -x)
    } else {
        write!(f, "+{}{unit}", x + 0.0)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `+ 0.0` folds -0 into 0 so printing never emits "-0"
        write!(f, "{}", self.r0 + 0.0)?;
        write_signed(f, self.r1, "i")?;
        write_signed(f, self.r2, "j")?;
        write_signed(f, self.r3, "k")
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

impl FromStr for Quaternion {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse::parse_quaternion(s)
    }
}

impl Scalar for Quaternion {
    type Real = f64;
    type Imag = ImaginaryQuat;

    const PATH: ScalarPath = ScalarPath::Quaternion;

    fn zero() -> Self {
        Self::ZERO
    }
    fn one() -> Self {
        Self::ONE
    }
    fn sqrt2() -> Self {
        Self::real(std::f64::consts::SQRT_2)
    }
    fn from_real(r: f64) -> Self {
        Self::real(r)
    }
    fn from_imag(v: &ImaginaryQuat) -> Self {
        v.to_quat()
    }
    fn conj(&self) -> Self {
        Quaternion::conj(*self)
    }
    fn re(&self) -> f64 {
        self.r0
    }
    fn im(&self) -> ImaginaryQuat {
        Quaternion::im(*self)
    }
    fn norm_sqr(&self) -> f64 {
        Quaternion::norm_sqr(*self)
    }
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = self.norm().max(other.norm()).max(1.0);
        float_sign(self.distance(*other), scale, tol) == std::cmp::Ordering::Equal
    }
}

/// A purely imaginary quaternion `t1 i + t2 j + t3 k`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ImaginaryQuat {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

impl ImaginaryQuat {
    pub const fn new(t1: f64, t2: f64, t3: f64) -> Self {
        Self { t1, t2, t3 }
    }

    pub fn to_quat(self) -> Quaternion {
        Quaternion::new(0.0, self.t1, self.t2, self.t3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.t1 * self.t1 + self.t2 * self.t2 + self.t3 * self.t3
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.t1 * k, self.t2 * k, self.t3 * k)
    }
}

impl Add for ImaginaryQuat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.t1 + o.t1, self.t2 + o.t2, self.t3 + o.t3)
    }
}

impl Neg for ImaginaryQuat {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.t1, -self.t2, -self.t3)
    }
}

impl fmt::Display for ImaginaryQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}i", self.t1 + 0.0)?;
        write_signed(f, self.t2, "j")?;
        write_signed(f, self.t3, "k")
    }
}

impl fmt::Debug for ImaginaryQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ImaginaryQuat({self})")
    }
}

impl FromStr for ImaginaryQuat {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let q: Quaternion = s.parse().map_err(|e: ParseError| ParseError {
            kind: "ImaginaryQuat",
            ..e
        })?;
        if q.r0 != 0.0 {
            return Err(ParseError::new(
                "ImaginaryQuat",
                s,
                "real part must be zero",
            ));
        }
        Ok(q.im())
    }
}

impl ImagPart for ImaginaryQuat {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.t1 == 0.0 && self.t2 == 0.0 && self.t3 == 0.0
    }
}
