//! Scalar paths.
//!
//! Two coefficient rings feed everything downstream:
//!
//! * the exact path, [`ExactComplex`], complex numbers whose parts live in
//!   the real quadratic field Q(sqrt2) ([`ExactScalar`]), backed by
//!   arbitrary-precision rationals;
//! * the floating path, [`Quaternion`], Hamilton quaternions over `f64`.
//!
//! Matrices, vectors and Heisenberg points are generic over [`Scalar`], so
//! the same code serves both paths and mixing paths is a type error.

mod complex;
mod exact;
mod parse;
mod quaternion;

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use complex::ExactComplex;
pub use exact::{ExactScalar, Rational};
pub use quaternion::{ImaginaryQuat, Quaternion};

/// Default relative tolerance for the floating path.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {kind} from {input:?}: {reason}")]
pub struct ParseError {
    pub kind: &'static str,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(kind: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Self {
            kind,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// Which coefficient ring a value lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarPath {
    /// Q(sqrt2)(i), exact.
    Complex,
    /// Hamilton quaternions over `f64`.
    Quaternion,
}

impl ScalarPath {
    pub fn is_exact(self) -> bool {
        matches!(self, ScalarPath::Complex)
    }
}

impl Display for ScalarPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarPath::Complex => f.write_str("complex"),
            ScalarPath::Quaternion => f.write_str("quaternion"),
        }
    }
}

/// The real subring of a scalar path (Q(sqrt2) or `f64`).
pub trait RealScalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Sign of the value. On the floating path anything within `tol * scale`
    /// of zero is `Equal`; exact values ignore both arguments.
    fn sign_within(&self, scale: f64, tol: f64) -> Ordering;
}

/// The imaginary part Im(K) of a scalar path, i.e. the second coordinate of
/// a Heisenberg point.
pub trait ImagPart:
    Clone
    + PartialEq
    + Debug
    + Display
    + FromStr<Err = ParseError>
    + Add<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
}

/// A coefficient ring K (C or H) over which K^{2,1} is built.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + FromStr<Err = ParseError>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    type Real: RealScalar;
    type Imag: ImagPart;

    const PATH: ScalarPath;

    fn zero() -> Self;
    fn one() -> Self;
    fn sqrt2() -> Self;
    fn from_real(r: Self::Real) -> Self;
    fn from_imag(v: &Self::Imag) -> Self;
    fn conj(&self) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Imag;
    fn norm_sqr(&self) -> Self::Real;
    fn inv(&self) -> Option<Self>;
    /// `self * rhs` without consuming either side.
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
    fn is_zero(&self) -> bool;
    /// Floating estimate of |x|, used only to scale tolerances.
    fn magnitude(&self) -> f64;
    /// Exact equality on the exact path; relative closeness within `tol`
    /// on the floating path.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
}

/// `x.sign_within(..)` for a float with the usual relative-tolerance rule.
pub(crate) fn float_sign(x: f64, scale: f64, tol: f64) -> Ordering {
    if x.abs() <= tol * scale {
        Ordering::Equal
    } else if x > 0.0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl RealScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sign_within(&self, scale: f64, tol: f64) -> Ordering {
        float_sign(*self, scale, tol)
    }
}
