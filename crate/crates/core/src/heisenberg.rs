//! The generalized Heisenberg group `K x Im(K)` and its translations.
//!
//! Group law: `(z1, v1)(z2, v2) = (z1 + z2, v1 + v2 + 2 Im(conj(z2) z1))`.
//! The translation by `(z0, v0)` is the unipotent matrix
//!
//! ```text
//! | 1  -sqrt2 conj(z0)  -|z0|^2 + v0 |
//! | 0   1                sqrt2 z0    |
//! | 0   0                1           |
//! ```

use std::fmt;
use std::str::FromStr;

use crate::hermitian::Matrix3;
use crate::scalars::{ImagPart, ParseError, Scalar};

/// A point `(zeta, nu)` of the Heisenberg group. On the complex path `nu` is
/// the real coefficient of `i`; on the quaternion path it is an
/// [`ImaginaryQuat`](crate::scalars::ImaginaryQuat).
#[derive(Clone, PartialEq)]
pub struct HeisPoint<S: Scalar> {
    pub zeta: S,
    pub nu: S::Imag,
}

impl<S: Scalar> HeisPoint<S> {
    pub fn new(zeta: S, nu: S::Imag) -> Self {
        Self { zeta, nu }
    }

    pub fn identity() -> Self {
        Self::new(S::zero(), S::Imag::zero())
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.zeta.clone(), -self.nu.clone())
    }
}

/// `2 Im(conj(b) a)`, the twist term of the group law.
fn twist<S: Scalar>(a: &S, b: &S) -> S::Imag {
    let t = (b.conj() * a.clone()).im();
    t.clone() + t
}

pub fn heis_mul<S: Scalar>(p: &HeisPoint<S>, q: &HeisPoint<S>) -> HeisPoint<S> {
    HeisPoint::new(
        p.zeta.clone() + q.zeta.clone(),
        p.nu.clone() + q.nu.clone() + twist(&p.zeta, &q.zeta),
    )
}

/// The translation `T(p0)` applied to `p`. Equal to `heis_mul(p0, p)`.
pub fn heis_action<S: Scalar>(p0: &HeisPoint<S>, p: &HeisPoint<S>) -> HeisPoint<S> {
    heis_mul(p0, p)
}

pub fn heis_translation_matrix<S: Scalar>(p: &HeisPoint<S>) -> Matrix3<S> {
    let r2 = S::sqrt2();
    let zeta = &p.zeta;
    let corner = S::from_real(-zeta.norm_sqr()) + S::from_imag(&p.nu);
    let mut t = Matrix3::identity();
    t.m[0][1] = -(r2.clone() * zeta.conj());
    t.m[0][2] = corner;
    t.m[1][2] = r2 * zeta.clone();
    t
}

/// Vertical translations have `zeta = 0`.
pub fn is_vertical<S: Scalar>(p: &HeisPoint<S>) -> bool {
    p.zeta.is_zero()
}

impl<S: Scalar> fmt::Display for HeisPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.zeta, self.nu)
    }
}

impl<S: Scalar> fmt::Debug for HeisPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeisPoint{self}")
    }
}

impl<S: Scalar> FromStr for HeisPoint<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| ParseError::new("HeisPoint", s, "expected \"(zeta; nu)\""))?;
        let (zeta, nu) = inner
            .split_once(';')
            .ok_or_else(|| ParseError::new("HeisPoint", s, "missing ';'"))?;
        Ok(Self::new(zeta.parse()?, nu.parse()?))
    }
}
