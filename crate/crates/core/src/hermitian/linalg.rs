use std::fmt;
use std::str::FromStr;

use crate::scalars::{ParseError, Scalar};

/// Column vector in K^{2,1}. Scalars act on the right.
#[derive(Clone, PartialEq)]
pub struct Vector3<S>(pub [S; 3]);

impl<S: Scalar> Vector3<S> {
    pub fn new(z1: S, z2: S, z3: S) -> Self {
        Self([z1, z2, z3])
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero())
    }

    /// The null vector `o = (0, 0, 1)`.
    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero(), S::one())
    }

    /// The null vector `infinity = (1, 0, 0)`.
    pub fn infinity() -> Self {
        Self::new(S::one(), S::zero(), S::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(S::is_zero)
    }

    /// `z * lambda`, scalar applied on the right of every entry.
    pub fn scale_right(&self, lambda: &S) -> Self {
        Self(self.0.clone().map(|x| x * lambda.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let [a, b, c] = self.0.clone();
        let [x, y, z] = other.0.clone();
        Self::new(a + x, b + y, c + z)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// True when `self = other * lambda` for some nonzero scalar `lambda`.
    pub fn projectively_equal(&self, other: &Self, tol: f64) -> bool {
        let Some(k) = other.0.iter().position(|x| x.magnitude() > tol) else {
            return false;
        };
        let Some(inv) = other.0[k].inv() else {
            return false;
        };
        let lambda = inv * self.0[k].clone();
        !lambda.is_zero() && self.approx_eq(&other.scale_right(&lambda), tol)
    }
}

impl<S: Scalar> fmt::Display for Vector3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.0[0], self.0[1], self.0[2])
    }
}

impl<S: Scalar> fmt::Debug for Vector3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector3[{self}]")
    }
}

impl<S: Scalar> FromStr for Vector3<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 3 {
            return Err(ParseError::new(
                "Vector3",
                s,
                "expected 3 entries separated by ';'",
            ));
        }
        Ok(Self::new(
            parts[0].parse()?,
            parts[1].parse()?,
            parts[2].parse()?,
        ))
    }
}

/// 3x3 matrix, row-major: `m[r][c]`.
#[derive(Clone, PartialEq)]
pub struct Matrix3<S> {
    pub m: [[S; 3]; 3],
}

impl<S: Scalar> Matrix3<S> {
    pub fn from_rows(m: [[S; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn zero() -> Self {
        Self::from_rows(std::array::from_fn(|_| std::array::from_fn(|_| S::zero())))
    }

    pub fn identity() -> Self {
        Self::diag(S::one(), S::one(), S::one())
    }

    pub fn diag(a: S, b: S, c: S) -> Self {
        let mut out = Self::zero();
        out.m[0][0] = a;
        out.m[1][1] = b;
        out.m[2][2] = c;
        out
    }

    /// The Hermitian form matrix H: rows (0,0,1), (0,1,0), (1,0,0).
    pub fn form() -> Self {
        let mut out = Self::zero();
        out.m[0][2] = S::one();
        out.m[1][1] = S::one();
        out.m[2][0] = S::one();
        out
    }

    pub fn entry(&self, r: usize, c: usize) -> &S {
        &self.m[r][c]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..3)
                    .filter(|&k| !self.m[r][k].is_zero() && !rhs.m[k][c].is_zero())
                    .map(|k| self.m[r][k].mul_ref(&rhs.m[k][c]))
                    .reduce(|acc, t| acc + t)
                    .unwrap_or_else(S::zero)
            })
        }))
    }

    pub fn mul_vec(&self, v: &Vector3<S>) -> Vector3<S> {
        Vector3(std::array::from_fn(|r| {
            (0..3).fold(S::zero(), |acc, k| {
                acc + self.m[r][k].clone() * v.0[k].clone()
            })
        }))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.m[r][c].clone() + rhs.m[r][c].clone())
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.m[r][c].clone() - rhs.m[r][c].clone())
        }))
    }

    /// Conjugate transpose `g*`.
    pub fn conj_transpose(&self) -> Self {
        Self::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.m[c][r].conj())
        }))
    }

    pub fn trace(&self) -> S {
        self.m[0][0].clone() + self.m[1][1].clone() + self.m[2][2].clone()
    }

    /// `g^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// If the matrix is `lambda * I`, returns `lambda`.
    pub fn scalar_multiple_of_identity(&self, tol: f64) -> Option<S> {
        let lambda = &self.m[0][0];
        let zero = S::zero();
        for r in 0..3 {
            for c in 0..3 {
                let want = if r == c { lambda } else { &zero };
                if !self.m[r][c].approx_eq(want, tol) {
                    return None;
                }
            }
        }
        Some(lambda.clone())
    }

    /// Trivial in PU(2,1) / PSp(2,1): `lambda * I` with `|lambda| = 1`.
    pub fn is_projective_identity(&self, tol: f64) -> bool {
        self.scalar_multiple_of_identity(tol)
            .is_some_and(|l| S::from_real(l.norm_sqr()).approx_eq(&S::one(), tol))
    }

    /// True when `(g - I)^3 = 0`.
    pub fn is_unipotent(&self, tol: f64) -> bool {
        let n = self.sub(&Self::identity());
        n.pow(3).approx_eq(&Self::zero(), tol)
    }

    /// Largest entry magnitude, for tolerance scaling.
    pub fn max_magnitude(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(S::magnitude)
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> fmt::Display for Matrix3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.m.iter().enumerate() {
            if r > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{},{}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Matrix3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix3[")?;
        for row in &self.m {
            writeln!(f, "  {}, {}, {}", row[0], row[1], row[2])?;
        }
        f.write_str("]")
    }
}

impl<S: Scalar> FromStr for Matrix3<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 3 {
            return Err(ParseError::new(
                "Matrix3",
                s,
                "expected 3 rows separated by ';'",
            ));
        }
        let mut out = Self::zero();
        for (r, row) in rows.iter().enumerate() {
            let entries: Vec<&str> = row.split(',').collect();
            if entries.len() != 3 {
                return Err(ParseError::new(
                    "Matrix3",
                    s,
                    format!("row {r} does not have 3 entries"),
                ));
            }
            for (c, e) in entries.iter().enumerate() {
                out.m[r][c] = e.parse()?;
            }
        }
        Ok(out)
    }
}

/// 2x2 matrix, used for the embedding of GL(2) into GL(3).
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: Scalar> Matrix2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            m: std::array::from_fn(|r| {
                std::array::from_fn(|c| {
                    self.m[r][0].clone() * rhs.m[0][c].clone()
                        + self.m[r][1].clone() * rhs.m[1][c].clone()
                })
            }),
        }
    }
}
