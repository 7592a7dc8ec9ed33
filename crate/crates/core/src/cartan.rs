//! Cartan angular invariant, complex geodesics and their inversions.
//!
//! Everything here runs on the exact complex path. The angular invariant is
//! transcendental, so [`CartanInvariant`] keeps the exact triple product
//! alongside the floating angle; threshold tests use the exact tangent.

use thiserror::Error;

use crate::freeness::{generator_a, generator_b};
use crate::heisenberg::HeisPoint;
use crate::hermitian::{classify_vector, herm_inner, standard_lift, Matrix3, Vector3, VectorClass};
use crate::scalars::{ArithmeticError, ExactComplex, ExactScalar};

type C = ExactComplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("point {0} of the triple is not a null vector")]
    NotNull(usize),
    #[error("points {0} and {1} are proportional")]
    Proportional(usize, usize),
    #[error("the triple product vanishes")]
    Degenerate,
    #[error("polar vector is not positive")]
    NotPositive,
    #[error("mu = 0 does not define a generator pair on the circle")]
    ZeroParameter,
    #[error("mu is off the circle Re(mu) + |mu|^2 = 0 (residual {residual})")]
    OffCircle { residual: Box<ExactScalar> },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

/// Bilinear cross product; zero exactly when `u` and `v` are proportional.
fn cross(u: &Vector3<C>, v: &Vector3<C>) -> Vector3<C> {
    let [u1, u2, u3] = &u.0;
    let [v1, v2, v3] = &v.0;
    Vector3::new(u2 * v3 - u3 * v2, u3 * v1 - u1 * v3, u1 * v2 - u2 * v1)
}

/// Three pairwise distinct boundary points, given by null lifts.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTriple {
    points: [Vector3<C>; 3],
}

impl BoundaryTriple {
    pub fn new(p0: Vector3<C>, p1: Vector3<C>, p2: Vector3<C>) -> Result<Self, CartanError> {
        let points = [p0, p1, p2];
        for (k, p) in points.iter().enumerate() {
            if classify_vector(p) != Ok(VectorClass::Null) {
                return Err(CartanError::NotNull(k));
            }
        }
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            if cross(&points[a], &points[b]).is_zero() {
                return Err(CartanError::Proportional(a, b));
            }
        }
        Ok(Self { points })
    }

    /// `(o, infinity, lift(-1, nu))`, the triple whose inversions decompose
    /// the generator pair.
    pub fn standard(nu: &ExactScalar) -> Self {
        let p2 = standard_lift(&HeisPoint::new(C::from(-1), nu.clone()));
        Self {
            points: [Vector3::origin(), Vector3::infinity(), p2],
        }
    }

    pub fn points(&self) -> &[Vector3<C>; 3] {
        &self.points
    }
}

/// The angular invariant of a triple, held as the exact product
/// `-<p0,p1><p1,p2><p2,p0>`.
#[derive(Debug, Clone, PartialEq)]
pub struct CartanInvariant {
    product: C,
}

impl CartanInvariant {
    pub fn product(&self) -> &C {
        &self.product
    }

    /// `(Im, Re)` of the product: `tan A = Im / Re`.
    pub fn tangent_pair(&self) -> (ExactScalar, ExactScalar) {
        (self.product.im().clone(), self.product.re().clone())
    }

    /// `tan A` exactly, or `None` when `A = +-pi/2`.
    pub fn tan(&self) -> Option<ExactScalar> {
        self.product.im().checked_div(self.product.re()).ok()
    }

    /// The angle in `[-pi/2, pi/2]`.
    pub fn angle(&self) -> f64 {
        let (re, im) = self.product.to_f64_pair();
        im.atan2(re)
    }

    /// `tan^2 A <= bound`, decided as `Im^2 <= bound * Re^2`.
    pub fn tan_squared_at_most(&self, bound: &ExactScalar) -> bool {
        let (im, re) = self.tangent_pair();
        &im * &im <= bound * &(&re * &re)
    }
}

pub fn cartan_invariant(t: &BoundaryTriple) -> Result<CartanInvariant, CartanError> {
    let [p0, p1, p2] = &t.points;
    let product = -(herm_inner(p0, p1) * herm_inner(p1, p2) * herm_inner(p2, p0));
    if product.is_zero() {
        return Err(CartanError::Degenerate);
    }
    if product.re().is_negative() {
        return Err(CartanError::Invariant(format!(
            "triple product {product} has negative real part"
        )));
    }
    Ok(CartanInvariant { product })
}

/// A positive vector `c`, polar to the complex geodesic `{z : <z, c> = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarVector(Vector3<C>);

impl PolarVector {
    pub fn new(c: Vector3<C>) -> Result<Self, CartanError> {
        match classify_vector(&c) {
            Ok(VectorClass::Positive) => Ok(Self(c)),
            _ => Err(CartanError::NotPositive),
        }
    }

    pub fn vector(&self) -> &Vector3<C> {
        &self.0
    }
}

/// Polar vector of the complex geodesic through two null points, scaled so
/// its first nonzero entry is 1.
pub fn polar_vector(pa: &Vector3<C>, pb: &Vector3<C>) -> Result<PolarVector, CartanError> {
    for (k, p) in [pa, pb].into_iter().enumerate() {
        if classify_vector(p) != Ok(VectorClass::Null) {
            return Err(CartanError::NotNull(k));
        }
    }
    let d = cross(pa, pb);
    if d.is_zero() {
        return Err(CartanError::Proportional(0, 1));
    }
    // <p, c> = d . p when c = (conj d3, conj d2, conj d1)
    let [d1, d2, d3] = &d.0;
    let c = Vector3::new(d3.conj(), d2.conj(), d1.conj());
    let lead =
        c.0.iter()
            .find(|x| !x.is_zero())
            .expect("nonzero vector")
            .inverse()?;
    PolarVector::new(c.scale_right(&lead))
}

/// Matrix of `Z -> -Z + 2 <Z, c> / <c, c> * c`.
pub fn inversion_matrix(c: &PolarVector) -> Matrix3<C> {
    let v = &c.0 .0;
    let norm = herm_inner(&c.0, &c.0);
    // positive, hence invertible
    let k = norm.inverse().expect("positive vector") * C::from(2);
    let row = [v[2].conj(), v[1].conj(), v[0].conj()];
    Matrix3::from_rows(std::array::from_fn(|r| {
        std::array::from_fn(|col| {
            let outer = &(&v[r] * &row[col]) * &k;
            if r == col {
                outer - C::from(1)
            } else {
                outer
            }
        })
    }))
}

/// `mu = (-1 - i nu) / (1 + nu^2)`, the circle parametrization.
pub fn mu_from_nu(nu: &ExactScalar) -> ExactComplex {
    let denom = (ExactScalar::one() + nu * nu)
        .inverse()
        .expect("1 + nu^2 > 0");
    C::new(-&denom, -(nu * &denom))
}

/// `Re(mu) + |mu|^2`; zero exactly on the circle `|mu + 1/2| = 1/2`.
pub fn circle_residual(mu: &ExactComplex) -> ExactScalar {
    mu.re() + &mu.norm_sqr()
}

/// Inversions `i0, i1, i2` of the standard triple with `A = i0 i2` and
/// `B(mu) = i2 i1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub nu: ExactScalar,
    pub triple: BoundaryTriple,
    pub polars: [PolarVector; 3],
    pub inversions: [Matrix3<C>; 3],
}

impl Decomposition {
    pub fn i0(&self) -> &Matrix3<C> {
        &self.inversions[0]
    }
    pub fn i1(&self) -> &Matrix3<C> {
        &self.inversions[1]
    }
    pub fn i2(&self) -> &Matrix3<C> {
        &self.inversions[2]
    }
}

pub fn decompose_generators(mu: &ExactComplex) -> Result<Decomposition, CartanError> {
    if mu.is_zero() {
        return Err(CartanError::ZeroParameter);
    }
    let residual = circle_residual(mu);
    if !residual.is_zero() {
        return Err(CartanError::OffCircle {
            residual: Box::new(residual),
        });
    }
    // Im(mu) = -nu |mu|^2
    let nu = -mu.im().checked_div(&mu.norm_sqr())?;
    let triple = BoundaryTriple::standard(&nu);
    let [p0, p1, p2] = triple.points();
    let polars = [
        polar_vector(p1, p2)?,
        polar_vector(p0, p2)?,
        polar_vector(p0, p1)?,
    ];
    let inversions = [
        inversion_matrix(&polars[0]),
        inversion_matrix(&polars[1]),
        inversion_matrix(&polars[2]),
    ];
    let d = Decomposition {
        nu,
        triple,
        polars,
        inversions,
    };
    if d.i0().mul(d.i2()) != generator_a() {
        return Err(CartanError::Invariant("i0 i2 != A".into()));
    }
    if d.i2().mul(d.i1()) != generator_b(mu) {
        return Err(CartanError::Invariant("i2 i1 != B(mu)".into()));
    }
    Ok(d)
}
