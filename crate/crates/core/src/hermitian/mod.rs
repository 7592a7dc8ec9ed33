//! The Hermitian space K^{2,1}.
//!
//! The form is `<z, w> = w* H z = conj(w3) z1 + conj(w2) z2 + conj(w1) z3`
//! with H anti-diagonal. Vectors are right K-modules: projective
//! coordinates are `w_i = z_i z3^{-1}`.

mod linalg;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heisenberg::HeisPoint;
use crate::scalars::{RealScalar, Scalar, DEFAULT_TOL};

pub use linalg::{Matrix2, Matrix3, Vector3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HermitianError {
    #[error("the zero vector has no class")]
    ZeroVector,
}

/// Sign of `<z, z>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorClass {
    Positive,
    Negative,
    Null,
}

/// Position of a point `(w1, w2)` relative to the Siegel domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SiegelRegion {
    Interior,
    Boundary,
    Exterior,
}

/// `<z, w> = conj(w3) z1 + conj(w2) z2 + conj(w1) z3`, conjugated factor on
/// the left.
pub fn herm_inner<S: Scalar>(z: &Vector3<S>, w: &Vector3<S>) -> S {
    let [z1, z2, z3] = &z.0;
    let [w1, w2, w3] = &w.0;
    w3.conj() * z1.clone() + w2.conj() * z2.clone() + w1.conj() * z3.clone()
}

/// Real value of `<z, z>`.
pub fn herm_norm<S: Scalar>(z: &Vector3<S>) -> S::Real {
    herm_inner(z, z).re()
}

pub fn classify_vector<S: Scalar>(z: &Vector3<S>) -> Result<VectorClass, HermitianError> {
    classify_vector_within(z, DEFAULT_TOL)
}

pub fn classify_vector_within<S: Scalar>(
    z: &Vector3<S>,
    tol: f64,
) -> Result<VectorClass, HermitianError> {
    if z.is_zero() {
        return Err(HermitianError::ZeroVector);
    }
    let scale: f64 = z.0.iter().map(|x| x.magnitude().powi(2)).sum();
    Ok(match herm_norm(z).sign_within(scale, tol) {
        Ordering::Greater => VectorClass::Positive,
        Ordering::Less => VectorClass::Negative,
        Ordering::Equal => VectorClass::Null,
    })
}

/// Membership in U(2,1) / Sp(2,1): `g* H g = H`.
pub fn is_unitary<S: Scalar>(g: &Matrix3<S>) -> bool {
    is_unitary_within(g, DEFAULT_TOL)
}

pub fn is_unitary_within<S: Scalar>(g: &Matrix3<S>, tol: f64) -> bool {
    let h = Matrix3::<S>::form();
    let lhs = g.conj_transpose().mul(&h).mul(g);
    let scale = g.max_magnitude().powi(2).max(1.0);
    lhs.approx_eq(&h, tol * scale)
}

/// `(-|zeta|^2 + nu, sqrt2 zeta, 1)`, the null lift of a finite boundary point.
pub fn standard_lift<S: Scalar>(p: &HeisPoint<S>) -> Vector3<S> {
    let z1 = S::from_real(-p.zeta.norm_sqr()) + S::from_imag(&p.nu);
    Vector3::new(z1, S::sqrt2() * p.zeta.clone(), S::one())
}

/// Sign of `2 Re(w1) + |w2|^2`.
pub fn siegel_membership<S: Scalar>(w1: &S, w2: &S) -> SiegelRegion {
    siegel_membership_within(w1, w2, DEFAULT_TOL)
}

pub fn siegel_membership_within<S: Scalar>(w1: &S, w2: &S, tol: f64) -> SiegelRegion {
    let two = S::Real::from_ratio(2, 1);
    let value = two * w1.re() + w2.norm_sqr();
    let scale = w1.magnitude().max(w2.magnitude().powi(2)).max(1.0);
    match value.sign_within(scale, tol) {
        Ordering::Less => SiegelRegion::Interior,
        Ordering::Equal => SiegelRegion::Boundary,
        Ordering::Greater => SiegelRegion::Exterior,
    }
}

/// Projective coordinates `(z1 z3^{-1}, z2 z3^{-1})`; `None` when `z3 = 0`.
pub fn projective_coords<S: Scalar>(z: &Vector3<S>) -> Option<(S, S)> {
    let inv = z.0[2].inv()?;
    Some((z.0[0].clone() * inv.clone(), z.0[1].clone() * inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{ExactComplex, ExactScalar, ImaginaryQuat, Quaternion};

    type C = ExactComplex;

    fn c(n: i64) -> C {
        C::from(n)
    }

    fn vc(a: C, b: C, d: C) -> Vector3<C> {
        Vector3::new(a, b, d)
    }

    #[test]
    fn form_matrix_is_hermitian_involution() {
        let h = Matrix3::<C>::form();
        assert_eq!(h.conj_transpose(), h);
        assert_eq!(h.mul(&h), Matrix3::identity());
        let hq = Matrix3::<Quaternion>::form();
        assert_eq!(hq.mul(&hq), Matrix3::identity());
    }

    #[test]
    fn inner_products_of_distinguished_points() {
        let o = Vector3::<C>::origin();
        let inf = Vector3::<C>::infinity();
        assert_eq!(herm_inner(&o, &inf), c(1));
        assert_eq!(herm_inner(&o, &o), c(0));
        let nu = ExactScalar::ratio(5, 3);
        let p2 = vc(
            C::new(ExactScalar::from_int(-1), nu.clone()),
            C::real(-ExactScalar::sqrt2()),
            c(1),
        );
        assert_eq!(herm_inner(&p2, &o), C::new(ExactScalar::from_int(-1), nu));
    }

    #[test]
    fn conjugate_symmetry_quaternion_path() {
        let z = Vector3::new(
            Quaternion::new(1.0, 2.0, -1.0, 0.5),
            Quaternion::J,
            Quaternion::new(0.0, 1.0, 1.0, 3.0),
        );
        let w = Vector3::new(
            Quaternion::K,
            Quaternion::new(2.0, 0.0, 1.0, 1.0),
            Quaternion::new(-1.0, 0.5, 0.0, 2.0),
        );
        let lhs = herm_inner(&z, &w);
        let rhs = herm_inner(&w, &z).conj();
        assert!(lhs.approx_eq(&rhs, 1e-12), "{lhs} vs {rhs}");
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_vector(&Vector3::<C>::origin()),
            Ok(VectorClass::Null)
        );
        // <z,z> = -1 + 0 + -1 = -2
        assert_eq!(
            classify_vector(&vc(c(-1), c(0), c(1))),
            Ok(VectorClass::Negative)
        );
        assert_eq!(
            classify_vector(&vc(c(1), c(0), c(1))),
            Ok(VectorClass::Positive)
        );
        assert_eq!(
            classify_vector(&Vector3::<C>::zero()),
            Err(HermitianError::ZeroVector)
        );
        // sqrt2 on the middle entry, -1 at the ends: -2 + 2 = 0 exactly
        let v = vc(c(-1), C::sqrt2(), c(1));
        assert_eq!(classify_vector(&v), Ok(VectorClass::Null));
    }

    #[test]
    fn unitarity() {
        assert!(is_unitary(&Matrix3::<C>::identity()));
        assert!(!is_unitary(&Matrix3::diag(c(2), c(1), c(1))));
        assert!(is_unitary(&Matrix3::<C>::form()));
        assert!(!is_unitary(&Matrix3::diag(
            Quaternion::real(2.0),
            Quaternion::ONE,
            Quaternion::ONE
        )));
    }

    #[test]
    fn lifts_are_null() {
        let p = HeisPoint::<C>::new(C::from(-1), ExactScalar::ratio(7, 2));
        let lift = standard_lift(&p);
        assert_eq!(
            lift,
            vc(
                C::new(ExactScalar::from_int(-1), ExactScalar::ratio(7, 2)),
                C::real(-ExactScalar::sqrt2()),
                c(1)
            )
        );
        assert_eq!(classify_vector(&lift), Ok(VectorClass::Null));
        assert_eq!(
            standard_lift(&HeisPoint::<C>::identity()),
            Vector3::origin()
        );

        let q = HeisPoint::new(
            Quaternion::new(0.3, -1.2, 0.7, 2.0),
            ImaginaryQuat::new(1.0, -4.0, 0.25),
        );
        assert_eq!(classify_vector(&standard_lift(&q)), Ok(VectorClass::Null));
    }

    #[test]
    fn siegel_regions() {
        assert_eq!(siegel_membership(&c(-1), &c(0)), SiegelRegion::Interior);
        assert_eq!(
            siegel_membership(&c(-1), &C::sqrt2()),
            SiegelRegion::Boundary
        );
        assert_eq!(siegel_membership(&c(0), &c(1)), SiegelRegion::Exterior);
    }

    #[test]
    fn projective_coordinates_use_right_division() {
        let lam = Quaternion::new(0.5, 1.0, -2.0, 0.25);
        let z = Vector3::new(
            Quaternion::new(-1.0, 0.0, 3.0, 0.0),
            Quaternion::K,
            Quaternion::ONE,
        )
        .scale_right(&lam);
        let (w1, w2) = projective_coords(&z).unwrap();
        assert!(w1.approx_eq(&Quaternion::new(-1.0, 0.0, 3.0, 0.0), 1e-12));
        assert!(w2.approx_eq(&Quaternion::K, 1e-12));
        assert!(projective_coords(&Vector3::<C>::infinity()).is_none());
    }
}
