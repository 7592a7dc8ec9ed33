//! Quaternionic checkers. These run on the floating path because the
//! conjugating unit quaternions involve square roots.

use super::{generator_b, Criterion, FreenessError, FreenessVerdict};
use crate::hermitian::Matrix3;
use crate::scalars::{ImaginaryQuat, Quaternion};

type Q = Quaternion;

/// Unit quaternion `alpha` with `alpha tau alpha^-1 = |tau| i`.
///
/// For `u = tau/|tau|` with nonnegative i-component, `alpha = (1 - i u)/|1 - i u|`
/// (the half-way rotation, `|1 - i u| >= 1`). Otherwise `u` is first
/// conjugated by `j`, which flips the sign of its i-component, and the result
/// is `alpha' j`. In particular `u = -i` gives `alpha = j`.
pub fn quat_conjugator(tau: ImaginaryQuat) -> Result<Q, FreenessError> {
    let n = tau.norm();
    if n == 0.0 {
        return Err(FreenessError::ZeroTau);
    }
    if !n.is_finite() {
        return Err(FreenessError::Malformed(format!(
            "tau = {tau} is not finite"
        )));
    }
    let u = tau.scale(1.0 / n).to_quat();
    let (u, pre) = if u.r1 < 0.0 {
        (Q::J * u * Q::J.conj(), Some(Q::J))
    } else {
        (u, None)
    };
    let s = Q::ONE - Q::I * u;
    let alpha = s.scale(1.0 / s.norm());
    Ok(match pre {
        Some(j) => alpha * j,
        None => alpha,
    })
}

/// The vertical pair `I + tau E13`, `I + tau E31`.
pub fn vertical_pair(tau: ImaginaryQuat) -> (Matrix3<Q>, Matrix3<Q>) {
    let mut a = Matrix3::identity();
    a.m[0][2] = tau.to_quat();
    let mut b = Matrix3::identity();
    b.m[2][0] = tau.to_quat();
    (a, b)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerticalQuatCheck {
    pub verdict: FreenessVerdict,
    pub conjugator: Q,
    pub pair: (Matrix3<Q>, Matrix3<Q>),
    /// The pair conjugated by `diag(alpha, 1, alpha)`; entries `|tau| i`.
    pub conjugated: (Matrix3<Q>, Matrix3<Q>),
    /// `|alpha tau alpha^-1 - |tau| i|`.
    pub residual: f64,
}

/// `|tau| >= 2` for the vertical pair, with `|tau|^2 >= 4 - 4 tol` accepted.
pub fn check_free_vertical_quat(
    tau: ImaginaryQuat,
    tol: f64,
) -> Result<VerticalQuatCheck, FreenessError> {
    let alpha = quat_conjugator(tau)?;
    let alpha_inv = alpha.conj();
    let t = tau.norm();
    let rotated = alpha * tau.to_quat() * alpha_inv;
    let residual = rotated.distance(Q::I.scale(t));
    let c = Matrix3::diag(alpha, Q::ONE, alpha);
    let c_inv = Matrix3::diag(alpha_inv, Q::ONE, alpha_inv);
    let pair = vertical_pair(tau);
    let conjugated = (c.mul(&pair.0).mul(&c_inv), c.mul(&pair.1).mul(&c_inv));
    let verdict = if tau.norm_sqr() >= 4.0 * (1.0 - tol) {
        FreenessVerdict::CertifiedFree(Criterion::VerticalQuaternion)
    } else {
        FreenessVerdict::NotCovered(format!("|tau| = {t} < 2"))
    };
    Ok(VerticalQuatCheck {
        verdict,
        conjugator: alpha,
        pair,
        conjugated,
        residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuatSliceCheck {
    pub verdict: FreenessVerdict,
    /// `Re(mu) + sqrt(|mu|^2 - Re(mu)^2) i`.
    pub tau: Q,
    /// Unit `u` with `u tau u^-1 = mu`, so `diag(u,u,u)` carries `B(tau)` to `B(mu)`.
    pub conjugator: Q,
    /// `Re(mu) + |mu|^2`.
    pub circle_residual: f64,
    pub tol: f64,
}

/// `|mu|^2 = -Re(mu) >= 3/128` for quaternionic `mu`, reduced to the complex
/// slice through `tau`.
pub fn check_free_quat(mu: Q, tol: f64) -> Result<QuatSliceCheck, FreenessError> {
    if ![mu.r0, mu.r1, mu.r2, mu.r3].iter().all(|x| x.is_finite()) {
        return Err(FreenessError::Malformed(format!("mu = {mu} is not finite")));
    }
    let norm = mu.norm_sqr();
    let radicand = norm - mu.r0 * mu.r0;
    if radicand < 0.0 {
        return Err(FreenessError::Malformed(format!(
            "|mu|^2 - Re(mu)^2 = {radicand} < 0"
        )));
    }
    let tau = Q::new(mu.r0, radicand.sqrt(), 0.0, 0.0);
    let imag = mu.im();
    let conjugator = if imag.norm_sqr() == 0.0 {
        Q::ONE
    } else {
        quat_conjugator(imag)?.conj()
    };

    let tau_norm = tau.norm_sqr();
    let circle_residual = tau_norm + tau.r0;
    let scale = tau_norm.max(1.0);
    let on_circle = circle_residual.abs() <= tol * scale;
    let threshold = 3.0 / 128.0;
    let verdict = if !on_circle {
        FreenessVerdict::NotCovered(format!(
            "off the circle: Re(mu) + |mu|^2 = {circle_residual}"
        ))
    } else if tau_norm >= threshold - tol {
        FreenessVerdict::CertifiedFree(Criterion::QuaternionSlice)
    } else {
        FreenessVerdict::NotCovered(format!("|mu|^2 = {tau_norm} < 3/128"))
    };
    Ok(QuatSliceCheck {
        verdict,
        tau,
        conjugator,
        circle_residual,
        tol,
    })
}

/// `diag(u,u,u) B(tau) diag(u,u,u)^-1`.
pub fn conjugate_slice(check: &QuatSliceCheck) -> Matrix3<Q> {
    let u = check.conjugator;
    let d = Matrix3::diag(u, u, u);
    let d_inv = Matrix3::diag(u.conj(), u.conj(), u.conj());
    d.mul(&generator_b(&check.tau)).mul(&d_inv)
}
