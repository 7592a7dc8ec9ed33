//! Freeness checkers for two-generator groups of Heisenberg translations.
//!
//! Every checker returns a [`FreenessVerdict`]. The conditions implemented
//! here are sufficient only, so failing one gives `NotCovered`; a group is
//! reported non-free only together with a concrete identity word.
//!
//! The generator pair is
//!
//! ```text
//!     | 1  2sqrt2  -4     |          | 1           0             0 |
//! A = | 0  1       -2sqrt2|   B(mu) = | 2sqrt2 mu   1             0 |
//!     | 0  0        1     |          | -4|mu|^2    -2sqrt2 conj(mu) 1 |
//! ```
//!
//! with `A = T(-2, 0)` a Heisenberg translation and `B(mu) = H T(2mu, 0) H`.

mod quaternionic;
mod words;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heisenberg::{heis_translation_matrix, HeisPoint};
use crate::hermitian::{Matrix2, Matrix3};
use crate::scalars::{
    ExactComplex, ExactScalar, ImagPart, Rational, RealScalar, Scalar, ScalarPath,
};

pub use quaternionic::{
    check_free_quat, check_free_vertical_quat, conjugate_slice, quat_conjugator, vertical_pair,
    QuatSliceCheck, VerticalQuatCheck,
};
pub use words::{
    identity_word_search, identity_word_search_with, word_evaluate, Letter, ReducedWord,
    SearchConfig, SearchError, WordError, DEFAULT_SEARCH_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FreenessError {
    #[error("tau must be nonzero")]
    ZeroTau,
    #[error("malformed input: {0}")]
    Malformed(String),
}

/// The sufficient condition that certified a group free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// `|mu|^2 = -Re(mu) >= 3/128` for complex `mu`.
    CircleThreshold,
    /// The same condition for quaternionic `mu`, via its complex slice.
    QuaternionSlice,
    /// `|mn| >= 4` for the embedded parabolic pair.
    LyndonUllman,
    /// `|tau| >= 2` for vertical quaternionic translations.
    VerticalQuaternion,
}

impl Criterion {
    pub fn tag(self) -> &'static str {
        match self {
            Criterion::CircleThreshold => "circle-threshold",
            Criterion::QuaternionSlice => "quaternion-slice",
            Criterion::LyndonUllman => "lyndon-ullman",
            Criterion::VerticalQuaternion => "vertical-quaternion",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    CertifiedFree,
    NonFreeWitness,
    NotCovered,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FreenessVerdict {
    CertifiedFree(Criterion),
    /// A nonempty reduced word evaluating to a projective identity.
    NonFreeWitness(ReducedWord),
    NotCovered(String),
}

impl FreenessVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            FreenessVerdict::CertifiedFree(_) => VerdictKind::CertifiedFree,
            FreenessVerdict::NonFreeWitness(_) => VerdictKind::NonFreeWitness,
            FreenessVerdict::NotCovered(_) => VerdictKind::NotCovered,
        }
    }

    /// Criterion tag, witness word, or the reason nothing applied.
    pub fn certificate(&self) -> String {
        match self {
            FreenessVerdict::CertifiedFree(c) => c.tag().to_string(),
            FreenessVerdict::NonFreeWitness(w) => w.to_string(),
            FreenessVerdict::NotCovered(reason) => reason.clone(),
        }
    }

    pub fn is_certified_free(&self) -> bool {
        matches!(self, FreenessVerdict::CertifiedFree(_))
    }
}

/// The fixed generator `A = T(-2, 0)`.
pub fn generator_a<S: Scalar>() -> Matrix3<S> {
    heis_translation_matrix(&HeisPoint::new(-(S::one() + S::one()), S::Imag::zero()))
}

/// `B(mu)`; `B(0) = I` and `B(mu)^-1 = B(-mu)`.
pub fn generator_b<S: Scalar>(mu: &S) -> Matrix3<S> {
    let two_r2 = S::sqrt2() + S::sqrt2();
    let four = S::from_real(S::Real::from_ratio(4, 1));
    let mut b = Matrix3::identity();
    b.m[1][0] = two_r2.clone() * mu.clone();
    b.m[2][0] = -(four * S::from_real(mu.norm_sqr()));
    b.m[2][1] = -(two_r2 * mu.conj());
    b
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorPair<S: Scalar> {
    pub a: Matrix3<S>,
    pub b: Matrix3<S>,
    pub a_inv: Matrix3<S>,
    pub b_inv: Matrix3<S>,
    pub mu: S,
}

impl<S: Scalar> GeneratorPair<S> {
    pub fn path(&self) -> ScalarPath {
        S::PATH
    }

    pub fn matrix(&self, l: Letter) -> &Matrix3<S> {
        match l {
            Letter::A => &self.a,
            Letter::AInv => &self.a_inv,
            Letter::B => &self.b,
            Letter::BInv => &self.b_inv,
        }
    }
}

pub fn generator_pair<S: Scalar>(mu: S) -> GeneratorPair<S> {
    let two = S::one() + S::one();
    GeneratorPair {
        a: generator_a(),
        b: generator_b(&mu),
        a_inv: heis_translation_matrix(&HeisPoint::new(two, S::Imag::zero())),
        b_inv: generator_b(&-mu.clone()),
        mu,
    }
}

/// `tr(A B(mu)) = 3 + 16 Re(mu) + 16 |mu|^2`.
pub fn trace_ab<S: Scalar>(mu: &S) -> S::Real {
    let sixteen = S::Real::from_ratio(16, 1);
    S::Real::from_ratio(3, 1) + sixteen.clone() * mu.re() + sixteen * mu.norm_sqr()
}

/// The lower bound 3/128 on `|mu|^2`.
pub fn freeness_threshold() -> Rational {
    Rational::new(3.into(), 128.into())
}

/// The bound 125/3 on `nu^2 = tan^2` of the angular invariant.
pub fn nu_squared_bound() -> Rational {
    Rational::new(125.into(), 3.into())
}

/// `Re(mu) + |mu|^2` on any path.
pub(crate) fn circle_residual_of<S: Scalar>(mu: &S) -> S::Real {
    mu.re() + mu.norm_sqr()
}

/// `|mu|^2 = -Re(mu) >= 3/128`, decided exactly.
pub fn check_free_main(mu: &ExactComplex) -> FreenessVerdict {
    let residual = circle_residual_of(mu);
    if !residual.is_zero() {
        return FreenessVerdict::NotCovered(format!(
            "off the circle: Re(mu) + |mu|^2 = {residual}"
        ));
    }
    let norm = mu.norm_sqr();
    if norm >= ExactScalar::from(freeness_threshold()) {
        FreenessVerdict::CertifiedFree(Criterion::CircleThreshold)
    } else {
        FreenessVerdict::NotCovered(format!("|mu|^2 = {norm} < 3/128"))
    }
}

/// [`check_free_main`], falling back to the identity-word search when the
/// condition does not apply.
pub fn check_free_main_searching(
    mu: &ExactComplex,
    config: &SearchConfig,
) -> Result<FreenessVerdict, SearchError> {
    let verdict = check_free_main(mu);
    if verdict.is_certified_free() {
        return Ok(verdict);
    }
    let pair = generator_pair(mu.clone());
    Ok(match identity_word_search_with(&pair, config)? {
        Some(w) => FreenessVerdict::NonFreeWitness(w),
        None => verdict,
    })
}

/// The bound `1 / sqrt(1 + atan(sqrt(125/3))^2)` of the refuted criterion.
pub fn flawed_bound() -> f64 {
    let angle = (125.0_f64 / 3.0).sqrt().atan();
    1.0 / (1.0 + angle * angle).sqrt()
}

/// The refuted criterion `flawed_bound() <= |mu|`, in floating point.
pub fn flawed_condition(mu: &ExactComplex) -> bool {
    flawed_bound() <= mu.norm_sqr().to_f64().sqrt()
}

/// `|mu|^2 = 1/(1 + nu^2)` and the two sides of the threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub mu_squared: Rational,
    /// `|mu|^2 >= 3/128`.
    pub condition_holds: bool,
    /// `nu^2 <= 125/3`.
    pub nu_bound_holds: bool,
}

pub fn threshold_from_nu_squared(nu_squared: &Rational) -> ThresholdReport {
    let mu_squared = (Rational::from_integer(1.into()) + nu_squared).recip();
    ThresholdReport {
        condition_holds: mu_squared >= freeness_threshold(),
        nu_bound_holds: *nu_squared <= nu_squared_bound(),
        mu_squared,
    }
}

pub fn threshold_equivalence(nu: &Rational) -> ThresholdReport {
    threshold_from_nu_squared(&(nu * nu))
}

/// `(a, b; c, d) -> (a, 0, b; 0, 1, 0; c, 0, d)`.
pub fn embed_2x2<S: Scalar>(m: &Matrix2<S>) -> Matrix3<S> {
    let [[a, b], [c, d]] = m.m.clone();
    Matrix3::from_rows([
        [a, S::zero(), b],
        [S::zero(), S::one(), S::zero()],
        [c, S::zero(), d],
    ])
}

/// The embedded parabolic pair `(1, m; 0, 1)` and `(1, 0; n, 1)`.
pub fn lyndon_ullman_pair<S: Scalar>(m: &S, n: &S) -> (Matrix3<S>, Matrix3<S>) {
    (
        embed_2x2(&Matrix2::new(S::one(), m.clone(), S::zero(), S::one())),
        embed_2x2(&Matrix2::new(S::one(), S::zero(), n.clone(), S::one())),
    )
}

/// `|mn| >= 4`, compared exactly as `|m|^2 |n|^2 >= 16`.
pub fn check_free_lu(m: &ExactComplex, n: &ExactComplex) -> FreenessVerdict {
    let product = m.norm_sqr() * n.norm_sqr();
    if product >= ExactScalar::from_int(16) {
        FreenessVerdict::CertifiedFree(Criterion::LyndonUllman)
    } else {
        FreenessVerdict::NotCovered(format!("|mn|^2 = {product} < 16"))
    }
}
