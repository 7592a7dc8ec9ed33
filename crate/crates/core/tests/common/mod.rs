#![allow(dead_code)]

use heisfree::scalars::{ExactComplex, ExactScalar, Quaternion, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng) -> Rational {
    Rational::new(
        rng.random_range(-60i64..=60).into(),
        rng.random_range(1i64..=24).into(),
    )
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `a + b sqrt2`, with `b = 0` about half the time.
pub fn exact_scalar(rng: &mut impl Rng) -> ExactScalar {
    let b = if rng.random_bool(0.5) {
        rational(rng)
    } else {
        int(0)
    };
    ExactScalar::new(rational(rng), b)
}

pub fn rational_complex(rng: &mut impl Rng) -> ExactComplex {
    ExactComplex::from_rationals(rational(rng), rational(rng))
}

pub fn exact_complex(rng: &mut impl Rng) -> ExactComplex {
    ExactComplex::new(exact_scalar(rng), exact_scalar(rng))
}

pub fn quaternion(rng: &mut impl Rng, scale: f64) -> Quaternion {
    let mut c = || rng.random_range(-scale..=scale);
    Quaternion::new(c(), c(), c(), c())
}

/// `a + b sqrt2` from two rationals given as `(num, den)`.
pub fn q2(a: (i64, i64), b: (i64, i64)) -> ExactComplex {
    ExactComplex::real(ExactScalar::from_parts(a, b))
}

/// Left multiplication by `p` as a real 4x4 matrix, used as an independent
/// oracle for the Hamilton product.
pub fn left_matrix(p: Quaternion) -> [[f64; 4]; 4] {
    let (a, b, c, d) = (p.r0, p.r1, p.r2, p.r3);
    [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]
}

pub fn oracle_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    let m = left_matrix(p);
    let v = [q.r0, q.r1, q.r2, q.r3];
    let r: Vec<f64> = m
        .iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect();
    Quaternion::new(r[0], r[1], r[2], r[3])
}
