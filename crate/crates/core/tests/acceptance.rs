//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! wall-clock time against the allowed limit; the process fails if any
//! criterion does.

mod common;

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{exact_complex, int, oracle_mul, q2, rational, rational_complex, rng};
use heisfree::cartan::{cartan_invariant, decompose_generators, mu_from_nu, BoundaryTriple};
use heisfree::freeness::{
    embed_2x2, flawed_bound, flawed_condition, generator_a, generator_b, generator_pair,
    identity_word_search, identity_word_search_with, lyndon_ullman_pair, quat_conjugator,
    threshold_equivalence, threshold_from_nu_squared, trace_ab, vertical_pair, word_evaluate,
    GeneratorPair, SearchConfig,
};
use heisfree::heisenberg::{heis_mul, heis_translation_matrix, HeisPoint};
use heisfree::hermitian::{is_unitary, is_unitary_within, Matrix2, Matrix3};
use heisfree::scalars::{ExactComplex, ExactScalar, ImaginaryQuat, Quaternion, Rational};
use rand::Rng;

type C = ExactComplex;
type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

const FLAWED_BOUND_TOL: f64 = 1e-9;
const CONJUGATOR_REL_TOL: f64 = 1e-9;
const QUAT_UNITARY_TOL: f64 = 1e-12;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counterexample_mu() -> C {
    C::from_ratios((-3, 4), (0, 1))
}

/// The displayed product `AB` at `mu = -3/4`, entered by hand.
fn displayed_ab() -> Matrix3<C> {
    Matrix3::from_rows([
        [C::from(4), q2((0, 1), (-4, 1)), C::from(-4)],
        [q2((0, 1), (3, 1)), C::from(-5), q2((0, 1), (-2, 1))],
        [
            C::from_ratios((-9, 4), (0, 1)),
            q2((0, 1), (3, 2)),
            C::from(1),
        ],
    ])
}

/// `A` and `B(mu)` written out entry by entry.
fn oracle_generators(mu: &C) -> (Matrix3<C>, Matrix3<C>) {
    let r2 = q2((0, 1), (1, 1));
    let two_r2 = &r2 * &C::from(2);
    let a = Matrix3::from_rows([
        [C::one(), two_r2.clone(), C::from(-4)],
        [C::zero(), C::one(), -&two_r2],
        [C::zero(), C::zero(), C::one()],
    ]);
    let b = Matrix3::from_rows([
        [C::one(), C::zero(), C::zero()],
        [&two_r2 * mu, C::one(), C::zero()],
        [
            C::real(-(mu.norm_sqr() * ExactScalar::from_int(4))),
            -(&two_r2 * &mu.conj()),
            C::one(),
        ],
    ]);
    (a, b)
}

fn criterion_1() -> Outcome {
    let mu = counterexample_mu();
    let pair = generator_pair(mu.clone());
    let ab = pair.a.mul(&pair.b);
    ensure(ab == displayed_ab(), || format!("AB = {ab:?}"))?;
    ensure(trace_ab(&mu).is_zero(), || {
        format!("trace_ab = {}", trace_ab(&mu))
    })?;
    ensure(ab.trace().is_zero(), || {
        "trace of the product is not 0".into()
    })?;
    ensure(!ab.is_projective_identity(0.0), || {
        "AB is a projective identity".into()
    })?;
    ensure(!ab.pow(2).is_projective_identity(0.0), || {
        "(AB)^2 is a projective identity".into()
    })?;
    ensure(ab.pow(3).is_projective_identity(0.0), || {
        "(AB)^3 is not a projective identity".into()
    })?;
    let six = identity_word_search(&pair, 6).map_err(|e| e.to_string())?;
    ensure(
        six.as_ref().map(ToString::to_string).as_deref() == Some("ABABAB"),
        || format!("depth 6 search gave {six:?}"),
    )?;
    let five = identity_word_search(&pair, 5).map_err(|e| e.to_string())?;
    ensure(five.is_none(), || format!("depth 5 search gave {five:?}"))
}

fn criterion_2() -> Outcome {
    let mut r = rng(2);
    for _ in 0..200 {
        let mu = rational_complex(&mut r);
        let pair = generator_pair(mu.clone());
        let t = pair.a.mul(&pair.b).trace();
        let claimed = trace_ab(&mu);
        ensure(t == C::real(claimed.clone()), || {
            format!("mu = {mu}: trace {t} vs {claimed}")
        })?;
        let (re, im) = (
            mu.re().as_rational().unwrap().clone(),
            mu.im().as_rational().unwrap().clone(),
        );
        let oracle = int(3) + int(16) * &re + int(16) * (&re * &re + &im * &im);
        ensure(claimed == ExactScalar::from(oracle.clone()), || {
            format!("mu = {mu}: closed form {oracle}")
        })?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    for _ in 0..50 {
        let nu = rational(&mut r);
        let mu = mu_from_nu(&nu.clone().into());
        let d = decompose_generators(&mu).map_err(|e| format!("nu = {nu}: {e}"))?;
        let (a, b) = oracle_generators(&mu);
        ensure(d.i0().mul(d.i2()) == a, || format!("nu = {nu}: i0 i2 != A"))?;
        ensure(d.i2().mul(d.i1()) == b, || {
            format!("nu = {nu}: i2 i1 != B(mu)")
        })?;
        let want = (int(1) + &nu * &nu).recip();
        ensure(mu.norm_sqr() == ExactScalar::from(want.clone()), || {
            format!("nu = {nu}: |mu|^2 = {} != {want}", mu.norm_sqr())
        })?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let bound = Rational::new(125.into(), 3.into());
    let threshold = Rational::new(3.into(), 128.into());
    for _ in 0..500 {
        let nu = rational(&mut r);
        let sq = &nu * &nu;
        let lhs = sq <= bound;
        let rhs = (int(1) + &sq).recip() >= threshold;
        ensure(lhs == rhs, || format!("nu = {nu}: biconditional fails"))?;
        let rep = threshold_equivalence(&nu);
        ensure(
            rep.nu_bound_holds == lhs && rep.condition_holds == rhs,
            || format!("nu = {nu}: library report {rep:?}"),
        )?;
    }
    let edge = threshold_from_nu_squared(&bound);
    ensure(edge.mu_squared == threshold, || {
        format!("|mu|^2 at the boundary = {}", edge.mu_squared)
    })?;
    ensure(edge.condition_holds && edge.nu_bound_holds, || {
        "boundary is not inclusive".into()
    })
}

fn criterion_5() -> Outcome {
    let oracle = 1.0 / (1.0 + (125.0f64 / 3.0).sqrt().atan().powi(2)).sqrt();
    let bound = flawed_bound();
    ensure((bound - oracle).abs() <= FLAWED_BOUND_TOL, || {
        format!("flawed bound {bound} vs {oracle}")
    })?;
    ensure(bound <= 0.75 + FLAWED_BOUND_TOL, || {
        format!("flawed bound {bound} > 3/4")
    })?;
    let mu = counterexample_mu();
    ensure(flawed_condition(&mu), || {
        "mu = -3/4 fails the flawed condition".into()
    })?;
    let pair = generator_pair(mu);
    let w = "ABABAB".parse().map_err(|e| format!("{e}"))?;
    ensure(word_evaluate(&pair, &w).is_projective_identity(0.0), || {
        "ABABAB is not the identity".into()
    })
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    for _ in 0..50 {
        let nu: ExactScalar = rational(&mut r).into();
        let inv = cartan_invariant(&BoundaryTriple::standard(&nu)).map_err(|e| e.to_string())?;
        let (im, re) = inv.tangent_pair();
        ensure(im == -(&nu * &re), || {
            format!("nu = {nu}: tangent pair ({im}, {re})")
        })?;
        ensure(inv.tan() == Some(-&nu), || {
            format!("nu = {nu}: tan = {:?}", inv.tan())
        })?;
        let angle = inv.angle();
        ensure((-FRAC_PI_2..=FRAC_PI_2).contains(&angle), || {
            format!("nu = {nu}: angle {angle}")
        })?;
        let expected = (-nu.to_f64()).atan();
        ensure((angle - expected).abs() <= 1e-12, || {
            format!("nu = {nu}: angle {angle} vs {expected}")
        })?;
    }
    Ok(())
}

fn random_point(r: &mut impl Rng) -> HeisPoint<C> {
    HeisPoint::new(exact_complex(r), common::exact_scalar(r))
}

fn imaginary(r: &mut impl Rng) -> C {
    C::imag(rational(r).into())
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    for _ in 0..200 {
        let (p, q, s) = (
            random_point(&mut r),
            random_point(&mut r),
            random_point(&mut r),
        );
        let left = heis_mul(&heis_mul(&p, &q), &s);
        let right = heis_mul(&p, &heis_mul(&q, &s));
        ensure(left == right, || {
            format!("associativity fails at {p}, {q}, {s}")
        })?;
    }
    for _ in 0..200 {
        let (p, q) = (random_point(&mut r), random_point(&mut r));
        let tp = heis_translation_matrix(&p);
        let lhs = heis_translation_matrix(&heis_mul(&p, &q));
        ensure(lhs == tp.mul(&heis_translation_matrix(&q)), || {
            format!("T not a homomorphism at {p}, {q}")
        })?;
        ensure(is_unitary(&tp), || format!("T({p}) not unitary"))?;
    }

    let mut unitary_checked = 0;
    ensure(is_unitary(&generator_a::<C>()), || "A not unitary".into())?;
    for _ in 0..50 {
        let mu = exact_complex(&mut r);
        let pair: GeneratorPair<C> = generator_pair(mu.clone());
        for m in [&pair.a, &pair.b, &pair.a_inv, &pair.b_inv] {
            ensure(is_unitary(m), || {
                format!("generator at mu = {mu} not unitary")
            })?;
            unitary_checked += 1;
        }
        let (l1, l2) = lyndon_ullman_pair(&imaginary(&mut r), &imaginary(&mut r));
        ensure(is_unitary(&l1) && is_unitary(&l2), || {
            "embedded parabolic pair not unitary".into()
        })?;
    }
    for _ in 0..50 {
        let nu = rational(&mut r);
        let d = decompose_generators(&mu_from_nu(&nu.clone().into())).map_err(|e| e.to_string())?;
        for m in &d.inversions {
            ensure(is_unitary(m), || {
                format!("nu = {nu}: inversion not unitary")
            })?;
            ensure(m.mul(m) == Matrix3::identity(), || {
                format!("nu = {nu}: inversion squared != I")
            })?;
            unitary_checked += 1;
        }
    }
    for _ in 0..50 {
        let mu = common::quaternion(&mut r, 2.0);
        let b = generator_b(&mu);
        ensure(is_unitary_within(&b, QUAT_UNITARY_TOL), || {
            format!("B({mu}) not unitary")
        })?;
        let tau = common::quaternion(&mut r, 3.0).im();
        let (v1, v2) = vertical_pair(tau);
        ensure(
            is_unitary_within(&v1, QUAT_UNITARY_TOL) && is_unitary_within(&v2, QUAT_UNITARY_TOL),
            || format!("vertical pair for {tau} not unitary"),
        )?;
        unitary_checked += 3;
    }
    ensure(unitary_checked > 0, || "no matrices checked".into())?;

    let m2 = |r: &mut rand_chacha::ChaCha8Rng| {
        Matrix2::new(
            rational_complex(r),
            rational_complex(r),
            rational_complex(r),
            rational_complex(r),
        )
    };
    for _ in 0..100 {
        let (x, y) = (m2(&mut r), m2(&mut r));
        ensure(
            embed_2x2(&x.mul(&y)) == embed_2x2(&x).mul(&embed_2x2(&y)),
            || "embed_2x2 not multiplicative".into(),
        )?;
    }

    for _ in 0..200 {
        let tau = loop {
            let t = ImaginaryQuat::new(
                r.random_range(-10.0..10.0),
                r.random_range(-10.0..10.0),
                r.random_range(-10.0..10.0),
            );
            if t.norm() > 1e-6 {
                break t;
            }
        };
        let alpha = quat_conjugator(tau).map_err(|e| e.to_string())?;
        let rotated = oracle_mul(oracle_mul(alpha, tau.to_quat()), alpha.conj());
        let target = Quaternion::I.scale(tau.norm());
        let res = rotated.distance(target);
        ensure(res <= CONJUGATOR_REL_TOL * tau.norm(), || {
            format!("tau = {tau}: residual {res}")
        })?;
        ensure((alpha.norm() - 1.0).abs() <= 1e-12, || {
            format!("tau = {tau}: |alpha| = {}", alpha.norm())
        })?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let cases = [
        C::from(-1),
        C::from_ratios((-1, 2), (-1, 2)),
        C::from_ratios((-1, 2), (1, 2)),
    ];
    for mu in cases {
        let pair = generator_pair(mu.clone());
        let found = identity_word_search_with(&pair, &SearchConfig::new(8).with_workers(4))
            .map_err(|e| e.to_string())?;
        ensure(found.is_none(), || {
            format!("mu = {mu}: identity word {found:?}")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 counterexample reproduction", criterion_1, 1),
        ("2 trace identity", criterion_2, 1),
        ("3 decomposition identity", criterion_3, 5),
        ("4 threshold biconditional", criterion_4, 1),
        ("5 refutation of the earlier criterion", criterion_5, 1),
        ("6 cartan invariant", criterion_6, 1),
        ("7 structural suites", criterion_7, 10),
        ("8 freeness-consistency search", criterion_8, 60),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match &outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => "FAIL (over the time limit)".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "criterion {name:<40} {:>8.3}s / {:>3}s  {verdict}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
