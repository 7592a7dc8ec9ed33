//! The Heisenberg group law and translation matrices, on both scalar paths.

use heisfree::heisenberg::{heis_mul, heis_translation_matrix, HeisPoint};
use heisfree::hermitian::is_unitary_within;
use heisfree::scalars::{ExactComplex, Quaternion};

fn main() {
    let p: HeisPoint<ExactComplex> = "(1; 0)".parse().unwrap();
    let q: HeisPoint<ExactComplex> = "(i; 0)".parse().unwrap();
    let pq = heis_mul(&p, &q);
    let qp = heis_mul(&q, &p);
    println!("p q = {pq}");
    println!("q p = {qp}");
    let t = heis_translation_matrix(&pq);
    println!("T(pq) =\n{t:?}");
    assert_eq!(
        t,
        heis_translation_matrix(&p).mul(&heis_translation_matrix(&q))
    );

    let a: HeisPoint<Quaternion> = "(1+2j; 3k)".parse().unwrap();
    let b: HeisPoint<Quaternion> = "(i-k; j)".parse().unwrap();
    let ab = heis_mul(&a, &b);
    let m = heis_translation_matrix(&ab);
    println!("quaternionic product = {ab}");
    println!("T(ab) unitary: {}", is_unitary_within(&m, 1e-12));
}
