use heisfree::freeness::{check_free_lu, embed_2x2, lyndon_ullman_pair};
use heisfree::hermitian::{is_unitary, Matrix2};
use heisfree::scalars::ExactComplex;

fn main() {
    let cases = [("2i", "2i"), ("4i", "-1/2i"), ("1+i", "2"), ("3", "3/2")];
    for (m, n) in cases {
        let (m, n): (ExactComplex, ExactComplex) = (m.parse().unwrap(), n.parse().unwrap());
        let verdict = check_free_lu(&m, &n);
        let (a1, b1) = lyndon_ullman_pair(&m, &n);
        println!(
            "m = {m}, n = {n}: {:?} [{}], unitary pair: {}",
            verdict.kind(),
            verdict.certificate(),
            is_unitary(&a1) && is_unitary(&b1)
        );
    }
    let x = Matrix2::new(
        ExactComplex::one(),
        ExactComplex::i(),
        ExactComplex::zero(),
        ExactComplex::one(),
    );
    println!("embedding of (1, i; 0, 1):\n{:?}", embed_2x2(&x));
}
