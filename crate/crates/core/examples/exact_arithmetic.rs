//! Arithmetic in Q(sqrt2) and Q(sqrt2)(i): exact signs, inverses and the
//! text format shared by every report.

use heisfree::scalars::{ExactComplex, ExactScalar};

fn main() {
    let x: ExactScalar = "3/2 - sqrt2".parse().expect("valid scalar");
    println!("x = {x} ~ {:.6}", x.to_f64());
    println!("sign(x) = {:?}", x.signum());
    println!("1/x = {}", x.inverse().expect("nonzero"));
    println!("N(x) = x * conj(x) = {}", x.field_norm());

    let z: ExactComplex = "-1/2 + 1/2 i".parse().expect("valid complex");
    let w = ExactComplex::new(ExactScalar::sqrt2(), ExactScalar::one());
    println!("z = {z}, w = {w}");
    println!("z * w = {}", &z * &w);
    println!("|z|^2 = {}", z.norm_sqr());
    println!("z / w = {}", z.checked_div(&w).expect("w is nonzero"));
}
