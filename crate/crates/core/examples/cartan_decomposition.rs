//! Writes `A` and `B(mu)` as products of inversions in complex geodesics and
//! reports the Cartan invariant of the standard triple.

use heisfree::cartan::{cartan_invariant, decompose_generators, mu_from_nu, BoundaryTriple};
use heisfree::freeness::generator_pair;
use heisfree::scalars::ExactScalar;

fn main() {
    for nu in [
        ExactScalar::zero(),
        ExactScalar::from_int(1),
        ExactScalar::ratio(13, 2),
    ] {
        let mu = mu_from_nu(&nu);
        let d = decompose_generators(&mu).expect("mu lies on the circle");
        let pair = generator_pair(mu.clone());
        let inv = cartan_invariant(&BoundaryTriple::standard(&nu)).unwrap();
        println!("nu = {nu}: mu = {mu}");
        for (k, c) in d.polars.iter().enumerate() {
            println!("  c{k} = {}", c.vector());
        }
        println!("  A = i0 i2: {}", d.i0().mul(d.i2()) == pair.a);
        println!("  B = i2 i1: {}", d.i2().mul(d.i1()) == pair.b);
        println!("  tan = {}, angle = {:.6}", inv.tan().unwrap(), inv.angle());
    }
}
