//! `mu = -3/4` satisfies the older sufficient condition, yet `AB` has
//! order 3, so `<A, B>` is not free.

use heisfree::cli::{cmd_refute, CommonOpts, Format};
use heisfree::freeness::{flawed_bound, generator_pair, trace_ab};
use heisfree::scalars::ExactComplex;

fn main() {
    let mu = ExactComplex::from_ratios((-3, 4), (0, 1));
    println!("flawed bound {:.6} <= |mu| = 0.75", flawed_bound());
    let pair = generator_pair(mu.clone());
    let ab = pair.a.mul(&pair.b);
    println!("AB =\n{ab:?}");
    println!("tr(AB) = {}", trace_ab(&mu));
    println!("(AB)^3 = {}", ab.pow(3));

    let report = cmd_refute(&CommonOpts::default()).expect("reproduces");
    print!("{}", report.render(Format::Pretty));
}
