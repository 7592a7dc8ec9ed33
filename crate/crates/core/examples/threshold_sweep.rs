//! Samples the circle `mu = (-1 - i nu)/(1 + nu^2)` and prints where the
//! threshold `|mu|^2 >= 3/128` stops applying.

use heisfree::cli::{sweep_records, CommonOpts};
use heisfree::freeness::{freeness_threshold, nu_squared_bound, threshold_from_nu_squared};
use heisfree::scalars::ExactScalar;

fn main() {
    let edge = threshold_from_nu_squared(&nu_squared_bound());
    println!(
        "nu^2 = {} gives |mu|^2 = {} (threshold {})",
        nu_squared_bound(),
        edge.mu_squared,
        freeness_threshold()
    );

    let records = sweep_records(
        &ExactScalar::zero(),
        &ExactScalar::from_int(8),
        17,
        &CommonOpts::default(),
    )
    .unwrap();
    for r in records {
        println!(
            "nu = {:>4}  |mu|^2 = {:>7}  {:?}",
            r.nu, r.mu_norm_sqr, r.verdict
        );
    }
}
