//! Quaternionic versions: a parameter off the complex slice is rotated into
//! it, and vertical translations are rotated to `|tau| i`.

use heisfree::freeness::{
    check_free_quat, check_free_vertical_quat, conjugate_slice, generator_b, quat_conjugator,
};
use heisfree::scalars::{ImaginaryQuat, Quaternion};

fn main() {
    let mu: Quaternion = "-1/2 + 1/2j".parse().unwrap();
    let slice = check_free_quat(mu, 1e-12).unwrap();
    println!(
        "mu = {mu}: tau = {}, verdict {:?}",
        slice.tau, slice.verdict
    );
    println!("conjugator u = {}", slice.conjugator);
    let back = conjugate_slice(&slice);
    println!(
        "u B(tau) u^-1 = B(mu): {}",
        back.approx_eq(&generator_b(&mu), 1e-12)
    );

    for tau in ["3i", "j", "-i", "1i+1j+1k", "2k"] {
        let t: ImaginaryQuat = tau.parse().unwrap();
        let alpha = quat_conjugator(t).unwrap();
        let check = check_free_vertical_quat(t, 1e-12).unwrap();
        println!(
            "tau = {t}: alpha = {alpha}, residual {:.1e}, {:?}",
            check.residual, check.verdict
        );
    }
}
