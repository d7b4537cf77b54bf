//! Checks product = fermionic up to a chosen q-degree, then shows that a
//! single corrupted cross term is caught.
//!
//! `cargo run --release --example verify_identity -- 14`

use qpbasis::characters::{
    verify_rr_identity, verify_rr_identity_perturbed, CrossTermPerturbation,
};

fn main() {
    let qmax = std::env::args()
        .nth(1)
        .map_or(10, |a| a.parse().expect("integer qmax"));
    let report = verify_rr_identity(qmax);
    println!(
        "qmax {qmax}: equal {} over {} coefficients in {} ms",
        report.equal, report.checked_coefficients, report.wall_time_ms
    );

    let broken = verify_rr_identity_perturbed(
        4,
        CrossTermPerturbation {
            s: 1,
            t: 2,
            delta: 1,
        },
    );
    match broken.first_discrepancy {
        Some(d) => println!(
            "perturbed: first difference at q^{} y1^{} y2^{} (product {}, fermionic {})",
            d.m, d.r1, d.r2, d.lhs, d.rhs
        ),
        None => println!("perturbed: no difference found"),
    }
}
