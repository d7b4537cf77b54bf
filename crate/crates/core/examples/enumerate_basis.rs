//! Lists basis monomials of low weight and tabulates graded dimensions.
//!
//! `cargo run --example enumerate_basis -- 3 2` lists weight <= 3 at level 2.

use qpbasis::qp::{basis_monomials, enumerate_basis};
use qpbasis::BasisKind;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let qmax = args.next().unwrap_or(2);
    let level = args.next().unwrap_or(1);

    for kind in [BasisKind::N, BasisKind::L(level)] {
        let monomials = basis_monomials(kind, qmax);
        println!(
            "{kind} basis, weight <= {qmax}: {} monomials",
            monomials.len()
        );
        for b in &monomials {
            println!("  {:>3}  {b}", b.weight());
        }
    }

    let table = enumerate_basis(BasisKind::L(level), qmax + 3);
    println!(
        "\nL({level}) graded dimensions up to weight {}:\n{table}",
        qmax + 3
    );
}
