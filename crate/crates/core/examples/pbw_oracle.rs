//! Graded dimensions of the PBW basis, compared with the enumerated
//! quasi-particle basis.

use qpbasis::oracle::{pbw_graded_dims, POSITIVE_ROOTS};
use qpbasis::qp::enumerate_basis;
use qpbasis::BasisKind;

fn main() -> qpbasis::Result<()> {
    for r in POSITIVE_ROOTS {
        println!("root {:<15} degree y1^{} y2^{}", r.name, r.r1, r.r2);
    }
    let qmax = 6;
    let pbw = pbw_graded_dims(qmax);
    let basis = enumerate_basis(BasisKind::N, qmax);
    println!("\n m  pbw  basis");
    for m in 0..=qmax {
        println!(
            "{m:>2} {:>4} {:>6}",
            pbw.weight_total(m),
            basis.weight_total(m)
        );
    }
    println!("tables equal: {}", pbw == basis);
    println!("\n{}", pbw_graded_dims(2).to_json()?);
    Ok(())
}
