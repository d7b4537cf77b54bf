//! Sorts one graded piece of the basis by the monomial order.

use qpbasis::qp::{basis_monomials, compare};
use qpbasis::BasisKind;

fn main() -> qpbasis::Result<()> {
    let grade = (5, (2, 2));
    let mut piece: Vec<_> = basis_monomials(BasisKind::N, 5)
        .into_iter()
        .filter(|b| (b.weight(), b.color_type()) == grade)
        .collect();
    piece.sort_by(|a, b| compare(a, b).expect("shared color-type"));
    println!(
        "weight {}, color-type {:?}, smallest first:",
        grade.0, grade.1
    );
    for b in &piece {
        println!("  {b}");
    }

    let a = "color2: [] | color1: [(1,-2)]".parse()?;
    let b = "color2: [(1,-1)] | color1: []".parse()?;
    println!(
        "\nmixed color-types: {:?}",
        compare(&a, &b).err().map(|e| e.to_string())
    );
    Ok(())
}
