//! Checks a few monomials against the basis inequalities and shows why the
//! rejected ones fail.

use qpbasis::qp::{check_conditions_l, check_conditions_n};
use qpbasis::{Color, QPMonomial};

fn show(label: &str, b: &QPMonomial) {
    let n = check_conditions_n(b);
    println!("{label}: {b}");
    println!("  color-type {:?}, weight {}", b.color_type(), b.weight());
    println!(
        "  charge-type {} ; {}   dual {} ; {}",
        b.charge_type(Color::Two),
        b.charge_type(Color::One),
        b.dual_charge_type(Color::Two),
        b.dual_charge_type(Color::One)
    );
    if n.empty_interaction {
        println!("  (no color-1 quasi-particles, interaction sums are empty)");
    }
    for f in n.failures() {
        println!(
            "  fails {:?} at color {} position {}: {} > {}",
            f.rule, f.color, f.position, f.value, f.bound
        );
    }
    for k in 1..=2 {
        println!(
            "  in N basis: {}, in L({k}) basis: {}",
            n.passed(),
            check_conditions_l(b, k).passed()
        );
    }
}

fn main() -> qpbasis::Result<()> {
    // charges (1,2,3,4) in color 2 and (2,3,3,4) in color 1
    let big = QPMonomial::from_modes(
        &[(4, -8), (3, -6), (2, -4), (1, -2)],
        &[(4, -9), (3, -7), (3, -5), (2, -3)],
    )?;
    show("charge bookkeeping, not a basis element", &big);

    show(
        "lowest color-1 pair",
        &QPMonomial::from_modes(&[], &[(1, -1), (1, -3)])?,
    );
    show(
        "too close",
        &QPMonomial::from_modes(&[], &[(1, -1), (1, -2)])?,
    );
    show("color 2 alone", &QPMonomial::from_modes(&[(2, -2)], &[])?);
    show(
        "color 2 with zero mode",
        &"color2: [(1,0)] | color1: [(1,-1)]".parse()?,
    );
    Ok(())
}
