//! The level-k characters next to the product character, with a few named
//! coefficients.

use qpbasis::characters::{
    ch_wl_fermionic, ch_wn_fermionic, ch_wn_product, coefficient, fermionic_exponent,
    DualChargePair,
};
use qpbasis::Partition;

fn main() -> qpbasis::Result<()> {
    let qmax = 3;
    println!("product   N: {}", ch_wn_product(qmax));
    println!("fermionic N: {}", ch_wn_fermionic(qmax));
    for k in 1..=3 {
        println!("fermionic L({k}): {}", ch_wl_fermionic(k, qmax)?);
    }

    let n = ch_wn_fermionic(8);
    let l1 = ch_wl_fermionic(1, 8)?;
    for (m, r1, r2) in [(4, 2, 2), (6, 2, 4), (8, 3, 3)] {
        println!(
            "coefficient of q^{m} y1^{r1} y2^{r2}: N {}, L(1) {}",
            coefficient(&n, m, r1, r2),
            coefficient(&l1, m, r1, r2)
        );
    }

    let d = DualChargePair::new(Partition::new(vec![2, 1])?, Partition::new(vec![3, 2, 1])?);
    println!(
        "exponent for dual pair {} ; {}: {}",
        d.color1,
        d.color2,
        fermionic_exponent(&d)
    );
    Ok(())
}
