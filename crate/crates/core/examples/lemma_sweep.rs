//! Exponent identities between charge-types and their conjugates, one
//! worked case and an exhaustive sweep.

use qpbasis::characters::{lemma41_check, lemma41_sweep};
use qpbasis::Partition;

fn main() -> qpbasis::Result<()> {
    let c1 = Partition::new(vec![4, 3, 3, 2])?;
    let c2 = Partition::new(vec![4, 3, 2, 1])?;
    let check = lemma41_check(&c1, &c2);
    println!("charges {c1} ; {c2}");
    println!("  interaction {:?}", check.interaction);
    println!("  color 1     {:?}", check.color1);
    println!("  color 2     {:?}", check.color2);

    for rmax in [4, 6, 8] {
        let sweep = lemma41_sweep(rmax);
        println!(
            "rmax {rmax}: {} pairs, {} failures",
            sweep.cases,
            sweep.failures.len()
        );
    }
    Ok(())
}
