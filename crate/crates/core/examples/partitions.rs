//! Partition enumeration and conjugation.

use qpbasis::partitions::{count_partitions_at_most, partitions_of};
use qpbasis::Partition;

fn main() -> qpbasis::Result<()> {
    for p in partitions_of(6, None, None) {
        println!("{p:<15} conjugate {}", p.conjugate());
    }

    let charge = Partition::new(vec![4, 3, 3, 2])?;
    println!(
        "\n{charge} has multiplicities {:?}",
        charge.multiplicities()
    );
    println!("padded to 6: {:?}", charge.padded(6));

    let capped = partitions_of(10, Some(3), Some(4));
    println!(
        "\npartitions of 10, parts <= 3, at most 4 parts: {}",
        capped.len()
    );
    println!(
        "partitions of 0..=10 into at most 3 parts: {:?}",
        count_partitions_at_most(10, 3)
    );
    Ok(())
}
