//! Truncated three-variable series: build, multiply, invert a factor.

use qpbasis::{Degree, TruncatedSeries};

fn main() -> qpbasis::Result<()> {
    let qmax = 4;
    // 1 - q y1
    let binomial =
        TruncatedSeries::from_terms(qmax, [(Degree::ZERO, 1), (Degree::new(1, 1, 0), -1)]);
    let geometric = TruncatedSeries::one(qmax).mul_geometric(1, 1, 0)?;
    println!("1/(1 - q*y1)        = {geometric}");
    println!(
        "(1 - q*y1) * that    = {}",
        binomial.checked_mul(&geometric)?
    );

    let euler = TruncatedSeries::one(12).mul_inv_qpochhammer(12);
    let counts: Vec<String> = (0..=12)
        .map(|m| euler.coeff(Degree::new(m, 0, 0)).to_string())
        .collect();
    println!("1/(q)_12 up to q^12  = {}", counts.join(", "));

    let x =
        TruncatedSeries::from_terms(qmax, [(Degree::new(1, 0, 1), 2), (Degree::new(2, 1, 1), 1)]);
    println!("x                    = {x}");
    println!("x^2                  = {}", &x * &x);
    println!("x as csv:\n{}", x.to_csv()?);
    Ok(())
}
