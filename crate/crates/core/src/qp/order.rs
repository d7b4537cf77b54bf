use std::cmp::Ordering;

use super::{Color, QPMonomial, QuasiParticle};
use crate::{Error, Result};

/// Charge-wise lexicographic comparison of one color from position 1 up.
/// When one sequence is a proper prefix of the other, the longer one is the
/// smaller monomial.
fn compare_charges(a: &[QuasiParticle], b: &[QuasiParticle]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.charge.cmp(&y.charge) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    b.len().cmp(&a.len())
}

fn compare_modes(a: &[QuasiParticle], b: &[QuasiParticle]) -> Ordering {
    a.iter()
        .map(QuasiParticle::mode)
        .cmp(b.iter().map(QuasiParticle::mode))
}

/// The linear order on monomials of one color-type: charge-types first,
/// then mode sequences, each scanned color 1 before color 2 and position 1
/// first.
pub fn compare(a: &QPMonomial, b: &QPMonomial) -> Result<Ordering> {
    if a.color_type() != b.color_type() {
        return Err(Error::ColorTypeMismatch {
            left: a.color_type(),
            right: b.color_type(),
        });
    }
    let colors = [Color::One, Color::Two];
    let by_charge = colors
        .iter()
        .map(|&c| compare_charges(a.particles(c), b.particles(c)))
        .find(|o| o.is_ne());
    if let Some(o) = by_charge {
        return Ok(o);
    }
    Ok(colors
        .iter()
        .map(|&c| compare_modes(a.particles(c), b.particles(c)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal))
}
