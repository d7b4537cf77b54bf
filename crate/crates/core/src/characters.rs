//! Fermionic character sums, the Euler product character and the identity
//! check between them.
//!
//! A fermionic term is indexed by a pair of dual-charge-types
//! `r₁⁽¹⁾ ≥ r₁⁽²⁾ ≥ …` and `r₂⁽¹⁾ ≥ r₂⁽²⁾ ≥ …` and contributes
//!
//! ```text
//! q^{Σ (r₁⁽ˢ⁾)² + Σ (r₂⁽ᵗ⁾)² − Σ_s r₁⁽ˢ⁾ (r₂⁽²ˢ⁻¹⁾ + r₂⁽²ˢ⁾)} y₁^{r₁} y₂^{r₂}
//!   / ∏_s (q)_{r₁⁽ˢ⁾ − r₁⁽ˢ⁺¹⁾} ∏_t (q)_{r₂⁽ᵗ⁾ − r₂⁽ᵗ⁺¹⁾}
//! ```
//!
//! with zero-padding past the stored parts. The level-`k` character of
//! `W_{L(kΛ₀)}` restricts the pair to at most `k` and `2k` parts.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::partitions::{partitions_of, Partition};
use crate::series::{Degree, TruncatedSeries};
use crate::{Error, Result};

/// Degrees `(r₁, r₂)` of the four positive roots `α₁, α₂, α₁+α₂, α₁+2α₂`.
pub const ROOT_DEGREES: [(u32, u32); 4] = [(1, 0), (0, 1), (1, 1), (1, 2)];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DualChargePair {
    pub color1: Partition,
    pub color2: Partition,
}

impl DualChargePair {
    pub fn new(color1: Partition, color2: Partition) -> Self {
        DualChargePair { color1, color2 }
    }

    /// `(r₁, r₂)`.
    pub fn color_degrees(&self) -> (u32, u32) {
        (self.color1.size(), self.color2.size())
    }
}

/// An off-by-`delta` error injected into one pairing `r₁⁽ˢ⁾ · r₂⁽ᵗ⁾` of the
/// cross term, for `t ∈ {2s − 1, 2s}`. The perturbed pairing contributes
/// `r₁⁽ˢ⁾ r₂⁽ᵗ⁾ + delta` whenever both factors are nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossTermPerturbation {
    pub s: usize,
    pub t: usize,
    pub delta: i64,
}

fn cross_term(d: &DualChargePair, perturbation: Option<CrossTermPerturbation>) -> i64 {
    let mut cross = 0i64;
    for (i, &a) in d.color1.parts().iter().enumerate() {
        let s = i + 1;
        for t in [2 * s - 1, 2 * s] {
            let b = d.color2.part(t - 1);
            let mut term = i64::from(a) * i64::from(b);
            if let Some(p) = perturbation {
                if p.s == s && p.t == t && b > 0 {
                    term += p.delta;
                }
            }
            cross += term;
        }
    }
    cross
}

fn squares(p: &Partition) -> i64 {
    p.parts().iter().map(|&x| i64::from(x) * i64::from(x)).sum()
}

/// The `q`-exponent of the fermionic term indexed by `d`.
pub fn fermionic_exponent(d: &DualChargePair) -> i64 {
    squares(&d.color1) + squares(&d.color2) - cross_term(d, None)
}

fn pochhammer_orders(p: &Partition) -> impl Iterator<Item = u32> + '_ {
    (0..p.len()).map(move |i| p.part(i) - p.part(i + 1))
}

/// The full fermionic term for `d` truncated at `qmax`, with the cross term
/// optionally perturbed.
fn fermionic_term(
    d: &DualChargePair,
    qmax: u32,
    perturbation: Option<CrossTermPerturbation>,
) -> Option<TruncatedSeries> {
    let exponent = squares(&d.color1) + squares(&d.color2) - cross_term(d, perturbation);
    let exponent = u32::try_from(exponent).ok()?;
    if exponent > qmax {
        return None;
    }
    let (r1, r2) = d.color_degrees();
    let mut term = TruncatedSeries::monomial(qmax, Degree::new(exponent, r1, r2), 1);
    for r in pochhammer_orders(&d.color1).chain(pochhammer_orders(&d.color2)) {
        term = term.mul_inv_qpochhammer(r);
    }
    Some(term)
}

/// Length caps on the dual-charge-types: `None` for `W_{N(kΛ₀)}`,
/// `Some((k, 2k))` for `W_{L(kΛ₀)}`.
fn fermionic_sum(
    qmax: u32,
    caps: Option<(usize, usize)>,
    perturbation: Option<CrossTermPerturbation>,
) -> TruncatedSeries {
    let (cap1, cap2) = match caps {
        Some((a, b)) => (Some(a), Some(b)),
        None => (None, None),
    };
    // r₁ ≤ qmax and r₂ ≤ 2·qmax: the exponent is at least r₁ and at least
    // r₂/2 (see `qp::enumerate`), and the Pochhammer factors only raise the
    // q-degree, so no omitted pair reaches the truncation.
    let color1: Vec<Partition> = (0..=qmax)
        .flat_map(|r1| partitions_of(r1, None, cap1))
        .collect();
    let color2: Vec<Partition> = (0..=2 * qmax)
        .flat_map(|r2| partitions_of(r2, None, cap2))
        .collect();
    color1
        .par_iter()
        .map(|d1| {
            let mut acc = TruncatedSeries::zero(qmax);
            for d2 in &color2 {
                let d = DualChargePair::new(d1.clone(), d2.clone());
                if perturbation.is_none() {
                    let e = fermionic_exponent(&d);
                    let (r1, r2) = d.color_degrees();
                    assert!(
                        e >= i64::from(r1) && 2 * e >= i64::from(r2),
                        "exponent {e} of {d:?} breaks the truncation bound"
                    );
                }
                if let Some(term) = fermionic_term(&d, qmax, perturbation) {
                    acc.accumulate(&term).expect("same truncation");
                }
            }
            acc
        })
        .reduce(
            || TruncatedSeries::zero(qmax),
            |mut a, b| {
                a.accumulate(&b).expect("same truncation");
                a
            },
        )
}

/// Fermionic form of `ch W_{N(kΛ₀)}`.
pub fn ch_wn_fermionic(qmax: u32) -> TruncatedSeries {
    fermionic_sum(qmax, None, None)
}

/// Fermionic form of `ch W_{L(kΛ₀)}`.
pub fn ch_wl_fermionic(k: u32, qmax: u32) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::InvalidLevel);
    }
    Ok(fermionic_sum(
        qmax,
        Some((k as usize, 2 * k as usize)),
        None,
    ))
}

/// `ch W_{N(kΛ₀)}` with one cross-term pairing perturbed.
pub fn ch_wn_fermionic_perturbed(
    qmax: u32,
    perturbation: CrossTermPerturbation,
) -> TruncatedSeries {
    fermionic_sum(qmax, None, Some(perturbation))
}

/// `∏_{m>0} 1/((1 − q^m y₁)(1 − q^m y₂)(1 − q^m y₁y₂)(1 − q^m y₁y₂²))`.
pub fn ch_wn_product(qmax: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(qmax);
    for m in 1..=qmax {
        for (a1, a2) in ROOT_DEGREES {
            s = s.mul_geometric(m, a1, a2).expect("m ≥ 1");
        }
    }
    s
}

/// Both sides of the three exponent identities relating charge-types to
/// dual-charge-types. Each pair is `(lhs, rhs)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma41Check {
    /// `Σ_p Σ_q min{n_{p,2}, 2n_{q,1}} = Σ_s r₁⁽ˢ⁾(r₂⁽²ˢ⁻¹⁾ + r₂⁽²ˢ⁾)`.
    pub interaction: (i64, i64),
    /// `Σ_p (Σ_{p>p'>0} 2 min{n_{p,1}, n_{p',1}} + n_{p,1}) = Σ_s (r₁⁽ˢ⁾)²`.
    pub color1: (i64, i64),
    /// The color-2 analogue, `= Σ_t (r₂⁽ᵗ⁾)²`.
    pub color2: (i64, i64),
}

impl Lemma41Check {
    pub fn holds(&self) -> bool {
        [self.interaction, self.color1, self.color2]
            .iter()
            .all(|(l, r)| l == r)
    }
}

fn same_color_lhs(charges: &[u32]) -> i64 {
    charges
        .iter()
        .enumerate()
        .map(|(p, &n)| {
            let pairs: i64 = charges[..p].iter().map(|&m| 2 * i64::from(n.min(m))).sum();
            pairs + i64::from(n)
        })
        .sum()
}

/// Evaluates the left sides directly on the charge multisets and the right
/// sides on their conjugates.
pub fn lemma41_check(charge1: &Partition, charge2: &Partition) -> Lemma41Check {
    let interaction_lhs: i64 = charge2
        .parts()
        .iter()
        .flat_map(|&n2| {
            charge1
                .parts()
                .iter()
                .map(move |&n1| i64::from(n2.min(2 * n1)))
        })
        .sum();
    let dual = DualChargePair::new(charge1.conjugate(), charge2.conjugate());
    Lemma41Check {
        interaction: (interaction_lhs, cross_term(&dual, None)),
        color1: (same_color_lhs(charge1.parts()), squares(&dual.color1)),
        color2: (same_color_lhs(charge2.parts()), squares(&dual.color2)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaSweep {
    pub rmax: u32,
    pub cases: u64,
    pub failures: Vec<(Partition, Partition)>,
}

impl LemmaSweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`lemma41_check`] on every pair of charge multisets with
/// `r₁ ≤ rmax` and `r₂ ≤ rmax`.
pub fn lemma41_sweep(rmax: u32) -> LemmaSweep {
    let all: Vec<Partition> = (0..=rmax)
        .flat_map(|r| partitions_of(r, None, None))
        .collect();
    let mut sweep = LemmaSweep {
        rmax,
        cases: 0,
        failures: Vec::new(),
    };
    for c1 in &all {
        for c2 in &all {
            sweep.cases += 1;
            if !lemma41_check(c1, c2).holds() {
                sweep.failures.push((c1.clone(), c2.clone()));
            }
        }
    }
    sweep
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub m: u32,
    pub r1: u32,
    pub r2: u32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub qmax: u32,
    pub equal: bool,
    pub checked_coefficients: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    pub wall_time_ms: u128,
}

/// Compares two series of the same truncation over every coefficient.
pub fn compare_series(qmax: u32, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> IdentityReport {
    let start = Instant::now();
    let first = lhs
        .first_difference(rhs, qmax)
        .expect("both sides share the truncation");
    let mut keys: Vec<Degree> = lhs.terms().chain(rhs.terms()).map(|(d, _)| d).collect();
    keys.sort_unstable();
    keys.dedup();
    IdentityReport {
        qmax,
        equal: first.is_none(),
        checked_coefficients: keys.len(),
        first_discrepancy: first.map(|d| Discrepancy {
            m: d.m,
            r1: d.r1,
            r2: d.r2,
            lhs: lhs.coeff(d).to_string(),
            rhs: rhs.coeff(d).to_string(),
        }),
        wall_time_ms: start.elapsed().as_millis(),
    }
}

fn verify_with(qmax: u32, fermionic: impl FnOnce() -> TruncatedSeries) -> IdentityReport {
    let start = Instant::now();
    let product = ch_wn_product(qmax);
    let sum = fermionic();
    let mut report = compare_series(qmax, &product, &sum);
    report.wall_time_ms = start.elapsed().as_millis();
    report
}

/// Checks the product side against the fermionic side at every coefficient
/// of `q`-degree `≤ qmax`.
pub fn verify_rr_identity(qmax: u32) -> IdentityReport {
    verify_with(qmax, || ch_wn_fermionic(qmax))
}

/// Same check against a deliberately perturbed fermionic side.
pub fn verify_rr_identity_perturbed(
    qmax: u32,
    perturbation: CrossTermPerturbation,
) -> IdentityReport {
    verify_with(qmax, || ch_wn_fermionic_perturbed(qmax, perturbation))
}

/// Coefficient helper used by reports and examples.
pub fn coefficient(s: &TruncatedSeries, m: u32, r1: u32, r2: u32) -> BigInt {
    s.coeff(Degree::new(m, r1, r2))
}
