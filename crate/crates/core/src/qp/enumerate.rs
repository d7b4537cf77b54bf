//! Exhaustive enumeration of basis monomials up to a weight bound.
//!
//! For fixed charge-types the color-1 bounds depend only on color-1
//! charges and the color-2 bounds only on charges of both colors, so the
//! energy choices of the two colors are independent apart from the total
//! weight. Per position the single bound gives a static lower energy
//! `low[p]`; the equal-charge gap raises later lower bounds further, which
//! the depth-first search applies as it goes.
//!
//! Completeness of the outer loops: the minimal weight of a pair of
//! charge-types is the quadratic form
//! `Σ (r₁⁽ˢ⁾)² + Σ (r₂⁽ᵗ⁾)² − Σ r₁⁽ˢ⁾(r₂⁽²ˢ⁻¹⁾ + r₂⁽²ˢ⁾)` in the dual
//! charges. Grouped by `s`, each block `a² + b² + c² − a(b + c)` is at least
//! `a` and at least `(b + c)/2` on nonnegative integers, so a monomial of
//! color-type `(r₂, r₁)` has weight at least `r₁` and at least `r₂/2`.
//! Hence `r₁ ≤ qmax` and `r₂ ≤ 2·qmax` cover every monomial of weight
//! `≤ qmax`.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Color, QPMonomial, QuasiParticle};
use crate::partitions::{partitions_of, Partition};
use crate::series::{Degree, TruncatedSeries};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// Generalized Verma module `N(kΛ₀)`; the basis does not depend on `k`.
    N,
    /// Standard module `L(kΛ₀)` at level `k ≥ 1`.
    L(u32),
}

impl BasisKind {
    fn color1_cap(self) -> Option<u32> {
        match self {
            BasisKind::N => None,
            BasisKind::L(k) => Some(k),
        }
    }

    fn color2_cap(self) -> Option<u32> {
        match self {
            BasisKind::N => None,
            BasisKind::L(k) => Some(2 * k),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::N => f.write_str("N"),
            BasisKind::L(k) => write!(f, "L({k})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub m: u32,
    pub r1: u32,
    pub r2: u32,
    pub dim: u64,
}

/// Graded dimensions indexed by `(weight, r₁, r₂)`; absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDimTable {
    dims: BTreeMap<Degree, u64>,
}

impl GradedDimTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: u32, r1: u32, r2: u32) -> u64 {
        self.dims.get(&Degree::new(m, r1, r2)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, degree: Degree, count: u64) {
        if count > 0 {
            *self.dims.entry(degree).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &GradedDimTable) {
        for (d, c) in &other.dims {
            self.add(*d, *c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Degree, u64)> + '_ {
        self.dims.iter().map(|(d, c)| (*d, *c))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Sum of the dimensions of all graded pieces of weight `m`.
    pub fn weight_total(&self, m: u32) -> u64 {
        self.dims
            .iter()
            .filter(|(d, _)| d.m == m)
            .map(|(_, c)| c)
            .sum()
    }

    /// `Σ dim · q^m y₁^r1 y₂^r2`, truncated at `qmax`.
    pub fn to_series(&self, qmax: u32) -> TruncatedSeries {
        TruncatedSeries::from_terms(qmax, self.iter())
    }

    pub fn to_records(&self) -> Vec<DimRecord> {
        self.iter()
            .map(|(d, dim)| DimRecord {
                m: d.m,
                r1: d.r1,
                r2: d.r2,
                dim,
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_records())?)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        for r in self.to_records() {
            wtr.serialize(r)?;
        }
        wtr.flush()?;
        Ok(())
    }
}

impl FromIterator<(Degree, u64)> for GradedDimTable {
    fn from_iter<I: IntoIterator<Item = (Degree, u64)>>(iter: I) -> Self {
        let mut t = GradedDimTable::new();
        for (d, c) in iter {
            t.add(d, c);
        }
        t
    }
}

impl fmt::Display for GradedDimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4} {:>4} {:>4} {:>12}", "m", "r1", "r2", "dim")?;
        for (d, c) in self.iter() {
            writeln!(f, "{:>4} {:>4} {:>4} {:>12}", d.m, d.r1, d.r2, c)?;
        }
        Ok(())
    }
}

/// Static lower energy per position for one color.
fn lower_energies(charges: &[u32], interaction: Option<&[u32]>) -> Vec<i64> {
    charges
        .iter()
        .enumerate()
        .map(|(p, &n)| {
            let same: i64 = charges[..p]
                .iter()
                .map(|&n2| 2 * i64::from(n.min(n2)))
                .sum();
            let cross: i64 = interaction
                .map(|c1| c1.iter().map(|&n1| i64::from((2 * n1).min(n))).sum())
                .unwrap_or(0);
            i64::from(n) + same - cross
        })
        .collect()
}

/// Calls `f` with every admissible energy vector of total at most `budget`.
fn visit_energies(charges: &[u32], low: &[i64], budget: i64, f: &mut dyn FnMut(&[i64], i64)) {
    let mut suffix = vec![0i64; low.len() + 1];
    for p in (0..low.len()).rev() {
        suffix[p] = suffix[p + 1] + low[p];
    }
    if suffix[0] > budget {
        return;
    }
    let mut energies = Vec::with_capacity(low.len());
    descend(charges, low, &suffix, budget, 0, &mut energies, f);
}

fn descend(
    charges: &[u32],
    low: &[i64],
    suffix: &[i64],
    budget: i64,
    used: i64,
    energies: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64], i64),
) {
    let p = energies.len();
    if p == charges.len() {
        f(energies, used);
        return;
    }
    let mut from = low[p];
    if p > 0 && charges[p - 1] == charges[p] {
        from = from.max(energies[p - 1] + 2 * i64::from(charges[p]));
    }
    let to = budget - used - suffix[p + 1];
    for e in from..=to {
        energies.push(e);
        descend(charges, low, suffix, budget, used + e, energies, f);
        energies.pop();
    }
}

struct ChargeShape {
    charges: Vec<u32>,
    low: Vec<i64>,
    min_weight: i64,
}

impl ChargeShape {
    fn new(charges: &Partition, interaction: Option<&[u32]>) -> Self {
        let charges = charges.parts().to_vec();
        let low = lower_energies(&charges, interaction);
        let min_weight = low.iter().sum();
        ChargeShape {
            charges,
            low,
            min_weight,
        }
    }

    fn histogram(&self, budget: i64) -> BTreeMap<i64, u64> {
        let mut h = BTreeMap::new();
        visit_energies(&self.charges, &self.low, budget, &mut |_, w| {
            *h.entry(w).or_insert(0) += 1
        });
        h
    }
}

fn color1_shapes(kind: BasisKind, qmax: u32) -> Vec<(u32, Partition)> {
    (0..=qmax)
        .flat_map(|r1| {
            partitions_of(r1, kind.color1_cap(), None)
                .into_iter()
                .map(move |p| (r1, p))
        })
        .collect()
}

fn count_for_color1(kind: BasisKind, qmax: u32, r1: u32, c1: &Partition) -> GradedDimTable {
    let mut table = GradedDimTable::new();
    let shape1 = ChargeShape::new(c1, None);
    let q = i64::from(qmax);
    for r2 in 0..=2 * qmax {
        for c2 in partitions_of(r2, kind.color2_cap(), None) {
            let shape2 = ChargeShape::new(&c2, Some(c1.parts()));
            if shape1.min_weight + shape2.min_weight > q {
                continue;
            }
            let h1 = shape1.histogram(q - shape2.min_weight);
            let h2 = shape2.histogram(q - shape1.min_weight);
            for (&w1, &n1) in &h1 {
                for (&w2, &n2) in h2.iter().take_while(|(&w2, _)| w1 + w2 <= q) {
                    let m = u32::try_from(w1 + w2).expect("basis weights are nonnegative");
                    table.add(Degree::new(m, r1, r2), n1 * n2);
                }
            }
        }
    }
    table
}

/// Graded dimensions of the span of all basis monomials of weight `≤ qmax`.
///
/// Work is split over color-1 charge-types on the current rayon pool; the
/// merged table does not depend on the number of threads.
pub fn enumerate_basis(kind: BasisKind, qmax: u32) -> GradedDimTable {
    color1_shapes(kind, qmax)
        .par_iter()
        .map(|(r1, c1)| count_for_color1(kind, qmax, *r1, c1))
        .reduce(GradedDimTable::new, |mut a, b| {
            a.merge(&b);
            a
        })
}

fn build(charges: &[u32], energies: &[i64], color: Color) -> Vec<QuasiParticle> {
    charges
        .iter()
        .zip(energies)
        .map(|(&charge, &energy)| QuasiParticle {
            color,
            charge,
            energy,
        })
        .collect()
}

/// Visits every basis monomial of weight `≤ qmax`, in a fixed order.
pub fn for_each_basis_monomial(kind: BasisKind, qmax: u32, mut f: impl FnMut(QPMonomial)) {
    let q = i64::from(qmax);
    for (_, c1) in color1_shapes(kind, qmax) {
        let shape1 = ChargeShape::new(&c1, None);
        for r2 in 0..=2 * qmax {
            for c2 in partitions_of(r2, kind.color2_cap(), None) {
                let shape2 = ChargeShape::new(&c2, Some(c1.parts()));
                if shape1.min_weight + shape2.min_weight > q {
                    continue;
                }
                visit_energies(
                    &shape1.charges,
                    &shape1.low,
                    q - shape2.min_weight,
                    &mut |e1, w1| {
                        visit_energies(&shape2.charges, &shape2.low, q - w1, &mut |e2, _| {
                            f(QPMonomial::from_arranged(
                                build(&shape2.charges, e2, Color::Two),
                                build(&shape1.charges, e1, Color::One),
                            ));
                        });
                    },
                );
            }
        }
    }
}

/// All basis monomials of weight `≤ qmax`, sorted by weight, then
/// color-type `(r₁, r₂)`, then the linear order on monomials.
pub fn basis_monomials(kind: BasisKind, qmax: u32) -> Vec<QPMonomial> {
    let mut out = Vec::new();
    for_each_basis_monomial(kind, qmax, |b| out.push(b));
    out.sort_by(|a, b| {
        let (a2, a1) = a.color_type();
        let (b2, b1) = b.color_type();
        (a.weight(), a1, a2)
            .cmp(&(b.weight(), b1, b2))
            .then_with(|| super::compare(a, b).expect("same color-type"))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qp::{check_conditions_l, check_conditions_n};

    #[test]
    fn n_weight_one() {
        let t = enumerate_basis(BasisKind::N, 1);
        let expect: GradedDimTable = [
            (Degree::new(0, 0, 0), 1),
            (Degree::new(1, 1, 0), 1),
            (Degree::new(1, 0, 1), 1),
            (Degree::new(1, 1, 1), 1),
            (Degree::new(1, 1, 2), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(t, expect);
    }

    #[test]
    fn weight_one_monomials() {
        let dump: Vec<String> = basis_monomials(BasisKind::N, 1)
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(
            dump,
            vec![
                "color2: [] | color1: []",
                "color2: [(1,-1)] | color1: []",
                "color2: [] | color1: [(1,-1)]",
                "color2: [(1,0)] | color1: [(1,-1)]",
                "color2: [(2,0)] | color1: [(1,-1)]",
            ]
        );
    }

    #[test]
    fn level_one_weight_two() {
        let t = enumerate_basis(BasisKind::L(1), 2);
        assert_eq!(t.get(2, 0, 2), 1);
        assert_eq!(t.get(2, 2, 0), 0);
        assert_eq!(t.get(0, 0, 0), 1);
    }

    #[test]
    fn empty_monomial_is_the_only_weight_zero_element() {
        assert_eq!(
            basis_monomials(BasisKind::L(1), 0),
            vec![QPMonomial::empty()]
        );
    }

    #[test]
    fn enumerated_monomials_pass_their_checks() {
        for kind in [BasisKind::N, BasisKind::L(1), BasisKind::L(2)] {
            let mut n = 0;
            for_each_basis_monomial(kind, 6, |b| {
                let report = match kind {
                    BasisKind::N => check_conditions_n(&b),
                    BasisKind::L(k) => check_conditions_l(&b, k),
                };
                assert!(
                    report.passed(),
                    "{kind}: {b} fails {:?}",
                    report.failures().collect::<Vec<_>>()
                );
                assert!(b.weight() <= 6);
                n += 1;
            });
            assert_eq!(
                n as u64,
                enumerate_basis(kind, 6).iter().map(|(_, c)| c).sum::<u64>()
            );
        }
    }

    #[test]
    fn thread_count_does_not_change_the_table() {
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let four = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = one.install(|| enumerate_basis(BasisKind::N, 7));
        let b = four.install(|| enumerate_basis(BasisKind::N, 7));
        assert_eq!(a, b);
    }

    #[test]
    fn csv_and_text_layouts() {
        let t = enumerate_basis(BasisKind::N, 1);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let csv = String::from_utf8(buf).unwrap();
        assert!(csv.starts_with("m,r1,r2,dim\n0,0,0,1\n1,0,1,1\n"));
        assert_eq!(t.to_string().lines().count(), 6);
    }
}
