//! Ground truth from the PBW basis of `U(L(n₊)_{<0})`.
//!
//! A PBW monomial is a multiset of pairs `(root, mode)` with mode `≤ −1`.
//! Graded by `(Σ|mode|, r₁, r₂)` this is a product, over the four positive
//! roots, of independent partition counts: picking `j` factors of one root
//! with total `|mode|` equal to `w` is a partition of `w` into exactly `j`
//! parts. The table is built one root at a time from that count; it shares
//! no code with [`crate::series`].

use std::collections::BTreeMap;

use crate::qp::GradedDimTable;
use crate::series::Degree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub name: &'static str,
    pub r1: u32,
    pub r2: u32,
}

/// `α₁`, `α₂`, `α₁ + α₂` and `θ = α₁ + 2α₂`.
pub const POSITIVE_ROOTS: [PositiveRoot; 4] = [
    PositiveRoot {
        name: "alpha1",
        r1: 1,
        r2: 0,
    },
    PositiveRoot {
        name: "alpha2",
        r1: 0,
        r2: 1,
    },
    PositiveRoot {
        name: "alpha1+alpha2",
        r1: 1,
        r2: 1,
    },
    PositiveRoot {
        name: "alpha1+2alpha2",
        r1: 1,
        r2: 2,
    },
];

/// `exact[w][j]` = number of partitions of `w` into exactly `j` parts,
/// via `p(w, j) = p(w − 1, j − 1) + p(w − j, j)`.
fn exact_part_counts(qmax: usize) -> Vec<Vec<u64>> {
    let mut p = vec![vec![0u64; qmax + 1]; qmax + 1];
    p[0][0] = 1;
    for w in 1..=qmax {
        for j in 1..=w {
            p[w][j] = p[w - 1][j - 1] + if w >= j { p[w - j][j] } else { 0 };
        }
    }
    p
}

/// Graded dimensions of the PBW basis up to weight `qmax`.
pub fn pbw_graded_dims(qmax: u32) -> GradedDimTable {
    let n = qmax as usize;
    let exact = exact_part_counts(n);
    let mut table: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
    table.insert((0, 0, 0), 1);
    for root in POSITIVE_ROOTS {
        let mut next: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
        for (&(m, r1, r2), &count) in &table {
            for (w, row) in exact.iter().enumerate().take(n - m as usize + 1) {
                for (j, &ways) in row.iter().enumerate().take(w + 1) {
                    if ways == 0 {
                        continue;
                    }
                    let j = j as u32;
                    let key = (m + w as u32, r1 + j * root.r1, r2 + j * root.r2);
                    *next.entry(key).or_insert(0) += count * ways;
                }
            }
        }
        table = next;
    }
    table
        .into_iter()
        .map(|((m, r1, r2), c)| (Degree::new(m, r1, r2), c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_weights() {
        let t = pbw_graded_dims(2);
        assert_eq!(t.get(0, 0, 0), 1);
        for r in POSITIVE_ROOTS {
            assert_eq!(t.get(1, r.r1, r.r2), 1);
        }
        assert_eq!(t.weight_total(1), 4);
        assert_eq!(t.get(2, 0, 1), 1);
        // x_{α₂}(−1)² only
        assert_eq!(t.get(2, 0, 2), 1);
        // x_{α₁}(−1) x_{α₂}(−1) and x_{α₁+α₂}(−2)
        assert_eq!(t.get(2, 1, 1), 2);
    }

    #[test]
    fn exact_counts() {
        let p = exact_part_counts(6);
        assert_eq!(p[6][2], 3); // 5+1, 4+2, 3+3
        assert_eq!(p[6][3], 3); // 4+1+1, 3+2+1, 2+2+2
        assert_eq!(p[0][0], 1);
        assert_eq!(p[4][0], 0);
    }
}
