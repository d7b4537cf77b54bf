//! Integer partitions and conjugation.
//!
//! A [`Partition`] always stores its parts weakly decreasing with no zeros.
//! Charge-types and dual-charge-types of quasi-particle monomials are both
//! carried by this type; callers that need a fixed-length, zero-padded view
//! use [`Partition::padded`] or [`Partition::part`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is weakly decreasing; trailing zeros are
    /// stripped, any other zero is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary multiset of parts into canonical order, dropping
    /// zeros.
    pub fn from_multiset(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// The `i`-th part, 0-based, with an implicit infinite tail of zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts zero-padded to `len`. Never truncates.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Part `j` of the conjugate counts the parts of `self` that are `≥ j`.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest() as usize);
        for j in 1..=self.largest() {
            out.push(self.0.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition(out)
    }

    /// Multiplicity of each part value `1..=largest`, i.e. the successive
    /// differences of the conjugate.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.largest() as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n` with every part at most `max_part` and at most
/// `max_len` parts (`None` means unbounded), in lexicographically
/// descending order.
pub fn partitions_of(n: u32, max_part: Option<u32>, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let cap = max_part.unwrap_or(n).min(n);
    fill(n, cap, max_len.unwrap_or(usize::MAX), &mut stack, &mut out);
    out
}

fn fill(rest: u32, cap: u32, slots: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        // the remaining slots cannot absorb more than p each
        if (p as u64).saturating_mul(slots as u64) < rest as u64 {
            break;
        }
        stack.push(p);
        fill(rest - p, p, slots - 1, stack, out);
        stack.pop();
    }
}

/// Number of partitions of each `j ≤ n` into at most `max_len` parts,
/// by the standard recurrence on the largest part of the conjugate.
pub fn count_partitions_at_most(n: u32, max_len: usize) -> Vec<u128> {
    let n = n as usize;
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for j in 1..=max_len.min(n) {
        for i in j..=n {
            c[i] += c[i - j];
        }
    }
    c
}
