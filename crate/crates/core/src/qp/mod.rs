//! Quasi-particle monomials for `B₂⁽¹⁾`.
//!
//! A quasi-particle `x_{nαᵢ}(m)` has a color `i ∈ {1, 2}`, a charge `n ≥ 1`
//! and a mode `m`; its energy is `−m`. A monomial is a product
//! `b = b(α₂) b(α₁)` of a color-2 part and a color-1 part.
//!
//! Within one color the quasi-particles are indexed by positions
//! `p = 1, 2, …` counted from the right of the written product. Position 1
//! carries the largest charge, charges weakly decrease with `p`, and within
//! a run of equal charges the energies weakly increase with `p`. Every
//! constructor puts its input into this arrangement, and the storage of
//! [`QPMonomial`] is indexed by `p − 1`.
//!
//! Energies are signed. The color-interaction term of the color-2 bound
//! lets a color-2 quasi-particle sit at mode `0` or above when enough
//! color-1 charge is present, e.g. `x_{α₂}(0) x_{α₁}(−1)` has weight 1.

mod conditions;
mod enumerate;
mod order;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partitions::Partition;
use crate::{Error, Result};

pub use conditions::{
    check_conditions_l, check_conditions_n, ConditionCheck, DiffConditionReport, Rule,
};
pub use enumerate::{
    basis_monomials, enumerate_basis, for_each_basis_monomial, BasisKind, DimRecord, GradedDimTable,
};
pub use order::compare;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn index(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }
}

impl TryFrom<u8> for Color {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Color::One),
            2 => Ok(Color::Two),
            _ => Err(Error::InvalidQuasiParticle(format!(
                "color {v} is not 1 or 2"
            ))),
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.index()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuasiParticle {
    pub color: Color,
    pub charge: u32,
    pub energy: i64,
}

impl QuasiParticle {
    pub fn new(color: Color, charge: u32, energy: i64) -> Result<Self> {
        if charge == 0 {
            return Err(Error::InvalidQuasiParticle(
                "charge must be at least 1".into(),
            ));
        }
        Ok(QuasiParticle {
            color,
            charge,
            energy,
        })
    }

    /// `x_{nαᵢ}(m)` from its mode `m = −energy`.
    pub fn with_mode(color: Color, charge: u32, mode: i64) -> Result<Self> {
        Self::new(color, charge, -mode)
    }

    pub fn mode(&self) -> i64 {
        -self.energy
    }
}

/// JSON form of a quasi-particle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiParticleRecord {
    pub color: Color,
    pub charge: u32,
    pub mode: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPMonomial {
    color2: Vec<QuasiParticle>,
    color1: Vec<QuasiParticle>,
}

fn arrange(color: Color, mut qps: Vec<QuasiParticle>) -> Result<Vec<QuasiParticle>> {
    if let Some(bad) = qps.iter().find(|qp| qp.color != color) {
        return Err(Error::InvalidQuasiParticle(format!(
            "color-{} quasi-particle in the color-{} part",
            bad.color, color
        )));
    }
    if qps.iter().any(|qp| qp.charge == 0) {
        return Err(Error::InvalidQuasiParticle(
            "charge must be at least 1".into(),
        ));
    }
    qps.sort_by(|a, b| b.charge.cmp(&a.charge).then(a.energy.cmp(&b.energy)));
    Ok(qps)
}

impl QPMonomial {
    /// The empty monomial, whose vector is the highest weight vector.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Quasi-particles may be given in any order.
    pub fn new(color2: Vec<QuasiParticle>, color1: Vec<QuasiParticle>) -> Result<Self> {
        Ok(QPMonomial {
            color2: arrange(Color::Two, color2)?,
            color1: arrange(Color::One, color1)?,
        })
    }

    /// Builds a monomial from `(charge, mode)` pairs per color.
    pub fn from_modes(color2: &[(u32, i64)], color1: &[(u32, i64)]) -> Result<Self> {
        let make = |color, pairs: &[(u32, i64)]| {
            pairs
                .iter()
                .map(|&(n, m)| QuasiParticle::with_mode(color, n, m))
                .collect::<Result<Vec<_>>>()
        };
        Self::new(make(Color::Two, color2)?, make(Color::One, color1)?)
    }

    /// Construction from already-arranged position lists.
    pub(crate) fn from_arranged(color2: Vec<QuasiParticle>, color1: Vec<QuasiParticle>) -> Self {
        QPMonomial { color2, color1 }
    }

    /// Quasi-particles of one color by position: index `p − 1` holds
    /// position `p`.
    pub fn particles(&self, color: Color) -> &[QuasiParticle] {
        match color {
            Color::One => &self.color1,
            Color::Two => &self.color2,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.color1.is_empty() && self.color2.is_empty()
    }

    /// Charges of one color by position (`n_{1,i} ≥ n_{2,i} ≥ …`).
    pub fn charge_type(&self, color: Color) -> Partition {
        Partition::new(self.particles(color).iter().map(|qp| qp.charge).collect())
            .expect("arranged charges are weakly decreasing")
    }

    /// `r^{(s)}_i` = number of color-`i` quasi-particles of charge `≥ s`.
    pub fn dual_charge_type(&self, color: Color) -> Partition {
        self.charge_type(color).conjugate()
    }

    /// `(r₂, r₁)`, the per-color charge sums.
    pub fn color_type(&self) -> (u32, u32) {
        let sum = |v: &[QuasiParticle]| v.iter().map(|qp| qp.charge).sum();
        (sum(&self.color2), sum(&self.color1))
    }

    /// Total energy `−Σ m`.
    pub fn weight(&self) -> i64 {
        self.color2
            .iter()
            .chain(&self.color1)
            .map(|qp| qp.energy)
            .sum()
    }

    /// Records in written order: color 2 then color 1, each from the
    /// highest position down to position 1.
    pub fn to_records(&self) -> Vec<QuasiParticleRecord> {
        self.color2
            .iter()
            .rev()
            .chain(self.color1.iter().rev())
            .map(|qp| QuasiParticleRecord {
                color: qp.color,
                charge: qp.charge,
                mode: qp.mode(),
            })
            .collect()
    }

    pub fn from_records(records: &[QuasiParticleRecord]) -> Result<Self> {
        let (two, one): (Vec<_>, Vec<_>) = records
            .iter()
            .map(|r| QuasiParticle::with_mode(r.color, r.charge, r.mode))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .partition(|qp| qp.color == Color::Two);
        Self::new(two, one)
    }
}

fn write_part(f: &mut fmt::Formatter<'_>, qps: &[QuasiParticle]) -> fmt::Result {
    f.write_str("[")?;
    for (i, qp) in qps.iter().rev().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "({},{})", qp.charge, qp.mode())?;
    }
    f.write_str("]")
}

/// The one-line dump format `color2: [(n,m),...] | color1: [(n,m),...]`,
/// each list in written order (position 1 last).
impl fmt::Display for QPMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("color2: ")?;
        write_part(f, &self.color2)?;
        f.write_str(" | color1: ")?;
        write_part(f, &self.color1)
    }
}

fn parse_part(s: &str, label: &str) -> Result<Vec<(u32, i64)>> {
    let bad = || Error::Parse(format!("expected `{label}: [(n,m),...]`, got {s:?}"));
    let body = s
        .trim()
        .strip_prefix(label)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .map(str::trim)
        .and_then(|r| r.strip_prefix('['))
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for chunk in body.split(')') {
        let chunk = chunk.trim().trim_start_matches(',').trim();
        if chunk.is_empty() {
            continue;
        }
        let inner = chunk.strip_prefix('(').ok_or_else(bad)?;
        let (n, m) = inner.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let m = m.trim().parse().map_err(|_| bad())?;
        out.push((n, m));
    }
    Ok(out)
}

impl FromStr for QPMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (two, one) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing `|` separator in {s:?}")))?;
        QPMonomial::from_modes(&parse_part(two, "color2")?, &parse_part(one, "color1")?)
    }
}
