//! Truncated formal power series in `q`, `y₁`, `y₂` with exact integer
//! coefficients.
//!
//! A [`TruncatedSeries`] drops every term whose `q`-exponent exceeds its
//! truncation `qmax`. The `y` exponents are not truncated; every series the
//! crate builds has finitely many terms below any fixed `q`-degree.
//!
//! Storage is sparse and canonical: no zero coefficient is ever kept, so two
//! series are equal exactly when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exponent triple of a monomial `q^m y₁^r1 y₂^r2`.
///
/// Ordered lexicographically by `(m, r1, r2)`, which is also the order of
/// every serialized or printed series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Degree {
    pub m: u32,
    pub r1: u32,
    pub r2: u32,
}

impl Degree {
    pub const ZERO: Degree = Degree { m: 0, r1: 0, r2: 0 };

    pub const fn new(m: u32, r1: u32, r2: u32) -> Self {
        Degree { m, r1, r2 }
    }

    fn shifted(self, m: u32, r1: u32, r2: u32) -> Self {
        Degree::new(self.m + m, self.r1 + r1, self.r2 + r2)
    }
}

impl From<(u32, u32, u32)> for Degree {
    fn from((m, r1, r2): (u32, u32, u32)) -> Self {
        Degree::new(m, r1, r2)
    }
}

/// One serialized term. Coefficients travel as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub m: u32,
    pub r1: u32,
    pub r2: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    qmax: u32,
    coeffs: BTreeMap<Degree, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(qmax: u32) -> Self {
        TruncatedSeries {
            qmax,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative identity.
    pub fn one(qmax: u32) -> Self {
        Self::monomial(qmax, Degree::ZERO, BigInt::one())
    }

    /// `coeff · q^m y₁^r1 y₂^r2`, or the zero series if `m > qmax`.
    pub fn monomial(qmax: u32, degree: Degree, coeff: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(qmax);
        s.add_term(degree, coeff.into());
        s
    }

    /// Builds a series from arbitrary terms; repeated degrees are summed and
    /// terms above the truncation are dropped.
    pub fn from_terms<I, C>(qmax: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Degree, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(qmax);
        for (d, c) in terms {
            s.add_term(d, c.into());
        }
        s
    }

    pub fn qmax(&self) -> u32 {
        self.qmax
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `degree`; zero when absent.
    pub fn coeff(&self, degree: Degree) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(m, r1, r2)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Degree, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Same terms, re-truncated at a smaller `qmax`.
    pub fn truncate(&self, qmax: u32) -> Self {
        TruncatedSeries {
            qmax: qmax.min(self.qmax),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(d, _)| d.m <= qmax)
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.qmax != other.qmax {
            return Err(Error::TruncationMismatch {
                left: self.qmax,
                right: other.qmax,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, degree: Degree, coeff: BigInt) {
        if degree.m > self.qmax || coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(degree) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// In-place `self += other`.
    pub fn accumulate(&mut self, other: &Self) -> Result<()> {
        self.check_same(other)?;
        for (d, c) in &other.coeffs {
            self.add_term(*d, c.clone());
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.accumulate(other)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        TruncatedSeries {
            qmax: self.qmax,
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }

    /// Cauchy product, discarding every term of `q`-degree above `qmax`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.qmax);
        for (da, ca) in &self.coeffs {
            let room = self.qmax - da.m;
            // keys are sorted by m first, so everything past `room` is dropped
            for (db, cb) in other.coeffs.iter().take_while(|(db, _)| db.m <= room) {
                out.add_term(da.shifted(db.m, db.r1, db.r2), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `1 / (1 − q^m y₁^a1 y₂^a2)`.
    pub fn mul_geometric(&self, m: u32, a1: u32, a2: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::NonConvergentFactor);
        }
        let mut out = Self::zero(self.qmax);
        for (d, c) in &self.coeffs {
            let mut t = 0;
            while d.m + t * m <= self.qmax {
                out.add_term(d.shifted(t * m, t * a1, t * a2), c.clone());
                t += 1;
            }
        }
        Ok(out)
    }

    /// Multiplies by `1 / (q)_r = ∏_{j=1..r} 1 / (1 − q^j)`.
    pub fn mul_inv_qpochhammer(&self, r: u32) -> Self {
        if r == 0 || self.is_zero() {
            return self.clone();
        }
        let n = self.qmax as usize + 1;
        let mut columns: BTreeMap<(u32, u32), Vec<BigInt>> = BTreeMap::new();
        for (d, c) in &self.coeffs {
            columns
                .entry((d.r1, d.r2))
                .or_insert_with(|| vec![BigInt::zero(); n])[d.m as usize] = c.clone();
        }
        // factors with j > qmax only contribute above the truncation
        let top = r.min(self.qmax) as usize;
        for col in columns.values_mut() {
            for j in 1..=top {
                for i in j..n {
                    let prev = col[i - j].clone();
                    col[i] += prev;
                }
            }
        }
        let mut out = Self::zero(self.qmax);
        for ((r1, r2), col) in columns {
            for (m, c) in col.into_iter().enumerate() {
                out.add_term(Degree::new(m as u32, r1, r2), c);
            }
        }
        out
    }

    /// Whether all coefficients with `q`-exponent at most `degree` agree.
    pub fn eq_upto(&self, other: &Self, degree: u32) -> Result<bool> {
        Ok(self.first_difference(other, degree)?.is_none())
    }

    /// The smallest degree (in `(m, r1, r2)` order) with `m ≤ degree` at which
    /// the two series differ.
    pub fn first_difference(&self, other: &Self, degree: u32) -> Result<Option<Degree>> {
        let limit = self.qmax.min(other.qmax);
        if degree > limit {
            return Err(Error::DegreeExceedsTruncation {
                degree,
                qmax: limit,
            });
        }
        let mut keys: Vec<Degree> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|d| d.m <= degree)
            .collect();
        keys.sort_unstable();
        keys.dedup();
        Ok(keys
            .into_iter()
            .find(|d| self.coeffs.get(d) != other.coeffs.get(d)))
    }

    pub fn to_records(&self) -> Vec<SeriesRecord> {
        self.coeffs
            .iter()
            .map(|(d, c)| SeriesRecord {
                m: d.m,
                r1: d.r1,
                r2: d.r2,
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(qmax: u32, records: &[SeriesRecord]) -> Result<Self> {
        let mut s = Self::zero(qmax);
        for r in records {
            let c: BigInt = r
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", r.coeff)))?;
            s.add_term(Degree::new(r.m, r.r1, r.r2), c);
        }
        Ok(s)
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

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

fn y_monomial(r1: u32, r2: u32) -> Option<String> {
    let var = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [var("y1", r1), var("y2", r2)]
        .into_iter()
        .flatten()
        .collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

fn q_power(m: u32) -> Option<String> {
    match m {
        0 => None,
        1 => Some("q".to_string()),
        _ => Some(format!("q^{m}")),
    }
}

/// Renders one signed term; the sign is returned separately so that the
/// caller can join with ` + ` / ` - `.
fn render_term(coeff: &BigInt, factors: &[Option<String>]) -> (bool, String) {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    let mut parts: Vec<String> = factors.iter().flatten().cloned().collect();
    if parts.is_empty() || !magnitude.is_one() {
        parts.insert(0, magnitude.to_string());
    }
    (negative, parts.join("*"))
}

fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// Terms are grouped by `q`-degree, e.g. `1 + q(y1 + y2 + y1*y2 + y1*y2^2)`;
/// within a group by total `y`-degree, higher `y1` power first.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut groups: BTreeMap<u32, Vec<(Degree, &BigInt)>> = BTreeMap::new();
        for (d, c) in &self.coeffs {
            groups.entry(d.m).or_default().push((*d, c));
        }
        for terms in groups.values_mut() {
            terms.sort_by_key(|(d, _)| (d.r1 + d.r2, std::cmp::Reverse(d.r1)));
        }
        let rendered = groups.into_iter().map(|(m, terms)| {
            if m == 0 || terms.len() == 1 {
                let mut it = terms
                    .into_iter()
                    .map(|(d, c)| render_term(c, &[q_power(d.m), y_monomial(d.r1, d.r2)]));
                if m == 0 {
                    (false, join_signed(it))
                } else {
                    it.next().expect("group is nonempty")
                }
            } else {
                let inner = join_signed(
                    terms
                        .into_iter()
                        .map(|(d, c)| render_term(c, &[y_monomial(d.r1, d.r2)])),
                );
                (false, format!("{}({inner})", q_power(m).expect("m > 0")))
            }
        });
        f.write_str(&join_signed(rendered))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Panics on mismatched truncations; use [`TruncatedSeries::checked_add`]
    /// to get an error instead.
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.checked_add(rhs)
            .expect("series truncations must match")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.checked_sub(rhs)
            .expect("series truncations must match")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.checked_mul(rhs)
            .expect("series truncations must match")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.negate()
    }
}
