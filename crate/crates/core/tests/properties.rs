use num_bigint::BigInt;
use proptest::prelude::*;
use qpbasis::partitions::{partitions_of, Partition};
use qpbasis::{Degree, TruncatedSeries};

const DIM: usize = 4;

/// Dense reference model: `a[m][r1][r2]` with `r1, r2 < DIM` tracked
/// exactly and everything heavier discarded. Only inputs whose products
/// stay inside that box are compared.
#[derive(Clone, Debug, PartialEq)]
struct Dense {
    qmax: usize,
    a: Vec<[[i64; DIM]; DIM]>,
}

impl Dense {
    fn from_terms(qmax: usize, terms: &[((u32, u32, u32), i64)]) -> Self {
        let mut a = vec![[[0i64; DIM]; DIM]; qmax + 1];
        for &((m, r1, r2), c) in terms {
            if (m as usize) <= qmax {
                a[m as usize][r1 as usize][r2 as usize] += c;
            }
        }
        Dense { qmax, a }
    }

    fn mul(&self, other: &Dense) -> Dense {
        let mut out = vec![[[0i64; DIM]; DIM]; self.qmax + 1];
        for m in 0..=self.qmax {
            for n in 0..=self.qmax - m {
                for i in 0..DIM {
                    for j in 0..DIM {
                        for k in 0..DIM - i {
                            for l in 0..DIM - j {
                                out[m + n][i + k][j + l] += self.a[m][i][j] * other.a[n][k][l];
                            }
                        }
                    }
                }
            }
        }
        Dense {
            qmax: self.qmax,
            a: out,
        }
    }

    fn to_series(&self) -> TruncatedSeries {
        let mut terms = Vec::new();
        for (m, block) in self.a.iter().enumerate() {
            for (i, row) in block.iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    terms.push((Degree::new(m as u32, i as u32, j as u32), c));
                }
            }
        }
        TruncatedSeries::from_terms(self.qmax as u32, terms)
    }
}

// y-degrees stay below 2 so that any product fits in the dense box
fn terms() -> impl Strategy<Value = Vec<((u32, u32, u32), i64)>> {
    prop::collection::vec(((0u32..=8, 0u32..2, 0u32..2), -20i64..=20), 0..12)
}

fn series(qmax: u32, t: &[((u32, u32, u32), i64)]) -> TruncatedSeries {
    TruncatedSeries::from_terms(
        qmax,
        t.iter()
            .map(|&((m, r1, r2), c)| (Degree::new(m, r1, r2), c)),
    )
}

proptest! {
    #[test]
    fn ring_operations_match_dense_model(qmax in 0u32..=8, a in terms(), b in terms()) {
        let (sa, sb) = (series(qmax, &a), series(qmax, &b));
        let (da, db) = (Dense::from_terms(qmax as usize, &a), Dense::from_terms(qmax as usize, &b));
        prop_assert_eq!(sa.checked_mul(&sb).unwrap(), da.mul(&db).to_series());
        let mut sum = a.clone();
        sum.extend(b.iter().cloned());
        prop_assert_eq!(&sa + &sb, Dense::from_terms(qmax as usize, &sum).to_series());
        prop_assert!((&sa - &sa).is_zero());
    }

    #[test]
    fn ring_laws(qmax in 0u32..=8, a in terms(), b in terms(), c in terms()) {
        let (a, b, c) = (series(qmax, &a), series(qmax, &b), series(qmax, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &TruncatedSeries::one(qmax), a.clone());
        prop_assert_eq!(&a + &(-&a), TruncatedSeries::zero(qmax));
    }

    #[test]
    fn geometric_factor_inverts_binomial(
        qmax in 0u32..=8, a in terms(), m in 1u32..=4, a1 in 0u32..=2, a2 in 0u32..=2,
    ) {
        let s = series(qmax, &a);
        let binomial = TruncatedSeries::from_terms(
            qmax,
            [(Degree::ZERO, BigInt::from(1)), (Degree::new(m, a1, a2), BigInt::from(-1))],
        );
        let g = s.mul_geometric(m, a1, a2).unwrap();
        prop_assert_eq!(g.checked_mul(&binomial).unwrap(), s);
    }

    #[test]
    fn canonical_form(qmax in 0u32..=8, a in terms()) {
        let s = series(qmax, &a);
        prop_assert!(s.terms().all(|(d, c)| d.m <= qmax && *c != BigInt::from(0)));
        let degrees: Vec<_> = s.terms().map(|(d, _)| d).collect();
        prop_assert!(degrees.windows(2).all(|w| w[0] < w[1]));
        let mut reversed = a.clone();
        reversed.reverse();
        prop_assert_eq!(series(qmax, &reversed), s.clone());
        prop_assert_eq!(TruncatedSeries::from_records(qmax, &s.to_records()).unwrap(), s);
    }

    #[test]
    fn inverse_pochhammer_counts_partitions(r in 0u32..=10, j in 0u32..=30) {
        let s = TruncatedSeries::one(30).mul_inv_qpochhammer(r);
        let count = partitions_of(j, None, Some(r as usize)).len();
        prop_assert_eq!(s.coeff(Degree::new(j, 0, 0)), BigInt::from(count));
    }

    #[test]
    fn conjugate_is_an_involution(parts in prop::collection::vec(1u32..=12, 0..12)) {
        let p = Partition::from_multiset(parts);
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.len() as u32, p.largest());
        prop_assert_eq!(c.conjugate(), p);
    }
}
