//! Quasi-particle bases and graded characters of the principal subspaces
//! `W_{N(kΛ₀)}` and `W_{L(kΛ₀)}` for the affine Lie algebra of type `B₂⁽¹⁾`.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: exact truncated power series in `q`, `y₁`, `y₂` with
//!   arbitrary-precision integer coefficients;
//! - [`partitions`]: integer partitions, conjugation and enumeration;
//! - [`qp`]: quasi-particle monomials, the difference conditions that cut
//!   out the two bases, the linear order on monomials and exhaustive basis
//!   enumeration;
//! - [`characters`]: fermionic character sums, the Euler product character
//!   and the identity verifier;
//! - [`oracle`]: an independent PBW count used as ground truth;
//! - [`cli`]: the command-line front end behind the `qpbasis` binary.
//!
//! Every character path can be cross-checked against the others:
//!
//! ```
//! use qpbasis::{characters, oracle, qp::{self, BasisKind}};
//!
//! let qmax = 4;
//! let product = characters::ch_wn_product(qmax);
//! let fermionic = characters::ch_wn_fermionic(qmax);
//! let enumerated = qp::enumerate_basis(BasisKind::N, qmax).to_series(qmax);
//! let pbw = oracle::pbw_graded_dims(qmax).to_series(qmax);
//! assert_eq!(product, fermionic);
//! assert_eq!(fermionic, enumerated);
//! assert_eq!(enumerated, pbw);
//! ```

pub mod characters;
pub mod cli;
mod error;
pub mod oracle;
pub mod partitions;
pub mod qp;
pub mod series;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use qp::{BasisKind, Color, DiffConditionReport, GradedDimTable, QPMonomial, QuasiParticle};
pub use series::{Degree, TruncatedSeries};
