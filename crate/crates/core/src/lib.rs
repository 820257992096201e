//! Symbolic computation with t-adic symmetrization maps.
//!
//! The crate works in two parallel worlds and the maps between them:
//!
//! * the non-commutative polynomial algebra on the letters `x`, `y` with
//!   exact rational coefficients ([`word`]), its shuffle and harmonic
//!   products, and the t-adic symmetrization map on z-words ([`symmetrizer`]);
//! * 2-colored rooted trees carrying a non-negative integer on every edge
//!   ([`tree`]), with the gluing products, the harvestable-form rewriting,
//!   the word map `w`, and the tree-level symmetrization map.
//!
//! Every identity relating the two is checked against brute-force truncated
//! sums ([`zeta`]), which never go through the symbolic code paths. The
//! [`verify`] module bundles those checks into named suites used by the CLI
//! and by the acceptance tests.
//!
//! All arithmetic is exact ([`Rational`] is an arbitrary-precision fraction)
//! and every power series is truncated at a caller-chosen order `N`, which is
//! exact coefficient by coefficient.

pub mod catalog;
pub mod dsl;
pub mod error;
pub mod series;
pub mod symmetrizer;
pub mod tree;
pub mod verify;
pub mod word;
pub mod zeta;

pub use error::{Error, Result};
pub use series::{neg_power_expand, Module, TSeries};
pub use symmetrizer::{b_binom, phi, phi_hat, Tuple};
pub use tree::{Color, Edge, IndexedTree, TreeCombo};
pub use word::{HElem, Index, Letter, Word};

/// Exact rational numbers used for every coefficient in the crate.
pub type Rational = num_rational::BigRational;

/// Builds `num / den` as a [`Rational`].
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
