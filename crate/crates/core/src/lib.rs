//! Permuted composition tableaux and the objects they are in bijection with.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values:
//!
//! * [`perm`] and [`composition`]: permutations in one-line notation,
//!   standardization, inversion sets, the left weak order, and compositions.
//! * [`tableau`]: permuted composition tableaux (PCTs), reverse tableaux,
//!   validation, column words, descents and the PCT/RT bijection pair.
//! * [`hecke`]: the 0-Hecke operators on standard PCTs, relation checking,
//!   column-word equivalence classes, source and sink tableaux.
//! * [`dyck`]: Dyck paths, labeled Dyck paths and labeled Dyck words, and the
//!   bijection between two-column tableaux and labeled Dyck paths.
//! * [`tree`]: labeled plane binary trees, their edge statistics, and the
//!   conversions to and from labeled Dyck paths.
//! * [`allowable`]: allowable pairs of permutations, the column graph of an
//!   allowable sequence, and realization of pairs as composition tableaux.
#![no_std]

extern crate alloc;

pub mod allowable;
pub mod composition;
pub mod dyck;
mod error;
pub mod hecke;
pub mod perm;
pub mod tableau;
pub mod tree;

pub use composition::Composition;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use tableau::{ReverseTableau, Tableau};

/// `n!`, saturating at `u64::MAX`.
pub fn factorial(n: u64) -> u64 {
    (2..=n).fold(1u64, |acc, k| acc.saturating_mul(k))
}

/// The `n`-th Catalan number, saturating at `u64::MAX`.
pub fn catalan(n: u64) -> u64 {
    // C(k+1) = C(k) * 2(2k+1) / (k+2), exact at every step.
    let mut c: u128 = 1;
    for k in 0..n {
        c = c * (2 * (2 * k as u128 + 1)) / (k as u128 + 2);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}
