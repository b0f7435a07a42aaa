//! Exact balance constants of finite posets.
//!
//! For a poset `P`, `delta(P)` is the largest `min(P(x < y), P(y < x))` over
//! incomparable pairs, with probabilities taken over uniformly random linear
//! extensions. Width-2 posets are handled by counting lattice paths through
//! a grid diagram, which is exact and polynomial; everything else falls back
//! to a brute-force enumeration oracle used for cross-checking.
//!
//! - [`exact`]: rationals and numbers `a + b*sqrt(d)` with exact sign tests.
//! - [`poset`]: posets, chain covers, canonical forms, the oracle.
//! - [`grid`]: grid diagrams, path tables, log-concavity, the region S.
//! - [`family`]: the infinite family `T_n` and its table checks.
//! - [`cases`]: the nine constraint systems behind the lower bound, with an
//!   exact simplex and certificate checker.
//! - [`search`]: exhaustive enumeration of width-2 posets up to isomorphism.
//! - [`cli`]: the `balance` command line.
//!
//! The cargo examples show one capability each: `small_poset_balance`,
//! `grid_diagram`, `tn_family`, `appendix_checks`, `case_bounds`,
//! `gap_search` and `exact_constants`.
//!
//! ```
//! use poset_balance::{grid::{delta_grid, grid_of}, poset::Poset, exact::rat};
//!
//! let report = delta_grid(&grid_of(&Poset::e3()).unwrap());
//! assert_eq!(report.delta, rat(1, 3));
//! ```

pub mod cases;
pub mod cli;
pub mod error;
pub mod exact;
pub mod family;
pub mod grid;
pub mod poset;
pub mod search;

pub use error::{Error, Result};

pub(crate) fn serde_rational<S: serde::Serializer>(
    x: &exact::Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&exact::format_rational(x))
}

pub(crate) fn serde_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}
