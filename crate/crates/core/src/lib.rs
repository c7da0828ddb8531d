//! Exact computation of the equivariant cohomology ring, the intersection
//! Betti numbers, and the intersection pairing of the SU(2) representation
//! space of a closed genus-`g` surface group.
//!
//! Every headline quantity is produced along two independent routes:
//!
//! * the equivariant Poincaré series, from its closed form and from
//!   Hilbert series of the relation ideals `I_k` (via Gröbner bases);
//! * the intersection Betti numbers, from a closed-form difference of
//!   rational functions and from the monomial sets `E_m` tensored with
//!   primitive parts of an exterior algebra;
//! * the top-degree identity behind the pairing, from `b_k` coefficients
//!   of `t / tanh t` and from normal forms modulo `I_g`.
//!
//! ```
//! use ihrep::ih::{ih_series_structural, ip_series_closed};
//!
//! let closed = ip_series_closed(2).unwrap();
//! assert_eq!(closed.coefficients, vec![1, 0, 1, 0, 1, 0, 1]);
//! assert!(closed.same_values(&ih_series_structural(2).unwrap()));
//! ```
//!
//! The guide in `book/` walks through each piece; its code listings are
//! compiled and run as doctests of this crate.

pub mod exact;
pub mod exterior;
pub mod graded;
pub mod groebner;
pub mod ih;
pub mod linalg;
pub mod report;

pub use exact::{Rational, TruncatedSeries};
pub use graded::{GradedPoly, Monomial3};
pub use groebner::{BasisStore, GroebnerBasis};
pub use ih::BettiTable;

// Each chapter of the guide becomes a module whose doc comment is the
// chapter text, so `cargo test --doc` runs every listing.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/exterior.md")]
    mod exterior {}
    #[doc = include_str!("../../../book/src/betti.md")]
    mod betti {}
    #[doc = include_str!("../../../book/src/pairing.md")]
    mod pairing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
