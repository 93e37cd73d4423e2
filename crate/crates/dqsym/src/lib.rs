//! Exact-arithmetic engine for colored free quasi-symmetric functions.
//!
//! The algebra is spanned by biwords (a color word over a permutation of the
//! same length). The product concatenates color rows and convolves the
//! permutation rows; splitting the product by the position of the maximal
//! letter gives the two dendriform half-products. On top of that structure
//! the crate builds:
//!
//! * nested q-bracketing elements attached to color words and permutations
//!   ([`identities::psi_word`], [`identities::psi_perm`]),
//! * the degree-n sum of all such elements and its grouping by saillance
//!   class ([`identities::sigma_n`], [`identities::p_class`]),
//! * colored ribbon and elementary bases ([`identities::ribbon_class`],
//!   [`identities::elementary_class`]) with exact expansion and basis
//!   conversion ([`expansion`]),
//! * closed-form predictions for those expansions and a verification suite
//!   that checks the predictions against brute-force sums ([`verify`]).
//!
//! Coefficients live in `Z[q]` with checked 64-bit integer arithmetic
//! ([`qpoly::QPoly`]); every computation is exact and deterministic.

pub mod compositions;
pub mod expansion;
pub mod fqsym;
pub mod identities;
pub mod matrix;
pub mod qpoly;
pub mod verify;
pub mod words;

pub use compositions::Composition;
pub use fqsym::{Biword, Element};
pub use qpoly::QPoly;
pub use words::{Permutation, Word};
