//! Burrows-Wheeler clustering, order conditions, and the languages of
//! interval exchange transformations, in exact rational arithmetic.
//!
//! The crate connects three views of the same combinatorics:
//!
//! - [`bwt`]: the Burrows-Wheeler transform and clustering of finite words
//!   for a pair of alphabet orders;
//! - [`language`]: factorial languages with their special factors,
//!   extension graphs, order condition, connections, return words,
//!   richness, and complexity functions;
//! - [`iet`]: exact-rational interval exchange transformations (standard
//!   and piecewise-affine) with natural codings, cylinders, and induced
//!   first-return maps.
//!
//! On top of those, [`derive`] computes derived orders and words from
//! return words, and [`construct`] carries the constructive machinery:
//! extension-graph saturation, language extension, the affine-IET
//! builder, the symmetric standard-IET decision, and a brute-force
//! standard-IET search oracle.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion
//! CLI crate carries IO and the file formats.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod alphabet;
pub mod bwt;
pub mod construct;
pub mod derive;
pub mod error;
pub mod iet;
pub mod language;
pub mod rat;
pub mod word;

pub use alphabet::{Alphabet, OrderPair, TotalOrder};
pub use error::Error;
pub use word::Word;

pub type Result<T> = core::result::Result<T, Error>;
