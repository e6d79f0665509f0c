//! Exact character-theoretic computations for the imprimitive complex
//! reflection groups `G(r,q,n)` (the index-`q` subgroups of the wreath
//! products `Z_r ≀ S_n`, with `q | r`).
//!
//! The crate provides:
//!
//! - exact arithmetic in rings of cyclotomic integers ([`cyclotomic`]),
//! - partitions, multipartitions and border-strip combinatorics
//!   ([`partition`], [`ribbon`]),
//! - group elements, conjugacy data and class splitting ([`group`]),
//! - an exact recursive evaluator for the irreducible characters of the
//!   full wreath product ([`mn`]),
//! - the descent to `G(r,q,n)` via orbits, stabilizers and necklace
//!   labels ([`clifford`]),
//! - a floating-point character-table oracle for small groups built from
//!   class-algebra structure constants ([`oracle`]),
//! - classification of quasi `p`-Steinberg characters, both by brute
//!   force over `p`-regular classes and by closed-form tables
//!   ([`classify`]),
//! - cross-validation suites tying all of the above together ([`verify`]).

pub mod classify;
pub mod clifford;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod mn;
pub mod necklace;
pub mod oracle;
pub mod partition;
pub mod ribbon;
pub mod verify;

pub use error::{Error, Result};
