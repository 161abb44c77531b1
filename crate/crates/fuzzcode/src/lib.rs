//! Fuzzy linear codes over prime fields.
//!
//! A fuzzy linear code is a membership function `A: F_p^n -> [0,1]` whose
//! upper cuts `{x : A(x) >= alpha}` are all linear codes. Equivalently it is a
//! strictly nested chain of linear codes, each carrying a level. This crate
//! provides:
//!
//! * exact linear algebra over GF(p) with a bit-packed fast path for p = 2
//!   ([`gf`]),
//! * classic linear codes with canonical (reduced row echelon) bases
//!   ([`code`]),
//! * fuzzy linear codes, level maps, and fuzzy-set arithmetic ([`fuzzy`]),
//! * fuzzy duality and self-dual chain constructions ([`duality`]),
//! * named code families: Hamming, extended Hamming, simplex, Golay, and
//!   Reed-Muller, plus their fuzzy chains ([`zoo`]),
//! * a reduced syndrome-table decoder driven by membership levels
//!   ([`decoder`]),
//! * brute-force reference implementations used to validate everything else
//!   ([`oracle`]),
//! * plain-text file formats for matrices and codes ([`io`]).
//!
//! All membership levels are exact rationals ([`rational::Rational`]); no
//! floating point is used anywhere in the core machinery.

pub mod code;
pub mod decoder;
pub mod duality;
pub mod fuzzy;
pub mod gf;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod zoo;

pub use code::{CodeError, CodeSummary, LinearCode};
pub use decoder::{classic_decode, DecodeError, DecodeResult, FuzzyDecoder, SyndromeTable};
pub use duality::DualityError;
pub use fuzzy::{FuzzyError, FuzzyLinearCode, LevelMap};
pub use gf::{FieldMatrix, FieldSpec, FieldVector, GfError};
pub use rational::Rational;

/// Default cap on codeword enumeration used by minimum-distance search.
pub const DEFAULT_DISTANCE_CAP: u128 = 1 << 22;

/// Default cap on vector-space enumeration (level maps, coset scans, oracles).
pub const DEFAULT_ENUM_CAP: u128 = 1 << 20;
