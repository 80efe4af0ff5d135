//! Exact multiparameter Schur functions `s_{mu;a}` and Frobenius-Schur functions.
//!
//! All arithmetic is over arbitrary-precision rationals. Symmetric functions
//! are stored in the basis of products of complete homogeneous functions and
//! reported in the Schur basis.

pub mod character;
pub mod error;
pub mod linalg;
pub mod multiparam;
pub mod params;
pub mod partition;
pub mod rational;
pub mod sample;
pub mod skew;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use params::{ParamSequence, WindowPolicy};
pub use partition::{FrobeniusCoords, Partition};
pub use rational::Rational;
pub use skew::SkewShape;
pub use symfunc::{EvalPoint, SchurExpansion, SymFunc, TruncatedSeries2};
