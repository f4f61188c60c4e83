//! Exact computations around the LG/CY square for Fermat Landau–Ginzburg pairs.
//!
//! The crate is layered bottom-up:
//!
//! * [`foundation`]: rationals, cyclotomic numbers, truncated polynomial rings,
//!   high-precision complex numbers and Gamma Taylor data.
//! * [`model`]: Fermat pairs `(w, G)`, group elements, the splitting `G = <j> + Ḡ`.
//! * [`state`]: state spaces of `Y₋`, `Y₊`, `ℙ(G)`, the ambient part of `Z` and FJRW theory.
//! * [`ktheory`]: line-bundle characters, window round-down, vGIT and Orlov transports,
//!   exact Euler pairings.
//! * [`chern`]: orbifold Chern characters, Todd and Gamma classes, flat frames.
//! * [`transforms`]: `Δ₋`, `Δ₊`, `Ū_l`, the LG/CY matrix and the square verifiers.
//! * [`ifunc`]: truncated I-functions and the twisted-theory helpers.

pub mod chern;
pub mod error;
pub mod foundation;
pub mod ifunc;
pub mod ktheory;
pub mod model;
pub mod report;
pub mod state;
pub mod suite;
pub mod transforms;

pub use error::{Error, Result};
