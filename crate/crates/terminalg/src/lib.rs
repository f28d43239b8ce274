//! Exact-arithmetic machinery for finite-dimensional nilpotent terminal algebras.
//!
//! Everything is computed over the Gaussian rationals `Q(i)`, so identity checks,
//! cohomology dimensions, extension reconstructions and degeneration limits are
//! decided exactly, with no tolerances. The main pieces:
//!
//! * [`exactnum`] — Gaussian-rational scalars, exact linear algebra, and
//!   univariate rational functions in `t`.
//! * [`algebra`] — structure-constant algebras and their structural invariants
//!   (powers, annihilator, derivations) plus the terminal / Leibniz / Jordan
//!   identity checkers.
//! * [`cohomology`] — bilinear forms, the terminal cocycle space `Z2T`,
//!   coboundaries, `H2T`, the Leibniz subspace, and the automorphism action.
//! * [`extensions`] — central extensions `A_theta` and split/non-split analysis.
//! * [`catalog`] — the bundled classification catalog with its
//!   nabla-dictionaries, automorphism families and isomorphism helpers.
//! * [`degeneration`] — parametric bases, transported structure constants and
//!   orbit-dimension bookkeeping.
//! * [`harness`] — the batch verification harness behind `verify-catalog`.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod degeneration;
pub mod error;
pub mod exactnum;
pub mod extensions;
pub mod harness;
pub mod jsonio;

pub use error::Error;
pub use exactnum::{GaussRat, QMatrix};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
