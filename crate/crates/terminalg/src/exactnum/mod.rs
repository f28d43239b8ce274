//! Exact scalar arithmetic over `Q(i)` and deterministic exact linear algebra,
//! plus univariate rational functions in `t` for degeneration limits.

pub mod linalg;
pub mod ratfun;
pub mod scalar;

pub use linalg::{Field, Mat, QMatrix, Subspace};
pub use ratfun::{LimitAtZero, Poly, RatFun};
pub use scalar::GaussRat;
