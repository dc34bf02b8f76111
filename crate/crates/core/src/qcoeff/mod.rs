//! Exact arithmetic in ℤ[q] and ℚ(q), and q-combinatorics.

mod format;
mod gauss;
mod intpoly;
mod scalar;

pub use format::coeff_strings;
pub use gauss::{cyclotomic, divides, evaluate_at, gauss_binomial, q_factorial, q_integer};
pub use intpoly::IntPoly;
pub use scalar::QScalar;
