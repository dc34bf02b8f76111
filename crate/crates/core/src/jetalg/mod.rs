//! The jet algebras of the quantum plane in bi-graded normal form.
//!
//! An element is stored by its x-first normal form, so it is at the same
//! time a commutative polynomial in `x, …, x^(n), y, …, y^(n)`. The
//! noncommutative product is the commutative one twisted by a power of `q`
//! ([`mul_jet`]).

mod ops;
mod poly;

pub use ops::{
    bihomogeneous_component, delta_jet, mul_jet, pow_jet, q_exp_truncated, size, support,
    ExpArgument,
};
pub use poly::{BiDegree, ExponentVector, JetPoly, TWIST_SIGN};
