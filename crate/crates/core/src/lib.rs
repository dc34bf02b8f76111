//! Exact symbolic computation in the quantum plane `k<x, y>/(yx - qxy)`, its
//! jet algebras `A^(n)`, and the quantum group GL_q(2).
//!
//! Coefficients live in ℚ(q) with `q` a formal indeterminate. The crate is
//! organized bottom-up:
//!
//! - [`qcoeff`]: ℤ[q], ℚ(q), Gauss polynomials.
//! - [`freealg`]: the free algebra and quadratic rewriting to normal form.
//! - [`jetalg`]: the bi-graded representation with the twisted product and `δ`.
//! - [`ideals`]: size reduction, bi-homogeneous extraction, Gröbner membership,
//!   δ-stability.
//! - [`hopf`]: GL_q(2) as a Hopf algebra and its coaction on the plane.
//! - [`expr`]: the textual expression language.
//! - [`verify`]: identity and axiom suites with pass/fail reports.

pub mod error;
pub mod expr;
pub mod freealg;
pub mod hopf;
pub mod ideals;
pub mod jetalg;
pub mod qcoeff;
pub mod sample;
pub mod verify;

mod render;

pub use error::{AlgebraError, InputError, ParseError};
pub use freealg::{NcPoly, RewriteSystem, Symbol, Word};
pub use hopf::{FElement, Tensor};
pub use ideals::{IdealPresentation, ReductionTrace};
pub use jetalg::{BiDegree, ExponentVector, JetPoly};
pub use qcoeff::{IntPoly, QScalar};
pub use verify::Report;
