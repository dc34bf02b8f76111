//! `F[GL_q(2)]` with the inverse determinant adjoined, as a Hopf algebra,
//! and its coaction on the quantum plane.

mod axioms;
mod structure;
mod tensor;

pub use axioms::{coaction_residues, verify_coaction, verify_hopf_axioms};
pub use structure::{
    antipode, antipode_with_budget, comul, counit, counit_word, det_q, FElement, DINV_BUDGET,
};
pub use tensor::Tensor;
