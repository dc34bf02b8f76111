//! Ideals of the jet algebras: size reduction, bi-homogeneous extraction,
//! membership for bi-homogeneously generated ideals, δ-stability and the
//! coordinate quotients.

mod falsify;
mod file;
mod groebner;
mod membership;
mod reduce;

pub use falsify::{
    primality_falsification, FalsificationReport, Violation, SAMPLE_MAX_DEGREE, SAMPLE_MAX_TERMS,
};
pub use file::parse_ideal_file;
pub use groebner::{buchberger, grlex, leading_term, Division, GroebnerBasis, DEFAULT_BUDGET};
pub use membership::{
    groebner_presentation, is_delta_stable, is_delta_stable_with_budget, membership, quotient_by_x,
    quotient_by_y, BihomogeneousIdeal, Certificate, DeltaStability, IdealPresentation, Membership,
};
pub use reduce::{
    extract_bihomogeneous, predicted_support_x, predicted_support_y, reduce_x, reduce_y, Axis,
    ReductionStep, ReductionTrace,
};

#[cfg(test)]
mod tests;
