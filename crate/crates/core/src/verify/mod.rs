//! Verification suites. Each returns a [`Report`] with one entry per case.

mod report;
mod suites;

pub use report::{Check, Report};
pub use suites::{
    chu, coaction, confluence, delta, extraction, hopf_axioms, oracle, primality, prolongation,
    qbinom, qexp, reduction, rootofunity, roundtrip,
};
