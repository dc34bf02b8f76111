use super::poly::{NcPoly, Word};
use crate::error::AlgebraError;

/// The derivation `δ: B^(n-1) → B^(n)` with `δx^(i) = x^(i+1)`, `δy^(i) = y^(i+1)`,
/// extended by linearity and the Leibniz rule over words.
pub fn nc_delta(p: &NcPoly, n: u32) -> Result<NcPoly, AlgebraError> {
    let max_allowed = i64::from(n) - 1;
    for s in p.symbols() {
        if !s.is_jet() {
            return Err(AlgebraError::Unsupported(format!(
                "δ is not defined on {s}"
            )));
        }
        if i64::from(s.order()) > max_allowed {
            return Err(AlgebraError::DerivationDomain {
                found: s.order(),
                max_allowed,
            });
        }
    }
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        for (pos, s) in w.letters().iter().enumerate() {
            let mut letters = w.letters().to_vec();
            letters[pos] = s.derivative().expect("jet letter");
            out.add_term(Word(letters), c.clone());
        }
    }
    Ok(out)
}
