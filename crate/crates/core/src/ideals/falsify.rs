use rand::Rng;

use super::membership::{BihomogeneousIdeal, IdealPresentation};
use crate::error::AlgebraError;
use crate::freealg::Symbol;
use crate::jetalg::{mul_jet, JetPoly};
use crate::sample::{random_nonzero_jetpoly, seeded};

/// Highest total degree of sampled factors.
pub const SAMPLE_MAX_DEGREE: u32 = 4;
/// Most monomials in a sampled factor.
pub const SAMPLE_MAX_TERMS: usize = 3;

/// A pair with `g, h ∉ <f>` but `g h ∈ <f>`.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub g: JetPoly,
    pub h: JetPoly,
}

#[derive(Clone, Debug)]
pub struct FalsificationReport {
    /// Letter pairs tried before the random trials.
    pub probes: usize,
    pub trials: usize,
    /// Pairs whose product landed in the ideal.
    pub product_hits: usize,
    pub violations: Vec<Violation>,
}

/// Searches for witnesses against primality of `<f>`.
///
/// Every ordered pair of jet letters is tried first, then `trials` seeded
/// random pairs of small sparse elements. For `f` bi-homogeneous and
/// irreducible as a commutative polynomial the violation list must be empty.
pub fn primality_falsification(
    f: &JetPoly,
    trials: usize,
    seed: u64,
) -> Result<FalsificationReport, AlgebraError> {
    let n = f.order();
    let ideal = BihomogeneousIdeal::new(IdealPresentation::new(n, vec![f.clone()])?)?;
    let letters: Vec<JetPoly> = (0..=n)
        .map(Symbol::X)
        .chain((0..=n).map(Symbol::Y))
        .map(|s| JetPoly::symbol(n, s))
        .collect();

    let mut report = FalsificationReport {
        probes: 0,
        trials,
        product_hits: 0,
        violations: Vec::new(),
    };
    let check =
        |g: JetPoly, h: JetPoly, report: &mut FalsificationReport| -> Result<(), AlgebraError> {
            let gh = mul_jet(&g, &h)?;
            if !ideal.is_member(&gh)? {
                return Ok(());
            }
            report.product_hits += 1;
            if !ideal.is_member(&g)? && !ideal.is_member(&h)? {
                report.violations.push(Violation { g, h });
            }
            Ok(())
        };

    for g in &letters {
        for h in &letters {
            report.probes += 1;
            check(g.clone(), h.clone(), &mut report)?;
        }
    }
    let mut rng = seeded(seed);
    for _ in 0..trials {
        let g = random_nonzero_jetpoly(&mut rng, n, SAMPLE_MAX_DEGREE, SAMPLE_MAX_TERMS);
        // Every other trial multiplies by f on one side to force product hits.
        let h = if rng.gen_bool(0.5) {
            let r = random_nonzero_jetpoly(&mut rng, n, SAMPLE_MAX_DEGREE, SAMPLE_MAX_TERMS);
            mul_jet(&r, f)?
        } else {
            random_nonzero_jetpoly(&mut rng, n, SAMPLE_MAX_DEGREE, SAMPLE_MAX_TERMS)
        };
        check(g, h, &mut report)?;
    }
    Ok(report)
}
