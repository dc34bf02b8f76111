//! Size reduction by q-commutators with a single letter.
//!
//! For `g = Σ g_ij` split into bi-homogeneous parts,
//! `y^(s) g - q^ν g y^(s) = Σ (q^i - q^ν) g_ij y^(s)`: every part whose
//! x-degree is `ν` vanishes and the rest move from `(i, j)` to `(i, j + 1)`.
//! The mirror `g x^(s) - q^μ x^(s) g` kills the parts of y-degree `μ`.
//! Both are two-sided ideal operations, so a chain of them is a membership
//! certificate for its result.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::jetalg::{mul_jet, BiDegree, JetPoly};
use crate::qcoeff::QScalar;

/// `y^(s) g - q^ν g y^(s)`.
pub fn reduce_y(g: &JetPoly, nu: u32, s: u32) -> Result<JetPoly, AlgebraError> {
    check_symbol_order(g, s)?;
    let y = JetPoly::y(g.order(), s);
    let left = mul_jet(&y, g)?;
    let right = mul_jet(g, &y)?.scale(&QScalar::q_pow(i64::from(nu)));
    Ok(&left - &right)
}

/// `g x^(s) - q^μ x^(s) g`.
pub fn reduce_x(g: &JetPoly, mu: u32, s: u32) -> Result<JetPoly, AlgebraError> {
    check_symbol_order(g, s)?;
    let x = JetPoly::x(g.order(), s);
    let left = mul_jet(g, &x)?;
    let right = mul_jet(&x, g)?.scale(&QScalar::q_pow(i64::from(mu)));
    Ok(&left - &right)
}

fn check_symbol_order(g: &JetPoly, s: u32) -> Result<(), AlgebraError> {
    if s > g.order() {
        return Err(AlgebraError::JetOrderOverflow {
            found: s,
            max: g.order(),
        });
    }
    Ok(())
}

/// The support predicted for `reduce_y(g, ν, ·)`.
pub fn predicted_support_y(g: &JetPoly, nu: u32) -> BTreeSet<BiDegree> {
    g.support()
        .into_iter()
        .filter(|d| d.x != nu)
        .map(|d| BiDegree::new(d.x, d.y + 1))
        .collect()
}

/// The support predicted for `reduce_x(g, μ, ·)`.
pub fn predicted_support_x(g: &JetPoly, mu: u32) -> BTreeSet<BiDegree> {
    g.support()
        .into_iter()
        .filter(|d| d.y != mu)
        .map(|d| BiDegree::new(d.x + 1, d.y))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    /// `y^(s) g - q^ν g y^(s)`
    #[serde(rename = "Y-left")]
    YLeft,
    /// `g x^(s) - q^μ x^(s) g`
    #[serde(rename = "X-right")]
    XRight,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::YLeft => f.write_str("Y-left"),
            Axis::XRight => f.write_str("X-right"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub axis: Axis,
    pub exponent: u32,
    pub symbol_order: u32,
}

impl ReductionStep {
    pub fn apply(&self, g: &JetPoly) -> Result<JetPoly, AlgebraError> {
        match self.axis {
            Axis::YLeft => reduce_y(g, self.exponent, self.symbol_order),
            Axis::XRight => reduce_x(g, self.exponent, self.symbol_order),
        }
    }
}

/// A chain of reductions from `start` to `result`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub start: JetPoly,
    pub result: JetPoly,
}

impl ReductionTrace {
    /// Re-runs the steps from `start`.
    pub fn replay(&self) -> Result<JetPoly, AlgebraError> {
        self.steps
            .iter()
            .try_fold(self.start.clone(), |g, step| step.apply(&g))
    }

    /// Whether replaying reproduces `result` exactly.
    pub fn is_valid(&self) -> bool {
        self.replay().is_ok_and(|r| r == self.result)
    }

    pub fn y_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.axis == Axis::YLeft).count()
    }

    pub fn x_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.axis == Axis::XRight).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "start": self.start.to_string(),
            "result": self.result.to_string(),
            "steps": self.steps,
        })
    }
}

/// Isolates the bi-homogeneous part of `g` at `target` inside the two-sided
/// ideal generated by `g`.
///
/// First every other x-degree is killed with a y-commutator (x-degrees are
/// preserved by those), then every y-degree other than the shifted target's
/// with an x-commutator. The result is a nonzero multiple of
/// `x^a g_target y^b`, with `a`, `b` the number of x- and y-steps.
pub fn extract_bihomogeneous(
    g: &JetPoly,
    target: BiDegree,
) -> Result<(JetPoly, ReductionTrace), AlgebraError> {
    if g.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    if !g.support().contains(&target) {
        return Err(AlgebraError::TargetNotInSupport(target.x, target.y));
    }
    let mut steps = Vec::new();
    let mut current = g.clone();

    let other_x: BTreeSet<u32> = current
        .support()
        .iter()
        .map(|d| d.x)
        .filter(|&i| i != target.x)
        .collect();
    for &nu in other_x.iter().rev() {
        let step = ReductionStep {
            axis: Axis::YLeft,
            exponent: nu,
            symbol_order: 0,
        };
        current = step.apply(&current)?;
        steps.push(step);
    }

    let shifted_y = target.y + steps.len() as u32;
    let other_y: BTreeSet<u32> = current
        .support()
        .iter()
        .map(|d| d.y)
        .filter(|&j| j != shifted_y)
        .collect();
    for &mu in other_y.iter().rev() {
        let step = ReductionStep {
            axis: Axis::XRight,
            exponent: mu,
            symbol_order: 0,
        };
        current = step.apply(&current)?;
        steps.push(step);
    }

    debug_assert_eq!(current.size(), 1);
    let trace = ReductionTrace {
        steps,
        start: g.clone(),
        result: current.clone(),
    };
    Ok((current, trace))
}
