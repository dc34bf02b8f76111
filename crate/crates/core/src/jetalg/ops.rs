use std::collections::BTreeSet;

use super::poly::{BiDegree, ExponentVector, JetPoly, TWIST_SIGN};
use crate::error::AlgebraError;
use crate::freealg::Symbol;
use crate::qcoeff::{q_factorial, QScalar};

/// Product in the jet algebra, transported to normal-form exponents.
///
/// For monomials `m1` of bi-degree `(i, j)` and `m2` of bi-degree `(k, l)`,
/// the `j` y-letters of `m1` cross the `k` x-letters of `m2`, each crossing
/// contributing one factor of `q`.
pub fn mul_jet(a: &JetPoly, b: &JetPoly) -> Result<JetPoly, AlgebraError> {
    if a.order() != b.order() {
        return Err(AlgebraError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let mut out = JetPoly::zero(a.order());
    for (e1, c1) in a.terms() {
        let j = i64::from(e1.bidegree().y);
        for (e2, c2) in b.terms() {
            let k = i64::from(e2.bidegree().x);
            let twist = QScalar::q_pow(TWIST_SIGN * j * k);
            out.add_term(e1.add(e2), &(c1 * c2) * &twist);
        }
    }
    Ok(out)
}

/// `a^m` under [`mul_jet`]; `a^0 = 1`.
pub fn pow_jet(a: &JetPoly, m: u32) -> JetPoly {
    let mut acc = JetPoly::one(a.order());
    for _ in 0..m {
        acc = mul_jet(&acc, a).expect("same order");
    }
    acc
}

/// The derivation `δ`, landing in order `n + 1`.
///
/// Within a family the letters commute, so the Leibniz sum over a monomial
/// collapses to `Σ_s e_s · m / v_s · δv_s` with no q-factors.
pub fn delta_jet(a: &JetPoly) -> JetPoly {
    let n = a.order() + 1;
    let mut out = JetPoly::zero(n);
    for (e, c) in a.terms() {
        let lifted = e.lift(n);
        for (s, k) in e.letters() {
            let next = s.derivative().expect("jet letter");
            let mut flat = lifted.flat().to_vec();
            let from = slot(n, s);
            let to = slot(n, next);
            flat[from] -= 1;
            flat[to] += 1;
            out.add_term(
                ExponentVector::from_flat(n, flat),
                c * &QScalar::from_int(k),
            );
        }
    }
    out
}

fn slot(n: u32, s: Symbol) -> usize {
    match s {
        Symbol::X(i) => i as usize,
        Symbol::Y(i) => n as usize + 1 + i as usize,
        _ => unreachable!("jet letters only"),
    }
}

pub fn support(g: &JetPoly) -> BTreeSet<BiDegree> {
    g.support()
}

pub fn size(g: &JetPoly) -> usize {
    g.size()
}

pub fn bihomogeneous_component(g: &JetPoly, d: BiDegree) -> JetPoly {
    g.component(d)
}

/// Argument of the truncated q-exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpArgument {
    X,
    Y,
    XPlusY,
}

impl ExpArgument {
    pub fn element(self) -> JetPoly {
        match self {
            ExpArgument::X => JetPoly::x(0, 0),
            ExpArgument::Y => JetPoly::y(0, 0),
            ExpArgument::XPlusY => &JetPoly::x(0, 0) + &JetPoly::y(0, 0),
        }
    }
}

/// `Σ_{m ≤ N} v^m / (m)!_q` in the quantum plane.
pub fn q_exp_truncated(v: ExpArgument, truncation: u32) -> JetPoly {
    let base = v.element();
    let mut out = JetPoly::zero(0);
    let mut power = JetPoly::one(0);
    for m in 0..=truncation {
        if m > 0 {
            power = mul_jet(&power, &base).expect("order 0");
        }
        let inv = QScalar::from_poly(q_factorial(m))
            .inv()
            .expect("q-factorials are nonzero");
        out = &out + &power.scale(&inv);
    }
    out
}
