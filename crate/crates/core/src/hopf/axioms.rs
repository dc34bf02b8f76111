use std::time::Instant;

use super::structure::{
    antipode_word, comul, comul_word, counit, counit_word, det_q, glq2, FElement, DINV_BUDGET,
};
use super::tensor::Tensor;
use crate::error::AlgebraError;
use crate::freealg::{jet_relations, NcPoly, RewriteSystem, Symbol, Word};
use crate::qcoeff::QScalar;
use crate::verify::Report;

fn test_elements() -> Vec<(&'static str, FElement)> {
    vec![
        ("a", FElement::a()),
        ("b", FElement::b()),
        ("c", FElement::c()),
        ("d", FElement::d()),
        ("D", det_q()),
        ("Dinv", FElement::dinv()),
    ]
}

fn scalar_tensor(w: &Word) -> Result<Tensor, AlgebraError> {
    Ok(Tensor::one(0).scale(&counit_word(w)))
}

fn residue(p: &NcPoly) -> (bool, String) {
    (
        p.is_zero(),
        if p.is_zero() {
            "0".into()
        } else {
            format!("residue {p}")
        },
    )
}

/// Coassociativity, counit and antipode laws on `a, b, c, d`, `D` and
/// `Dinv`, plus grouplikeness and centrality of `D`.
pub fn verify_hopf_axioms() -> Result<Report, AlgebraError> {
    let start = Instant::now();
    let rs = glq2();
    let mut report = Report::new("hopf");
    for (name, g) in test_elements() {
        let dg = comul(&g)?;

        let left = dg.map_leg(0, comul_word)?;
        let right = dg.map_leg(1, comul_word)?;
        let diff = &left - &right;
        report.push(
            format!("coassociativity {name}"),
            diff.is_zero(),
            if diff.is_zero() {
                format!("{} terms", left.len())
            } else {
                format!("residue {diff}")
            },
        );

        for (side, k) in [("left", 0), ("right", 1)] {
            let r = dg.map_leg(k, scalar_tensor)?.multiply_legs(rs)?;
            let (ok, detail) = residue(&(&r - g.poly()));
            report.push(format!("counit {side} {name}"), ok, detail);
        }

        let unit = NcPoly::scalar(counit(&g));
        for (side, k) in [("left", 0), ("right", 1)] {
            let mut acc = NcPoly::zero();
            for (legs, c) in dg.terms() {
                let s = antipode_word(&legs[k], DINV_BUDGET)?;
                let other = NcPoly::word(legs[1 - k].clone());
                let prod = if k == 0 {
                    s.poly() * &other
                } else {
                    &other * s.poly()
                };
                acc = &acc + &prod.scale(c);
            }
            let (ok, detail) = residue(&(&rs.normalize(&acc)? - &unit));
            report.push(format!("antipode {side} {name}"), ok, detail);
        }
    }

    let d = det_q();
    let dd = Tensor::pure(&[d.poly().clone(), d.poly().clone()]).normalize(&[rs, rs])?;
    let diff = &comul(&d)? - &dd;
    report.push(
        "D grouplike",
        diff.is_zero(),
        if diff.is_zero() {
            "Δ(D) = D⊗D".into()
        } else {
            format!("residue {diff}")
        },
    );
    report.push(
        "D counit",
        counit(&d).is_one(),
        format!("ε(D) = {}", counit(&d)),
    );
    for s in [Symbol::A, Symbol::B, Symbol::C, Symbol::D] {
        let g = FElement::generator(s);
        let (ok, detail) = residue((&(&d * &g) - &(&g * &d)).poly());
        report.push(format!("D central {s}"), ok, detail);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Residues `y'x' - q x'y'` in `F ⊗ A^(0)` for the coaction `x' = ax + by`,
/// `y' = cx + dy` and its transpose `x'' = ax + cy`, `y'' = bx + dy`, with
/// the F leg reduced in `f_system`.
pub fn coaction_residues(f_system: &RewriteSystem) -> Result<(Tensor, Tensor), AlgebraError> {
    let plane = jet_relations(0);
    let systems = [f_system, &plane];
    let pure = |f: Symbol, v: Symbol| Tensor::pure(&[NcPoly::symbol(f), NcPoly::symbol(v)]);
    let (x, y) = (Symbol::X(0), Symbol::Y(0));
    let q = QScalar::q_pow(1);
    let residue = |u: Tensor, v: Tensor| -> Result<Tensor, AlgebraError> {
        let vu = v.mul(&u).normalize(&systems)?;
        let uv = u.mul(&v).normalize(&systems)?;
        Ok(&vu - &uv.scale(&q))
    };
    let primary = residue(
        &pure(Symbol::A, x) + &pure(Symbol::B, y),
        &pure(Symbol::C, x) + &pure(Symbol::D, y),
    )?;
    let transposed = residue(
        &pure(Symbol::A, x) + &pure(Symbol::C, y),
        &pure(Symbol::B, x) + &pure(Symbol::D, y),
    )?;
    Ok((primary, transposed))
}

/// Covariance of the quantum plane under GL_q(2), with a control in which
/// the matrix entries commute and the residue must not vanish.
pub fn verify_coaction() -> Result<Report, AlgebraError> {
    let start = Instant::now();
    let mut report = Report::new("coaction");
    let (primary, transposed) = coaction_residues(glq2())?;
    for (name, r) in [
        ("primary coaction", primary),
        ("transposed coaction", transposed),
    ] {
        report.push(
            name,
            r.is_zero(),
            if r.is_zero() {
                "0".into()
            } else {
                format!("residue {r}")
            },
        );
    }
    let commuting = RewriteSystem::commutative(
        "commuting entries",
        vec![Symbol::A, Symbol::B, Symbol::C, Symbol::D],
    );
    let (control, _) = coaction_residues(&commuting)?;
    report.push(
        "commuting-entries control",
        !control.is_zero(),
        if control.is_zero() {
            "residue vanished".into()
        } else {
            format!("residue {control}")
        },
    );
    report.elapsed = start.elapsed();
    Ok(report)
}
