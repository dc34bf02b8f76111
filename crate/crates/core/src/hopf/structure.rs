use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use super::tensor::Tensor;
use crate::error::AlgebraError;
use crate::freealg::{glq2_relations, NcPoly, RewriteSystem, Symbol, Word};
use crate::qcoeff::QScalar;

/// Highest `Dinv` degree the antipode may produce by default.
pub const DINV_BUDGET: usize = 2;

pub(crate) fn glq2() -> &'static RewriteSystem {
    static SYSTEM: OnceLock<RewriteSystem> = OnceLock::new();
    SYSTEM.get_or_init(glq2_relations)
}

/// An element of `F[GL_q(2)]` in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FElement(NcPoly);

impl FElement {
    /// Normalizes a free-algebra element on `a, b, c, d, Dinv`.
    pub fn new(p: &NcPoly) -> Result<Self, AlgebraError> {
        Ok(FElement(glq2().normalize(p)?))
    }

    pub fn one() -> Self {
        FElement(NcPoly::one())
    }

    pub fn generator(s: Symbol) -> Self {
        FElement(NcPoly::symbol(s))
    }

    pub fn a() -> Self {
        Self::generator(Symbol::A)
    }

    pub fn b() -> Self {
        Self::generator(Symbol::B)
    }

    pub fn c() -> Self {
        Self::generator(Symbol::C)
    }

    pub fn d() -> Self {
        Self::generator(Symbol::D)
    }

    pub fn dinv() -> Self {
        Self::generator(Symbol::Dinv)
    }

    pub fn poly(&self) -> &NcPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &QScalar) -> FElement {
        FElement(self.0.scale(c))
    }

    /// Largest power of `Dinv` in any normal word.
    pub fn dinv_degree(&self) -> usize {
        self.0
            .terms()
            .keys()
            .map(|w| w.count(Symbol::Dinv))
            .max()
            .unwrap_or(0)
    }
}

impl Mul for &FElement {
    type Output = FElement;
    fn mul(self, rhs: &FElement) -> FElement {
        FElement(glq2().normalize(&(&self.0 * &rhs.0)).expect("glq2 letters"))
    }
}

impl Add for &FElement {
    type Output = FElement;
    fn add(self, rhs: &FElement) -> FElement {
        FElement(&self.0 + &rhs.0)
    }
}

impl Sub for &FElement {
    type Output = FElement;
    fn sub(self, rhs: &FElement) -> FElement {
        FElement(&self.0 - &rhs.0)
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The quantum determinant `ad - q^-1 bc`.
pub fn det_q() -> FElement {
    let ad = &FElement::a() * &FElement::d();
    let bc = (&FElement::b() * &FElement::c()).scale(&QScalar::q_pow(-1));
    &ad - &bc
}

fn leg(letters: &[Symbol]) -> Word {
    Word(letters.to_vec())
}

fn comul_letter(s: Symbol) -> Tensor {
    use Symbol::{Dinv, A, B, C, D};
    let pairs: &[(Symbol, Symbol)] = match s {
        A => &[(A, A), (B, C)],
        B => &[(A, B), (B, D)],
        C => &[(C, A), (D, C)],
        D => &[(C, B), (D, D)],
        Dinv => &[(Dinv, Dinv)],
        _ => &[],
    };
    let mut t = Tensor::zero(2);
    for &(u, v) in pairs {
        t.add_term(vec![leg(&[u]), leg(&[v])], QScalar::one());
    }
    t
}

/// Coproduct of a single normal word.
pub(crate) fn comul_word(w: &Word) -> Result<Tensor, AlgebraError> {
    let rs = glq2();
    let mut acc = Tensor::one(2);
    for &s in w.letters() {
        if s.is_jet() {
            return Err(foreign(s));
        }
        acc = acc.mul(&comul_letter(s)).normalize(&[rs, rs])?;
    }
    Ok(acc)
}

fn foreign(s: Symbol) -> AlgebraError {
    AlgebraError::ForeignSymbol {
        symbol: s.to_string(),
        system: "glq2".into(),
    }
}

/// The coproduct, the algebra map extending the matrix coproduct with
/// `Δ(Dinv) = Dinv ⊗ Dinv`.
pub fn comul(x: &FElement) -> Result<Tensor, AlgebraError> {
    let mut out = Tensor::zero(2);
    for (w, c) in x.0.terms() {
        out = &out + &comul_word(w)?.scale(c);
    }
    Ok(out)
}

/// `ε(a) = ε(d) = ε(Dinv) = 1`, `ε(b) = ε(c) = 0`.
pub fn counit_word(w: &Word) -> QScalar {
    if w.letters()
        .iter()
        .any(|s| matches!(s, Symbol::B | Symbol::C))
    {
        QScalar::zero()
    } else {
        QScalar::one()
    }
}

pub fn counit(x: &FElement) -> QScalar {
    x.0.terms()
        .iter()
        .filter(|(w, _)| !counit_word(w).is_zero())
        .fold(QScalar::zero(), |acc, (_, c)| &acc + c)
}

fn antipode_letter(s: Symbol) -> NcPoly {
    use Symbol::{Dinv, A, B, C, D};
    let q = QScalar::q_pow(1);
    match s {
        A => NcPoly::word(leg(&[Dinv, D])),
        B => NcPoly::term(leg(&[Dinv, B]), -q),
        C => NcPoly::term(leg(&[Dinv, C]), -QScalar::q_pow(-1)),
        D => NcPoly::word(leg(&[Dinv, A])),
        Dinv => det_q().0,
        _ => NcPoly::zero(),
    }
}

/// Antipode of a normal word: letters are mapped and reversed.
pub(crate) fn antipode_word(w: &Word, budget: usize) -> Result<FElement, AlgebraError> {
    let mut acc = FElement::one();
    for &s in w.letters().iter().rev() {
        if s.is_jet() {
            return Err(foreign(s));
        }
        acc = &acc * &FElement(antipode_letter(s));
    }
    let found = acc.dinv_degree();
    if found > budget {
        return Err(AlgebraError::DinvBudget { found, budget });
    }
    Ok(acc)
}

/// The antipode with the default `Dinv` budget.
pub fn antipode(x: &FElement) -> Result<FElement, AlgebraError> {
    antipode_with_budget(x, DINV_BUDGET)
}

/// The algebra anti-homomorphism with `S(a) = Dinv d`, `S(b) = -q Dinv b`,
/// `S(c) = -q^-1 Dinv c`, `S(d) = Dinv a`, `S(Dinv) = D`. Fails when the
/// result needs a higher power of `Dinv` than `budget`.
pub fn antipode_with_budget(x: &FElement, budget: usize) -> Result<FElement, AlgebraError> {
    let mut out = FElement(NcPoly::zero());
    for (w, c) in x.0.terms() {
        out = &out + &antipode_word(w, budget)?.scale(c);
    }
    Ok(out)
}
