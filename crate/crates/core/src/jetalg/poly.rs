use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use crate::error::AlgebraError;
use crate::freealg::{jet_relations, NcPoly, Symbol, Word};
use crate::qcoeff::{coeff_strings, QScalar};
use crate::render::{render_powers, render_sum};

/// Sign of the twist exponent: a `(i, j)`-part times a `(k, l)`-part picks
/// up `q^(TWIST_SIGN * j * k)`. Forced by `y x = q x y` under x-first
/// ordering; the oracle test `twist_sign_matches_rewriting` pins it.
pub const TWIST_SIGN: i64 = 1;

/// `(total x-degree, total y-degree)`, ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiDegree {
    pub x: u32,
    pub y: u32,
}

impl BiDegree {
    pub fn new(x: u32, y: u32) -> Self {
        BiDegree { x, y }
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exponents of `x, x', …, x^(n), y, y', …, y^(n)` in a dense layout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector {
    exps: Vec<u32>,
}

impl ExponentVector {
    pub fn zero(n: u32) -> Self {
        ExponentVector {
            exps: vec![0; 2 * (n as usize + 1)],
        }
    }

    /// `flat` holds the x-exponents followed by the y-exponents.
    pub fn from_flat(n: u32, flat: Vec<u32>) -> Self {
        assert_eq!(flat.len(), 2 * (n as usize + 1), "exponent vector length");
        ExponentVector { exps: flat }
    }

    pub fn from_parts(ex: &[u32], ey: &[u32]) -> Self {
        assert_eq!(ex.len(), ey.len(), "x and y exponent lengths differ");
        assert!(!ex.is_empty(), "empty exponent vector");
        let mut exps = ex.to_vec();
        exps.extend_from_slice(ey);
        ExponentVector { exps }
    }

    /// The exponent vector of a single jet letter.
    pub fn of_symbol(n: u32, s: Symbol) -> Self {
        let mut e = Self::zero(n);
        e.bump(s, 1);
        e
    }

    pub fn order(&self) -> u32 {
        (self.exps.len() / 2 - 1) as u32
    }

    fn half(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn ex(&self) -> &[u32] {
        &self.exps[..self.half()]
    }

    pub fn ey(&self) -> &[u32] {
        &self.exps[self.half()..]
    }

    pub fn flat(&self) -> &[u32] {
        &self.exps
    }

    pub fn bidegree(&self) -> BiDegree {
        BiDegree {
            x: self.ex().iter().sum(),
            y: self.ey().iter().sum(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn slot(&self, s: Symbol) -> usize {
        match s {
            Symbol::X(i) => i as usize,
            Symbol::Y(i) => self.half() + i as usize,
            _ => panic!("{s} is not a jet letter"),
        }
    }

    pub fn get(&self, s: Symbol) -> u32 {
        self.exps[self.slot(s)]
    }

    fn bump(&mut self, s: Symbol, by: u32) {
        let k = self.slot(s);
        self.exps[k] += by;
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `Some(self - other)` when `other` divides `self` componentwise.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(ExponentVector { exps })
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Re-embeds into a jet order `m ≥ order`.
    pub fn lift(&self, m: u32) -> ExponentVector {
        let mut e = Self::zero(m);
        for (i, &v) in self.ex().iter().enumerate() {
            e.exps[i] = v;
        }
        let h = e.half();
        for (i, &v) in self.ey().iter().enumerate() {
            e.exps[h + i] = v;
        }
        e
    }

    /// Letters of the x-first normal word with these exponents.
    pub fn letters(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        let xs = self
            .ex()
            .iter()
            .enumerate()
            .map(|(i, &e)| (Symbol::X(i as u32), e));
        let ys = self
            .ey()
            .iter()
            .enumerate()
            .map(|(i, &e)| (Symbol::Y(i as u32), e));
        xs.chain(ys).filter(|&(_, e)| e > 0)
    }

    pub fn to_word(&self) -> Word {
        Word(
            self.letters()
                .flat_map(|(s, e)| std::iter::repeat_n(s, e as usize))
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        render_powers(self.letters().map(|(s, e)| (s.to_string(), e)))
    }
}

/// An element of the jet algebra of order `n`, stored by its x-first normal
/// form: a map from exponent vectors to nonzero coefficients in ℚ(q).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetPoly {
    order: u32,
    terms: BTreeMap<ExponentVector, QScalar>,
}

impl JetPoly {
    pub fn zero(n: u32) -> Self {
        JetPoly {
            order: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: u32, c: QScalar) -> Self {
        Self::monomial(ExponentVector::zero(n), c)
    }

    pub fn one(n: u32) -> Self {
        Self::constant(n, QScalar::one())
    }

    pub fn monomial(e: ExponentVector, c: QScalar) -> Self {
        let mut p = JetPoly::zero(e.order());
        p.add_term(e, c);
        p
    }

    /// A single jet letter such as `x''` or `y`.
    pub fn symbol(n: u32, s: Symbol) -> Self {
        Self::monomial(ExponentVector::of_symbol(n, s), QScalar::one())
    }

    pub fn x(n: u32, i: u32) -> Self {
        Self::symbol(n, Symbol::X(i))
    }

    pub fn y(n: u32, i: u32) -> Self {
        Self::symbol(n, Symbol::Y(i))
    }

    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (ExponentVector, QScalar)>) -> Self {
        let mut p = JetPoly::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &ExponentVector) -> QScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: ExponentVector, c: QScalar) {
        assert_eq!(e.order(), self.order, "exponent vector of the wrong order");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &QScalar) -> JetPoly {
        if c.is_zero() {
            return JetPoly::zero(self.order);
        }
        JetPoly {
            order: self.order,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// The image of a free-algebra element: normalize, then read exponents.
    pub fn from_free(p: &NcPoly, n: u32) -> Result<Self, AlgebraError> {
        if let Some(m) = p.max_jet_order() {
            if m > n {
                return Err(AlgebraError::JetOrderOverflow { found: m, max: n });
            }
        }
        let nf = jet_relations(n).normalize(p)?;
        Ok(Self::from_normal_words(&nf, n))
    }

    /// Reads exponents off words that are already in x-first normal form.
    pub(crate) fn from_normal_words(nf: &NcPoly, n: u32) -> Self {
        let mut out = JetPoly::zero(n);
        for (w, c) in nf.terms() {
            let mut e = ExponentVector::zero(n);
            for &s in w.letters() {
                e.bump(s, 1);
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// The x-first normal word representative in the free algebra.
    pub fn to_free(&self) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(e, c)| (e.to_word(), c.clone())))
    }

    /// Re-embeds into order `m ≥ order`.
    pub fn lift(&self, m: u32) -> JetPoly {
        assert!(m >= self.order, "cannot lift order {} to {m}", self.order);
        JetPoly {
            order: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.lift(m), c.clone()))
                .collect(),
        }
    }

    /// Drops back to order `m` if no letter above `m` occurs.
    pub fn restrict(&self, m: u32) -> Option<JetPoly> {
        let mut out = JetPoly::zero(m);
        for (e, c) in &self.terms {
            if e.letters().any(|(s, _)| s.order() > m) {
                return None;
            }
            let ex = &e.ex()[..=m as usize];
            let ey = &e.ey()[..=m as usize];
            out.add_term(ExponentVector::from_parts(ex, ey), c.clone());
        }
        Some(out)
    }

    /// The set Γ of bi-degrees carrying a nonzero part.
    pub fn support(&self) -> BTreeSet<BiDegree> {
        self.terms.keys().map(ExponentVector::bidegree).collect()
    }

    /// `#Γ`; zero exactly for the zero element.
    pub fn size(&self) -> usize {
        self.support().len()
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.size() == 1
    }

    /// The bi-degree of a bi-homogeneous element.
    pub fn bidegree(&self) -> Option<BiDegree> {
        let s = self.support();
        (s.len() == 1).then(|| *s.iter().next().expect("one element"))
    }

    /// The part of bi-degree `d` (zero when `d ∉ Γ`).
    pub fn component(&self, d: BiDegree) -> JetPoly {
        JetPoly {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.bidegree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// All bi-homogeneous parts, keyed by bi-degree.
    pub fn components(&self) -> BTreeMap<BiDegree, JetPoly> {
        let mut out: BTreeMap<BiDegree, JetPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.bidegree())
                .or_insert_with(|| JetPoly::zero(self.order))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    /// Keeps the terms of total degree at most `max`.
    pub fn truncate(&self, max: u32) -> JetPoly {
        JetPoly {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets every x-letter to zero.
    pub fn drop_x(&self) -> JetPoly {
        self.filter_terms(|e| e.ex().iter().all(|&v| v == 0))
    }

    /// Sets every y-letter to zero.
    pub fn drop_y(&self) -> JetPoly {
        self.filter_terms(|e| e.ey().iter().all(|&v| v == 0))
    }

    fn filter_terms(&self, keep: impl Fn(&ExponentVector) -> bool) -> JetPoly {
        JetPoly {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in display order: ascending total degree, then descending exponents.
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, &QScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            a.0.total_degree()
                .cmp(&b.0.total_degree())
                .then_with(|| b.0.flat().cmp(a.0.flat()))
        });
        v
    }

    /// Machine-readable form with integer-string coefficients.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                json!({
                    "coeff": {"num": coeff_strings(c.numer()), "den": coeff_strings(c.denom())},
                    "ex": e.ex(),
                    "ey": e.ey(),
                })
            })
            .collect();
        json!({"order": self.order, "terms": terms})
    }

    fn check_same_order(&self, other: &JetPoly) -> Result<(), AlgebraError> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &JetPoly) -> Result<JetPoly, AlgebraError> {
        self.check_same_order(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &JetPoly) -> Result<JetPoly, AlgebraError> {
        self.checked_add(&-other)
    }

    /// The ordinary commutative product in `k[x, …, y^(n)]`.
    pub fn commutative_mul(&self, other: &JetPoly) -> Result<JetPoly, AlgebraError> {
        self.check_same_order(other)?;
        let mut out = JetPoly::zero(self.order);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }
}

impl Add for &JetPoly {
    type Output = JetPoly;
    fn add(self, rhs: &JetPoly) -> JetPoly {
        self.checked_add(rhs).expect("jet orders must agree")
    }
}

impl Sub for &JetPoly {
    type Output = JetPoly;
    fn sub(self, rhs: &JetPoly) -> JetPoly {
        self.checked_sub(rhs).expect("jet orders must agree")
    }
}

impl Neg for &JetPoly {
    type Output = JetPoly;
    fn neg(self) -> JetPoly {
        self.scale(&-QScalar::one())
    }
}

impl fmt::Display for JetPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(
            self.sorted_terms()
                .into_iter()
                .map(|(e, c)| (e.render(), c)),
        ))
    }
}
