use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::qcoeff::QScalar;
use crate::render::{render_powers, render_sum};

/// A letter of the free algebra: a jet coordinate or a GL_q(2) generator.
///
/// The derived order is the alphabet order used by every rewrite system:
/// `X_0 < X_1 < … < Y_0 < Y_1 < … < a < b < c < d < Dinv`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    X(u32),
    Y(u32),
    A,
    B,
    C,
    D,
    /// Formal inverse of the quantum determinant.
    Dinv,
}

impl Symbol {
    /// Jet order; zero for GL_q(2) generators.
    pub fn order(self) -> u32 {
        match self {
            Symbol::X(i) | Symbol::Y(i) => i,
            _ => 0,
        }
    }

    pub fn is_jet(self) -> bool {
        matches!(self, Symbol::X(_) | Symbol::Y(_))
    }

    /// The next jet coordinate of the same family (`δx^(i) = x^(i+1)`).
    pub fn derivative(self) -> Option<Symbol> {
        match self {
            Symbol::X(i) => Some(Symbol::X(i + 1)),
            Symbol::Y(i) => Some(Symbol::Y(i + 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let jet = |f: &mut fmt::Formatter<'_>, base: char, i: u32| match i {
            0 => write!(f, "{base}"),
            1 => write!(f, "{base}'"),
            2 => write!(f, "{base}''"),
            _ => write!(f, "{base}^({i})"),
        };
        match *self {
            Symbol::X(i) => jet(f, 'x', i),
            Symbol::Y(i) => jet(f, 'y', i),
            Symbol::A => f.write_str("a"),
            Symbol::B => f.write_str("b"),
            Symbol::C => f.write_str("c"),
            Symbol::D => f.write_str("d"),
            Symbol::Dinv => f.write_str("Dinv"),
        }
    }
}

/// A monomial of the free algebra. The empty word is the identity.
///
/// Words are ordered graded-lexicographically: first by length, then
/// letter by letter in alphabet order. Every rewrite rule decreases a word
/// in this order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(s: Symbol) -> Self {
        Word(vec![s])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|&&t| t == s).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut runs: Vec<(String, u32)> = Vec::new();
        let mut prev: Option<Symbol> = None;
        for &s in &self.0 {
            if prev == Some(s) {
                if let Some(last) = runs.last_mut() {
                    last.1 += 1;
                }
            } else {
                runs.push((s.to_string(), 1));
            }
            prev = Some(s);
        }
        f.write_str(&render_powers(runs))
    }
}

/// An element of a free algebra over ℚ(q): a finite map from words to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NcPoly {
    terms: BTreeMap<Word, QScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::scalar(QScalar::one())
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::term(Word::letter(s), QScalar::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, QScalar::one())
    }

    pub fn term(w: Word, c: QScalar) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, QScalar)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c * w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, QScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, QScalar> {
        self.terms
    }

    pub(crate) fn pop_largest(&mut self) -> Option<(Word, QScalar)> {
        self.terms.pop_last()
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

    pub fn coeff(&self, w: &Word) -> QScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &QScalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Highest jet order among the letters, if any jet letter occurs.
    pub fn max_jet_order(&self) -> Option<u32> {
        self.symbols()
            .filter(|s| s.is_jet())
            .map(Symbol::order)
            .max()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.terms.keys().flat_map(|w| w.0.iter().copied())
    }

    /// Longest word length; zero for constants and for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

/// Product in the free algebra: bilinear extension of concatenation.
pub fn nc_mul(p: &NcPoly, r: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w1, c1) in &p.terms {
        for (w2, c2) in &r.terms {
            out.add_term(w1.concat(w2), c1 * c2);
        }
    }
    out
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&-QScalar::one())
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        nc_mul(self, rhs)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(
            self.terms.iter().map(|(w, c)| (w.to_string(), c)),
        ))
    }
}
