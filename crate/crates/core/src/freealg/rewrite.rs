//! Oriented quadratic relations and the normal-form reducer.

use std::collections::{BTreeMap, HashMap};

use super::poly::{NcPoly, Symbol, Word};
use crate::error::AlgebraError;
use crate::qcoeff::QScalar;

/// A rule `lhs → rhs` whose left-hand side is a two-letter word.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: (Symbol, Symbol),
    pub rhs: NcPoly,
}

impl Rule {
    pub fn lhs_word(&self) -> Word {
        Word(vec![self.lhs.0, self.lhs.1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// Relations of the jet algebra of the given order.
    Jet(u32),
    /// GL_q(2) with the adjoined inverse determinant.
    Glq2,
    /// All letters commute; used as a control.
    Commutative,
}

/// Which redex of a word is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedexOrder {
    Leftmost,
    Rightmost,
}

/// A finite alphabet with quadratic rewrite rules.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    name: String,
    kind: SystemKind,
    alphabet: Vec<Symbol>,
    rules: Vec<Rule>,
    index: HashMap<(Symbol, Symbol), usize>,
}

/// Outcome of a normalization with the number of rewrite steps taken.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub poly: NcPoly,
    pub steps: usize,
}

/// An overlap `s1 s2 s3` where rules fire on both `s1 s2` and `s2 s3`.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub via_prefix: NcPoly,
    pub via_suffix: NcPoly,
}

impl CriticalPair {
    pub fn resolves(&self) -> bool {
        self.via_prefix == self.via_suffix
    }
}

impl RewriteSystem {
    pub fn new(
        name: impl Into<String>,
        kind: SystemKind,
        alphabet: Vec<Symbol>,
        rules: Vec<Rule>,
    ) -> Self {
        let index = rules.iter().enumerate().map(|(i, r)| (r.lhs, i)).collect();
        let mut alphabet = alphabet;
        alphabet.sort();
        RewriteSystem {
            name: name.into(),
            kind,
            alphabet,
            rules,
            index,
        }
    }

    /// Every letter commutes with every other: `ts → st` for `t > s`.
    pub fn commutative(name: impl Into<String>, alphabet: Vec<Symbol>) -> Self {
        let mut rules = Vec::new();
        for &s in &alphabet {
            for &t in &alphabet {
                if t > s {
                    rules.push(Rule {
                        lhs: (t, s),
                        rhs: NcPoly::word(Word(vec![s, t])),
                    });
                }
            }
        }
        Self::new(name, SystemKind::Commutative, alphabet, rules)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn rule_for(&self, a: Symbol, b: Symbol) -> Option<&Rule> {
        self.index.get(&(a, b)).map(|&i| &self.rules[i])
    }

    /// Whether each left-hand side exceeds every word on its right-hand side.
    pub fn rules_decrease(&self) -> bool {
        self.rules
            .iter()
            .all(|r| r.rhs.terms().keys().all(|w| *w < r.lhs_word()))
    }

    fn first_redex(&self, w: &Word) -> Option<(usize, &Rule)> {
        w.0.windows(2)
            .enumerate()
            .find_map(|(i, pair)| self.rule_for(pair[0], pair[1]).map(|r| (i, r)))
    }

    fn last_redex(&self, w: &Word) -> Option<(usize, &Rule)> {
        w.0.windows(2)
            .enumerate()
            .rev()
            .find_map(|(i, pair)| self.rule_for(pair[0], pair[1]).map(|r| (i, r)))
    }

    fn check_alphabet(&self, p: &NcPoly) -> Result<(), AlgebraError> {
        for s in p.symbols() {
            if self.alphabet.binary_search(&s).is_err() {
                return Err(AlgebraError::ForeignSymbol {
                    symbol: s.to_string(),
                    system: self.name.clone(),
                });
            }
        }
        Ok(())
    }

    /// Whether no rule applies anywhere in `w`.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.first_redex(w).is_none()
            && !(self.kind == SystemKind::Glq2 && determinant_redex(w).is_some())
    }

    /// Reduces `p` to normal form, also reporting the number of rewrite steps.
    ///
    /// Each word is rewritten at its leftmost redex. Pending terms are kept
    /// in a map and the largest word is always processed next; since every
    /// rule replaces a word by strictly smaller ones, a word is never
    /// revisited and cancellations happen as early as possible.
    pub fn normalize_counted(&self, p: &NcPoly) -> Result<Normalized, AlgebraError> {
        self.normalize_with(p, RedexOrder::Leftmost)
    }

    /// Like [`Self::normalize_counted`], choosing the redex by `order`.
    pub fn normalize_with(
        &self,
        p: &NcPoly,
        order: RedexOrder,
    ) -> Result<Normalized, AlgebraError> {
        self.check_alphabet(p)?;
        let mut pending = p.clone();
        let mut done: BTreeMap<Word, QScalar> = BTreeMap::new();
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_largest() {
            let redex = match order {
                RedexOrder::Leftmost => self.first_redex(&w),
                RedexOrder::Rightmost => self.last_redex(&w),
            };
            match redex {
                None => {
                    done.insert(w, c);
                }
                Some((pos, rule)) => {
                    steps += 1;
                    for (rw, rc) in rule.rhs.terms() {
                        let mut letters = Vec::with_capacity(w.len() + rw.len() - 2);
                        letters.extend_from_slice(&w.0[..pos]);
                        letters.extend_from_slice(&rw.0);
                        letters.extend_from_slice(&w.0[pos + 2..]);
                        pending.add_term(Word(letters), &c * rc);
                    }
                }
            }
        }
        let mut poly = NcPoly::from_terms(done);
        if self.kind == SystemKind::Glq2 {
            let (cancelled, extra) = cancel_determinants(poly);
            poly = cancelled;
            steps += extra;
        }
        Ok(Normalized { poly, steps })
    }

    pub fn normalize(&self, p: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.normalize_counted(p).map(|n| n.poly)
    }

    /// Applies `rule` once at `pos` in `w`; the caller guarantees the match.
    fn rewrite_at(&self, w: &Word, pos: usize, rule: &Rule) -> NcPoly {
        let prefix = Word(w.0[..pos].to_vec());
        let suffix = Word(w.0[pos + 2..].to_vec());
        NcPoly::from_terms(
            rule.rhs
                .terms()
                .iter()
                .map(|(rw, rc)| (prefix.concat(rw).concat(&suffix), rc.clone())),
        )
    }

    /// All three-letter overlaps of left-hand sides, each resolved both ways.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>, AlgebraError> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs.1 != r2.lhs.0 {
                    continue;
                }
                let word = Word(vec![r1.lhs.0, r1.lhs.1, r2.lhs.1]);
                let via_prefix = self.normalize(&self.rewrite_at(&word, 0, r1))?;
                let via_suffix = self.normalize(&self.rewrite_at(&word, 1, r2))?;
                out.push(CriticalPair {
                    word,
                    via_prefix,
                    via_suffix,
                });
            }
        }
        Ok(out)
    }
}

/// Splits a GL_q(2) normal word `a^i b^j c^k d^l Dinv^m` into its exponents.
fn glq2_exponents(w: &Word) -> Option<[usize; 5]> {
    let mut e = [0usize; 5];
    let mut last = 0usize;
    for &s in w.letters() {
        let slot = match s {
            Symbol::A => 0,
            Symbol::B => 1,
            Symbol::C => 2,
            Symbol::D => 3,
            Symbol::Dinv => 4,
            _ => return None,
        };
        if slot < last {
            return None;
        }
        last = slot;
        e[slot] += 1;
    }
    Some(e)
}

fn glq2_word(e: [usize; 5]) -> Word {
    let letters = [Symbol::A, Symbol::B, Symbol::C, Symbol::D, Symbol::Dinv];
    Word(
        letters
            .iter()
            .zip(e)
            .flat_map(|(&s, k)| std::iter::repeat_n(s, k))
            .collect(),
    )
}

fn determinant_redex(w: &Word) -> Option<[usize; 5]> {
    glq2_exponents(w).filter(|e| e[0] >= 1 && e[3] >= 1 && e[4] >= 1)
}

/// Cancels `Dinv` against determinant factors in normal words.
///
/// With `ab = q⁻¹ba`, `ac = q⁻¹ca`, `bc = cb` and `ad = D + q⁻¹bc`:
/// `a^i b^j c^k d^l Dinv^m = q^-(j+k) a^(i-1) b^j c^k d^(l-1) Dinv^(m-1)
///  + q^-(j+k+1) a^(i-1) b^(j+1) c^(k+1) d^(l-1) Dinv^m`.
/// Both outputs are normal words with fewer `a` letters, so this terminates.
/// The irreducible words are those with no `Dinv` or without `a` or `d`.
fn cancel_determinants(p: NcPoly) -> (NcPoly, usize) {
    let mut steps = 0;
    let mut current = p;
    loop {
        let mut next = NcPoly::zero();
        let mut changed = false;
        for (w, c) in current.into_terms() {
            match determinant_redex(&w) {
                None => next.add_term(w, c),
                Some([i, j, k, l, m]) => {
                    changed = true;
                    steps += 1;
                    let shift = (j + k) as i64;
                    next.add_term(
                        glq2_word([i - 1, j, k, l - 1, m - 1]),
                        &c * &QScalar::q_pow(-shift),
                    );
                    next.add_term(
                        glq2_word([i - 1, j + 1, k + 1, l - 1, m]),
                        &c * &QScalar::q_pow(-shift - 1),
                    );
                }
            }
        }
        current = next;
        if !changed {
            return (current, steps);
        }
    }
}

/// The relations of the jet algebra of order `n`:
/// `Y_i X_j → q X_j Y_i`, `X_j X_i → X_i X_j` and `Y_j Y_i → Y_i Y_j` for `j > i`.
pub fn jet_relations(n: u32) -> RewriteSystem {
    let q = QScalar::q_pow(1);
    let mut rules = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            rules.push(Rule {
                lhs: (Symbol::Y(i), Symbol::X(j)),
                rhs: NcPoly::term(Word(vec![Symbol::X(j), Symbol::Y(i)]), q.clone()),
            });
        }
    }
    for family in [Symbol::X as fn(u32) -> Symbol, Symbol::Y] {
        for i in 0..=n {
            for j in i + 1..=n {
                rules.push(Rule {
                    lhs: (family(j), family(i)),
                    rhs: NcPoly::word(Word(vec![family(i), family(j)])),
                });
            }
        }
    }
    let alphabet = (0..=n)
        .map(Symbol::X)
        .chain((0..=n).map(Symbol::Y))
        .collect();
    RewriteSystem::new(format!("jet({n})"), SystemKind::Jet(n), alphabet, rules)
}

/// GL_q(2) relations oriented towards `a < b < c < d < Dinv`, with `Dinv` central.
pub fn glq2_relations() -> RewriteSystem {
    use Symbol::{Dinv, A, B, C, D};
    let q = QScalar::q_pow(1);
    let w = |s: &[Symbol]| Word(s.to_vec());
    let mut rules = vec![
        Rule {
            lhs: (B, A),
            rhs: NcPoly::term(w(&[A, B]), q.clone()),
        },
        Rule {
            lhs: (C, A),
            rhs: NcPoly::term(w(&[A, C]), q.clone()),
        },
        Rule {
            lhs: (D, C),
            rhs: NcPoly::term(w(&[C, D]), q.clone()),
        },
        Rule {
            lhs: (D, B),
            rhs: NcPoly::term(w(&[B, D]), q.clone()),
        },
        Rule {
            lhs: (C, B),
            rhs: NcPoly::word(w(&[B, C])),
        },
        Rule {
            lhs: (D, A),
            rhs: NcPoly::from_terms([
                (w(&[A, D]), QScalar::one()),
                (w(&[B, C]), &q - &QScalar::q_pow(-1)),
            ]),
        },
    ];
    for s in [A, B, C, D] {
        rules.push(Rule {
            lhs: (Dinv, s),
            rhs: NcPoly::word(w(&[s, Dinv])),
        });
    }
    RewriteSystem::new("glq2", SystemKind::Glq2, vec![A, B, C, D, Dinv], rules)
}

/// Normal form of `p` modulo `rs`.
pub fn normalize(p: &NcPoly, rs: &RewriteSystem) -> Result<NcPoly, AlgebraError> {
    rs.normalize(p)
}

/// Critical pairs of `rs`, each reduced along both overlapping rules.
pub fn critical_pairs(rs: &RewriteSystem) -> Result<Vec<CriticalPair>, AlgebraError> {
    rs.critical_pairs()
}
