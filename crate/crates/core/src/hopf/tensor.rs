use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::AlgebraError;
use crate::freealg::{NcPoly, RewriteSystem, Word};
use crate::qcoeff::QScalar;
use crate::render::render_sum;

/// A finite sum of pure tensors `c · w_1 ⊗ … ⊗ w_k` of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Word>, QScalar>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(arity: usize) -> Self {
        let mut t = Tensor::zero(arity);
        t.add_term(vec![Word::empty(); arity], QScalar::one());
        t
    }

    /// The pure tensor `p_1 ⊗ … ⊗ p_k`, expanded.
    pub fn pure(legs: &[NcPoly]) -> Self {
        let mut acc = Tensor::one(0);
        for leg in legs {
            let mut next = Tensor::zero(acc.arity + 1);
            for (ws, c) in &acc.terms {
                for (w, d) in leg.terms() {
                    let mut key = ws.clone();
                    key.push(w.clone());
                    next.add_term(key, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: QScalar) {
        assert_eq!(legs.len(), self.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&legs) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(legs, sum);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, QScalar> {
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

    pub fn scale(&self, c: &QScalar) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (ws, d) in &self.terms {
            out.add_term(ws.clone(), d * c);
        }
        out
    }

    /// Leg-wise product `(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'`, without normalizing.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.arity, other.arity, "tensor arity");
        let mut out = Tensor::zero(self.arity);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let legs = a.iter().zip(b).map(|(u, v)| u.concat(v)).collect();
                out.add_term(legs, c * d);
            }
        }
        out
    }

    /// Normal form of every leg in its own system.
    pub fn normalize(&self, systems: &[&RewriteSystem]) -> Result<Tensor, AlgebraError> {
        assert_eq!(systems.len(), self.arity, "one system per leg");
        let mut out = Tensor::zero(self.arity);
        for (ws, c) in &self.terms {
            let legs = ws
                .iter()
                .zip(systems)
                .map(|(w, rs)| rs.normalize(&NcPoly::word(w.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            for (key, d) in Tensor::pure(&legs).terms {
                out.add_term(key, c * &d);
            }
        }
        Ok(out)
    }

    /// Replaces leg `k` by its image under `f`, splicing the legs of the image in its place.
    pub fn map_leg<F>(&self, k: usize, mut f: F) -> Result<Tensor, AlgebraError>
    where
        F: FnMut(&Word) -> Result<Tensor, AlgebraError>,
    {
        let mut out: Option<Tensor> = None;
        for (ws, c) in &self.terms {
            let image = f(&ws[k])?;
            let acc = out.get_or_insert_with(|| Tensor::zero(self.arity - 1 + image.arity));
            for (iw, d) in &image.terms {
                let mut legs = ws[..k].to_vec();
                legs.extend(iw.iter().cloned());
                legs.extend(ws[k + 1..].iter().cloned());
                acc.add_term(legs, c * d);
            }
        }
        Ok(out.unwrap_or_else(|| Tensor::zero(self.arity)))
    }

    /// Multiplies the legs together in order, giving an element of one algebra.
    pub fn multiply_legs(&self, rs: &RewriteSystem) -> Result<NcPoly, AlgebraError> {
        let mut out = NcPoly::zero();
        for (ws, c) in &self.terms {
            let w = ws.iter().fold(Word::empty(), |acc, w| acc.concat(w));
            out.add_term(w, c.clone());
        }
        rs.normalize(&out)
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (ws, c) in &rhs.terms {
            out.add_term(ws.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (ws, c) in &rhs.terms {
            out.add_term(ws.clone(), -c);
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leg = |w: &Word| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            }
        };
        f.write_str(&render_sum(self.terms.iter().map(|(ws, c)| {
            (ws.iter().map(leg).collect::<Vec<_>>().join("⊗"), c)
        })))
    }
}
