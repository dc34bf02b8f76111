//! Buchberger's algorithm in the commutative ring `k[x, …, x^(n), y, …, y^(n)]`
//! over `k = ℚ(q)`, tracking every basis element as a combination of the
//! input generators so that reductions yield explicit cofactors.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::AlgebraError;
use crate::jetalg::{ExponentVector, JetPoly};
use crate::qcoeff::QScalar;

/// Default cap on S-polynomial reductions.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Graded lexicographic order with `x > x' > … > x^(n) > y > … > y^(n)`.
pub fn grlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.flat().cmp(b.flat()))
}

/// Leading exponent and coefficient under [`grlex`].
pub fn leading_term(p: &JetPoly) -> Option<(&ExponentVector, &QScalar)> {
    p.terms().iter().max_by(|a, b| grlex(a.0, b.0))
}

fn monomial_times(p: &JetPoly, e: &ExponentVector, c: &QScalar) -> JetPoly {
    JetPoly::from_terms(
        p.order(),
        p.terms().iter().map(|(pe, pc)| (pe.add(e), pc * c)),
    )
}

/// A basis element with its expression in the original generators:
/// `poly = Σ_i repr[i] · generators[i]` (commutative products).
#[derive(Clone, Debug)]
struct Tracked {
    poly: JetPoly,
    repr: Vec<JetPoly>,
}

impl Tracked {
    fn lead(&self) -> (&ExponentVector, &QScalar) {
        leading_term(&self.poly).expect("basis elements are nonzero")
    }

    fn make_monic(self) -> Tracked {
        let inv = self.lead().1.inv().expect("nonzero");
        Tracked {
            poly: self.poly.scale(&inv),
            repr: self.repr.iter().map(|r| r.scale(&inv)).collect(),
        }
    }
}

fn axpy(acc: &mut Tracked, other: &Tracked, e: &ExponentVector, c: &QScalar) {
    acc.poly = &acc.poly + &monomial_times(&other.poly, e, c);
    for (r, o) in acc.repr.iter_mut().zip(&other.repr) {
        *r = &*r + &monomial_times(o, e, c);
    }
}

/// A Gröbner basis together with the change of basis back to the generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: u32,
    generators: Vec<JetPoly>,
    basis: Vec<Tracked>,
    reductions: usize,
}

/// Result of dividing a polynomial by a Gröbner basis.
#[derive(Clone, Debug)]
pub struct Division {
    pub remainder: JetPoly,
    /// Cofactors with respect to the original generators.
    pub cofactors: Vec<JetPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn generators(&self) -> &[JetPoly] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &JetPoly> {
        self.basis.iter().map(|t| &t.poly)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// S-polynomial reductions performed while building the basis.
    pub fn reductions(&self) -> usize {
        self.reductions
    }

    /// The expression of basis element `k` in terms of the generators.
    pub fn representation(&self, k: usize) -> &[JetPoly] {
        &self.basis[k].repr
    }

    /// Full division of `f` by the basis, reporting generator cofactors.
    pub fn divide(&self, f: &JetPoly) -> Result<Division, AlgebraError> {
        if f.order() != self.order {
            return Err(AlgebraError::OrderMismatch {
                left: f.order(),
                right: self.order,
            });
        }
        let (rem, quot) = reduce_full(f, &self.basis, self.generators.len());
        Ok(Division {
            remainder: rem.poly,
            cofactors: quot,
        })
    }

    pub fn reduces_to_zero(&self, f: &JetPoly) -> Result<bool, AlgebraError> {
        Ok(self.divide(f)?.remainder.is_zero())
    }
}

/// Reduces `f` completely modulo `basis`. Returns the remainder (with its
/// representation relative to `f`'s own, i.e. `f - Σ cof·gen`) and the
/// accumulated generator cofactors.
fn reduce_full(f: &JetPoly, basis: &[Tracked], ngens: usize) -> (Tracked, Vec<JetPoly>) {
    let n = f.order();
    let mut p = Tracked {
        poly: f.clone(),
        repr: vec![JetPoly::zero(n); ngens],
    };
    let mut remainder = JetPoly::zero(n);
    while let Some((lt, lc)) = leading_term(&p.poly).map(|(e, c)| (e.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|b| {
            let (be, bc) = b.lead();
            lt.checked_sub(be).map(|m| (b, m, bc.clone()))
        });
        match divisor {
            Some((b, m, bc)) => {
                let c = -(lc.checked_div(&bc).expect("nonzero lead"));
                axpy(&mut p, b, &m, &c);
            }
            None => {
                remainder.add_term(lt.clone(), lc.clone());
                p.poly.add_term(lt, -lc);
            }
        }
    }
    // p.repr accumulated -Σ cof·gen; flip the sign to get the cofactors.
    let cofactors = p.repr.iter().map(|r| -r).collect();
    (
        Tracked {
            poly: remainder,
            repr: p.repr,
        },
        cofactors,
    )
}

/// Computes a Gröbner basis of the ideal generated by `generators`.
///
/// Stops with [`AlgebraError::BudgetExhausted`] after `budget` S-polynomial
/// reductions.
pub fn buchberger(
    order: u32,
    generators: &[JetPoly],
    budget: usize,
) -> Result<GroebnerBasis, AlgebraError> {
    for g in generators {
        if g.order() != order {
            return Err(AlgebraError::OrderMismatch {
                left: g.order(),
                right: order,
            });
        }
    }
    let ngens = generators.len();
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut repr = vec![JetPoly::zero(order); ngens];
        repr[i] = JetPoly::one(order);
        basis.push(
            Tracked {
                poly: g.clone(),
                repr,
            }
            .make_monic(),
        );
    }

    let mut pairs: VecDeque<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let mut reductions = 0usize;
    while let Some((i, j)) = pairs.pop_front() {
        let (ei, _) = basis[i].lead();
        let (ej, _) = basis[j].lead();
        let lcm = ei.lcm(ej);
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if lcm == ei.add(ej) {
            continue;
        }
        if reductions >= budget {
            return Err(AlgebraError::BudgetExhausted(reductions));
        }
        reductions += 1;
        let mi = lcm.checked_sub(ei).expect("lcm");
        let mj = lcm.checked_sub(ej).expect("lcm");
        let mut s = Tracked {
            poly: JetPoly::zero(order),
            repr: vec![JetPoly::zero(order); ngens],
        };
        axpy(&mut s, &basis[i], &mi, &QScalar::one());
        axpy(&mut s, &basis[j], &mj, &-QScalar::one());
        let (rem, _) = reduce_full(&s.poly, &basis, ngens);
        if rem.poly.is_zero() {
            continue;
        }
        // rem.poly = s.poly - Σ cof·gen, and s.poly = Σ s.repr·gen.
        let repr = s.repr.iter().zip(&rem.repr).map(|(a, b)| a + b).collect();
        let new = Tracked {
            poly: rem.poly,
            repr,
        }
        .make_monic();
        let k = basis.len();
        basis.push(new);
        pairs.extend((0..k).map(|i| (i, k)));
    }

    // Drop elements whose leading monomial is a multiple of another's.
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (ea, _) = basis[a].lead();
            let (eb, _) = basis[b].lead();
            if eb.divides(ea) && (eb != ea || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(t, k)| k.then_some(t))
        .collect();
    Ok(GroebnerBasis {
        order,
        generators: generators.to_vec(),
        basis,
        reductions,
    })
}
