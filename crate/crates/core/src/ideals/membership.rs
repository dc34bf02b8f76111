use serde_json::{json, Value};

use super::groebner::{buchberger, GroebnerBasis, DEFAULT_BUDGET};
use crate::error::AlgebraError;
use crate::jetalg::{mul_jet, JetPoly, TWIST_SIGN};
use crate::qcoeff::QScalar;

/// A finite list of generators at a fixed jet order.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPresentation {
    order: u32,
    generators: Vec<JetPoly>,
}

impl IdealPresentation {
    pub fn new(order: u32, generators: Vec<JetPoly>) -> Result<Self, AlgebraError> {
        for g in &generators {
            if g.order() != order {
                return Err(AlgebraError::OrderMismatch {
                    left: g.order(),
                    right: order,
                });
            }
        }
        Ok(IdealPresentation { order, generators })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn generators(&self) -> &[JetPoly] {
        &self.generators
    }

    /// Fails unless every nonzero generator is bi-homogeneous.
    pub fn require_bihomogeneous(&self) -> Result<(), AlgebraError> {
        match self.generators.iter().find(|g| g.size() > 1) {
            Some(g) => Err(AlgebraError::NotBihomogeneous(g.size())),
            None => Ok(()),
        }
    }

    /// The same generators viewed at a higher jet order.
    pub fn lift(&self, m: u32) -> IdealPresentation {
        IdealPresentation {
            order: m,
            generators: self.generators.iter().map(|g| g.lift(m)).collect(),
        }
    }
}

/// `f = Σ cofactor_k · T[index_k]` with commutative products.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub entries: Vec<(JetPoly, usize)>,
}

impl Certificate {
    /// Rebuilds the certified element with commutative products.
    pub fn replay_commutative(&self, ideal: &IdealPresentation) -> Result<JetPoly, AlgebraError> {
        let mut acc = JetPoly::zero(ideal.order());
        for (cof, i) in &self.entries {
            acc = acc.checked_add(&cof.commutative_mul(&ideal.generators()[*i])?)?;
        }
        Ok(acc)
    }

    /// Rebuilds the certified element inside the jet algebra using only
    /// left multiplication by monomials, `m · t = q^(σ l i) m t` for `m` of
    /// bi-degree `(k, l)` and `t` of bi-degree `(i, j)`.
    pub fn replay_twisted(&self, ideal: &IdealPresentation) -> Result<JetPoly, AlgebraError> {
        let mut acc = JetPoly::zero(ideal.order());
        for (cof, i) in &self.entries {
            let t = &ideal.generators()[*i];
            let ti = match t.bidegree() {
                Some(d) => i64::from(d.x),
                None => return Err(AlgebraError::NotBihomogeneous(t.size())),
            };
            for (e, c) in cof.terms() {
                let l = i64::from(e.bidegree().y);
                let untwist = QScalar::q_pow(-TWIST_SIGN * l * ti);
                let m = JetPoly::monomial(e.clone(), c * &untwist);
                acc = acc.checked_add(&mul_jet(&m, t)?)?;
            }
        }
        Ok(acc)
    }

    /// JSON array of `[cofactor, generator-index]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(c, i)| json!([c.to_string(), i]))
                .collect(),
        )
    }
}

#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub certificate: Option<Certificate>,
}

/// A two-sided ideal generated by bi-homogeneous elements, ready for
/// repeated membership queries.
///
/// Bi-homogeneous generators commute with monomials up to powers of `q`, so
/// the two-sided ideal they generate in the jet algebra has the same
/// elements as the commutative ideal they generate, bi-degree by bi-degree.
#[derive(Clone, Debug)]
pub struct BihomogeneousIdeal {
    presentation: IdealPresentation,
    basis: GroebnerBasis,
}

impl BihomogeneousIdeal {
    pub fn new(presentation: IdealPresentation) -> Result<Self, AlgebraError> {
        Self::with_budget(presentation, DEFAULT_BUDGET)
    }

    pub fn with_budget(
        presentation: IdealPresentation,
        budget: usize,
    ) -> Result<Self, AlgebraError> {
        presentation.require_bihomogeneous()?;
        let basis = buchberger(presentation.order(), presentation.generators(), budget)?;
        Ok(BihomogeneousIdeal {
            presentation,
            basis,
        })
    }

    pub fn presentation(&self) -> &IdealPresentation {
        &self.presentation
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn contains(&self, f: &JetPoly) -> Result<Membership, AlgebraError> {
        let ngens = self.presentation.generators().len();
        let mut total = vec![JetPoly::zero(f.order()); ngens];
        for part in f.components().values() {
            let div = self.basis.divide(part)?;
            if !div.remainder.is_zero() {
                return Ok(Membership {
                    member: false,
                    certificate: None,
                });
            }
            for (acc, c) in total.iter_mut().zip(div.cofactors) {
                *acc = &*acc + &c;
            }
        }
        let entries = total
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, i))
            .collect();
        Ok(Membership {
            member: true,
            certificate: Some(Certificate { entries }),
        })
    }

    pub fn is_member(&self, f: &JetPoly) -> Result<bool, AlgebraError> {
        Ok(self.contains(f)?.member)
    }
}

/// Membership of `f` in the two-sided ideal generated by bi-homogeneous `T`.
pub fn membership(f: &JetPoly, ideal: &IdealPresentation) -> Result<Membership, AlgebraError> {
    BihomogeneousIdeal::new(ideal.clone())?.contains(f)
}

/// Gröbner basis of the commutative ideal generated by bi-homogeneous `T`,
/// as a presentation.
pub fn groebner_presentation(
    ideal: &IdealPresentation,
    budget: usize,
) -> Result<IdealPresentation, AlgebraError> {
    ideal.require_bihomogeneous()?;
    let gb = buchberger(ideal.order(), ideal.generators(), budget)?;
    IdealPresentation::new(ideal.order(), gb.elements().cloned().collect())
}

/// Per-generator outcome of the δ-stability check.
#[derive(Clone, Debug)]
pub struct DeltaStability {
    pub stable: bool,
    /// Generators whose derivative lies outside the prolonged ideal.
    pub failures: Vec<usize>,
    /// Generators that use a top-order letter and are prolonged.
    pub frontier: Vec<usize>,
}

/// Whether `δT ⊂ <T>` holds for a presentation truncated at order `n`.
///
/// Derivatives land at order `n + 1`. Generators that use an order-`n`
/// letter sit on the truncation boundary; their derivatives are adjoined
/// as first prolongations. Every generator's derivative must then lie in
/// the order-`n + 1` ideal spanned by `T` and those prolongations, which
/// for boundary generators holds by construction and for the others is the
/// actual content of the check.
pub fn is_delta_stable(ideal: &IdealPresentation) -> Result<DeltaStability, AlgebraError> {
    is_delta_stable_with_budget(ideal, DEFAULT_BUDGET)
}

/// [`is_delta_stable`] with an explicit Buchberger budget.
pub fn is_delta_stable_with_budget(
    ideal: &IdealPresentation,
    budget: usize,
) -> Result<DeltaStability, AlgebraError> {
    ideal.require_bihomogeneous()?;
    let n = ideal.order();
    let on_boundary = |g: &JetPoly| {
        g.terms()
            .keys()
            .any(|e| e.letters().any(|(s, _)| s.order() == n))
    };
    let frontier: Vec<usize> = ideal
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| on_boundary(g))
        .map(|(i, _)| i)
        .collect();
    let derivatives: Vec<JetPoly> = ideal
        .generators()
        .iter()
        .map(crate::jetalg::delta_jet)
        .collect();
    let mut gens = ideal.lift(n + 1).generators().to_vec();
    gens.extend(frontier.iter().map(|&i| derivatives[i].clone()));
    let prolonged = BihomogeneousIdeal::with_budget(IdealPresentation::new(n + 1, gens)?, budget)?;
    let mut failures = Vec::new();
    for (i, d) in derivatives.iter().enumerate() {
        if !prolonged.is_member(d)? {
            failures.push(i);
        }
    }
    Ok(DeltaStability {
        stable: failures.is_empty(),
        failures,
        frontier,
    })
}

/// Images of the generators in `k[y, …, y^(n)]` after setting every x-letter to zero.
pub fn quotient_by_x(ideal: &IdealPresentation) -> Vec<JetPoly> {
    ideal
        .generators()
        .iter()
        .map(JetPoly::drop_x)
        .filter(|g| !g.is_zero())
        .collect()
}

/// Images of the generators in `k[x, …, x^(n)]` after setting every y-letter to zero.
pub fn quotient_by_y(ideal: &IdealPresentation) -> Vec<JetPoly> {
    ideal
        .generators()
        .iter()
        .map(JetPoly::drop_y)
        .filter(|g| !g.is_zero())
        .collect()
}
