use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::AlgebraError;

/// An element of the rational function field ℚ(q).
///
/// Stored as `num / den` with `num, den ∈ ℤ[q]`, `gcd(num, den) = 1` in ℤ[q]
/// and `den` carrying a positive leading coefficient. Zero is `0 / 1`. With
/// this form, derived equality and hashing are mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: IntPoly,
    den: IntPoly,
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
        .expect("rational with nonzero denominator")
    }

    pub fn from_poly(num: IntPoly) -> Self {
        QScalar {
            num,
            den: IntPoly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = IntPoly::monomial(1, k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            QScalar {
                num: IntPoly::one(),
                den: mono,
            }
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QScalar { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QScalar { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the value lies in ℤ[q].
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Sign of the leading numerator coefficient; used for rendering.
    pub fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(Signed::is_negative)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QScalar) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs()).map_err(|_| AlgebraError::ExponentOverflow)?;
        Ok(QScalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Value at `q = v`; `None` when the denominator vanishes there.
    pub fn evaluate(&self, v: &BigRational) -> Option<BigRational> {
        let d = self.den.evaluate(v);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(v) / d)
    }

    /// Laurent form `Σ c_e q^e` (descending `e`) when the denominator is a monomial.
    pub fn laurent_terms(&self) -> Option<Vec<(BigRational, i64)>> {
        let (c, k) = self.den.as_monomial()?;
        let k = k as i64;
        let mut out = Vec::new();
        for (i, a) in self.num.coeffs().iter().enumerate().rev() {
            if !a.is_zero() {
                out.push((BigRational::new(a.clone(), c.clone()), i as i64 - k));
            }
        }
        Some(out)
    }

    /// Total order used only to make sorted output deterministic.
    pub fn cmp_canonical(&self, other: &QScalar) -> Ordering {
        self.den
            .cmp_canonical(&other.den)
            .then_with(|| self.num.cmp_canonical(&other.num))
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QScalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        QScalar::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel first so intermediate products stay small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cut = |p: &IntPoly, g: &IntPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let den = &cut(&self.den, &g2) * &cut(&rhs.den, &g1);
        QScalar::canonical(num, den)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = &*self * rhs;
    }
}

impl From<IntPoly> for QScalar {
    fn from(p: IntPoly) -> Self {
        QScalar::from_poly(p)
    }
}

impl From<i64> for QScalar {
    fn from(c: i64) -> Self {
        QScalar::from_int(c)
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::one()
    }
}

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_reduces() {
        let s = QScalar::new(p(&[-1, 0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(s, QScalar::from_poly(p(&[-1, 1])));
        let t = QScalar::new(p(&[2]), p(&[-4, -4])).unwrap();
        assert_eq!(t.numer(), &p(&[-1]));
        assert_eq!(t.denom(), &p(&[2, 2]));
    }

    #[test]
    fn q_powers() {
        let q = QScalar::q_pow(1);
        let qi = QScalar::q_pow(-1);
        assert!((&q * &qi).is_one());
        assert_eq!(QScalar::q_pow(-2).pow(-1).unwrap(), QScalar::q_pow(2));
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert_eq!(
            QScalar::new(p(&[1]), IntPoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
        assert!(QScalar::zero().inv().is_err());
    }

    #[test]
    fn laurent_view() {
        let s = &QScalar::q_pow(1) - &QScalar::q_pow(-1);
        let t = s.laurent_terms().unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].1, 1);
        assert_eq!(t[1].1, -1);
    }
}
