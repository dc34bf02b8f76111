//! q-integers, q-factorials, Gauss polynomials and cyclotomic polynomials.

use num_rational::BigRational;

use super::IntPoly;
use crate::error::AlgebraError;

/// `(n)_q = 1 + q + … + q^(n-1)`; zero for `n = 0`.
pub fn q_integer(n: u32) -> IntPoly {
    IntPoly::from_coeffs(vec![1.into(); n as usize])
}

/// `(n)!_q = (1)_q (2)_q … (n)_q`, with `(0)!_q = 1`.
pub fn q_factorial(n: u32) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// The Gauss polynomial `binom(n, k)_q`, computed by exact division of q-factorials.
pub fn gauss_binomial(n: u32, k: u32) -> Result<IntPoly, AlgebraError> {
    if k > n {
        return Err(AlgebraError::BinomialRange { n, k });
    }
    let den = &q_factorial(k) * &q_factorial(n - k);
    Ok(q_factorial(n)
        .div_exact(&den)
        .expect("q-factorials are monic, so the quotient is integral"))
}

/// Exact rational evaluation of a polynomial in `q`.
pub fn evaluate_at(p: &IntPoly, v: &BigRational) -> BigRational {
    p.evaluate(v)
}

/// The cyclotomic polynomial `Φ_m`, built from `q^m - 1 = Π_{d | m} Φ_d`.
pub fn cyclotomic(m: u32) -> Result<IntPoly, AlgebraError> {
    if m < 2 {
        return Err(AlgebraError::CyclotomicIndex(m));
    }
    Ok(cyclotomic_unchecked(m))
}

fn cyclotomic_unchecked(m: u32) -> IntPoly {
    let mut p = &IntPoly::monomial(1, m as usize) - &IntPoly::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi = if d == 1 {
                IntPoly::from_i64s(&[-1, 1])
            } else {
                cyclotomic_unchecked(d)
            };
            p = p.div_exact(&phi).expect("Φ_d divides q^m - 1");
        }
    }
    p
}

/// Whether `d` divides `p` over ℚ.
pub fn divides(d: &IntPoly, p: &IntPoly) -> Result<bool, AlgebraError> {
    if d.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(d.divides(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Independent route: q-Pascal recursion seeded at binom(m, 0) = 1.
    fn pascal(n: u32, k: u32) -> IntPoly {
        if k == 0 || k == n {
            return IntPoly::one();
        }
        &pascal(n - 1, k - 1) + &pascal(n - 1, k).shift(k as usize)
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), p(&[1]));
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0), p(&[1]));
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn gauss_polynomials() {
        for n in 0..8 {
            assert_eq!(gauss_binomial(n, 0).unwrap(), IntPoly::one());
        }
        assert_eq!(gauss_binomial(4, 2).unwrap(), pascal(4, 2));
        assert_eq!(gauss_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        let one = BigRational::one();
        assert_eq!(
            evaluate_at(&gauss_binomial(5, 2).unwrap(), &one),
            BigRational::from_integer(10.into())
        );
        assert_eq!(
            evaluate_at(&gauss_binomial(6, 3).unwrap(), &one),
            BigRational::from_integer(20.into())
        );
        assert!(gauss_binomial(2, 3).is_err());
    }

    #[test]
    fn division_route_matches_pascal_route() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(gauss_binomial(n, k).unwrap(), pascal(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn gauss_coefficients_are_nonnegative() {
        for n in 0..=10 {
            for k in 0..=n {
                let g = gauss_binomial(n, k).unwrap();
                assert!(g.coeffs().iter().all(|c| c >= &0.into()));
            }
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(5).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert!(cyclotomic(1).is_err());
    }

    #[test]
    fn divisibility() {
        assert!(divides(&p(&[1, 1]), &p(&[1, 0, -1])).unwrap());
        assert!(divides(&cyclotomic(5).unwrap(), &gauss_binomial(5, 2).unwrap()).unwrap());
        assert!(!divides(&p(&[1, 1]), &p(&[1, 1, 1])).unwrap());
        assert!(divides(&IntPoly::zero(), &p(&[1])).is_err());
    }
}
