//! Text rendering of `IntPoly` and `QScalar` in the expression grammar.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{IntPoly, QScalar};

fn write_laurent(f: &mut impl Write, terms: &[(BigRational, i64)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_char('0');
    }
    for (idx, (c, e)) in terms.iter().enumerate() {
        if c.is_negative() {
            f.write_char('-')?;
        } else if idx > 0 {
            f.write_char('+')?;
        }
        let mag = c.abs();
        match (*e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => write_q(f, *e)?,
            (_, false) => {
                write!(f, "{mag}*")?;
                write_q(f, *e)?;
            }
        }
    }
    Ok(())
}

fn write_q(f: &mut impl Write, e: i64) -> fmt::Result {
    if e == 1 {
        f.write_char('q')
    } else {
        write!(f, "q^{e}")
    }
}

fn poly_terms(p: &IntPoly) -> Vec<(BigRational, i64)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| (BigRational::from_integer(c.clone()), i as i64))
        .collect()
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_laurent(f, &poly_terms(self))
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.laurent_terms() {
            return write_laurent(f, &terms);
        }
        let wrap = |p: &IntPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(self.numer()), wrap(self.denom()))
    }
}

impl QScalar {
    /// Whether the rendering is a single signed product, so it can prefix a
    /// monomial as `c*m` without parentheses.
    pub fn renders_atomic(&self) -> bool {
        self.laurent_terms().is_some_and(|t| t.len() == 1)
    }

    /// Rendering used as a coefficient in front of a monomial.
    pub fn coefficient_string(&self) -> String {
        if self.renders_atomic() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

/// Integer-string encoding of ascending coefficients, for JSON output.
pub fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}
