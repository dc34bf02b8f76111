//! The textual expression language.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'|'/'] factor)*        juxtaposition is '*'
//! factor := atom ('^' ['-'] uint)*
//! atom   := var | 'q' | uint | '(' expr ')'
//! var    := ('x'|'y') ("'"* | '^(' uint ')')  jet mode
//!         | 'a' | 'b' | 'c' | 'd' | 'Dinv'    glq2 mode
//! ```
//!
//! Products keep the order in which they are written. Division and negative
//! powers are only allowed for scalars. Rendered elements parse back to
//! themselves.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{AlgebraError, InputError, ParseError};
use crate::freealg::{glq2_relations, nc_mul, NcPoly, Symbol};
use crate::jetalg::JetPoly;
use crate::qcoeff::{IntPoly, QScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Jet letters up to the given order.
    Jet(u32),
    Glq2,
}

/// Parse tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
    Product(Vec<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
    Var(Symbol),
    Q,
    Int(BigInt),
}

impl Expr {
    /// Evaluates in the free algebra, without applying any relations.
    pub fn to_free(&self) -> Result<NcPoly, AlgebraError> {
        Ok(match self {
            Expr::Sum(parts) => {
                let mut acc = NcPoly::zero();
                for p in parts {
                    acc = &acc + &p.to_free()?;
                }
                acc
            }
            Expr::Neg(e) => -&e.to_free()?,
            Expr::Product(parts) => {
                let mut acc = NcPoly::one();
                for p in parts {
                    acc = nc_mul(&acc, &p.to_free()?);
                }
                acc
            }
            Expr::Quotient(a, b) => {
                let d = as_scalar(&b.to_free()?)
                    .ok_or_else(|| AlgebraError::Unsupported("division by a non-scalar".into()))?;
                a.to_free()?.scale(&d.inv()?)
            }
            Expr::Power(base, k) => {
                let b = base.to_free()?;
                if *k < 0 {
                    let s = as_scalar(&b).ok_or_else(|| {
                        AlgebraError::Unsupported("negative power of a non-scalar".into())
                    })?;
                    NcPoly::scalar(s.pow(*k)?)
                } else {
                    let mut acc = NcPoly::one();
                    for _ in 0..*k {
                        acc = nc_mul(&acc, &b);
                    }
                    acc
                }
            }
            Expr::Var(s) => NcPoly::symbol(*s),
            Expr::Q => NcPoly::scalar(QScalar::q_pow(1)),
            Expr::Int(i) => NcPoly::scalar(QScalar::from_poly(IntPoly::constant(i.clone()))),
        })
    }
}

fn as_scalar(p: &NcPoly) -> Option<QScalar> {
    match p.terms().iter().next() {
        None => Some(QScalar::zero()),
        Some((w, c)) if p.len() == 1 && w.is_empty() => Some(c.clone()),
        _ => None,
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Expr::Quotient(a, b) => write!(f, "{a}/({b})"),
            Expr::Power(b, k) => write!(f, "({b})^{k}"),
            Expr::Var(s) => write!(f, "{s}"),
            Expr::Q => f.write_str("q"),
            Expr::Int(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Var(Symbol),
    Q,
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> InputError {
    InputError::Parse(ParseError {
        pos,
        msg: msg.into(),
    })
}

fn lex(text: &str, mode: Mode) -> Result<Vec<(usize, Tok)>, InputError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> Option<BigInt> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        (start < *i).then(|| text[start..*i].parse().expect("digits"))
    };
    while i < bytes.len() {
        let start = i;
        let ch = bytes[i];
        let tok = match ch {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let v = digits(&mut i).expect("digit");
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'q' => Tok::Q,
            b'x' | b'y' => {
                let Mode::Jet(n) = mode else {
                    return Err(err(
                        start,
                        format!("unknown symbol '{}' in glq2 mode", ch as char),
                    ));
                };
                i += 1;
                let mut order = 0u32;
                if text[i..].starts_with("^(") {
                    i += 2;
                    let v = digits(&mut i).ok_or_else(|| err(i, "expected jet order"))?;
                    if bytes.get(i) != Some(&b')') {
                        return Err(err(i, "expected ')'"));
                    }
                    i += 1;
                    order = u32::try_from(v).map_err(|_| err(start, "jet order too large"))?;
                } else {
                    while bytes.get(i) == Some(&b'\'') {
                        order += 1;
                        i += 1;
                    }
                }
                if order > n {
                    return Err(InputError::Algebra(AlgebraError::JetOrderOverflow {
                        found: order,
                        max: n,
                    }));
                }
                let s = if ch == b'x' {
                    Symbol::X(order)
                } else {
                    Symbol::Y(order)
                };
                out.push((start, Tok::Var(s)));
                continue;
            }
            b'a' | b'b' | b'c' | b'd' | b'D' if mode == Mode::Glq2 => {
                let s = match ch {
                    b'a' => Symbol::A,
                    b'b' => Symbol::B,
                    b'c' => Symbol::C,
                    b'd' => Symbol::D,
                    _ if text[i..].starts_with("Dinv") => {
                        i += 3;
                        Symbol::Dinv
                    }
                    _ => return Err(err(start, "unknown symbol 'D'")),
                };
                Tok::Var(s)
            }
            _ => {
                let c = text[i..].chars().next().expect("char");
                return Err(err(start, format!("unknown symbol '{c}'")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, InputError> {
        let mut parts = Vec::new();
        let mut negate = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        loop {
            let t = self.term()?;
            parts.push(if negate { Expr::Neg(Box::new(t)) } else { t });
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Expr::Sum(parts)
        })
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Var(_) | Tok::Q | Tok::Int(_) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Expr, InputError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Slash) {
                let d = self.factor()?;
                acc = Expr::Quotient(Box::new(acc), Box::new(d));
                continue;
            }
            let explicit = self.eat(&Tok::Star);
            if !explicit && !self.starts_atom() {
                break;
            }
            let rhs = self.factor()?;
            acc = match acc {
                Expr::Product(mut v) => {
                    v.push(rhs);
                    Expr::Product(v)
                }
                other => Expr::Product(vec![other, rhs]),
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, InputError> {
        let mut base = self.atom()?;
        while self.eat(&Tok::Caret) {
            let negative = self.eat(&Tok::Minus);
            let at = self.offset();
            let Some(Tok::Int(k)) = self.peek().cloned() else {
                return Err(err(at, "expected an integer exponent"));
            };
            self.pos += 1;
            let k = i64::try_from(k).map_err(|_| err(at, "exponent too large"))?;
            base = Expr::Power(Box::new(base), if negative { -k } else { k });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, InputError> {
        let at = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Var(s) => Ok(Expr::Var(s)),
            Tok::Q => Ok(Expr::Q),
            Tok::Int(i) => Ok(Expr::Int(i)),
            Tok::LParen => {
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(err(self.offset(), "expected ')'"));
                }
                Ok(e)
            }
            _ => Err(err(at, "expected a variable, scalar or '('")),
        }
    }
}

/// Parses `text` into a tree. Jet letters above the session order and
/// letters foreign to the mode are rejected.
pub fn parse(text: &str, mode: Mode) -> Result<Expr, InputError> {
    let toks = lex(text, mode)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.offset(), "unexpected token"));
    }
    Ok(e)
}

/// Parses a jet-algebra element and brings it to normal form.
pub fn parse_jet(text: &str, n: u32) -> Result<JetPoly, InputError> {
    let free = parse(text, Mode::Jet(n))?.to_free()?;
    Ok(JetPoly::from_free(&free, n)?)
}

/// Parses a free-algebra element on jet letters without normalizing.
pub fn parse_free(text: &str, n: u32) -> Result<NcPoly, InputError> {
    Ok(parse(text, Mode::Jet(n))?.to_free()?)
}

/// Parses a GL_q(2) element and brings it to normal form.
pub fn parse_glq2(text: &str) -> Result<NcPoly, InputError> {
    let free = parse(text, Mode::Glq2)?.to_free()?;
    Ok(glq2_relations().normalize(&free)?)
}

/// Parses a scalar in ℚ(q).
pub fn parse_scalar(text: &str) -> Result<QScalar, InputError> {
    let free = parse(text, Mode::Jet(0))?.to_free()?;
    as_scalar(&free).ok_or_else(|| err(0, "expected a scalar"))
}
