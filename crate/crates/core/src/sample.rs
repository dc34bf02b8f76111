//! Seeded random samplers shared by the property suites and the CLI.
//!
//! All samplers draw from a ChaCha8 stream, so results are reproducible
//! from the seed on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freealg::{NcPoly, Symbol, Word};
use crate::jetalg::{ExponentVector, JetPoly};
use crate::qcoeff::QScalar;

pub type SampleRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One of `±1, ±q, ±q⁻¹, q+1, q-1`.
pub fn random_coefficient(rng: &mut SampleRng) -> QScalar {
    let one = QScalar::one();
    match rng.gen_range(0..8) {
        0 => one,
        1 => -one,
        2 => QScalar::q_pow(1),
        3 => -QScalar::q_pow(1),
        4 => QScalar::q_pow(-1),
        5 => -QScalar::q_pow(-1),
        6 => &QScalar::q_pow(1) + &one,
        _ => &QScalar::q_pow(1) - &one,
    }
}

fn random_jet_symbol(rng: &mut SampleRng, n: u32) -> Symbol {
    let i = rng.gen_range(0..=n);
    if rng.gen_bool(0.5) {
        Symbol::X(i)
    } else {
        Symbol::Y(i)
    }
}

/// A free-algebra element on the order-`n` jet letters with words of length
/// at most `max_degree` in arbitrary letter order.
pub fn random_ncpoly(rng: &mut SampleRng, n: u32, max_degree: usize, max_terms: usize) -> NcPoly {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut p = NcPoly::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_degree);
        let word = Word((0..len).map(|_| random_jet_symbol(rng, n)).collect());
        p.add_term(word, random_coefficient(rng));
    }
    p
}

/// A uniformly drawn exponent vector of total degree at most `max_degree`.
pub fn random_exponents(rng: &mut SampleRng, n: u32, max_degree: u32) -> ExponentVector {
    let vars = 2 * (n as usize + 1);
    let total = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; vars];
    for _ in 0..total {
        e[rng.gen_range(0..vars)] += 1;
    }
    ExponentVector::from_flat(n, e)
}

/// A jet-algebra element with up to `max_terms` monomials of total degree ≤ `max_degree`.
pub fn random_jetpoly(rng: &mut SampleRng, n: u32, max_degree: u32, max_terms: usize) -> JetPoly {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut p = JetPoly::zero(n);
    for _ in 0..terms {
        let e = random_exponents(rng, n, max_degree);
        p.add_term(e, random_coefficient(rng));
    }
    p
}

/// Like [`random_jetpoly`] but never zero.
pub fn random_nonzero_jetpoly(
    rng: &mut SampleRng,
    n: u32,
    max_degree: u32,
    max_terms: usize,
) -> JetPoly {
    loop {
        let p = random_jetpoly(rng, n, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A word in `a, b, c, d` of length at most `max_len`, as a free-algebra element.
pub fn random_glq2_word(rng: &mut SampleRng, max_len: usize) -> NcPoly {
    let letters = [Symbol::A, Symbol::B, Symbol::C, Symbol::D];
    let len = rng.gen_range(0..=max_len);
    NcPoly::word(Word(
        (0..len).map(|_| letters[rng.gen_range(0..4)]).collect(),
    ))
}

/// A short linear combination of random GL_q(2) words.
pub fn random_glq2_poly(rng: &mut SampleRng, max_len: usize, max_terms: usize) -> NcPoly {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut p = NcPoly::zero();
    for _ in 0..terms {
        let w = random_glq2_word(rng, max_len);
        p = &p + &w.scale(&random_coefficient(rng));
    }
    p
}
