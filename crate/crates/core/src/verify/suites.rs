use std::time::Instant;

use crate::error::AlgebraError;
use crate::expr::parse_jet;
use crate::freealg::{
    glq2_relations, jet_relations, nc_delta, nc_mul, NcPoly, RedexOrder, RewriteSystem,
};
use crate::hopf;
use crate::ideals::{
    extract_bihomogeneous, is_delta_stable, predicted_support_x, predicted_support_y,
    primality_falsification, reduce_x, reduce_y, IdealPresentation,
};
use crate::jetalg::{
    delta_jet, mul_jet, pow_jet, q_exp_truncated, ExpArgument, ExponentVector, JetPoly,
};
use crate::qcoeff::{cyclotomic, divides, gauss_binomial, IntPoly, QScalar};
use crate::sample::{
    random_glq2_poly, random_jetpoly, random_ncpoly, random_nonzero_jetpoly, seeded,
};

use super::Report;

fn timed(suite: &str, body: impl FnOnce(&mut Report) -> Result<(), AlgebraError>) -> Report {
    let start = Instant::now();
    let mut report = Report::new(suite);
    if let Err(e) = body(&mut report) {
        report.push("error", false, e.to_string());
    }
    report.elapsed = start.elapsed();
    report
}

fn binom_or_zero(n: i64, k: i64) -> IntPoly {
    if n < 0 || k < 0 || k > n {
        return IntPoly::zero();
    }
    gauss_binomial(n as u32, k as u32).expect("in range")
}

fn mono(e: &[u32], f: &[u32]) -> ExponentVector {
    ExponentVector::from_parts(e, f)
}

/// `(x + y)^m = Σ_k [m choose k]_q x^k y^(m-k)` for `1 ≤ m ≤ max`.
pub fn qbinom(max: u32) -> Report {
    timed("qbinom", |r| {
        let s = &JetPoly::x(0, 0) + &JetPoly::y(0, 0);
        for m in 1..=max {
            let lhs = pow_jet(&s, m);
            let rhs = JetPoly::from_terms(
                0,
                (0..=m).map(|k| {
                    (
                        mono(&[k], &[m - k]),
                        QScalar::from_poly(binom_or_zero(m.into(), k.into())),
                    )
                }),
            );
            r.push(format!("m={m}"), lhs == rhs, format!("{} terms", lhs.len()));
        }
        Ok(())
    })
}

/// Both q-Pascal recursions for `n ≤ max` and q-Chu–Vandermonde for all
/// `m, n, p ≤ max`.
pub fn chu(max: u32) -> Report {
    timed("chu", |r| {
        let max = i64::from(max);
        let shift = |p: &IntPoly, k: i64| p.shift(k as usize);
        let mut pascal_ok = 0;
        let mut pascal_total = 0;
        for n in 1..=max {
            for k in 0..=n {
                let lhs = binom_or_zero(n, k);
                let first = &binom_or_zero(n - 1, k - 1) + &shift(&binom_or_zero(n - 1, k), k);
                let second = &binom_or_zero(n - 1, k) + &shift(&binom_or_zero(n - 1, k - 1), n - k);
                pascal_total += 1;
                if lhs == first && lhs == second {
                    pascal_ok += 1;
                } else {
                    r.push(
                        format!("pascal n={n} k={k}"),
                        false,
                        format!("{lhs} vs {first}, {second}"),
                    );
                }
            }
        }
        r.push(
            "q-Pascal",
            pascal_ok == pascal_total,
            format!("{pascal_ok}/{pascal_total} identities"),
        );
        let mut chu_ok = 0;
        let mut chu_total = 0;
        for m in 0..=max {
            for n in 0..=max {
                for p in 0..=max {
                    let lhs = binom_or_zero(m + n, p);
                    let mut rhs = IntPoly::zero();
                    for k in 0..=p.min(m) {
                        if p - k > n {
                            continue;
                        }
                        let term = &binom_or_zero(m, k) * &binom_or_zero(n, p - k);
                        rhs = &rhs + &shift(&term, (m - k) * (p - k));
                    }
                    chu_total += 1;
                    if lhs == rhs {
                        chu_ok += 1;
                    } else {
                        r.push(
                            format!("chu m={m} n={n} p={p}"),
                            false,
                            format!("{lhs} vs {rhs}"),
                        );
                    }
                }
            }
        }
        r.push(
            "q-Chu-Vandermonde",
            chu_ok == chu_total,
            format!("{chu_ok}/{chu_total} triples"),
        );
        Ok(())
    })
}

/// `Φ_p` divides every inner Gauss polynomial `[p choose k]_q`, so
/// `(x + y)^p = x^p + y^p` once `q` is a primitive `p`-th root of unity.
pub fn rootofunity(orders: &[u32]) -> Report {
    timed("rootofunity", |r| {
        for &p in orders {
            let phi = cyclotomic(p)?;
            let mut ok = true;
            for k in 1..p {
                ok &= divides(&phi, &gauss_binomial(p, k)?)?;
            }
            r.push(format!("p={p}"), ok, format!("Φ_{p} = {phi}"));
        }
        Ok(())
    })
}

/// `e_q(x + y) = e_q(x) e_q(y)` modulo total degree above `N`, for `N ≤ max`.
pub fn qexp(max: u32) -> Report {
    timed("qexp", |r| {
        for n in 0..=max {
            let lhs = q_exp_truncated(ExpArgument::XPlusY, n);
            let prod = mul_jet(
                &q_exp_truncated(ExpArgument::X, n),
                &q_exp_truncated(ExpArgument::Y, n),
            )?;
            let rhs = prod.truncate(n);
            r.push(format!("N={n}"), lhs == rhs, format!("{} terms", lhs.len()));
        }
        Ok(())
    })
}

fn critical_pairs_resolve(rs: &RewriteSystem, r: &mut Report) -> Result<(), AlgebraError> {
    let pairs = rs.critical_pairs()?;
    let bad: Vec<String> = pairs
        .iter()
        .filter(|c| !c.resolves())
        .map(|c| c.word.to_string())
        .collect();
    r.push(
        format!("critical pairs {}", rs.name()),
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} resolve", pairs.len())
        } else {
            format!("unresolved: {}", bad.join(", "))
        },
    );
    Ok(())
}

/// Critical pairs of the jet systems up to order `n` and of GL_q(2), plus
/// idempotence, linearity and strategy independence on seeded samples.
pub fn confluence(n: u32, samples: usize, seed: u64) -> Report {
    timed("confluence", |r| {
        let glq2 = glq2_relations();
        for m in 0..=n {
            critical_pairs_resolve(&jet_relations(m), r)?;
        }
        critical_pairs_resolve(&glq2, r)?;
        let mut rng = seeded(seed);
        for m in 0..=n {
            let rs = jet_relations(m);
            let (mut idem, mut lin, mut strat) = (0, 0, 0);
            for _ in 0..samples {
                let p = random_ncpoly(&mut rng, m, 5, 4);
                let s = random_ncpoly(&mut rng, m, 5, 4);
                let c = crate::sample::random_coefficient(&mut rng);
                let np = rs.normalize(&p)?;
                idem += usize::from(rs.normalize(&np)? == np);
                let combo = rs.normalize(&(&p.scale(&c) + &s))?;
                lin += usize::from(combo == &np.scale(&c) + &rs.normalize(&s)?);
                strat += usize::from(rs.normalize_with(&p, RedexOrder::Rightmost)?.poly == np);
            }
            r.push(
                format!("idempotent jet({m})"),
                idem == samples,
                format!("{idem}/{samples}"),
            );
            r.push(
                format!("linear jet({m})"),
                lin == samples,
                format!("{lin}/{samples}"),
            );
            r.push(
                format!("strategy-stable jet({m})"),
                strat == samples,
                format!("{strat}/{samples}"),
            );
        }
        let mut strat = 0;
        let mut idem = 0;
        for _ in 0..samples {
            let p = random_glq2_poly(&mut rng, 5, 4);
            let np = glq2.normalize(&p)?;
            idem += usize::from(glq2.normalize(&np)? == np);
            strat += usize::from(glq2.normalize_with(&p, RedexOrder::Rightmost)?.poly == np);
        }
        r.push(
            "idempotent glq2",
            idem == samples,
            format!("{idem}/{samples}"),
        );
        r.push(
            "strategy-stable glq2",
            strat == samples,
            format!("{strat}/{samples}"),
        );
        Ok(())
    })
}

/// `mul_jet` against concatenate-then-normalize on seeded random pairs.
pub fn oracle(pairs: usize, max_order: u32, max_degree: u32, seed: u64) -> Report {
    timed("oracle", |r| {
        let mut rng = seeded(seed);
        let mut agree = 0;
        for k in 0..pairs {
            let n = (k as u32) % (max_order + 1);
            let a = random_jetpoly(&mut rng, n, max_degree, 4);
            let b = random_jetpoly(&mut rng, n, max_degree, 4);
            let fast = mul_jet(&a, &b)?;
            let slow = JetPoly::from_free(&nc_mul(&a.to_free(), &b.to_free()), n)?;
            if fast == slow {
                agree += 1;
            } else {
                r.push(format!("pair {k}"), false, format!("({a}) * ({b})"));
            }
        }
        r.push(
            "mul_jet = normalize(concat)",
            agree == pairs,
            format!("{agree}/{pairs} pairs"),
        );
        Ok(())
    })
}

/// δ of every defining relation at orders `n ≤ max` vanishes one order up,
/// and `δf = g₁ + g₂` for the quantum-plane relation.
pub fn delta(max: u32) -> Report {
    timed("delta", |r| {
        for n in 0..=max {
            let rs = jet_relations(n);
            let up = jet_relations(n + 1);
            let mut ok = 0;
            for rule in rs.rules() {
                let rel = &NcPoly::word(rule.lhs_word()) - &rule.rhs;
                ok += usize::from(up.normalize(&nc_delta(&rel, n + 1)?)?.is_zero());
            }
            r.push(
                format!("relations n={n}"),
                ok == rs.rules().len(),
                format!("{ok}/{} vanish", rs.rules().len()),
            );
        }
        let f = crate::expr::parse_free("y*x - q*x*y", 1).map_err(input_to_algebra)?;
        let g1 = crate::expr::parse_free("y'*x - q*x*y'", 1).map_err(input_to_algebra)?;
        let g2 = crate::expr::parse_free("y*x' - q*x'*y", 1).map_err(input_to_algebra)?;
        let df = nc_delta(&f, 1)?;
        r.push("δf = g1 + g2", df == &g1 + &g2, format!("δf = {df}"));
        Ok(())
    })
}

fn input_to_algebra(e: crate::error::InputError) -> AlgebraError {
    match e {
        crate::error::InputError::Algebra(a) => a,
        crate::error::InputError::Parse(p) => AlgebraError::Unsupported(p.to_string()),
    }
}

/// Support prediction and strict size decrease for both reductions on
/// seeded random elements, and the affine-line instance.
pub fn reduction(trials: usize, seed: u64) -> Report {
    timed("reduction", |r| {
        let g = parse_jet("x - (q+2)", 0).map_err(input_to_algebra)?;
        let expect = parse_jet("(q-1)*(q+2)*y", 0).map_err(input_to_algebra)?;
        let h = reduce_y(&g, 1, 0)?;
        r.push("y(x-α) - q(x-α)y = (q-1)αy", h == expect, format!("{h}"));
        let mut rng = seeded(seed);
        let (mut ok, mut total) = (0, 0);
        for k in 0..trials {
            let n = (k as u32) % 3;
            let g = random_nonzero_jetpoly(&mut rng, n, 4, 5);
            let s = (k as u32) % (n + 1);
            for d in g.support() {
                let hy = reduce_y(&g, d.x, s)?;
                let hx = reduce_x(&g, d.y, s)?;
                total += 1;
                if hy.support() == predicted_support_y(&g, d.x)
                    && hx.support() == predicted_support_x(&g, d.y)
                    && hy.size() < g.size()
                    && hx.size() < g.size()
                {
                    ok += 1;
                } else {
                    r.push(format!("trial {k}"), false, format!("g = {g}, target {d}"));
                }
            }
        }
        r.push("size law", ok == total, format!("{ok}/{total} reductions"));
        Ok(())
    })
}

/// Extraction on seeded random elements for every target in the support.
pub fn extraction(trials: usize, seed: u64) -> Report {
    timed("extraction", |r| {
        let mut rng = seeded(seed);
        let (mut ok, mut total) = (0, 0);
        for k in 0..trials {
            let n = (k as u32) % 3;
            let g = random_nonzero_jetpoly(&mut rng, n, 4, 5);
            for target in g.support() {
                total += 1;
                let (res, trace) = extract_bihomogeneous(&g, target)?;
                let shape = crate::jetalg::BiDegree::new(
                    target.x + trace.x_steps() as u32,
                    target.y + trace.y_steps() as u32,
                );
                if res.size() == 1 && trace.is_valid() && res.bidegree() == Some(shape) {
                    ok += 1;
                } else {
                    r.push(
                        format!("trial {k}"),
                        false,
                        format!("g = {g}, target {target}"),
                    );
                }
            }
        }
        r.push(
            "size-1 results with valid traces",
            ok == total,
            format!("{ok}/{total} targets"),
        );
        Ok(())
    })
}

/// Seeded search for zero-divisor pairs modulo `<f>`.
pub fn primality(f: &JetPoly, trials: usize, seed: u64) -> Report {
    timed("primality", |r| {
        let rep = primality_falsification(f, trials, seed)?;
        let detail = format!(
            "{} probes, {} trials, {} products in the ideal, {} violations",
            rep.probes,
            rep.trials,
            rep.product_hits,
            rep.violations.len()
        );
        r.push(format!("<{f}> prime"), rep.violations.is_empty(), detail);
        for v in rep.violations.iter().take(5) {
            r.push("violation", false, format!("g = {}, h = {}", v.g, v.h));
        }
        Ok(())
    })
}

/// The prolongation chain of `xy' - x'y` is δ-stable at every order up to
/// `max`; withholding its top member breaks stability.
pub fn prolongation(max: u32) -> Report {
    timed("prolongation", |r| {
        let f = parse_jet("x*y' - x'*y", 1).map_err(input_to_algebra)?;
        for n in 1..=max {
            let mut gens = Vec::new();
            let mut g = f.lift(n);
            for _ in 1..=n {
                gens.push(g.clone());
                g = delta_jet(&g)
                    .restrict(n)
                    .unwrap_or_else(|| JetPoly::zero(n));
            }
            let chain = IdealPresentation::new(n, gens.clone())?;
            let st = is_delta_stable(&chain)?;
            r.push(
                format!("chain n={n}"),
                st.stable,
                format!("{} generators", gens.len()),
            );
            if n >= 2 {
                gens.pop();
                let withheld = IdealPresentation::new(n, gens)?;
                let st = is_delta_stable(&withheld)?;
                r.push(
                    format!("withheld n={n}"),
                    !st.stable,
                    format!("unstable generators {:?}", st.failures),
                );
            }
        }
        Ok(())
    })
}

/// Parse/render round trips on seeded random elements.
pub fn roundtrip(samples: usize, seed: u64) -> Report {
    timed("roundtrip", |r| {
        let mut rng = seeded(seed);
        let mut ok = 0;
        for k in 0..samples {
            let n = (k as u32) % 3;
            let p = random_jetpoly(&mut rng, n, 4, 4);
            let text = p.to_string();
            match parse_jet(&text, n) {
                Ok(back) if back == p => ok += 1,
                other => r.push(format!("sample {k}"), false, format!("{text} -> {other:?}")),
            }
        }
        r.push(
            "parse(render(e)) = e",
            ok == samples,
            format!("{ok}/{samples}"),
        );
        Ok(())
    })
}

pub fn hopf_axioms() -> Report {
    hopf::verify_hopf_axioms().unwrap_or_else(|e| error_report("hopf", e))
}

pub fn coaction() -> Report {
    hopf::verify_coaction().unwrap_or_else(|e| error_report("coaction", e))
}

fn error_report(suite: &str, e: AlgebraError) -> Report {
    let mut r = Report::new(suite);
    r.push("error", false, e.to_string());
    r
}
