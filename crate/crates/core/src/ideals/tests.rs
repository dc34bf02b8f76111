use super::*;
use crate::error::{AlgebraError, InputError};
use crate::expr::parse_jet;
use crate::freealg::{jet_relations, nc_mul, Symbol};
use crate::jetalg::{delta_jet, mul_jet, BiDegree, JetPoly};
use crate::qcoeff::QScalar;
use crate::sample::{random_jetpoly, random_nonzero_jetpoly, seeded};

fn p(text: &str, n: u32) -> JetPoly {
    parse_jet(text, n).unwrap()
}

fn ideal(n: u32, gens: &[&str]) -> IdealPresentation {
    IdealPresentation::new(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
}

#[test]
fn reduce_y_on_affine_line() {
    for alpha in ["1", "q+2", "3/2", "q^-1"] {
        let g = p(&format!("x - ({alpha})"), 0);
        let expect = p(&format!("(q-1)*({alpha})*y"), 0);
        assert_eq!(reduce_y(&g, 1, 0).unwrap(), expect);
    }
}

#[test]
fn reduce_examples() {
    let g = p("x^2 + y", 0);
    assert_eq!(reduce_y(&g, 2, 0).unwrap(), p("(1-q^2)*y^2", 0));
    assert_eq!(reduce_x(&g, 1, 0).unwrap(), p("(1-q)*x^3", 0));
    assert_eq!(
        reduce_x(&p("y - (q+1)", 0), 1, 0).unwrap(),
        p("(q-1)*(q+1)*x", 0)
    );
    assert!(reduce_y(&p("x*y'", 1), 1, 1).unwrap().is_zero());
    assert!(reduce_x(&p("x*y^2", 0), 2, 0).unwrap().is_zero());
    assert!(reduce_y(&JetPoly::zero(0), 0, 0).unwrap().is_zero());
    assert!(matches!(
        reduce_y(&g, 0, 1),
        Err(AlgebraError::JetOrderOverflow { .. })
    ));
}

#[test]
fn reduce_matches_free_algebra() {
    // y g - q^ν g y computed on unnormalized words, then normalized.
    let rs = jet_relations(1);
    let mut rng = seeded(3);
    for _ in 0..20 {
        let g = random_jetpoly(&mut rng, 1, 3, 4);
        for s in 0..=1 {
            let y = JetPoly::y(1, s).to_free();
            let gf = g.to_free();
            let lhs = &nc_mul(&y, &gf) - &nc_mul(&gf, &y).scale(&QScalar::q_pow(2));
            let expect = JetPoly::from_free(&rs.normalize(&lhs).unwrap(), 1).unwrap();
            assert_eq!(reduce_y(&g, 2, s).unwrap(), expect);
        }
    }
}

#[test]
fn lemma_size_law() {
    let mut rng = seeded(8);
    for k in 0..100 {
        let n = k % 3;
        let g = random_nonzero_jetpoly(&mut rng, n, 4, 5);
        for d in g.support() {
            let s = k % (n + 1);
            let hy = reduce_y(&g, d.x, s).unwrap();
            assert_eq!(hy.support(), predicted_support_y(&g, d.x));
            assert!(hy.size() < g.size());
            let hx = reduce_x(&g, d.y, s).unwrap();
            assert_eq!(hx.support(), predicted_support_x(&g, d.y));
            assert!(hx.size() < g.size());
        }
    }
}

#[test]
fn extraction_examples() {
    let g = p("x^2 + x*y + y", 0);
    let (r, trace) = extract_bihomogeneous(&g, BiDegree::new(2, 0)).unwrap();
    assert_eq!(trace.steps.len(), 2);
    assert_eq!(trace.y_steps(), 2);
    assert_eq!(
        trace.steps.iter().map(|s| s.exponent).collect::<Vec<_>>(),
        vec![1, 0]
    );
    assert_eq!(
        r.support().into_iter().collect::<Vec<_>>(),
        vec![BiDegree::new(2, 2)]
    );
    assert!(trace.is_valid());

    let g = p("x^2 + y", 0);
    let (r, trace) = extract_bihomogeneous(&g, BiDegree::new(0, 1)).unwrap();
    assert_eq!(r, p("(1-q^2)*y^2", 0));
    assert_eq!(trace.steps.len(), 1);

    let h = p("x*y' - x'*y", 1);
    let (r, trace) = extract_bihomogeneous(&h, BiDegree::new(1, 1)).unwrap();
    assert_eq!(r, h);
    assert!(trace.steps.is_empty());

    assert_eq!(
        extract_bihomogeneous(&g, BiDegree::new(1, 1)),
        Err(AlgebraError::TargetNotInSupport(1, 1))
    );
    assert_eq!(
        extract_bihomogeneous(&JetPoly::zero(0), BiDegree::new(0, 0)),
        Err(AlgebraError::ZeroInput)
    );
}

#[test]
fn extraction_is_a_multiple_of_the_target_component() {
    let mut rng = seeded(21);
    for k in 0..100 {
        let n = k % 3;
        let g = random_nonzero_jetpoly(&mut rng, n, 4, 5);
        for target in g.support() {
            let (r, trace) = extract_bihomogeneous(&g, target).unwrap();
            assert_eq!(r.size(), 1);
            assert!(trace.is_valid());
            let a = trace.x_steps() as u32;
            let b = trace.y_steps() as u32;
            assert_eq!(
                r.bidegree(),
                Some(BiDegree::new(target.x + a, target.y + b))
            );
            // r = c · x^a g_target y^b in the commutative picture.
            let mut shifted = g.component(target);
            for _ in 0..a {
                shifted = shifted.commutative_mul(&JetPoly::x(n, 0)).unwrap();
            }
            for _ in 0..b {
                shifted = shifted.commutative_mul(&JetPoly::y(n, 0)).unwrap();
            }
            let (e, c) = shifted.terms().iter().next().unwrap();
            let ratio = r.coeff(e).checked_div(c).unwrap();
            assert!(!ratio.is_zero());
            assert_eq!(r, shifted.scale(&ratio));
        }
    }
}

#[test]
fn groebner_examples() {
    let gb = buchberger(0, &[p("x", 0), p("y", 0)], DEFAULT_BUDGET).unwrap();
    assert_eq!(gb.len(), 2);
    let gb = buchberger(0, &[p("x*y", 0)], DEFAULT_BUDGET).unwrap();
    assert_eq!(
        gb.elements().cloned().collect::<Vec<_>>(),
        vec![p("x*y", 0)]
    );

    let gens = [p("x*y' - x'*y", 1), p("x^2", 1)];
    let gb = buchberger(1, &gens, DEFAULT_BUDGET).unwrap();
    let target = p("x*x'*y", 1);
    assert!(gb.reduces_to_zero(&target).unwrap());
    assert!(
        gb.elements()
            .any(|e| e.terms().keys().collect::<Vec<_>>()
                == target.terms().keys().collect::<Vec<_>>())
    );
    for e in gb.elements() {
        assert!(e.is_bihomogeneous());
        assert!(gb.reduces_to_zero(e).unwrap());
    }
    for (k, e) in gb.elements().enumerate() {
        let mut acc = JetPoly::zero(1);
        for (r, g) in gb.representation(k).iter().zip(&gens) {
            acc = &acc + &r.commutative_mul(g).unwrap();
        }
        assert_eq!(&acc, e);
    }
}

#[test]
fn groebner_budget() {
    let gens = [p("x*y' - x'*y", 1), p("x^2", 1), p("y'^2 - y*y'", 1)];
    assert!(matches!(
        buchberger(1, &gens, 0),
        Err(AlgebraError::BudgetExhausted(0))
    ));
}

#[test]
fn membership_examples() {
    let t = ideal(1, &["x*y' - x'*y"]);
    let m = membership(&p("q^3*x*y' - q^3*x'*y", 1), &t).unwrap();
    assert!(m.member);
    let cert = m.certificate.unwrap();
    assert_eq!(
        cert.replay_commutative(&t).unwrap(),
        p("q^3*x*y' - q^3*x'*y", 1)
    );
    assert!(!membership(&p("x", 0), &ideal(0, &["x*y"])).unwrap().member);
    assert!(membership(&p("x", 0), &ideal(0, &["x*y"]))
        .unwrap()
        .certificate
        .is_none());
    assert_eq!(cert.to_json().to_string(), "[[\"q^3\",0]]");
}

#[test]
fn membership_is_closed_under_twisted_products() {
    let t = ideal(1, &["x*y' - x'*y", "x^2*y"]);
    let ideal = BihomogeneousIdeal::new(t.clone()).unwrap();
    let mut rng = seeded(5);
    for _ in 0..30 {
        let g = random_nonzero_jetpoly(&mut rng, 1, 3, 3);
        let h = random_nonzero_jetpoly(&mut rng, 1, 3, 3);
        let f = &t.generators()[rng_index(&g, 2)];
        let prod = mul_jet(&mul_jet(&g, f).unwrap(), &h).unwrap();
        let m = ideal.contains(&prod).unwrap();
        assert!(m.member);
        let cert = m.certificate.unwrap();
        assert_eq!(cert.replay_commutative(&t).unwrap(), prod);
        assert_eq!(cert.replay_twisted(&t).unwrap(), prod);
    }
}

fn rng_index(g: &JetPoly, k: usize) -> usize {
    g.len() % k
}

#[test]
fn non_bihomogeneous_generators_rejected() {
    let t = ideal(0, &["x + y^2"]);
    assert!(matches!(
        membership(&p("x", 0), &t),
        Err(AlgebraError::NotBihomogeneous(2))
    ));
    assert!(matches!(
        is_delta_stable(&t),
        Err(AlgebraError::NotBihomogeneous(2))
    ));
}

fn prolongation_chain(n: u32) -> IdealPresentation {
    let mut g = p("x*y' - x'*y", 1).lift(n);
    let mut gens = Vec::new();
    for _ in 1..=n {
        gens.push(g.clone());
        g = delta_jet(&g)
            .restrict(n)
            .unwrap_or_else(|| JetPoly::zero(n));
    }
    IdealPresentation::new(n, gens).unwrap()
}

#[test]
fn delta_stability() {
    assert!(is_delta_stable(&ideal(1, &["x", "x'"])).unwrap().stable);
    assert!(is_delta_stable(&ideal(1, &["x*y' - x'*y"])).unwrap().stable);
    for n in 1..=3 {
        let chain = prolongation_chain(n);
        assert_eq!(chain.generators().len(), n as usize);
        assert!(is_delta_stable(&chain).unwrap().stable, "order {n}");
    }
    // The order-2 generator xy'' - x''y is withheld.
    let withheld = ideal(2, &["x*y' - x'*y"]);
    let report = is_delta_stable(&withheld).unwrap();
    assert!(!report.stable);
    assert_eq!(report.failures, vec![0]);
    assert!(!is_delta_stable(&ideal(1, &["x"])).unwrap().stable);
}

#[test]
fn delta_preserves_bidegree() {
    let mut rng = seeded(4);
    for _ in 0..50 {
        let e = crate::sample::random_exponents(&mut rng, 2, 4);
        let t = JetPoly::monomial(e, QScalar::one());
        let d = delta_jet(&t);
        if !d.is_zero() {
            assert_eq!(d.bidegree(), t.bidegree());
        }
    }
}

#[test]
fn quotients() {
    assert_eq!(
        quotient_by_x(&ideal(1, &["x", "y^2 - y'"])),
        vec![p("y^2 - y'", 1)]
    );
    assert!(quotient_by_x(&ideal(0, &["x*y"])).is_empty());
    assert_eq!(quotient_by_x(&ideal(0, &["x^2 + y^2"])), vec![p("y^2", 0)]);
    assert_eq!(
        quotient_by_y(&ideal(1, &["y", "x^2 - x'"])),
        vec![p("x^2 - x'", 1)]
    );
}

#[test]
fn falsification() {
    let f = p("x*y' - x'*y", 1);
    let report = primality_falsification(&f, 200, 1).unwrap();
    assert!(report.violations.is_empty());
    assert!(report.product_hits > 0);
    assert!(primality_falsification(&p("x", 0), 200, 1)
        .unwrap()
        .violations
        .is_empty());
    let control = primality_falsification(&p("x*y", 0), 20, 1).unwrap();
    assert!(control.violations.contains(&Violation {
        g: JetPoly::symbol(0, Symbol::X(0)),
        h: JetPoly::symbol(0, Symbol::Y(0)),
    }));
}

#[test]
fn ideal_files() {
    let text = "# chain\norder: 2\nx*y' - x'*y   # f\n\nx*y'' - x''*y\n";
    let t = parse_ideal_file(text).unwrap();
    assert_eq!(t.order(), 2);
    assert_eq!(t.generators().len(), 2);
    assert!(parse_ideal_file("x\n").is_err());
    assert!(parse_ideal_file("").is_err());
    match parse_ideal_file("order: 0\nx + z\n") {
        Err(InputError::Parse(e)) => assert_eq!(e.pos, 13),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_ideal_file("order: 0\nx'\n"),
        Err(InputError::Algebra(AlgebraError::JetOrderOverflow { .. }))
    ));
}
