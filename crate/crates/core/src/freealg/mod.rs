//! The free algebra on jet or GL_q(2) letters, and normal forms modulo
//! quadratic relations.
//!
//! [`normalize`] is the reference implementation of multiplication in the
//! jet algebras: a product is computed by concatenating words and rewriting
//! to the x-first normal form `X_0^e0 … X_n^en Y_0^f0 … Y_n^fn`. The
//! bi-graded fast path in [`crate::jetalg`] is checked against it.

mod delta;
mod poly;
mod rewrite;

pub use delta::nc_delta;
pub use poly::{nc_mul, NcPoly, Symbol, Word};
pub use rewrite::{
    critical_pairs, glq2_relations, jet_relations, normalize, CriticalPair, Normalized, RedexOrder,
    RewriteSystem, Rule, SystemKind,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::QScalar;
    use crate::sample::{random_ncpoly, seeded};
    use proptest::prelude::*;

    use Symbol::{Dinv, A, B, C, D, X, Y};

    fn w(s: &[Symbol]) -> NcPoly {
        NcPoly::word(Word(s.to_vec()))
    }

    fn q(k: i64) -> QScalar {
        QScalar::q_pow(k)
    }

    #[test]
    fn jet_rule_counts() {
        assert_eq!(jet_relations(0).rules().len(), 1);
        assert_eq!(jet_relations(1).rules().len(), 6);
        assert_eq!(jet_relations(2).rules().len(), 15);
        let rs0 = jet_relations(0);
        let r = &rs0.rules()[0];
        assert_eq!(r.lhs, (Y(0), X(0)));
        assert_eq!(r.rhs, w(&[X(0), Y(0)]).scale(&q(1)));
    }

    #[test]
    fn rules_decrease_in_word_order() {
        for n in 0..=3 {
            assert!(jet_relations(n).rules_decrease());
        }
        assert!(glq2_relations().rules_decrease());
    }

    #[test]
    fn quantum_plane_examples() {
        let rs = jet_relations(0);
        assert_eq!(
            normalize(&w(&[Y(0), X(0)]), &rs).unwrap(),
            w(&[X(0), Y(0)]).scale(&q(1))
        );
        assert_eq!(
            normalize(&w(&[Y(0), X(0), X(0)]), &rs).unwrap(),
            w(&[X(0), X(0), Y(0)]).scale(&q(2))
        );
        let rs1 = jet_relations(1);
        assert_eq!(
            normalize(&w(&[X(1), X(0)]), &rs1).unwrap(),
            w(&[X(0), X(1)])
        );
    }

    #[test]
    fn glq2_examples() {
        let rs = glq2_relations();
        assert_eq!(
            normalize(&w(&[B, A]), &rs).unwrap(),
            w(&[A, B]).scale(&q(1))
        );
        let da = &w(&[A, D]) + &w(&[B, C]).scale(&(&q(1) - &q(-1)));
        assert_eq!(normalize(&w(&[D, A]), &rs).unwrap(), da);
        assert_eq!(normalize(&w(&[C, B]), &rs).unwrap(), w(&[B, C]));
    }

    #[test]
    fn defining_relations_vanish() {
        let rs = glq2_relations();
        let rels = [
            &w(&[A, B]) - &w(&[B, A]).scale(&q(-1)),
            &w(&[A, C]) - &w(&[C, A]).scale(&q(-1)),
            &w(&[C, D]) - &w(&[D, C]).scale(&q(-1)),
            &w(&[B, D]) - &w(&[D, B]).scale(&q(-1)),
            &w(&[B, C]) - &w(&[C, B]),
            &(&w(&[A, D]) - &w(&[D, A])) - &w(&[B, C]).scale(&(&q(-1) - &q(1))),
        ];
        for r in rels {
            assert!(normalize(&r, &rs).unwrap().is_zero(), "{r}");
        }
    }

    #[test]
    fn determinant_inverse_cancels() {
        let rs = glq2_relations();
        let det = &w(&[A, D]) - &w(&[B, C]).scale(&q(-1));
        let left = nc_mul(&NcPoly::symbol(Dinv), &det);
        let right = nc_mul(&det, &NcPoly::symbol(Dinv));
        assert_eq!(normalize(&left, &rs).unwrap(), NcPoly::one());
        assert_eq!(normalize(&right, &rs).unwrap(), NcPoly::one());
        // Dinv^2 D^2 = 1
        let d2 = nc_mul(&det, &det);
        let p = nc_mul(&nc_mul(&w(&[Dinv, Dinv]), &d2), &NcPoly::symbol(B));
        assert_eq!(normalize(&p, &rs).unwrap(), NcPoly::symbol(B));
    }

    #[test]
    fn confluence_of_jet_systems() {
        for n in 0..=2 {
            let pairs = critical_pairs(&jet_relations(n)).unwrap();
            assert!(pairs.iter().all(CriticalPair::resolves), "n={n}");
        }
        assert!(critical_pairs(&jet_relations(0)).unwrap().is_empty());
    }

    #[test]
    fn confluence_of_glq2() {
        let pairs = critical_pairs(&glq2_relations()).unwrap();
        assert!(!pairs.is_empty());
        for p in &pairs {
            assert!(
                p.resolves(),
                "{} : {} vs {}",
                p.word,
                p.via_prefix,
                p.via_suffix
            );
        }
        let dca = pairs
            .iter()
            .find(|p| p.word == Word(vec![D, C, A]))
            .unwrap();
        assert!(dca.resolves());
    }

    #[test]
    fn overlap_y1_y0_x0() {
        let pairs = critical_pairs(&jet_relations(1)).unwrap();
        let p = pairs
            .iter()
            .find(|p| p.word == Word(vec![Y(1), Y(0), X(0)]))
            .unwrap();
        // Two crossings of y-letters over x, one factor q each.
        let expected = w(&[X(0), Y(0), Y(1)]).scale(&q(2));
        assert_eq!(p.via_prefix, expected);
        assert_eq!(p.via_suffix, expected);
        // Y0 X0 X1 only matches a rule on its prefix.
        assert!(!pairs.iter().any(|p| p.word == Word(vec![Y(0), X(0), X(1)])));
    }

    #[test]
    fn normal_words_are_x_first_and_sorted() {
        let rs = jet_relations(2);
        let mut rng = seeded(7);
        for _ in 0..50 {
            let p = random_ncpoly(&mut rng, 2, 5, 4);
            let nf = normalize(&p, &rs).unwrap();
            for word in nf.terms().keys() {
                assert!(word.letters().windows(2).all(|s| s[0] <= s[1]), "{word}");
            }
        }
    }

    #[test]
    fn step_count_is_bounded_by_inversions() {
        let rs = jet_relations(2);
        let mut rng = seeded(11);
        for _ in 0..50 {
            let p = random_ncpoly(&mut rng, 2, 6, 5);
            let bound: usize = p.terms().keys().map(|w| w.len() * w.len()).sum();
            let n = rs.normalize_counted(&p).unwrap();
            assert!(n.steps <= bound.max(1), "{} > {}", n.steps, bound);
        }
    }

    #[test]
    fn derivative_of_quantum_plane_relation() {
        let f = &w(&[Y(0), X(0)]) - &w(&[X(0), Y(0)]).scale(&q(1));
        let g1 = &w(&[Y(1), X(0)]) - &w(&[X(0), Y(1)]).scale(&q(1));
        let g2 = &w(&[Y(0), X(1)]) - &w(&[X(1), Y(0)]).scale(&q(1));
        assert_eq!(nc_delta(&f, 1).unwrap(), &g1 + &g2);
        assert_eq!(
            nc_delta(&NcPoly::symbol(X(0)), 1).unwrap(),
            NcPoly::symbol(X(1))
        );
        assert_eq!(
            nc_delta(&w(&[X(0), X(0)]), 1).unwrap(),
            &w(&[X(1), X(0)]) + &w(&[X(0), X(1)])
        );
    }

    #[test]
    fn derivative_rejects_top_order() {
        assert!(nc_delta(&NcPoly::symbol(X(1)), 1).is_err());
        assert!(nc_delta(&NcPoly::symbol(A), 1).is_err());
    }

    #[test]
    fn derivatives_of_relations_vanish() {
        for n in 1..=4u32 {
            let rs = jet_relations(n);
            let lower = jet_relations(n - 1);
            for rule in lower.rules() {
                let rel = &w(&[rule.lhs.0, rule.lhs.1]) - &rule.rhs;
                let d = nc_delta(&rel, n).unwrap();
                assert!(normalize(&d, &rs).unwrap().is_zero(), "δ({rel}) at n={n}");
            }
        }
    }

    #[test]
    fn foreign_symbols_are_rejected() {
        assert!(normalize(&NcPoly::symbol(X(3)), &jet_relations(2)).is_err());
        assert!(normalize(&NcPoly::symbol(A), &jet_relations(2)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn normalize_is_idempotent(seed in any::<u64>(), n in 0u32..=2) {
            let rs = jet_relations(n);
            let p = random_ncpoly(&mut seeded(seed), n, 5, 4);
            let once = normalize(&p, &rs).unwrap();
            prop_assert_eq!(normalize(&once, &rs).unwrap(), once);
        }

        #[test]
        fn normalize_is_linear(seed in any::<u64>(), n in 0u32..=2) {
            let rs = jet_relations(n);
            let mut rng = seeded(seed);
            let p = random_ncpoly(&mut rng, n, 4, 3);
            let r = random_ncpoly(&mut rng, n, 4, 3);
            let alpha = crate::sample::random_coefficient(&mut rng);
            let beta = crate::sample::random_coefficient(&mut rng);
            let lhs = normalize(&(&p.scale(&alpha) + &r.scale(&beta)), &rs).unwrap();
            let rhs = &normalize(&p, &rs).unwrap().scale(&alpha) + &normalize(&r, &rs).unwrap().scale(&beta);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn normal_form_does_not_depend_on_strategy(seed in any::<u64>(), n in 0u32..=2) {
            let rs = jet_relations(n);
            let p = random_ncpoly(&mut seeded(seed), n, 5, 4);
            let left = rs.normalize_with(&p, RedexOrder::Leftmost).unwrap().poly;
            let right = rs.normalize_with(&p, RedexOrder::Rightmost).unwrap().poly;
            prop_assert_eq!(left, right);
        }

        #[test]
        fn glq2_normal_form_does_not_depend_on_strategy(seed in any::<u64>()) {
            let rs = glq2_relations();
            let p = crate::sample::random_glq2_poly(&mut seeded(seed), 5, 4);
            let left = rs.normalize_with(&p, RedexOrder::Leftmost).unwrap().poly;
            let right = rs.normalize_with(&p, RedexOrder::Rightmost).unwrap().poly;
            prop_assert_eq!(left, right);
        }
    }
}
