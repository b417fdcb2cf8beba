use alexcert::medley::{build_cover_plan, pushforward_euler};
use alexcert::polytope::{convex_hull, Membership};
use alexcert::rational::{q, qf, Q};
use alexcert::{parse_presentation, Covector, LaurentPoly, Word};
use proptest::prelude::*;

fn poly(rank: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, rank), -3i64..=3), 0..5)
        .prop_map(move |terms| LaurentPoly::from_terms(rank, terms).unwrap())
}

fn word(gens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop_oneof![Just(-1i64), Just(1i64), Just(2i64)]), 0..8)
        .prop_map(Word::from_letters)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(p in poly(2)) {
        let c = p.canonicalize();
        prop_assert_eq!(c.poly().canonicalize(), c.clone());
        prop_assert!(p.doteq(c.poly()).unwrap());
    }

    #[test]
    fn doteq_ignores_units(p in poly(2), sx in -3i64..=3, sy in -3i64..=3, neg in any::<bool>()) {
        let mut u = LaurentPoly::monomial(alexcert::ExponentVector(vec![sx, sy]), 1);
        if neg { u = -u; }
        prop_assert!(p.doteq(&(&p * &u)).unwrap());
    }

    #[test]
    fn ring_laws(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero(2));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(2), b in poly(2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn word_inverse_cancels(w in word(3)) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn presentation_text_round_trips(rels in prop::collection::vec(word(3), 1..4)) {
        let text = format!(
            "gens a b c\n{}",
            rels.iter().filter(|w| !w.is_empty()).map(|w| format!("rel {}\n", w.render(&["a".into(), "b".into(), "c".into()]))).collect::<String>()
        );
        let p = parse_presentation(&text).unwrap();
        prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn pushforward_ignores_order(m0 in 1usize..4, m1 in 0usize..4, m2 in 0usize..4, shift in 0usize..20) {
        let plan = build_cover_plan(2, &[m0, m1, m2], None).unwrap();
        let mut pieces = plan.pieces.clone();
        let len = pieces.len();
        pieces.rotate_left(shift % len);
        let rotated = build_cover_plan(2, &[m0, m1, m2], Some(pieces)).unwrap();
        let e = vec![vec![q(2), q(0)], vec![q(0), q(2)], vec![qf(1, 2), q(-1)]];
        prop_assert_eq!(pushforward_euler(&plan, &e).unwrap(), pushforward_euler(&rotated, &e).unwrap());
        prop_assert_eq!(plan.degree(), m0 + m1 + m2);
        prop_assert_eq!(plan.frontier_count(1), m0 + m1);
        prop_assert_eq!(plan.frontier_count(2), m0 + m2);
    }

    #[test]
    fn hull_contains_its_points(pts in prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 1..9)) {
        let pts: Vec<Vec<Q>> = pts.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect();
        let hull = convex_hull(&pts).unwrap();
        for p in &pts {
            prop_assert!(hull.contains(p));
            prop_assert_ne!(hull.classify(p).unwrap(), Membership::Exterior);
        }
        for v in &hull.vertices {
            prop_assert!(pts.contains(v));
        }
    }

    #[test]
    fn specialization_respects_scaling(p in poly(2), a in -2i64..=2, b in -2i64..=2) {
        prop_assume!((a, b) != (0, 0));
        let x = p.specialize(&Covector::from_ints(&[a, b])).unwrap();
        let y = p.specialize(&Covector::from_ints(&[-a, -b])).unwrap();
        prop_assert_eq!(x.is_zero(), y.is_zero());
        if !x.is_zero() {
            prop_assert_eq!(x.floating_degree().unwrap(), y.floating_degree().unwrap());
        }
    }
}
