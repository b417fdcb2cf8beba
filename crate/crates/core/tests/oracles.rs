mod common;

use alexcert::alexander::{alexander_poly_psi, alexander_poly_psi_direct, primitive_classes_in_box};
use alexcert::cover::betti_of_cyclic_cover;
use alexcert::families::{circle_bundle_presentation, free_product_fixture, mapping_torus_presentation, surface_times_circle};
use alexcert::{parse_presentation, Covector, LaurentPoly, Presentation};
use common::{checked_values, cover_betti, specialized_order, zgcd, UPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<(&'static str, Presentation)> {
    vec![
        ("N(1)", circle_bundle_presentation(1)),
        ("N(2)", circle_bundle_presentation(2)),
        ("T3", circle_bundle_presentation(0)),
        ("S2xS1", surface_times_circle(2).unwrap()),
        ("N(2,1)", mapping_torus_presentation(2, 1).unwrap()),
        ("rot4", parse_presentation("gens a b tau\nrel a b a^-1 b^-1\nrel tau a tau^-1 b^-1\nrel tau b tau^-1 a").unwrap()),
    ]
}

fn values(p: &Presentation, psi: &[i64]) -> Vec<i64> {
    checked_values(p, &p.homology().psi_values(psi))
}

#[test]
fn cover_betti_matches_circulant_oracle() {
    for (name, p) in fixtures() {
        let b = p.homology().b;
        for psi in primitive_classes_in_box(b, 1).into_iter().take(4) {
            let v = values(&p, &psi);
            for m in 1..=6 {
                let lib = betti_of_cyclic_cover(&p, &Covector::from_ints(&psi), m).unwrap();
                assert_eq!(lib, cover_betti(&p, &v, m), "{name} psi={psi:?} m={m}");
            }
        }
    }
}

#[test]
fn direct_route_matches_minor_oracle() {
    for (name, p) in fixtures() {
        let b = p.homology().b;
        for psi in primitive_classes_in_box(b, 1).into_iter().take(4) {
            let oracle = specialized_order(&p, &values(&p, &psi));
            let lib = alexander_poly_psi_direct(&p, &Covector::from_ints(&psi)).unwrap();
            assert_eq!(UPoly::from_lib(lib.poly()), oracle, "{name} psi={psi:?}");
        }
    }
}

#[test]
fn surgered_fixture_matches_minor_oracle() {
    let (p, mu, lambda) = free_product_fixture();
    for (a, bq) in [(1, 0), (2, 1), (3, 2)] {
        let rel = mu.pow(a).concat(&lambda.pow(bq));
        let mut rels = p.relators().to_vec();
        rels.push(rel);
        let filled = p.with_relators(rels);
        let psi = [1, 0, 0];
        let oracle = specialized_order(&filled, &values(&filled, &psi));
        let lib = alexander_poly_psi(&filled, &Covector::from_ints(&psi)).unwrap();
        assert_eq!(UPoly::from_lib(lib.poly()), oracle, "fill {a}/{bq}");
        assert_eq!(oracle.content(), a.into());
    }
}

fn random_upoly(rng: &mut ChaCha8Rng, max_deg: usize) -> Vec<i64> {
    let deg = rng.gen_range(0..=max_deg);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    c
}

#[test]
fn univariate_gcd_matches_euclid_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let (f, g, h) = (random_upoly(&mut rng, 3), random_upoly(&mut rng, 3), random_upoly(&mut rng, 2));
        let lf = LaurentPoly::univariate(rng.gen_range(-2..=2), &f);
        let lg = LaurentPoly::univariate(rng.gen_range(-2..=2), &g);
        let lh = LaurentPoly::univariate(0, &h);
        let a = &lf * &lh;
        let b = &lg * &lh;
        let lib = a.gcd(&b).unwrap();
        let oracle = zgcd(&[UPoly::from_lib(&a), UPoly::from_lib(&b)]);
        assert_eq!(UPoly::from_lib(lib.poly()), oracle, "gcd({a}, {b})");
    }
}

#[test]
fn multivariate_gcd_recovers_common_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let rand_poly = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(1..=3);
        let terms: Vec<(Vec<i64>, i64)> = (0..n)
            .map(|_| (vec![rng.gen_range(-1..=2), rng.gen_range(-1..=2)], rng.gen_range(-2..=2)))
            .collect();
        LaurentPoly::from_terms(2, terms).unwrap()
    };
    for _ in 0..200 {
        let (a, b, c) = (rand_poly(&mut rng), rand_poly(&mut rng), rand_poly(&mut rng));
        if a.is_zero() || b.is_zero() || c.is_zero() {
            continue;
        }
        let g = (&a * &c).gcd(&(&b * &c)).unwrap();
        let expect = &a.gcd(&b).unwrap().into_poly() * &c;
        assert!(g.poly().doteq(&expect).unwrap(), "gcd({a}·{c}, {b}·{c})");
        assert!((&a * &c).div_exact(g.poly()).is_some());
    }
}
