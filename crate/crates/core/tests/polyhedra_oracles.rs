mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use robust_apa::polyhedra::{hull_union, minimize, uncovered_point, union_covers, Polyhedron};
use robust_apa::ratlin::Rational;

#[test]
fn projection_matches_extension_search() {
    oracles::projection(11, 40).unwrap();
}

#[test]
fn generator_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for round in 0..50 {
        let e = env(&["a", "b", "c"][..1 + round % 3]);
        let p = random_poly(&mut rng, &e, 5);
        let g = p.generators();
        assert_eq!(g.is_empty(), p.is_empty(), "P = {p}");
        for pt in &g.points {
            assert!(p.contains(pt), "vertex {pt:?} outside {p}");
            for r in g.rays.iter().chain(&g.lines) {
                let moved: Vec<Rational> = pt.iter().zip(r).map(|(a, b)| a + b * q(7)).collect();
                assert!(p.contains(&moved), "ray {r:?} leaves {p}");
            }
        }
        let back = Polyhedron::from_generators(&g, e.clone());
        assert!(back.same_set(&p), "P = {p}, round trip = {back}");
    }
}

#[test]
fn hull_soundness_idempotence_minimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let e = env(&["x", "y"]);
    for _ in 0..40 {
        let ps: Vec<Polyhedron> = (0..3).map(|_| random_poly(&mut rng, &e, 3)).collect();
        let h = hull_union(e.clone(), &ps);
        for p in &ps {
            assert!(h.includes(p), "hull {h} misses member {p}");
            for pt in p.generators().points {
                assert!(h.contains(&pt));
            }
        }
        assert!(hull_union(e.clone(), std::slice::from_ref(&h)).same_set(&h));
        let m = minimize(&h);
        assert!(m.same_set(&h));
        if m.is_canonical_empty() {
            continue;
        }
        for (i, c) in m.constraints().iter().enumerate() {
            let relaxed = Polyhedron::new(
                e.clone(),
                m.constraints().iter().enumerate().filter(|&(k, _)| k != i).map(|(_, r)| r.clone()).collect::<Vec<_>>(),
            );
            assert!(!relaxed.entails(c), "facet {} of {m} is redundant", c.render(&e));
        }
    }
}

#[test]
fn inclusion_is_invariant_under_rescaling_and_shuffling() {
    use robust_apa::polyhedra::Constraint;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let e = env(&["x", "y", "z"]);
    for _ in 0..30 {
        let p = random_poly(&mut rng, &e, 4);
        let mut rows: Vec<Constraint> = p
            .constraints()
            .iter()
            .map(|c| {
                let k = num_bigint::BigInt::from(3);
                Constraint::new(c.coeffs().iter().map(|a| a * &k).collect(), c.constant() * &k, c.relation())
            })
            .collect();
        rows.reverse();
        let p2 = Polyhedron::new(e.clone(), rows);
        assert!(p.includes(&p2) && p2.includes(&p));
    }
}

#[test]
fn coverage_matches_grid() {
    oracles::coverage(15, 30).unwrap();
}

#[test]
fn cover_implies_sample_is_covered() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let e = env(&["x", "y"]);
    for _ in 0..30 {
        let ps: Vec<Polyhedron> = (0..2).map(|_| random_poly(&mut rng, &e, 3)).collect();
        let qy = random_poly(&mut rng, &e, 3);
        if union_covers(&ps, &qy) {
            if let Some(s) = qy.sample_point() {
                assert!(ps.iter().any(|m| m.contains(&s)));
            }
        } else {
            assert!(uncovered_point(&ps, &qy).is_some());
        }
    }
}

#[test]
fn minimization_preserves_the_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let e = env(&["x", "y", "z"]);
    for _ in 0..50 {
        let p = random_poly(&mut rng, &e, 6);
        let m = minimize(&p);
        assert!(m.same_set(&p), "P = {p}, min = {m}");
        assert_eq!(minimize(&m), m);
        assert!(m.constraints().len() <= p.constraints().len().max(1));
    }
}
