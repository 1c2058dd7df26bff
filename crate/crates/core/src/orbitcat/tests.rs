use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactlin::Field;

const Q: Field = Field::Rational;

fn cluster(n: usize) -> OrbitCategory {
    OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), Q).unwrap()
}

fn zigzag_cluster(n: usize) -> OrbitCategory {
    let arrows = (1..n)
        .map(|i| if i % 2 == 0 { (i, i - 1) } else { (i - 1, i) })
        .collect();
    OrbitCategory::cluster(Arc::new(Quiver::new(n, arrows).unwrap()), Q).unwrap()
}

#[test]
fn a1_cluster_is_double_suspension() {
    let c = cluster(1);
    for x in c.db().labels(-3, 3) {
        assert_eq!(c.apply_f(x, 1), c.db().suspend(x, 2));
        assert_eq!(c.apply_f(x, 0), x);
    }
    assert_eq!(c.period(), 4);
}

#[test]
fn indecomposable_counts() {
    for (n, expect) in [(1, 2), (2, 5), (3, 9), (4, 14)] {
        assert_eq!(cluster(n).indecomposables().len(), expect, "A_{n}");
        assert_eq!(zigzag_cluster(n).indecomposables().len(), expect, "zigzag A_{n}");
    }
}

#[test]
fn a2_orbits_meet_the_window_in_h_labels() {
    let c = cluster(2);
    let window = c.db().labels(0, c.period() - 1);
    for o in c.indecomposables() {
        let members = window.iter().filter(|&&x| c.canonical(x) == o).count();
        assert_eq!(members, 3);
    }
    assert_eq!(window.len(), 15);
}

#[test]
fn canonical_is_idempotent_and_orbit_invariant() {
    let c = zigzag_cluster(3);
    for x in c.db().labels(-4, 4) {
        let o = c.canonical(x);
        assert_eq!(c.canonical(o.0), o);
        assert!(o.0.shift >= 0);
        for k in -3..=3 {
            assert_eq!(c.canonical(c.apply_f(x, k)), o);
        }
    }
}

#[test]
fn action_law_and_inverse() {
    let c = cluster(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..100 {
        let x = DbIndec::new(rng.gen_range(0..c.db().module_count()), rng.gen_range(-6..=6));
        let (a, b) = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        assert_eq!(c.apply_f(c.apply_f(x, a), b), c.apply_f(x, a + b));
        assert_eq!(c.apply_f(c.apply_f(x, 1), -1), x);
    }
}

#[test]
fn a1_hom_examples() {
    let c = cluster(1);
    let x = DbIndec::new(0, 0);
    let h = c.orbit_hom_dim(x, x).unwrap();
    assert_eq!(h.total, 1);
    assert_eq!(h.support, [(0, 1)].into_iter().collect());
    assert_eq!(c.orbit_hom_dim(x, c.db().suspend(x, 1)).unwrap().total, 0);
    // brute-force window
    let brute: usize = (-5..=5)
        .map(|n| c.db().hom_dim(x, c.apply_f(x, n)).unwrap())
        .sum();
    assert_eq!(brute, 1);
}

#[test]
fn support_is_finite_and_narrow() {
    for n in 1..=5 {
        let c = cluster(n);
        let objs = c.indecomposables();
        for &x in &objs {
            for &y in &objs {
                let h = c.orbit_hom_dim(x.0, y.0).unwrap();
                if let (Some(a), Some(b)) = (h.support.keys().next(), h.support.keys().last()) {
                    assert!(b - a < 3);
                }
                for k in -10..=10 {
                    let d = c.db().hom_dim(x.0, c.apply_f(y.0, k)).unwrap();
                    assert_eq!(d, h.support.get(&k).copied().unwrap_or(0));
                }
            }
        }
    }
}

#[test]
fn two_calabi_yau() {
    for n in 1..=4 {
        for c in [cluster(n), zigzag_cluster(n)] {
            let objs = c.indecomposables();
            for &x in &objs {
                for &y in &objs {
                    assert!(c.verify_2cy(x, y).unwrap(), "{x} {y}");
                    assert_eq!(c.ext1(x, y).unwrap(), c.ext1(y, x).unwrap());
                }
            }
        }
    }
}

#[test]
fn single_suspension_orbit_is_not_2cy() {
    let db = Arc::new(DerivedCategory::new(Arc::new(Quiver::linear_a(2)), Q).unwrap());
    let c = OrbitCategory::new(db, AutoEquivalence::new(0, 1)).unwrap();
    let objs = c.indecomposables();
    let broken = objs
        .iter()
        .any(|&x| objs.iter().any(|&y| !c.verify_2cy(x, y).unwrap()));
    assert!(broken);
}

#[test]
fn finite_order_equivalence_is_rejected() {
    // τ^h = Σ^{-2}, so τ^3 Σ^2 is the identity on A_2 labels
    let db = Arc::new(DerivedCategory::new(Arc::new(Quiver::linear_a(2)), Q).unwrap());
    let err = OrbitCategory::new(db, AutoEquivalence::new(3, 2)).unwrap_err();
    assert!(matches!(err, Error::InvalidEquivalence(_)));
}

#[test]
fn homs_are_f_invariant() {
    let c = zigzag_cluster(3);
    for x in c.db().labels(0, 1) {
        for y in c.db().labels(-1, 2) {
            let base = c.orbit_hom_dim(x, y).unwrap().total;
            for k in -2..=2 {
                assert_eq!(c.orbit_hom_dim(x, c.apply_f(y, k)).unwrap().total, base);
            }
        }
    }
}

#[test]
fn f_on_maps_is_invertible_and_functorial() {
    let c = cluster(2);
    let labels = c.db().labels(0, 1);
    for &y in &labels {
        for &w in &labels {
            let ry = c.db().realize(y).unwrap();
            let rw = c.db().realize(w).unwrap();
            let (_, basis) = crate::dgkernel::homology_homs(&ry.complex, &rw.complex).unwrap();
            for b in basis {
                let g = LabeledMap {
                    source: y,
                    target: w,
                    map: b.representative,
                };
                let fg = c.f_map(&g).unwrap();
                assert_eq!(fg.source, c.apply_f(y, 1));
                assert!(!crate::dgkernel::is_nullhomotopic(&fg.map).unwrap());
                let back = c.f_inv_map(&fg).unwrap();
                assert!(crate::dgkernel::is_nullhomotopic(&back.map.sub(&g.map)).unwrap());
            }
        }
    }
}

#[test]
fn f_on_maps_preserves_composition() {
    // P_3 -> P_2 -> P_1 in linear A_3 composes to a nonzero map
    let c = cluster(3);
    let db = c.db();
    let p: Vec<DbIndec> = (0..3).map(|v| DbIndec::new(db.projective_index(v), 0)).collect();
    let map = |a: DbIndec, b: DbIndec| {
        let ra = db.realize(a).unwrap();
        let rb = db.realize(b).unwrap();
        let (_, basis) = crate::dgkernel::homology_homs(&ra.complex, &rb.complex).unwrap();
        LabeledMap {
            source: a,
            target: b,
            map: basis[0].representative.clone(),
        }
    };
    for k in [-1, 1, 2] {
        for (i, j, l) in [(2, 1, 0), (2, 2, 0), (1, 0, 0)] {
            let (f, g) = (map(p[i], p[j]), map(p[j], p[l]));
            let gf = LabeledMap {
                source: f.source,
                target: g.target,
                map: g.map.compose(&f.map).unwrap(),
            };
            let lhs = c.f_pow_map(&gf, k).unwrap();
            let rhs = c.f_pow_map(&g, k).unwrap().map.compose(&c.f_pow_map(&f, k).unwrap().map).unwrap();
            assert!(!crate::dgkernel::is_nullhomotopic(&lhs.map).unwrap());
            assert!(crate::dgkernel::is_nullhomotopic(&lhs.map.sub(&rhs)).unwrap());
        }
    }
}

#[test]
fn composition_is_unital_and_associative() {
    let c = cluster(2);
    let objs = c.indecomposables();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let pick = |rng: &mut ChaCha8Rng| objs[rng.gen_range(0..objs.len())];
        let (a, b, d, e) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let f = c.random_morphism(&mut rng, a, b, 2).unwrap();
        let g = c.random_morphism(&mut rng, b, d, 2).unwrap();
        let h = c.random_morphism(&mut rng, d, e, 2).unwrap();
        let left = c.compose(&c.compose(&f, &g).unwrap(), &h).unwrap();
        let right = c.compose(&f, &c.compose(&g, &h).unwrap()).unwrap();
        assert!(c.morphisms_equal(&left, &right).unwrap());
        let ida = c.identity(a).unwrap();
        let idb = c.identity(b).unwrap();
        assert!(c.morphisms_equal(&c.compose(&ida, &f).unwrap(), &f).unwrap());
        assert!(c.morphisms_equal(&c.compose(&f, &idb).unwrap(), &f).unwrap());
        let z = c.zero_morphism(b, d);
        assert!(c.is_zero_morphism(&c.compose(&f, &z).unwrap()).unwrap());
    }
}

#[test]
fn composition_rejects_mismatch() {
    let c = cluster(2);
    let objs = c.indecomposables();
    let f = c.identity(objs[0]).unwrap();
    let g = c.identity(objs[1]).unwrap();
    assert!(matches!(c.compose(&f, &g), Err(Error::NotComposable)));
}

#[test]
fn composition_is_nonzero_somewhere() {
    // in A_2 every composite of two non-isomorphisms vanishes (single-term
    // meshes); A_3 has P_3 -> P_2 -> P_1
    let c = cluster(3);
    let objs = c.indecomposables();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen_nonzero = false;
    for &a in &objs {
        for &b in &objs {
            for &d in &objs {
                if a == b || b == d || a == d {
                    continue;
                }
                let f = c.random_morphism(&mut rng, a, b, 1).unwrap();
                let g = c.random_morphism(&mut rng, b, d, 1).unwrap();
                if !c.is_zero_morphism(&c.compose(&f, &g).unwrap()).unwrap() {
                    seen_nonzero = true;
                }
            }
        }
    }
    assert!(seen_nonzero);
}

#[test]
fn dg_degree_zero_matches_orbit_homs() {
    for n in 1..=3 {
        let c = cluster(n);
        let objs = c.indecomposables();
        for &x in &objs {
            for &y in &objs {
                let dg = c.dg_orbit_hom(x.0, y.0).unwrap();
                assert_eq!(dg.degree(0), c.orbit_hom_dim(x.0, y.0).unwrap().total, "{x} {y}");
            }
        }
    }
}

#[test]
fn dg_stabilizes_quickly_for_a2() {
    let c = cluster(2);
    let objs = c.indecomposables();
    let worst = objs
        .iter()
        .flat_map(|&x| objs.iter().map(move |&y| (x, y)))
        .map(|(x, y)| c.dg_orbit_hom(x.0, y.0).unwrap().stabilization)
        .max()
        .unwrap();
    assert!(worst <= 3, "p* = {worst}");
}

#[test]
fn dg_other_degrees_are_shifted_homs() {
    // H_d of the colimit is Hom(X, Σ^{-d} Y) in the orbit category
    let c = cluster(2);
    let objs = c.indecomposables();
    for &x in &objs {
        for &y in &objs {
            let dg = c.dg_orbit_hom(x.0, y.0).unwrap();
            for d in -3..=3 {
                let expect = c.orbit_hom_dim(x.0, c.db().suspend(y.0, -d)).unwrap().total;
                assert_eq!(dg.degree(d), expect);
            }
        }
    }
}
