use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::{random_chain_map, random_cofibration, random_complex, ComplexBounds};
use super::*;
use crate::exactlin::{Field, Matrix};
use crate::quiverrep::{hom_space, interval_module, projective, Quiver, Rep, RepMap};

const Q: Field = Field::Rational;

fn a2() -> Arc<Quiver> {
    Arc::new(Quiver::linear_a(2))
}

fn stalk(rep: Rep, degree: i64) -> Arc<Complex> {
    Arc::new(Complex::concentrated(rep, degree))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random(r: &mut ChaCha8Rng) -> Arc<Complex> {
    Arc::new(random_complex(r, &a2(), Q, ComplexBounds::default()).unwrap())
}

// the projective resolution P_2 -> P_1 of the simple S_1 over A_2, in
// degrees 1 and 0
fn resolution_of_s1() -> Arc<Complex> {
    let q = a2();
    let p1 = projective(&q, Q, 0).unwrap();
    let p2 = projective(&q, Q, 1).unwrap();
    let h = hom_space(&p2, &p1).unwrap();
    assert_eq!(h.dimension(), 1);
    Arc::new(Complex::new(0, vec![p1, p2], vec![h.basis()[0].clone()]).unwrap())
}

#[test]
fn stalk_hom_complex() {
    let q = a2();
    let ind = crate::quiverrep::indecomposables(&q, Q).unwrap();
    for m in &ind {
        for n in &ind {
            let h = HomComplex::new(&stalk(m.clone(), 0), &stalk(n.clone(), 0)).unwrap();
            let expect = hom_space(m, n).unwrap().dimension();
            assert_eq!(h.dim(0), expect);
            assert_eq!(h.degrees().len(), usize::from(expect > 0));
            let (dim, _) = homology_homs(&stalk(m.clone(), 0), &stalk(n.clone(), 0)).unwrap();
            assert_eq!(dim, expect);
            let cyc = cycle_homs(&stalk(m.clone(), 0), &stalk(n.clone(), 0)).unwrap();
            assert_eq!(cyc.len(), expect);
        }
    }
}

#[test]
fn hom_into_shift_reindexes() {
    let mut r = rng(1);
    for _ in 0..10 {
        let (x, y) = (random(&mut r), random(&mut r));
        let sy = Arc::new(shift(&y, 1));
        let h = HomComplex::new(&x, &y).unwrap();
        let hs = HomComplex::new(&x, &sy).unwrap();
        for n in -6..=6 {
            assert_eq!(hs.dim(n), h.dim(n - 1));
        }
    }
}

#[test]
fn hom_complex_squares_to_zero() {
    let mut r = rng(2);
    for _ in 0..50 {
        let (x, y) = (random(&mut r), random(&mut r));
        let h = HomComplex::new(&x, &y).unwrap();
        for n in h.degrees() {
            let dd = h.differential(n - 1).mul(&h.differential(n)).unwrap();
            assert!(dd.is_zero());
        }
        // and on elements, through the graded-map formula
        for n in h.degrees() {
            for b in h.basis(n) {
                assert!(b.differential().differential().is_zero());
            }
        }
    }
}

#[test]
fn shift_laws() {
    let mut r = rng(3);
    for _ in 0..20 {
        let x = random(&mut r);
        assert_eq!(shift(&x, 0), *x);
        assert_eq!(shift(&shift(&x, 1), -1), *x);
        for n in [-2, 1, 3] {
            let s = shift(&x, n);
            for k in -4..=4 {
                assert_eq!(s.homology_dims(k + n), x.homology_dims(k));
            }
        }
    }
}

#[test]
fn cone_of_identity_is_contractible() {
    let mut r = rng(4);
    for _ in 0..10 {
        let x = random(&mut r);
        let c = cone(&ChainMap::identity(&x));
        assert!(c.complex.is_acyclic());
        let (dim, _) = homology_homs(&x, &c.complex).unwrap();
        assert_eq!(dim, 0);
    }
}

#[test]
fn cone_of_zero_splits() {
    let mut r = rng(5);
    for _ in 0..10 {
        let (x, y) = (random(&mut r), random(&mut r));
        let c = cone(&ChainMap::zero(x.clone(), y.clone())).complex;
        let sx = shift(&x, 1);
        for k in -4..=4 {
            let expect: Vec<usize> = y
                .homology_dims(k)
                .iter()
                .zip(sx.homology_dims(k))
                .map(|(a, b)| a + b)
                .collect();
            assert_eq!(c.homology_dims(k), expect);
        }
    }
}

#[test]
fn homology_long_exact_sequence() {
    // Hom from the stalk P_v in degree n computes H_n(-)_v
    let q = a2();
    let mut r = rng(6);
    for _ in 0..15 {
        let (x, y) = (random(&mut r), random(&mut r));
        let f = random_chain_map(&mut r, &x, &y, 2).unwrap();
        for v in 0..2 {
            for n in -3..=3 {
                let z = stalk(projective(&q, Q, v).unwrap(), n);
                assert!(triangle_is_exact(&f, &z).unwrap());
            }
        }
        let z = random(&mut r);
        assert!(triangle_is_exact(&f, &z).unwrap());
    }
}

#[test]
fn representability_positive() {
    let mut r = rng(7);
    let x = random(&mut r);
    assert!(verify_cone_representability(&ChainMap::identity(&x), &x).unwrap());
    for _ in 0..30 {
        let (x, y, z) = (random(&mut r), random(&mut r), random(&mut r));
        let f = random_chain_map(&mut r, &x, &y, 2).unwrap();
        assert!(verify_cone_representability(&f, &z).unwrap());
    }
}

#[test]
fn representability_negative_controls() {
    let x = resolution_of_s1();
    let f = ChainMap::identity(&x);
    for c in [Corruption::SignFlip, Corruption::DroppedSummand, Corruption::SwappedOrder] {
        assert!(
            !verify_cone_representability_with(&f, &x, c).unwrap(),
            "{c:?} went undetected"
        );
    }
}

#[test]
fn cycles_are_chain_maps() {
    let mut r = rng(8);
    for _ in 0..20 {
        let (x, y) = (random(&mut r), random(&mut r));
        let h = HomComplex::new(&x, &y).unwrap();
        let cyc = cycle_homs(&x, &y).unwrap();
        for c in &cyc {
            for k in -3..=3 {
                let lhs = c.component(k - 1).compose(&x.d(k));
                let rhs = y.d(k).compose(&c.component(k));
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(cyc.len(), h.dim(0) - h.differential(0).rank());
        let (dim, _) = homology_homs(&x, &y).unwrap();
        assert_eq!(dim, cyc.len() - h.differential(1).rank());
    }
}

#[test]
fn cofibrations() {
    let mut r = rng(9);
    let x = random(&mut r);
    assert!(is_cofibration(&ChainMap::identity(&x)));
    let nonzero = loop {
        let c = random(&mut r);
        if !c.is_zero() {
            break c;
        }
    };
    assert!(!is_cofibration(&ChainMap::zero(nonzero.clone(), nonzero.clone())));
    for _ in 0..10 {
        let (x, y) = (random(&mut r), random(&mut r));
        let f = random_chain_map(&mut r, &x, &y, 2).unwrap();
        let c = cone(&f);
        assert!(is_cofibration(&ChainMap::new(c.inclusion.clone()).unwrap()));
    }
}

#[test]
fn weak_equivalences() {
    let mut r = rng(10);
    let x = random(&mut r);
    assert!(is_weak_equivalence(&ChainMap::identity(&x)));
    let zero = Arc::new(Complex::zero(x.quiver().clone(), Q));
    let c = cone(&ChainMap::identity(&x)).complex;
    assert!(is_weak_equivalence(&ChainMap::zero(zero, c)));

    // the subcomplex P_1 (degree 0) of the resolution of S_1 has the wrong
    // homology
    let res = resolution_of_s1();
    let q = a2();
    let p1 = stalk(projective(&q, Q, 0).unwrap(), 0);
    let mut comps = BTreeMap::new();
    comps.insert(0, RepMap::identity(p1.term(0)));
    let incl = ChainMap::from_components(p1, res, comps).unwrap();
    assert!(is_cofibration(&incl));
    assert!(!is_weak_equivalence(&incl));
}

#[test]
fn weak_equivalence_agrees_with_homotopy_inverse() {
    let mut r = rng(11);
    let mut seen = [0usize; 2];
    for _ in 0..40 {
        let (x, y) = (random(&mut r), random(&mut r));
        let f = random_chain_map(&mut r, &x, &y, 2).unwrap();
        let inverse = homotopy_inverse(&f).unwrap();
        assert_eq!(is_weak_equivalence(&f), inverse.is_some());
        if let Some(g) = inverse {
            let gf = g.compose(&f).unwrap().sub(&ChainMap::identity(&x));
            assert!(is_nullhomotopic(&gf).unwrap());
        }
        seen[usize::from(is_weak_equivalence(&f))] += 1;
    }
    // also a genuine equivalence: X -> X ⊕ cone(id_W)
    let x = random(&mut r);
    let w = random(&mut r);
    let cw = cone(&ChainMap::identity(&w)).complex;
    let y = Arc::new(direct_sum(&x, &cw));
    let f = inclusion_first(&x, &y);
    assert!(is_weak_equivalence(&f));
    assert!(homotopy_inverse(&f).unwrap().is_some());
    assert!(seen[0] > 0);
}

fn direct_sum(x: &Complex, y: &Complex) -> Complex {
    Complex::direct_sum(&[x, y]).unwrap()
}

fn inclusion_first(x: &Arc<Complex>, y: &Arc<Complex>) -> ChainMap {
    let comps = x
        .degrees()
        .map(|k| {
            let c = (0..x.quiver().vertex_count())
                .map(|v| {
                    let (a, b) = (x.term(k).dim(v), y.term(k).dim(v));
                    let mut m = Matrix::zeros(Q, b, a);
                    m.set_block(0, 0, &Matrix::identity(Q, a));
                    m
                })
                .collect();
            (k, RepMap::new(Q, c))
        })
        .collect();
    ChainMap::from_components(x.clone(), y.clone(), comps).unwrap()
}

#[test]
fn quotients_match_cones() {
    let mut r = rng(12);
    let q = a2();
    for _ in 0..20 {
        let i = random_cofibration(&mut r, &q, Q, ComplexBounds::default()).unwrap();
        assert!(is_cofibration(&i));
        assert!(quotient_matches_cone(&i).unwrap());
    }
}

#[test]
fn homotopy_classes_compose() {
    let q = a2();
    let s1 = interval_module(&q, Q, (0, 0)).unwrap();
    let x = stalk(s1, 0);
    let id = HomotopyClass::new(ChainMap::identity(&x));
    assert!(id.compose(&id).unwrap().equals(&id).unwrap());
    assert!(!id.is_zero().unwrap());
    let res = resolution_of_s1();
    // the augmentation of the resolution is a quasi-isomorphism
    let (dim, basis) = homology_homs(&res, &x).unwrap();
    assert_eq!(dim, 1);
    assert!(is_weak_equivalence(&basis[0].representative));
}
