use std::sync::Arc;

use super::*;
use crate::dgkernel::homology_homs;
use crate::exactlin::Field;
use crate::quiverrep::{coxeter_apply, coxeter_matrix, is_isomorphic};

const Q: Field = Field::Rational;

fn db(n: usize) -> DerivedCategory {
    DerivedCategory::new(Arc::new(Quiver::linear_a(n)), Q).unwrap()
}

fn zigzag(n: usize) -> DerivedCategory {
    let arrows = (1..n)
        .map(|i| if i % 2 == 0 { (i, i - 1) } else { (i - 1, i) })
        .collect();
    DerivedCategory::new(Arc::new(Quiver::new(n, arrows).unwrap()), Q).unwrap()
}

#[test]
fn hereditary_support() {
    for n in 1..=5 {
        let d = db(n);
        for x in d.labels(-2, 2) {
            assert_eq!(d.hom_dim(x, x).unwrap(), 1);
            for y in d.labels(-2, 2) {
                if !(0..=1).contains(&(y.shift - x.shift)) {
                    assert_eq!(d.hom_dim(x, y).unwrap(), 0);
                }
                assert_eq!(
                    d.hom_dim(d.suspend(x, 1), d.suspend(y, 1)).unwrap(),
                    d.hom_dim(x, y).unwrap()
                );
            }
        }
    }
}

#[test]
fn a1_translate_and_serre() {
    let d = db(1);
    let p = DbIndec::new(0, 0);
    assert_eq!(d.translate(p), DbIndec::new(0, -1));
    assert_eq!(d.serre(p), p);
    assert!(d.verify_serre_duality(p, p).unwrap());
}

#[test]
fn translate_is_a_bijection() {
    for d in [db(3), zigzag(3), zigzag(4)] {
        let window = d.labels(-3, 3);
        let mut images: Vec<DbIndec> = window.iter().map(|&x| d.translate(x)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), window.len());
        for &x in &window {
            assert_eq!(d.translate_inv(d.translate(x)), x);
            assert_eq!(d.translate(d.translate_inv(x)), x);
            assert_eq!(d.serre_inv(d.serre(x)), x);
        }
    }
}

#[test]
fn translate_power_is_periodic() {
    for n in 1..=5 {
        for d in [db(n), zigzag(n)] {
            let h = d.coxeter_number() as i64;
            for x in d.labels(-1, 1) {
                let mut y = x;
                for _ in 0..h {
                    y = d.translate(y);
                }
                assert_eq!(y, d.suspend(x, -2));
                for k in -7..=7 {
                    let mut z = x;
                    for _ in 0..k.max(0) {
                        z = d.translate(z);
                    }
                    for _ in 0..(-k).max(0) {
                        z = d.translate_inv(z);
                    }
                    assert_eq!(d.translate_pow(x, k), z);
                }
            }
        }
    }
}

#[test]
fn translate_shadow_is_coxeter() {
    for d in [db(4), zigzag(5)] {
        let phi = coxeter_matrix(d.quiver()).unwrap();
        for m in 0..d.module_count() {
            if d.projective_vertex(m).is_some() {
                continue;
            }
            let t = d.translate(DbIndec::new(m, 0));
            assert_eq!(t.shift, 0);
            let expect: Vec<i64> = d.module(t.module).dims().iter().map(|&x| x as i64).collect();
            assert_eq!(coxeter_apply(&phi, d.module(m).dims()), expect);
        }
    }
}

#[test]
fn functors_commute_on_labels() {
    let d = zigzag(4);
    for x in d.labels(-2, 2) {
        assert_eq!(d.serre(x), d.translate(d.suspend(x, 1)));
        assert_eq!(d.serre(d.suspend(x, 1)), d.suspend(d.serre(x), 1));
        assert_eq!(d.translate(d.serre(x)), d.serre(d.translate(x)));
        assert_eq!(d.suspend(d.suspend(x, 1), -1), x);
    }
}

#[test]
fn serre_duality_small() {
    for n in 1..=3 {
        for d in [db(n), zigzag(n)] {
            for x in d.labels(-2, 2) {
                for y in d.labels(-2, 2) {
                    assert!(d.verify_serre_duality(x, y).unwrap(), "{x} {y}");
                }
            }
        }
    }
}

#[test]
fn serre_without_suspension_fails() {
    let d = db(2);
    let labels = d.labels(-2, 2);
    let broken = labels.iter().any(|&x| {
        labels.iter().any(|&y| !d.verify_serre_duality_with(x, y, |z| d.translate(z)).unwrap())
    });
    assert!(broken);
}

#[test]
fn realizations_have_the_right_homology() {
    let d = zigzag(3);
    for x in d.labels(-2, 2) {
        let r = d.realize(x).unwrap();
        for k in -4..=4 {
            let h = r.complex.homology(k);
            if k == x.shift {
                assert!(is_isomorphic(&h, d.module(x.module)).unwrap());
            } else {
                assert!(h.is_zero());
            }
        }
    }
    // projective modules realize as stalks
    let p = d.projective_index(0);
    let r = d.realize(DbIndec::new(p, 1)).unwrap();
    assert_eq!(r.complex.range(), Some((1, 1)));
}

#[test]
fn realized_homs_match_labels() {
    for d in [db(2), db(3), zigzag(3)] {
        let labels = d.labels(-2, 2);
        for &x in &labels {
            let rx = d.realize(x).unwrap();
            for &y in &labels {
                let ry = d.realize(y).unwrap();
                let (dim, _) = homology_homs(&rx.complex, &ry.complex).unwrap();
                assert_eq!(dim, d.hom_dim(x, y).unwrap(), "{x} -> {y}");
            }
        }
    }
}

#[test]
fn objects_are_additive() {
    let d = db(2);
    let x: DbObject = [(DbIndec::new(0, 0), 2), (DbIndec::new(2, 1), 1)].into_iter().collect();
    let y: DbObject = [(DbIndec::new(1, 0), 1), (DbIndec::new(0, 1), 1)].into_iter().collect();
    let mut expect = 0;
    for (a, m) in x.summands() {
        for (b, n) in y.summands() {
            expect += m * n * d.hom_dim(a, b).unwrap();
        }
    }
    assert_eq!(d.hom_dim_objects(&x, &y).unwrap(), expect);
    let cx = Arc::new(d.realize_object(&x).unwrap());
    let cy = Arc::new(d.realize_object(&y).unwrap());
    assert_eq!(homology_homs(&cx, &cy).unwrap().0, expect);
    assert!(DbObject::zero().is_zero());
}

#[test]
fn nakayama_of_a_projective_resolution() {
    // ν(P_i) = I_i termwise, and ν of the realization of Σ^a M is
    // quasi-isomorphic to the realization of ν(Σ^a M)
    let d = zigzag(3);
    for x in d.labels(-1, 1) {
        let r = d.realize(x).unwrap();
        let n = r.nakayama().unwrap();
        let target = d.realize(d.serre(x)).unwrap();
        let (dim, _) = homology_homs(&target.complex, &n.complex).unwrap();
        assert_eq!(dim, 1);
        for k in -3..=3 {
            assert!(is_isomorphic(&n.complex.homology(k), &target.complex.homology(k)).unwrap());
        }
        let back = n.nakayama().unwrap();
        assert_eq!(back.complex, r.complex);
    }
}

#[test]
fn d4_is_refused() {
    let q = Arc::new(Quiver::new(4, vec![(0, 1), (2, 1), (3, 1)]).unwrap());
    assert!(matches!(DerivedCategory::new(q, Q), Err(Error::NotTypeA(_))));
}
