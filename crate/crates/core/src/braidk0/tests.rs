use proptest::prelude::*;

use super::*;

fn lat(m: usize) -> K0Lattice {
    K0Lattice::new(&Quiver::linear_a(m)).unwrap()
}

fn orientations(m: usize) -> Vec<Quiver> {
    (0..1u32 << (m - 1))
        .map(|mask| {
            let arrows = (0..m - 1)
                .map(|i| if mask >> i & 1 == 1 { (i + 1, i) } else { (i, i + 1) })
                .collect();
            Quiver::new(m, arrows).unwrap()
        })
        .collect()
}

#[test]
fn euler_examples() {
    assert_eq!(lat(1).euler().to_rows(), vec![vec![1]]);
    assert_eq!(lat(2).euler().to_rows(), vec![vec![1, -1], vec![0, 1]]);
    let e = lat(5).euler().clone();
    for r in 0..5 {
        assert_eq!(e.get(r, r), 1);
        for c in 0..r {
            assert_eq!(e.get(r, c), 0);
        }
    }
}

#[test]
fn form_is_skew() {
    for m in 1..=6 {
        for q in orientations(m) {
            let o = K0Lattice::new(&q).unwrap().form(FormKind::Antisymmetric);
            assert_eq!(o.transpose(), o.neg());
        }
    }
}

#[test]
fn a2_generators() {
    let l = lat(2);
    let (t1, t2) = (l.generator(1).unwrap(), l.generator(2).unwrap());
    assert_eq!(t1.to_rows(), vec![vec![1, 1], vec![0, 1]]);
    assert_eq!(t2.to_rows(), vec![vec![1, 0], vec![-1, 1]]);
    let w = vec![vec![0, 1], vec![-1, 0]];
    assert_eq!(t1.mul(&t2).mul(&t1).to_rows(), w);
    assert_eq!(t2.mul(&t1).mul(&t2).to_rows(), w);
    assert!(l.generator(0).is_err());
    assert!(l.generator(3).is_err());
}

#[test]
fn distant_simples_are_fixed() {
    let l = lat(5);
    for i in 1..=5 {
        let t = l.generator(i).unwrap();
        assert_eq!(t.det(), 1);
        for j in 1..=5usize {
            if i.abs_diff(j) >= 2 {
                assert_eq!(t.column(j - 1), IntMatrix::identity(5).column(j - 1));
            }
        }
    }
}

#[test]
fn braid_relations_hold() {
    for m in 1..=6 {
        for q in orientations(m) {
            let check = verify_braid_relations(&q).unwrap();
            assert!(check.ok(), "{:?}", check.failures);
        }
    }
}

#[test]
fn symmetric_form_breaks_the_relations() {
    let q = Quiver::linear_a(2);
    let broken = verify_braid_relations_with(&q, FormKind::Symmetric, 1).unwrap();
    assert!(!broken.braid);
    // with the other sign the symmetric transvections are Coxeter reflections
    let reflections = verify_braid_relations_with(&q, FormKind::Symmetric, -1).unwrap();
    assert!(reflections.braid);
}

#[test]
fn cluster_class_examples() {
    // Φ = [[0,-1],[1,-1]] for linear A_2
    assert_eq!(lat(2).coxeter().unwrap().to_rows(), vec![vec![0, -1], vec![1, -1]]);
    let f = lat(2).cluster_class().unwrap();
    let a = IntMatrix::identity(2).sub(&f);
    assert_eq!(a.det().abs(), 1);
    assert_eq!(lat(1).cluster_class().unwrap().to_rows(), vec![vec![1]]);
}

#[test]
fn quotient_for_even_rank_is_zero() {
    for m in [2, 4, 6] {
        let act = orbit_quotient_action(&Quiver::linear_a(m)).unwrap();
        assert!(act.invariants.iter().all(|&d| d == 1));
        assert!(act.trivial);
    }
}

#[test]
fn quotient_for_a1_is_trivial() {
    let act = orbit_quotient_action(&Quiver::linear_a(1)).unwrap();
    assert_eq!(act.invariants, vec![0]);
    assert!(act.trivial);
    assert_eq!(act.generator_images[0].to_rows(), vec![vec![1]]);
}

#[test]
fn a3_generators_do_not_descend() {
    // L = ℤ with im(1 − [F]) the kernel of (1, −1, 1); T_i − 1 is supported
    // on row i of the form, so no T_i preserves the image
    let q = Quiver::linear_a(3);
    let a = IntMatrix::identity(3).sub(&lat(3).cluster_class().unwrap());
    let mut inv: Vec<i64> = (0..3).map(|i| a.diagonalize().diagonal.get(i, i).abs()).collect();
    inv.sort_unstable();
    assert_eq!(inv, vec![0, 1, 1]);
    let lambda = [1, -1, 1];
    for c in 0..3 {
        let col = a.column(c);
        assert_eq!((0..3).map(|i| lambda[i] * col[i]).sum::<i64>(), 0);
    }
    assert!(matches!(orbit_quotient_action(&q), Err(Error::NotInduced(_))));
}

#[test]
fn d4_is_refused() {
    let q = Quiver::new(4, vec![(0, 1), (2, 1), (3, 1)]).unwrap();
    assert!(matches!(K0Lattice::new(&q), Err(Error::NotTypeA(_))));
}

proptest! {
    #[test]
    fn diagonalization_is_an_equivalence(vals in proptest::collection::vec(-4i64..=4, 12)) {
        let a = IntMatrix::from_rows(&vals.chunks(4).map(<[i64]>::to_vec).collect::<Vec<_>>());
        let red = a.diagonalize();
        prop_assert_eq!(red.left.mul(&a).mul(&red.right), red.diagonal.clone());
        prop_assert!(red.left.mul(&red.left_inv).is_identity());
        prop_assert_eq!(red.left.det().abs(), 1);
        prop_assert_eq!(red.right.det().abs(), 1);
        for r in 0..3 {
            for c in 0..4 {
                if r != c {
                    prop_assert_eq!(red.diagonal.get(r, c), 0);
                }
            }
        }
        for c in 0..4 {
            prop_assert!(red.in_image(&a.column(c)));
        }
    }

    #[test]
    fn determinant_is_multiplicative(x in proptest::collection::vec(-3i64..=3, 9), y in proptest::collection::vec(-3i64..=3, 9)) {
        let rows = |v: &[i64]| v.chunks(3).map(<[i64]>::to_vec).collect::<Vec<_>>();
        let (a, b) = (IntMatrix::from_rows(&rows(&x)), IntMatrix::from_rows(&rows(&y)));
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
    }
}
