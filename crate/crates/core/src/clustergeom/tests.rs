use std::sync::Arc;

use super::*;
use crate::exactlin::Field;
use crate::quiverrep::Quiver;

fn cluster(n: usize) -> OrbitCategory {
    OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), Field::Rational).unwrap()
}

const CATALAN: [usize; 8] = [1, 1, 2, 5, 14, 42, 132, 429];

#[test]
fn diagonal_counts() {
    for n in 1..=6 {
        assert_eq!(diagonals(n).unwrap().len(), n * (n + 3) / 2);
    }
    assert!(diagonals(0).is_err());
    assert!(Diagonal::new(2, 0, 4).is_err());
    assert!(Diagonal::new(2, 1, 2).is_err());
    assert!(Diagonal::new(2, 1, 3).is_ok());
}

#[test]
fn crossing_basics() {
    let a = Diagonal::new(1, 0, 2).unwrap();
    let b = Diagonal::new(1, 1, 3).unwrap();
    assert!(crossing(a, b).unwrap());
    let c = Diagonal::new(2, 0, 2).unwrap();
    let d = Diagonal::new(2, 0, 3).unwrap();
    assert!(!crossing(c, d).unwrap());
    assert!(crossing(a, c).is_err());
    let pent = diagonals(2).unwrap();
    let mut total = 0;
    for &x in &pent {
        assert!(!crossing(x, x).unwrap());
        for &y in &pent {
            assert_eq!(crossing(x, y).unwrap(), crossing(y, x).unwrap());
            total += usize::from(crossing(x, y).unwrap());
        }
    }
    // each pentagon diagonal crosses exactly two others
    assert_eq!(total, 10);
}

#[test]
fn triangulation_counts() {
    for n in 1..=5 {
        let ts = triangulations(n).unwrap();
        assert_eq!(ts.len(), CATALAN[n + 1], "n = {n}");
        for t in &ts {
            assert_eq!(t.diagonals.len(), n);
        }
    }
}

#[test]
fn bijection_matches_crossings() {
    for n in 1..=4 {
        let c = cluster(n);
        let bij = geom_bijection(&c).unwrap();
        assert_eq!(bij.map.len(), n * (n + 3) / 2);
        let images: BTreeSet<OrbitObj> = bij.map.values().copied().collect();
        assert_eq!(images.len(), bij.map.len());
        assert!(bij.check(&c).unwrap());
    }
}

#[test]
fn a2_crossing_sums_agree() {
    let c = cluster(2);
    let objs = c.indecomposables();
    let mut ext_pairs = 0;
    for &x in &objs {
        for &y in &objs {
            ext_pairs += c.ext1(x, y).unwrap();
        }
    }
    assert_eq!(ext_pairs, 10);
}

#[test]
fn tilting_objects_are_triangulations() {
    for n in 1..=4 {
        let c = cluster(n);
        let tilting = cluster_tilting_objects(&c).unwrap();
        assert_eq!(tilting.len(), CATALAN[n + 1]);
        for t in &tilting {
            assert_eq!(t.len(), n);
        }
        let bij = geom_bijection(&c).unwrap();
        let mut transported: Vec<BTreeSet<OrbitObj>> =
            triangulations(n).unwrap().iter().map(|t| bij.transport(t)).collect();
        let mut tilting = tilting;
        transported.sort();
        tilting.sort();
        assert_eq!(transported, tilting);
    }
}

#[test]
fn isomorphism_search_rejects_different_graphs() {
    // a path and a star on four vertices
    let path = vec![
        vec![false, true, false, false],
        vec![true, false, true, false],
        vec![false, true, false, true],
        vec![false, false, true, false],
    ];
    let star = vec![
        vec![false, true, true, true],
        vec![true, false, false, false],
        vec![true, false, false, false],
        vec![true, false, false, false],
    ];
    assert!(graph_isomorphism(&path, &star).is_none());
    let m = graph_isomorphism(&path, &path).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(path[a][b], path[m[a]][m[b]]);
        }
    }
}

#[test]
fn dot_export_is_deterministic() {
    let a = crossing_graph_dot(2).unwrap();
    assert_eq!(a, crossing_graph_dot(2).unwrap());
    assert_eq!(a.matches(" -- ").count(), 5);
}
