//! The AR quiver of the derived category on a window of shifts, with nodes
//! colored by `F`-orbit.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::derivedcat::DbIndec;
use crate::dgkernel::{class_coordinates, homology_homs, HomComplex};
use crate::error::Result;
use crate::exactlin::{Matrix, Vector};
use crate::orbitcat::OrbitCategory;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArNode {
    pub label: DbIndec,
    /// Index of the orbit among the orbit indecomposables.
    pub orbit: usize,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArQuiver {
    pub window: (i64, i64),
    pub nodes: Vec<ArNode>,
    /// `(source, target, multiplicity)` over node indices.
    pub edges: Vec<(usize, usize, usize)>,
}

/// `dim rad(X, Y)/rad²(X, Y)` between distinct labels, through chain maps of
/// realizations.
pub fn irreducible_dim(cat: &OrbitCategory, x: DbIndec, y: DbIndec) -> Result<usize> {
    let db = cat.db();
    if x == y || db.hom_dim(x, y)? == 0 {
        return Ok(0);
    }
    let (rx, ry) = (db.realize(x)?, db.realize(y)?);
    let hom = HomComplex::new(&rx.complex, &ry.complex)?;
    let (dim, basis) = homology_homs(&rx.complex, &ry.complex)?;
    let mut composites: Vec<Vector> = Vec::new();
    for z in db.labels(x.shift, y.shift) {
        if z == x || z == y || db.hom_dim(x, z)? == 0 || db.hom_dim(z, y)? == 0 {
            continue;
        }
        let rz = db.realize(z)?;
        let (_, first) = homology_homs(&rx.complex, &rz.complex)?;
        let (_, second) = homology_homs(&rz.complex, &ry.complex)?;
        for f in &first {
            for g in &second {
                let gf = g.compose(f)?;
                composites.push(class_coordinates(&hom, &basis, &gf.representative)?);
            }
        }
    }
    let rad2 = if composites.is_empty() {
        0
    } else {
        Matrix::from_columns(db.field(), dim, &composites)?.rank()
    };
    Ok(dim - rad2)
}

/// Labels with shift in `window`, irreducible maps between them, and the
/// orbit of each label.
pub fn ar_quiver(cat: &OrbitCategory, window: (i64, i64)) -> Result<ArQuiver> {
    let db = cat.db();
    let orbits: BTreeMap<_, usize> = cat.indecomposables().into_iter().enumerate().map(|(i, o)| (o, i)).collect();
    let labels = db.labels(window.0, window.1);
    let nodes: Vec<ArNode> = labels
        .iter()
        .map(|&x| {
            let orbit = orbits[&cat.canonical(x)];
            ArNode {
                label: x,
                orbit,
                color: PALETTE[orbit % PALETTE.len()].to_string(),
            }
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &x) in labels.iter().enumerate() {
        for (j, &y) in labels.iter().enumerate() {
            if y.shift < x.shift || y.shift > x.shift + 1 {
                continue;
            }
            let m = irreducible_dim(cat, x, y)?;
            if m > 0 {
                edges.push((i, j, m));
            }
        }
    }
    Ok(ArQuiver { window, nodes, edges })
}

pub fn export_ar_quiver(cat: &OrbitCategory, window: (i64, i64)) -> Result<String> {
    Ok(to_dot(cat, &ar_quiver(cat, window)?))
}

pub fn to_dot(cat: &OrbitCategory, ar: &ArQuiver) -> String {
    let db = cat.db();
    let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [style=filled];\n");
    for (i, n) in ar.nodes.iter().enumerate() {
        let (lo, hi) = db.interval(n.label.module);
        let _ = writeln!(
            s,
            "  n{i} [label=\"Σ^{} [{},{}]\", fillcolor=\"{}\"];",
            n.label.shift,
            lo + 1,
            hi + 1,
            n.color
        );
    }
    for &(a, b, m) in &ar.edges {
        for _ in 0..m {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
    }
    s.push_str("}\n");
    s
}
