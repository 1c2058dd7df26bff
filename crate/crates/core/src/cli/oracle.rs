//! Brute-force homotopy classes: chain maps and null-homotopic maps are
//! built entry by entry from the representation data, with no use of the
//! hom-complex machinery.

use std::collections::BTreeMap;

use crate::dgkernel::Complex;
use crate::error::Result;
use crate::exactlin::{Field, Matrix, Scalar, Vector};

// unknown matrices f_{k,v}: X_k(v) -> Y_{k+shift}(v), laid out row-major
struct Layout {
    blocks: BTreeMap<(i64, usize), (usize, usize, usize)>,
    len: usize,
}

impl Layout {
    fn new(x: &Complex, y: &Complex, shift: i64) -> Layout {
        let mut blocks = BTreeMap::new();
        let mut len = 0;
        let nv = x.quiver().vertex_count();
        for k in x.degrees() {
            for v in 0..nv {
                let (r, c) = (y.term(k + shift).dim(v), x.term(k).dim(v));
                if r * c > 0 {
                    blocks.insert((k, v), (len, r, c));
                    len += r * c;
                }
            }
        }
        Layout { blocks, len }
    }

    fn index(&self, k: i64, v: usize, r: usize, c: usize) -> Option<usize> {
        self.blocks.get(&(k, v)).map(|&(off, _, cols)| off + r * cols + c)
    }

    fn block(&self, coords: &[Scalar], k: i64, v: usize, rows: usize, cols: usize, field: Field) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        if let Some(&(off, _, c)) = self.blocks.get(&(k, v)) {
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, coords[off + i * c + j].clone());
                }
            }
        }
        m
    }
}

// sparse equations over the unknowns
struct System {
    field: Field,
    len: usize,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl System {
    fn new(field: Field, len: usize) -> System {
        System {
            field,
            len,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: BTreeMap<usize, Scalar>) {
        let row: BTreeMap<usize, Scalar> = row.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows.len(), self.len);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, s) in row {
                m.set(i, j, s.clone());
            }
        }
        m
    }
}

fn accumulate(row: &mut BTreeMap<usize, Scalar>, idx: Option<usize>, s: Scalar) {
    if let Some(i) = idx {
        let e = row.entry(i).or_insert_with(|| s.field().zero());
        *e = &*e + &s;
    }
}

// A·F_{k,u} − F_{k,v}·B = 0 for every arrow u -> v
fn intertwiner_equations(x: &Complex, y: &Complex, shift: i64, lay: &Layout, sys: &mut System) {
    let arrows = x.quiver().arrows().to_vec();
    for k in x.degrees() {
        let (xs, ys) = (x.term(k), y.term(k + shift));
        for (a, &(u, v)) in arrows.iter().enumerate() {
            let (ya, xa) = (ys.arrow_map(a), xs.arrow_map(a));
            for r in 0..ys.dim(v) {
                for c in 0..xs.dim(u) {
                    let mut row = BTreeMap::new();
                    for s in 0..ys.dim(u) {
                        accumulate(&mut row, lay.index(k, u, s, c), ya.get(r, s).clone());
                    }
                    for t in 0..xs.dim(v) {
                        accumulate(&mut row, lay.index(k, v, r, t), -xa.get(t, c));
                    }
                    sys.push(row);
                }
            }
        }
    }
}

fn family_space(x: &Complex, y: &Complex, shift: i64) -> (Layout, Vec<Vector>) {
    let lay = Layout::new(x, y, shift);
    let mut sys = System::new(x.field(), lay.len);
    intertwiner_equations(x, y, shift, &lay, &mut sys);
    let basis = if lay.len == 0 {
        Vec::new()
    } else if sys.rows.is_empty() {
        (0..lay.len).map(|i| Vector::unit(x.field(), lay.len, i)).collect()
    } else {
        sys.matrix().kernel_basis()
    };
    (lay, basis)
}

/// `dim H₀ Hom(X, Y)` computed as (chain maps) − (null-homotopic maps).
pub fn homotopy_dim(x: &Complex, y: &Complex) -> Result<usize> {
    let field = x.field();
    let nv = x.quiver().vertex_count();
    let lay = Layout::new(x, y, 0);
    let mut sys = System::new(field, lay.len);
    intertwiner_equations(x, y, 0, &lay, &mut sys);
    // d_Y F_k − F_{k−1} d_X = 0 at every vertex
    for k in x.degrees() {
        let (dx, dy) = (x.d(k), y.d(k));
        for v in 0..nv {
            let (rows, cols) = (y.term(k - 1).dim(v), x.term(k).dim(v));
            let (dyv, dxv) = (dy.component(v), dx.component(v));
            for r in 0..rows {
                for c in 0..cols {
                    let mut row = BTreeMap::new();
                    for s in 0..y.term(k).dim(v) {
                        accumulate(&mut row, lay.index(k, v, s, c), dyv.get(r, s).clone());
                    }
                    for t in 0..x.term(k - 1).dim(v) {
                        accumulate(&mut row, lay.index(k - 1, v, r, t), -dxv.get(t, c));
                    }
                    sys.push(row);
                }
            }
        }
    }
    let cycles = if lay.len == 0 {
        0
    } else {
        lay.len - if sys.rows.is_empty() { 0 } else { sys.matrix().rank() }
    };
    // images d_Y h_k + h_{k−1} d_X of the degree-one intertwiner families
    let (hlay, hbasis) = family_space(x, y, 1);
    let mut images = Vec::with_capacity(hbasis.len());
    for h in &hbasis {
        let coords = h.entries();
        let mut out = vec![field.zero(); lay.len];
        for k in x.degrees() {
            let (dx, dy) = (x.d(k), y.d(k + 1));
            for v in 0..nv {
                let (rows, cols) = (y.term(k).dim(v), x.term(k).dim(v));
                if rows * cols == 0 {
                    continue;
                }
                let hk = hlay.block(coords, k, v, y.term(k + 1).dim(v), cols, field);
                let hk1 = hlay.block(coords, k - 1, v, rows, x.term(k - 1).dim(v), field);
                let f = dy.component(v).mul(&hk)?.add(&hk1.mul(dx.component(v))?)?;
                for r in 0..rows {
                    for c in 0..cols {
                        let i = lay.index(k, v, r, c).expect("block exists");
                        out[i] = f.get(r, c).clone();
                    }
                }
            }
        }
        images.push(Vector::new(field, out)?);
    }
    let boundaries = if images.is_empty() || lay.len == 0 {
        0
    } else {
        Matrix::from_columns(field, lay.len, &images)?.rank()
    };
    Ok(cycles - boundaries)
}
