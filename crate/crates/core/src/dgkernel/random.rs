//! Seeded random complexes, chain maps and cofibrations for property checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use crate::error::Result;
use crate::exactlin::{Matrix, Vector};
use crate::quiverrep::{hom_space, indecomposables, Quiver, Rep, RepMap};

use super::{ChainMap, Complex, GradedMap, HomComplex};
use crate::exactlin::Field;

/// Bounds for [`random_complex`].
#[derive(Debug, Clone, Copy)]
pub struct ComplexBounds {
    pub lo: i64,
    pub hi: i64,
    /// Maximal total dimension of each term.
    pub max_dim: usize,
    /// Coefficients are drawn from `-coeff..=coeff`.
    pub coeff: i64,
}

impl Default for ComplexBounds {
    fn default() -> ComplexBounds {
        ComplexBounds {
            lo: -2,
            hi: 2,
            max_dim: 3,
            coeff: 2,
        }
    }
}

fn random_term<R: Rng>(rng: &mut R, ind: &[Rep], zero: &Rep, max_dim: usize) -> Rep {
    let budget = rng.gen_range(0..=max_dim);
    let mut parts: Vec<&Rep> = Vec::new();
    let mut used = 0;
    for _ in 0..budget {
        let m = &ind[rng.gen_range(0..ind.len())];
        if used + m.total_dim() <= budget {
            used += m.total_dim();
            parts.push(m);
        }
    }
    if parts.is_empty() {
        return zero.clone();
    }
    Rep::direct_sum(&parts).expect("same quiver")
}

fn random_combination<R: Rng>(rng: &mut R, field: Field, basis: &[Vector], len: usize, coeff: i64) -> Vector {
    let mut v = Vector::zeros(field, len);
    for b in basis {
        let c = rng.gen_range(-coeff..=coeff);
        if c != 0 {
            v = v.add(&b.scale(&field.int(c)));
        }
    }
    v
}

/// A random bounded complex of sums of interval modules with `d² = 0`.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    quiver: &Arc<Quiver>,
    field: Field,
    bounds: ComplexBounds,
) -> Result<Complex> {
    let ind = indecomposables(quiver, field)?;
    let zero = Rep::zero(quiver.clone(), field);
    let terms: Vec<Rep> = (bounds.lo..=bounds.hi)
        .map(|_| random_term(rng, &ind, &zero, bounds.max_dim))
        .collect();
    let mut diffs: Vec<RepMap> = Vec::new();
    for j in 1..terms.len() {
        let (src, tgt) = (&terms[j], &terms[j - 1]);
        let h = hom_space(src, tgt)?;
        // restrict to maps killed by the previous differential
        let allowed: Vec<Vector> = match diffs.last() {
            None => (0..h.dimension())
                .map(|i| Vector::unit(field, h.dimension(), i))
                .collect(),
            Some(prev) => {
                let cols: Vec<Vector> = h.basis().iter().map(|b| prev.compose(b).flatten()).collect();
                let rows = cols.first().map_or(0, Vector::len);
                Matrix::from_columns(field, rows, &cols)?.kernel_basis()
            }
        };
        let c = random_combination(rng, field, &allowed, h.dimension(), bounds.coeff);
        diffs.push(h.element(&c));
    }
    Complex::build(quiver.clone(), field, bounds.lo, terms, diffs)
}

/// A random element of the span of the chain maps `X -> Y`.
pub fn random_chain_map<R: Rng>(
    rng: &mut R,
    x: &Arc<Complex>,
    y: &Arc<Complex>,
    coeff: i64,
) -> Result<ChainMap> {
    let h = HomComplex::new(x, y)?;
    let z = h.cycles(0);
    let v = random_combination(rng, x.field(), &z, h.dim(0), coeff);
    ChainMap::new(h.element(0, &v))
}

/// A random cofibration `X -> Y`: `Y = X ⊕ W` with differential
/// `[[d_X, t], [0, d_W]]` for a random degree −1 cycle `t ∈ Hom(W, X)`,
/// and the inclusion of `X`.
pub fn random_cofibration<R: Rng>(
    rng: &mut R,
    quiver: &Arc<Quiver>,
    field: Field,
    bounds: ComplexBounds,
) -> Result<ChainMap> {
    let x = Arc::new(random_complex(rng, quiver, field, bounds)?);
    let w = Arc::new(random_complex(rng, quiver, field, bounds)?);
    let hwx = HomComplex::new(&w, &x)?;
    let t = hwx.element(
        -1,
        &random_combination(rng, field, &hwx.cycles(-1), hwx.dim(-1), bounds.coeff),
    );
    twisted_inclusion(&x, &w, &t)
}

/// The inclusion `X -> (X ⊕ W, [[d_X, t], [0, d_W]])` for a degree −1
/// cycle `t: W -> X`.
pub fn twisted_inclusion(x: &Arc<Complex>, w: &Arc<Complex>, t: &GradedMap) -> Result<ChainMap> {
    let field = x.field();
    let q = x.quiver().clone();
    let nv = q.vertex_count();
    let degs: Vec<i64> = x.degrees().chain(w.degrees()).collect();
    let (lo, hi) = match (degs.iter().min(), degs.iter().max()) {
        (Some(&l), Some(&h)) => (l, h),
        _ => return Ok(ChainMap::zero(x.clone(), x.clone())),
    };
    let terms: Vec<Rep> = (lo..=hi)
        .map(|k| Rep::direct_sum(&[x.term(k), w.term(k)]).expect("same quiver"))
        .collect();
    let diffs = ((lo + 1)..=hi)
        .map(|k| {
            let (dx, dw, tk) = (x.d(k), w.d(k), t.component(k));
            let comps = (0..nv)
                .map(|v| {
                    let (a, b, c) = (dx.component(v), tk.component(v), dw.component(v));
                    let mut m = Matrix::zeros(field, a.rows() + c.rows(), a.cols() + c.cols());
                    m.set_block(0, 0, a);
                    m.set_block(0, a.cols(), b);
                    m.set_block(a.rows(), a.cols(), c);
                    m
                })
                .collect();
            RepMap::new(field, comps)
        })
        .collect();
    let y = Arc::new(Complex::build(q, field, lo, terms, diffs)?);
    let components: BTreeMap<i64, RepMap> = x
        .degrees()
        .map(|k| {
            let comps = (0..nv)
                .map(|v| {
                    let (xd, wd) = (x.term(k).dim(v), w.term(k).dim(v));
                    let mut m = Matrix::zeros(field, xd + wd, xd);
                    m.set_block(0, 0, &Matrix::identity(field, xd));
                    m
                })
                .collect();
            (k, RepMap::new(field, comps))
        })
        .collect();
    ChainMap::from_components(x.clone(), y, components)
}
