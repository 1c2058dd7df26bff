use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::exactlin::{Field, Matrix, Vector};
use crate::quiverrep::{Rep, RepMap};

use super::{ChainMap, Complex, GradedMap, HomComplex};

fn sign(field: Field, n: i64) -> crate::exactlin::Scalar {
    field.int(if n.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `ΣⁿX`: `(ΣⁿX)_{k+n} = X_k`, differential multiplied by `(−1)ⁿ`.
pub fn shift(x: &Complex, n: i64) -> Complex {
    let Some((lo, hi)) = x.range() else {
        return x.clone();
    };
    let s = sign(x.field(), n);
    let terms = (lo..=hi).map(|k| x.term(k).clone()).collect();
    let diffs = ((lo + 1)..=hi).map(|k| x.d(k).scale(&s)).collect();
    Complex::build(x.quiver().clone(), x.field(), lo + n, terms, diffs).expect("shift of a complex")
}

/// `Σⁿf` between the shifted complexes, components reindexed without sign;
/// then `d(Σⁿf) = (−1)ⁿ Σⁿ(df)`.
pub fn shift_map(f: &GradedMap, n: i64, source: &Arc<Complex>, target: &Arc<Complex>) -> GradedMap {
    let components = f.components().iter().map(|(&k, m)| (k + n, m.clone())).collect();
    GradedMap::new_unchecked(source.clone(), target.clone(), f.degree(), components)
}

/// Deliberate mistakes in the cone construction, used as negative controls
/// for [`verify_cone_representability_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    /// `f` enters the differential with the wrong sign.
    SignFlip,
    /// The `ΣX` summand is left out.
    DroppedSummand,
    /// Terms laid out as `X_{k−1} ⊕ Y_k` while the structure maps still
    /// read `Y_k` first.
    SwappedOrder,
}

/// The cone `Cf` with `(Cf)_k = Y_k ⊕ X_{k−1}` and
/// `d(y, x) = (d_Y y + f x, −d_X x)`, together with its structure maps.
#[derive(Debug, Clone)]
pub struct Cone {
    pub complex: Arc<Complex>,
    /// The chain map `Y -> Cf`.
    pub inclusion: GradedMap,
    /// The degree-one map `X -> Cf`, `x ↦ (0, x)`; its differential is
    /// `inclusion ∘ f`.
    pub inclusion_x: GradedMap,
    /// The chain map `Cf -> ΣX`.
    pub projection: GradedMap,
    pub shifted_source: Arc<Complex>,
}

pub fn cone(f: &ChainMap) -> Cone {
    build_cone(f, None)
}

pub fn cone_with(f: &ChainMap, corruption: Corruption) -> Cone {
    build_cone(f, Some(corruption))
}

fn build_cone(f: &ChainMap, corruption: Option<Corruption>) -> Cone {
    let (x, y) = (f.source(), f.target());
    let field = x.field();
    let q = x.quiver().clone();
    let nv = q.vertex_count();
    let one = field.one();
    let minus = field.int(-1);
    let fsign = if corruption == Some(Corruption::SignFlip) { &minus } else { &one };
    let dropped = corruption == Some(Corruption::DroppedSummand);
    let swapped = corruption == Some(Corruption::SwappedOrder);

    let mut degs: Vec<i64> = y.degrees().collect();
    degs.extend(x.degrees().map(|k| k + 1));
    let (lo, hi) = match (degs.iter().min(), degs.iter().max()) {
        (Some(&l), Some(&h)) => (l, h),
        _ => (0, -1),
    };

    let term = |k: i64| -> Rep {
        if dropped {
            return y.term(k).clone();
        }
        let (a, b) = (y.term(k), x.term(k - 1));
        let parts = if swapped { [b, a] } else { [a, b] };
        Rep::direct_sum(&parts).expect("same quiver")
    };
    let terms: Vec<Rep> = (lo..=hi).map(term).collect();

    let diffs: Vec<RepMap> = ((lo + 1)..=hi)
        .map(|k| {
            let (dy, dx, fk) = (y.d(k), x.d(k - 1), f.component(k - 1));
            let comps = (0..nv)
                .map(|v| {
                    let (dyv, dxv, fv) = (dy.component(v), dx.component(v).neg(), fk.component(v).scale(fsign));
                    if dropped {
                        return dyv.clone();
                    }
                    let (yr, yc) = dyv.shape();
                    let (xr, xc) = dxv.shape();
                    let mut m = Matrix::zeros(field, yr + xr, yc + xc);
                    if swapped {
                        m.set_block(0, 0, &dxv);
                        m.set_block(xr, 0, &fv);
                        m.set_block(xr, xc, dyv);
                    } else {
                        m.set_block(0, 0, dyv);
                        m.set_block(0, yc, &fv);
                        m.set_block(yr, yc, &dxv);
                    }
                    m
                })
                .collect();
            RepMap::new(field, comps)
        })
        .collect();
    let complex = Arc::new(
        Complex::build(q.clone(), field, lo, terms, diffs).expect("cone differential squares to zero"),
    );

    // Structure maps. Under `SwappedOrder` they keep the Y-first layout.
    let embed = |rows_first: bool, k: i64, v: usize| -> Matrix {
        let (yd, xd) = (y.term(k).dim(v), x.term(k - 1).dim(v));
        let c = complex.term(k).dim(v);
        let (n, offset) = if rows_first { (yd, 0) } else { (xd, yd) };
        let mut m = Matrix::zeros(field, c, n);
        if dropped && !rows_first {
            return m;
        }
        for i in 0..n {
            m.set(offset + i, i, one.clone());
        }
        m
    };
    let inclusion = GradedMap::new_unchecked(
        y.clone(),
        complex.clone(),
        0,
        y.degrees()
            .map(|k| (k, RepMap::new(field, (0..nv).map(|v| embed(true, k, v)).collect())))
            .collect(),
    );
    let inclusion_x = GradedMap::new_unchecked(
        x.clone(),
        complex.clone(),
        1,
        x.degrees()
            .map(|k| (k, RepMap::new(field, (0..nv).map(|v| embed(false, k + 1, v)).collect())))
            .collect(),
    );
    let shifted_source = Arc::new(shift(x, 1));
    let projection = GradedMap::new_unchecked(
        complex.clone(),
        shifted_source.clone(),
        0,
        complex
            .degrees()
            .map(|k| {
                let comps = (0..nv).map(|v| embed(false, k, v).transpose()).collect();
                (k, RepMap::new(field, comps))
            })
            .collect::<BTreeMap<_, _>>(),
    );
    Cone {
        complex,
        inclusion,
        inclusion_x,
        projection,
        shifted_source,
    }
}

/// Does the cone of `f` represent the module
/// `M(Z)_k = Hom(Y, Z)_k ⊕ Hom(X, Z)_{k+1}`, `d(a, b) = (da, af − db)`?
///
/// The comparison map sends `φ` of degree `k` to `(φ u_Y, (−1)^k φ u_X)`
/// where `u_Y`, `u_X` are the structure maps of the cone (the universal
/// 0-cycle and its degree-one companion). Checked: `Ψ` lands in `M(Z)`, is
/// bijective in every degree and commutes with the differentials.
pub fn verify_cone_representability(f: &ChainMap, z: &Arc<Complex>) -> Result<bool> {
    check_representability(f, &cone(f), z)
}

pub fn verify_cone_representability_with(
    f: &ChainMap,
    z: &Arc<Complex>,
    corruption: Corruption,
) -> Result<bool> {
    check_representability(f, &cone_with(f, corruption), z)
}

fn check_representability(f: &ChainMap, c: &Cone, z: &Arc<Complex>) -> Result<bool> {
    let field = z.field();
    let hc = HomComplex::new(&c.complex, z)?;
    let hy = HomComplex::new(f.target(), z)?;
    let hx = HomComplex::new(f.source(), z)?;
    let mut degrees: Vec<i64> = hc.degrees();
    degrees.extend(hy.degrees());
    degrees.extend(hx.degrees().into_iter().map(|n| n - 1));
    degrees.sort_unstable();
    degrees.dedup();

    let lies_in_hom = |g: &GradedMap| {
        g.components()
            .iter()
            .all(|(&k, m)| m.is_morphism(g.source().term(k), g.target().term(k + g.degree())))
    };
    let psi = |phi: &GradedMap| -> Option<Vector> {
        let a = phi.compose(&c.inclusion).ok()?;
        let b = phi.compose(&c.inclusion_x).ok()?.scale(&sign(field, phi.degree()));
        if !lies_in_hom(&a) || !lies_in_hom(&b) {
            return None;
        }
        Some(Vector::concat(&[hy.coordinates(&a), hx.coordinates(&b)], field))
    };
    // d_M(a, b) = (da, a f − db)
    let d_m = |v: &Vector, k: i64| -> Vector {
        let (ny, nx) = (hy.dim(k), hx.dim(k + 1));
        let a = hy.element(k, &v.select(&(0..ny).collect::<Vec<_>>()));
        let b = hx.element(k + 1, &v.select(&(ny..ny + nx).collect::<Vec<_>>()));
        let af = a.compose(f.as_graded()).expect("a starts at Y");
        let second = af.sub(&b.differential());
        Vector::concat(&[hy.coordinates(&a.differential()), hx.coordinates(&second)], field)
    };

    for &k in &degrees {
        let m_dim = hy.dim(k) + hx.dim(k + 1);
        if hc.dim(k) != m_dim {
            return Ok(false);
        }
        let mut cols = Vec::with_capacity(m_dim);
        for phi in hc.basis(k) {
            let Some(image) = psi(&phi) else {
                return Ok(false);
            };
            let Some(lhs) = psi(&phi.differential()) else {
                return Ok(false);
            };
            if lhs != d_m(&image, k) {
                return Ok(false);
            }
            cols.push(image);
        }
        if Matrix::from_columns(field, m_dim, &cols)?.rank() != m_dim {
            return Ok(false);
        }
    }
    Ok(true)
}
