use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::quiverrep::{is_isomorphic, RepMap};

use super::{cone, shift, shift_map, ChainMap, Complex, GradedMap, HomComplex};

/// A chain map up to chain homotopy.
#[derive(Debug, Clone)]
pub struct HomotopyClass {
    pub representative: ChainMap,
}

impl HomotopyClass {
    pub fn new(representative: ChainMap) -> HomotopyClass {
        HomotopyClass { representative }
    }

    pub fn source(&self) -> &Arc<Complex> {
        self.representative.source()
    }

    pub fn target(&self) -> &Arc<Complex> {
        self.representative.target()
    }

    pub fn is_zero(&self) -> Result<bool> {
        is_nullhomotopic(&self.representative)
    }

    pub fn equals(&self, other: &HomotopyClass) -> Result<bool> {
        is_nullhomotopic(&self.representative.sub(&other.representative))
    }

    pub fn compose(&self, first: &HomotopyClass) -> Result<HomotopyClass> {
        Ok(HomotopyClass::new(self.representative.compose(&first.representative)?))
    }
}

/// Basis of the chain maps `X -> Y`: the 0-cycles of the hom complex.
pub fn cycle_homs(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<Vec<ChainMap>> {
    let h = HomComplex::new(x, y)?;
    Ok(h.cycles(0)
        .iter()
        .map(|z| ChainMap::new(h.element(0, z)).expect("0-cycles are chain maps"))
        .collect())
}

/// `H_0 Hom(X, Y)`: chain maps modulo null-homotopic ones.
pub fn homology_homs(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<(usize, Vec<HomotopyClass>)> {
    let h = HomComplex::new(x, y)?;
    let basis: Vec<HomotopyClass> = h
        .homology_basis(0)
        .into_iter()
        .map(|g| HomotopyClass::new(ChainMap::new(g).expect("cycle")))
        .collect();
    Ok((basis.len(), basis))
}

/// Is `f = d_Y h + h d_X` for some degree-one `h`?
pub fn is_nullhomotopic(f: &ChainMap) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let h = HomComplex::new(f.source(), f.target())?;
    Ok(h.is_boundary(0, &h.coordinates(f.as_graded())))
}

/// Coordinates of the class of a chain map in the basis returned by
/// [`homology_homs`], computed in the given hom complex.
pub fn class_coordinates(h: &HomComplex, basis: &[HomotopyClass], f: &ChainMap) -> Result<Vector> {
    let field = h.field();
    let dim = h.dim(0);
    let mut cols: Vec<Vector> = basis
        .iter()
        .map(|b| h.coordinates(b.representative.as_graded()))
        .collect();
    let d1 = h.differential(1);
    for c in 0..d1.cols() {
        cols.push(d1.column(c));
    }
    let m = Matrix::from_columns(field, dim, &cols)?;
    let sol = m
        .solve(&h.coordinates(f.as_graded()))?
        .ok_or_else(|| Error::Internal("chain map outside the span of cycles".into()))?;
    Ok(sol.select(&(0..basis.len()).collect::<Vec<_>>()))
}

/// Injective in every degree (split mono over a field).
pub fn is_cofibration(f: &ChainMap) -> bool {
    f.source()
        .degrees()
        .all(|k| f.component(k).is_injective())
}

/// Homotopy equivalence, decided by acyclicity of the cone.
pub fn is_weak_equivalence(f: &ChainMap) -> bool {
    cone(f).complex.is_acyclic()
}

/// A homotopy inverse of `f`, found by solving `g f − 1 = dh`,
/// `f g − 1 = dh'` for `(g, h, h')` directly.
pub fn homotopy_inverse(f: &ChainMap) -> Result<Option<ChainMap>> {
    let (x, y) = (f.source(), f.target());
    let field = x.field();
    let hyx = HomComplex::new(y, x)?;
    let hxx = HomComplex::new(x, x)?;
    let hyy = HomComplex::new(y, y)?;
    let (nx, ny) = (hxx.dim(0), hyy.dim(0));
    let zs = hyx.cycles(0);
    let mut cols = Vec::new();
    for z in &zs {
        let g = hyx.element(0, z);
        let gf = g.compose(f.as_graded())?;
        let fg = f.as_graded().compose(&g)?;
        cols.push(Vector::concat(&[hxx.coordinates(&gf), hyy.coordinates(&fg)], field));
    }
    let (dx, dy) = (hxx.differential(1), hyy.differential(1));
    for c in 0..dx.cols() {
        cols.push(Vector::concat(&[dx.column(c).scale(&field.int(-1)), Vector::zeros(field, ny)], field));
    }
    for c in 0..dy.cols() {
        cols.push(Vector::concat(&[Vector::zeros(field, nx), dy.column(c).scale(&field.int(-1))], field));
    }
    let m = Matrix::from_columns(field, nx + ny, &cols)?;
    let rhs = Vector::concat(
        &[
            hxx.coordinates(ChainMap::identity(x).as_graded()),
            hyy.coordinates(ChainMap::identity(y).as_graded()),
        ],
        field,
    );
    let Some(sol) = m.solve(&rhs)? else {
        return Ok(None);
    };
    let mut g = Vector::zeros(field, hyx.dim(0));
    for (i, z) in zs.iter().enumerate() {
        g = g.add(&z.scale(&sol[i]));
    }
    Ok(Some(ChainMap::new(hyx.element(0, &g))?))
}

/// The degreewise cokernel `Y / im i` of a cofibration, with its projection.
pub fn quotient(i: &ChainMap) -> Result<(Arc<Complex>, ChainMap)> {
    if !is_cofibration(i) {
        return Err(Error::InvalidChainMap("not a cofibration".into()));
    }
    let y = i.target();
    let field = y.field();
    let nv = y.quiver().vertex_count();
    let Some((lo, hi)) = y.range() else {
        let z = Arc::new(Complex::zero(y.quiver().clone(), field));
        return Ok((z.clone(), ChainMap::zero(y.clone(), z)));
    };
    let splits: Vec<_> = (lo..=hi)
        .map(|k| i.component(k).cokernel_split(y.term(k)))
        .collect();
    let terms = splits.iter().map(|(q, _, _)| q.clone()).collect();
    let diffs = ((lo + 1)..=hi)
        .map(|k| {
            let (_, p, _) = &splits[(k - 1 - lo) as usize];
            let (_, _, s) = &splits[(k - lo) as usize];
            let d = y.d(k);
            let comps = (0..nv)
                .map(|v| {
                    p.component(v)
                        .mul(d.component(v))
                        .and_then(|m| m.mul(&s[v]))
                        .expect("shapes")
                })
                .collect();
            RepMap::new(field, comps)
        })
        .collect();
    let q = Arc::new(Complex::build(y.quiver().clone(), field, lo, terms, diffs)?);
    let components: BTreeMap<i64, RepMap> = (lo..=hi)
        .map(|k| (k, splits[(k - lo) as usize].1.clone()))
        .collect();
    let p = ChainMap::from_components(y.clone(), q.clone(), components)?;
    Ok((q, p))
}

/// `H_n(Y / im i) ≅ H_n(cone i)` as representations in every degree.
pub fn quotient_matches_cone(i: &ChainMap) -> Result<bool> {
    let (q, _) = quotient(i)?;
    let c = cone(i).complex;
    let mut degs: Vec<i64> = q.degrees().chain(c.degrees()).collect();
    degs.sort_unstable();
    degs.dedup();
    for n in degs {
        if !is_isomorphic(&q.homology(n), &c.homology(n))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the map `H_0 Hom(Z, A) -> H_0 Hom(Z, B)` given by `a ↦ g ∘ a`.
fn induced_rank(za: &HomComplex, zb: &HomComplex, g: &GradedMap) -> Result<usize> {
    let field = zb.field();
    let b = zb.differential(1);
    let base = b.rank();
    let mut cols: Vec<Vector> = (0..b.cols()).map(|c| b.column(c)).collect();
    for a in za.homology_basis(0) {
        cols.push(zb.coordinates(&g.compose(&a)?));
    }
    Ok(Matrix::from_columns(field, zb.dim(0), &cols)?.rank() - base)
}

/// Exactness of
/// `H_0 Hom(Z, X) -> H_0 Hom(Z, Y) -> H_0 Hom(Z, Cf) -> H_0 Hom(Z, ΣX) -> H_0 Hom(Z, ΣY)`
/// at the three middle terms, by rank bookkeeping: the composites vanish
/// and `dim = rank(in) + rank(out)`.
pub fn triangle_is_exact(f: &ChainMap, z: &Arc<Complex>) -> Result<bool> {
    let c = cone(f);
    let (x, y) = (f.source(), f.target());
    let sx = c.shifted_source.clone();
    let sy = Arc::new(shift(y, 1));
    let minus_sf = shift_map(f.as_graded(), 1, &sx, &sy).neg();
    let maps = [f.as_graded().clone(), c.inclusion.clone(), c.projection.clone(), minus_sf];
    let objects = [x.clone(), y.clone(), c.complex.clone(), sx, sy];
    let homs: Vec<HomComplex> = objects
        .iter()
        .map(|o| HomComplex::new(z, o))
        .collect::<Result<_>>()?;
    let ranks: Vec<usize> = (0..4)
        .map(|j| induced_rank(&homs[j], &homs[j + 1], &maps[j]))
        .collect::<Result<_>>()?;
    for j in 0..3 {
        let composite = maps[j + 1].compose(&maps[j])?;
        if induced_rank(&homs[j], &homs[j + 2], &composite)? != 0 {
            return Ok(false);
        }
        if homs[j + 1].homology_dim(0) != ranks[j] + ranks[j + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}
