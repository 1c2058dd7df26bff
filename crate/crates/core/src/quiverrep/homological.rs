use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Vector};

use super::rep::sub_rep;
use super::{Quiver, Rep, RepMap};

/// The space of intertwiners `M -> N`, with a basis in which coordinates are
/// read off directly from the flattened components.
#[derive(Debug, Clone)]
pub struct HomSpace {
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    field: Field,
    free: Vec<usize>,
    basis: Vec<RepMap>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RepMap] {
        &self.basis
    }

    /// Coordinates of an intertwiner in [`HomSpace::basis`]. The map must
    /// actually lie in this hom space.
    pub fn coordinates(&self, f: &RepMap) -> Vector {
        f.flatten().select(&self.free)
    }

    pub fn element(&self, coords: &Vector) -> RepMap {
        let mut acc = Vector::zeros(self.field, self.ambient_len());
        for (c, b) in coords.entries().iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.flatten().scale(c));
            }
        }
        RepMap::unflatten(self.field, &self.source_dims, &self.target_dims, &acc)
    }

    fn ambient_len(&self) -> usize {
        self.source_dims
            .iter()
            .zip(&self.target_dims)
            .map(|(s, t)| s * t)
            .sum()
    }
}

/// Intertwiners `M -> N`: solutions of `φ_t M_a = N_a φ_s` for every arrow.
pub fn hom_space(m: &Rep, n: &Rep) -> Result<HomSpace> {
    if !m.compatible(n) {
        return Err(Error::QuiverMismatch);
    }
    let field = m.field();
    let q = m.quiver();
    let nv = q.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dim(v) * n.dim(v);
    }
    let rows: usize = q.arrows().iter().map(|&(s, t)| n.dim(t) * m.dim(s)).sum();
    let mut sys = Matrix::zeros(field, rows, total);
    let mut row = 0;
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let ma = m.arrow_map(a);
        let na = n.arrow_map(a);
        let (ms, mt) = (m.dim(s), m.dim(t));
        let (ns, nt) = (n.dim(s), n.dim(t));
        for r in 0..nt {
            for c in 0..ms {
                // (φ_t M_a)[r][c] = Σ_k φ_t[r][k] M_a[k][c]
                for k in 0..mt {
                    let coef = ma.get(k, c);
                    if !coef.is_zero() {
                        let col = offsets[t] + r * mt + k;
                        let v = sys.get(row, col) + coef;
                        sys.set(row, col, v);
                    }
                }
                // (N_a φ_s)[r][c] = Σ_k N_a[r][k] φ_s[k][c]
                for k in 0..ns {
                    let coef = na.get(r, k);
                    if !coef.is_zero() {
                        let col = offsets[s] + k * ms + c;
                        let v = sys.get(row, col) - coef;
                        sys.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    let rref = sys.rref();
    let mut is_pivot = vec![false; total];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..total).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); total];
            v[f] = field.one();
            for (i, &p) in rref.pivots.iter().enumerate() {
                v[p] = -rref.matrix.get(i, f);
            }
            let v = Vector::new(field, v).expect("single field");
            RepMap::unflatten(field, m.dims(), n.dims(), &v)
        })
        .collect();
    Ok(HomSpace {
        source_dims: m.dims().to_vec(),
        target_dims: n.dims().to_vec(),
        field,
        free,
        basis,
    })
}

/// Interval `[lo, hi]` of positions along the underlying path of a type-A
/// quiver (0-based, inclusive).
pub type Interval = (usize, usize);

/// All intervals of an `A_n` path, ordered lexicographically.
pub fn intervals(q: &Quiver) -> Result<Vec<Interval>> {
    let n = q.path_order()?.len();
    Ok((0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect())
}

/// The interval module `M[lo, hi]`: one-dimensional on the vertices at
/// path positions `lo..=hi`, identity maps inside the interval.
pub fn interval_module(q: &Arc<Quiver>, field: Field, interval: Interval) -> Result<Rep> {
    let order = q.path_order()?;
    let (lo, hi) = interval;
    if lo > hi || hi >= order.len() {
        return Err(Error::OutOfRange(format!("interval [{lo}, {hi}]")));
    }
    let mut dims = vec![0; order.len()];
    for &v in &order[lo..=hi] {
        dims[v] = 1;
    }
    Ok(thin_rep(q, field, dims))
}

/// Indecomposable representations of a type-A quiver, one per interval, in
/// the order of [`intervals`].
pub fn indecomposables(q: &Arc<Quiver>, field: Field) -> Result<Vec<Rep>> {
    intervals(q)?
        .into_iter()
        .map(|iv| interval_module(q, field, iv))
        .collect()
}

/// The interval occupied by a thin representation, if its support is one.
pub fn interval_of(rep: &Rep) -> Option<Interval> {
    let order = rep.quiver().path_order().ok()?;
    let positions: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, &v)| rep.dim(v) > 0)
        .map(|(p, _)| p)
        .collect();
    let (&lo, &hi) = (positions.first()?, positions.last()?);
    let thin = order.iter().all(|&v| rep.dim(v) <= 1);
    (thin && hi - lo + 1 == positions.len()).then_some((lo, hi))
}

// A representation with 0/1 dimensions and identity maps wherever both ends
// are nonzero.
fn thin_rep(q: &Arc<Quiver>, field: Field, dims: Vec<usize>) -> Rep {
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            if dims[s] == 1 && dims[t] == 1 {
                Matrix::identity(field, 1)
            } else {
                Matrix::zeros(field, dims[t], dims[s])
            }
        })
        .collect();
    Rep::new_unchecked(q.clone(), field, dims, maps)
}

fn check_vertex(q: &Quiver, i: usize) -> Result<()> {
    if i >= q.vertex_count() {
        return Err(Error::InvalidVertex(i + 1));
    }
    Ok(())
}

/// Indecomposable projective at `i`: spanned by the paths starting at `i`,
/// so that `Hom(P_i, M) ≅ M_i`.
pub fn projective(q: &Arc<Quiver>, field: Field, i: usize) -> Result<Rep> {
    check_vertex(q, i)?;
    q.path_order()?;
    AddObject::new(Kind::Projective, vec![i]).materialize(q, field)
}

/// Indecomposable injective at `i`: supported on the vertices with a path
/// to `i`.
pub fn injective(q: &Arc<Quiver>, field: Field, i: usize) -> Result<Rep> {
    check_vertex(q, i)?;
    q.path_order()?;
    AddObject::new(Kind::Injective, vec![i]).materialize(q, field)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Projective,
    Injective,
}

/// A direct sum of indecomposable projectives (or injectives), one summand
/// per listed vertex. Morphisms between such sums are coefficient matrices,
/// entry `(r, s)` scaling the canonical map from source summand `s` to
/// target summand `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AddObject {
    pub kind: Kind,
    pub summands: Vec<usize>,
}

impl AddObject {
    pub fn new(kind: Kind, summands: Vec<usize>) -> AddObject {
        AddObject { kind, summands }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// The same coefficients read as injectives (resp. projectives): the
    /// Nakayama functor and its inverse on additive data.
    pub fn nakayama(&self) -> AddObject {
        let kind = match self.kind {
            Kind::Projective => Kind::Injective,
            Kind::Injective => Kind::Projective,
        };
        AddObject::new(kind, self.summands.clone())
    }

    fn supports(&self, q: &Quiver, summand: usize, u: usize) -> bool {
        let v = self.summands[summand];
        match self.kind {
            Kind::Projective => q.reaches(v, u),
            Kind::Injective => q.reaches(u, v),
        }
    }

    /// Position of each summand inside the space at vertex `u`.
    fn layout(&self, q: &Quiver, u: usize) -> Vec<Option<usize>> {
        let mut next = 0;
        (0..self.len())
            .map(|s| {
                self.supports(q, s, u).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    }

    pub fn materialize(&self, q: &Arc<Quiver>, field: Field) -> Result<Rep> {
        let layouts: Vec<Vec<Option<usize>>> =
            (0..q.vertex_count()).map(|u| self.layout(q, u)).collect();
        let dims: Vec<usize> = layouts
            .iter()
            .map(|l| l.iter().filter(|p| p.is_some()).count())
            .collect();
        let maps = q
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                for (&src, &tgt) in layouts[s].iter().zip(&layouts[t]) {
                    if let (Some(ps), Some(pt)) = (src, tgt) {
                        m.set(pt, ps, field.one());
                    }
                }
                m
            })
            .collect();
        Ok(Rep::new_unchecked(q.clone(), field, dims, maps))
    }

    /// Materialize a coefficient matrix `target.len() × source.len()`.
    pub fn materialize_map(
        q: &Arc<Quiver>,
        source: &AddObject,
        target: &AddObject,
        coeffs: &Matrix,
    ) -> Result<RepMap> {
        if source.kind != target.kind || coeffs.shape() != (target.len(), source.len()) {
            return Err(Error::InvalidRep("coefficient matrix does not match summands".into()));
        }
        let field = coeffs.field();
        let mut components = Vec::with_capacity(q.vertex_count());
        for u in 0..q.vertex_count() {
            let ls = source.layout(q, u);
            let lt = target.layout(q, u);
            let rows = lt.iter().flatten().count();
            let cols = ls.iter().flatten().count();
            let mut m = Matrix::zeros(field, rows, cols);
            for (j, ps) in ls.iter().enumerate() {
                let Some(ps) = ps else { continue };
                for (i, pt) in lt.iter().enumerate() {
                    let Some(pt) = pt else { continue };
                    let c = coeffs.get(i, j);
                    if !c.is_zero() && q.reaches(target.summands[i], source.summands[j]) {
                        m.set(*pt, *ps, c.clone());
                    }
                }
            }
            components.push(m);
        }
        for i in 0..target.len() {
            for j in 0..source.len() {
                if !coeffs.get(i, j).is_zero() && !q.reaches(target.summands[i], source.summands[j]) {
                    return Err(Error::InvalidRep(format!(
                        "no map between summands at vertices {} and {}",
                        source.summands[j] + 1,
                        target.summands[i] + 1
                    )));
                }
            }
        }
        Ok(RepMap::new(field, components))
    }

    /// Recover the coefficient matrix of a morphism between materialized sums.
    pub fn coefficients(
        q: &Quiver,
        source: &AddObject,
        target: &AddObject,
        map: &RepMap,
    ) -> Result<Matrix> {
        if source.kind != target.kind {
            return Err(Error::InvalidRep("mixed projective/injective sums".into()));
        }
        let field = map.field();
        let mut c = Matrix::zeros(field, target.len(), source.len());
        for i in 0..target.len() {
            for j in 0..source.len() {
                let (v, w) = (target.summands[i], source.summands[j]);
                if !q.reaches(v, w) {
                    continue;
                }
                // both summands are nonzero at the generator of the smaller one
                let u = match source.kind {
                    Kind::Projective => w,
                    Kind::Injective => v,
                };
                let ps = source.layout(q, u)[j].expect("summand present");
                let pt = target.layout(q, u)[i].expect("summand present");
                c.set(i, j, map.component(u).get(pt, ps).clone());
            }
        }
        Ok(c)
    }
}

/// A minimal projective resolution `0 -> P1 -> P0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct ProjectiveResolution {
    pub p0: AddObject,
    pub p1: AddObject,
    /// Coefficients of `P1 -> P0`, shape `p0.len() × p1.len()`.
    pub differential: Matrix,
    /// The augmentation `P0 -> M` on materialized spaces.
    pub augmentation: RepMap,
}

/// Choose generators of `ambient` restricted to the subspaces spanned by
/// `bases` modulo the images of incoming arrows. Returns `(vertex, vector)`
/// pairs with vectors in ambient coordinates.
fn top_generators(ambient: &Rep, bases: &[Matrix]) -> Vec<(usize, Vector)> {
    let field = ambient.field();
    let q = ambient.quiver();
    let mut gens = Vec::new();
    for u in 0..q.vertex_count() {
        let d = ambient.dim(u);
        let mut span = Matrix::zeros(field, d, 0);
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            if t == u {
                let img = ambient.arrow_map(a).mul(&bases[s]).expect("shapes");
                span = span.hstack(&img).expect("rows");
            }
        }
        let mut rank = span.rank();
        for c in 0..bases[u].cols() {
            let v = bases[u].column(c);
            let candidate = span
                .hstack(&Matrix::from_columns(field, d, std::slice::from_ref(&v)).expect("column"))
                .expect("rows");
            let r = candidate.rank();
            if r > rank {
                rank = r;
                span = candidate;
                gens.push((u, v));
            }
        }
    }
    gens
}

/// The minimal projective resolution of a representation of a type-A quiver.
pub fn projective_resolution(m: &Rep) -> Result<ProjectiveResolution> {
    let q = m.quiver().clone();
    q.path_order()?;
    let field = m.field();
    let nv = q.vertex_count();

    let full: Vec<Matrix> = (0..nv).map(|u| Matrix::identity(field, m.dim(u))).collect();
    let gens0 = top_generators(m, &full);
    let p0 = AddObject::new(Kind::Projective, gens0.iter().map(|(v, _)| *v).collect());
    let p0_rep = p0.materialize(&q, field)?;

    // augmentation: generator of summand j maps to its chosen vector
    let mut aug = Vec::with_capacity(nv);
    for u in 0..nv {
        let layout = p0.layout(&q, u);
        let mut cols = Vec::new();
        for (j, (v, vec)) in gens0.iter().enumerate() {
            if layout[j].is_some() {
                let pm = m.path_map(*v, u).expect("summand supported at u");
                cols.push(pm.mul_vec(vec)?);
            }
        }
        aug.push(Matrix::from_columns(field, m.dim(u), &cols)?);
    }
    let augmentation = RepMap::new(field, aug);

    let (kernel, _) = augmentation.kernel(&p0_rep);
    let kernel_bases: Vec<Matrix> = (0..nv)
        .map(|u| {
            let cols = augmentation.component(u).kernel_basis();
            Matrix::from_columns(field, p0_rep.dim(u), &cols).expect("kernel columns")
        })
        .collect();
    let gens1 = top_generators(&p0_rep, &kernel_bases);
    let p1 = AddObject::new(Kind::Projective, gens1.iter().map(|(v, _)| *v).collect());
    let mut differential = Matrix::zeros(field, p0.len(), p1.len());
    for (r, (x, g)) in gens1.iter().enumerate() {
        let layout = p0.layout(&q, *x);
        for (j, pos) in layout.iter().enumerate() {
            if let Some(pos) = pos {
                differential.set(j, r, g[*pos].clone());
            }
        }
    }
    let p1_dim = p1.materialize(&q, field)?.total_dim();
    if p1_dim != kernel.total_dim() {
        return Err(Error::Internal(format!(
            "syzygy of dimension {} is not covered by a projective of dimension {p1_dim}",
            kernel.total_dim()
        )));
    }
    Ok(ProjectiveResolution {
        p0,
        p1,
        differential,
        augmentation,
    })
}

fn yoneda_matrix(res: &ProjectiveResolution, n: &Rep) -> Result<Matrix> {
    // Hom(P_v, N) = N_v; precomposition with the canonical P_w -> P_v
    // (a path v -> w) is N applied along that path.
    let field = n.field();
    let row_off: Vec<usize> = offsets(res.p1.summands.iter().map(|&w| n.dim(w)));
    let col_off: Vec<usize> = offsets(res.p0.summands.iter().map(|&v| n.dim(v)));
    let rows = res.p1.summands.iter().map(|&w| n.dim(w)).sum();
    let cols = res.p0.summands.iter().map(|&v| n.dim(v)).sum();
    let mut out = Matrix::zeros(field, rows, cols);
    for (r, &w) in res.p1.summands.iter().enumerate() {
        for (s, &v) in res.p0.summands.iter().enumerate() {
            let c = res.differential.get(s, r);
            if c.is_zero() {
                continue;
            }
            let pm = n
                .path_map(v, w)
                .ok_or_else(|| Error::Internal("differential between unrelated summands".into()))?;
            out.set_block(row_off[r], col_off[s], &pm.scale(c));
        }
    }
    Ok(out)
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            acc += s;
            acc - s
        })
        .collect()
}

/// `dim Ext¹(M, N)`: the cokernel of `Hom(P0, N) -> Hom(P1, N)` for the
/// minimal projective resolution of `M`.
pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if !m.compatible(n) {
        return Err(Error::QuiverMismatch);
    }
    let res = projective_resolution(m)?;
    let y = yoneda_matrix(&res, n)?;
    Ok(y.rows() - y.rank())
}

/// `dim Hom(M, N)` computed from the resolution instead of the intertwiner
/// equations; used to cross-check [`hom_space`].
pub fn hom_dim_via_resolution(m: &Rep, n: &Rep) -> Result<usize> {
    if !m.compatible(n) {
        return Err(Error::QuiverMismatch);
    }
    let res = projective_resolution(m)?;
    let y = yoneda_matrix(&res, n)?;
    Ok(y.cols() - y.rank())
}

/// Indecomposable representations of type A are bricks, so `End = k`
/// characterizes them.
pub fn is_indecomposable(m: &Rep) -> Result<bool> {
    Ok(!m.is_zero() && hom_space(m, m)?.dimension() == 1)
}

pub fn is_projective(m: &Rep) -> Result<bool> {
    Ok(projective_resolution(m)?.p1.is_empty())
}

/// The Auslander–Reiten translate `τM = ker(νP1 -> νP0)` of an
/// indecomposable `M`; `None` when `M` is projective.
pub fn ar_translate(m: &Rep) -> Result<Option<Rep>> {
    if !is_indecomposable(m)? {
        return Err(Error::Decomposable);
    }
    let res = projective_resolution(m)?;
    if res.p1.is_empty() {
        return Ok(None);
    }
    let q = m.quiver();
    let field = m.field();
    let (i1, i0) = (res.p1.nakayama(), res.p0.nakayama());
    let i1_rep = i1.materialize(q, field)?;
    let nu_d = AddObject::materialize_map(q, &i1, &i0, &res.differential)?;
    let (tau, _) = nu_d.kernel(&i1_rep);
    Ok(Some(tau))
}

/// Subrepresentation with the given per-vertex bases (columns), which must
/// be stable under the structure maps.
pub fn subrepresentation(ambient: &Rep, bases: Vec<Matrix>) -> Rep {
    sub_rep(ambient, bases).0
}

/// Isomorphism test for type-A representations: over a representation-finite
/// algebra, `M ≅ N` iff `dim Hom(X, M) = dim Hom(X, N)` for every
/// indecomposable `X`.
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    if !m.compatible(n) {
        return Err(Error::QuiverMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    for x in indecomposables(m.quiver(), m.field())? {
        if hom_space(&x, m)?.dimension() != hom_space(&x, n)?.dimension() {
            return Ok(false);
        }
    }
    Ok(true)
}
