use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Vector};
use crate::quiverrep::{hom_space, HomSpace, RepMap};

use super::Complex;

/// A homogeneous map of degree `n`: components `f_k: X_k -> Y_{k+n}`,
/// keyed by source degree. Missing components are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    source: Arc<Complex>,
    target: Arc<Complex>,
    degree: i64,
    components: BTreeMap<i64, RepMap>,
}

impl GradedMap {
    pub fn new(
        source: Arc<Complex>,
        target: Arc<Complex>,
        degree: i64,
        components: BTreeMap<i64, RepMap>,
    ) -> Result<GradedMap> {
        if !source.compatible(&target) {
            return Err(Error::QuiverMismatch);
        }
        for (&k, f) in &components {
            if !f.is_morphism(source.term(k), target.term(k + degree)) {
                return Err(Error::InvalidChainMap(format!(
                    "component at degree {k} is not a morphism of representations"
                )));
            }
        }
        let mut g = GradedMap {
            source,
            target,
            degree,
            components,
        };
        g.prune();
        Ok(g)
    }

    pub(crate) fn new_unchecked(
        source: Arc<Complex>,
        target: Arc<Complex>,
        degree: i64,
        components: BTreeMap<i64, RepMap>,
    ) -> GradedMap {
        let mut g = GradedMap {
            source,
            target,
            degree,
            components,
        };
        g.prune();
        g
    }

    pub fn zero(source: Arc<Complex>, target: Arc<Complex>, degree: i64) -> GradedMap {
        GradedMap::new_unchecked(source, target, degree, BTreeMap::new())
    }

    fn prune(&mut self) {
        self.components.retain(|_, f| !f.is_zero());
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn components(&self) -> &BTreeMap<i64, RepMap> {
        &self.components
    }

    /// `f_k: X_k -> Y_{k+n}`.
    pub fn component(&self, k: i64) -> RepMap {
        self.components
            .get(&k)
            .cloned()
            .unwrap_or_else(|| RepMap::zero(self.source.term(k), self.target.term(k + self.degree)))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// `self ∘ first`, of degree `first.degree + self.degree`.
    pub fn compose(&self, first: &GradedMap) -> Result<GradedMap> {
        if !Arc::ptr_eq(&first.target, &self.source) && first.target != self.source {
            return Err(Error::NotComposable);
        }
        let components = first
            .components
            .iter()
            .map(|(&k, f)| (k, self.component(k + first.degree).compose(f)))
            .collect();
        Ok(GradedMap::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            first.degree + self.degree,
            components,
        ))
    }

    fn combine(&self, other: &GradedMap, op: impl Fn(&RepMap, &RepMap) -> RepMap) -> GradedMap {
        debug_assert_eq!(self.degree, other.degree);
        let keys: std::collections::BTreeSet<i64> =
            self.components.keys().chain(other.components.keys()).copied().collect();
        let components = keys
            .into_iter()
            .map(|k| (k, op(&self.component(k), &other.component(k))))
            .collect();
        GradedMap::new_unchecked(self.source.clone(), self.target.clone(), self.degree, components)
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        self.combine(other, RepMap::add)
    }

    pub fn sub(&self, other: &GradedMap) -> GradedMap {
        self.combine(other, RepMap::sub)
    }

    pub fn scale(&self, s: &Scalar) -> GradedMap {
        let components = self.components.iter().map(|(&k, f)| (k, f.scale(s))).collect();
        GradedMap::new_unchecked(self.source.clone(), self.target.clone(), self.degree, components)
    }

    pub fn neg(&self) -> GradedMap {
        self.scale(&self.field().int(-1))
    }

    /// The hom-complex differential `d_Y ∘ f − (−1)^n f ∘ d_X`.
    pub fn differential(&self) -> GradedMap {
        let (x, y, n) = (&self.source, &self.target, self.degree);
        let sign = self.field().int(if n % 2 == 0 { 1 } else { -1 });
        let mut components: BTreeMap<i64, RepMap> = BTreeMap::new();
        for (&k, f) in &self.components {
            // d_Y f : X_k -> Y_{k+n-1}
            let a = y.d(k + n).compose(f);
            add_into(&mut components, k, a);
            // f d_X : X_{k+1} -> Y_{k+n}
            let b = f.compose(&x.d(k + 1)).scale(&sign).neg();
            add_into(&mut components, k + 1, b);
        }
        GradedMap::new_unchecked(x.clone(), y.clone(), n - 1, components)
    }

    pub fn is_cycle(&self) -> bool {
        self.differential().is_zero()
    }
}

fn add_into(map: &mut BTreeMap<i64, RepMap>, k: i64, f: RepMap) {
    match map.get_mut(&k) {
        Some(g) => *g = g.add(&f),
        None => {
            map.insert(k, f);
        }
    }
}

/// A degree-0 cycle of the hom complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap(GradedMap);

impl ChainMap {
    pub fn new(map: GradedMap) -> Result<ChainMap> {
        if map.degree != 0 {
            return Err(Error::InvalidChainMap(format!("degree {} ≠ 0", map.degree)));
        }
        if !map.is_cycle() {
            return Err(Error::InvalidChainMap("does not commute with the differentials".into()));
        }
        Ok(ChainMap(map))
    }

    pub fn from_components(
        source: Arc<Complex>,
        target: Arc<Complex>,
        components: BTreeMap<i64, RepMap>,
    ) -> Result<ChainMap> {
        ChainMap::new(GradedMap::new(source, target, 0, components)?)
    }

    pub fn identity(x: &Arc<Complex>) -> ChainMap {
        let components = x.degrees().map(|k| (k, RepMap::identity(x.term(k)))).collect();
        ChainMap(GradedMap::new_unchecked(x.clone(), x.clone(), 0, components))
    }

    pub fn zero(source: Arc<Complex>, target: Arc<Complex>) -> ChainMap {
        ChainMap(GradedMap::zero(source, target, 0))
    }

    pub fn as_graded(&self) -> &GradedMap {
        &self.0
    }

    pub fn into_graded(self) -> GradedMap {
        self.0
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.0.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.0.target
    }

    pub fn component(&self, k: i64) -> RepMap {
        self.0.component(k)
    }

    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        Ok(ChainMap(self.0.compose(&first.0)?))
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        ChainMap(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        ChainMap(self.0.sub(&other.0))
    }

    pub fn scale(&self, s: &Scalar) -> ChainMap {
        ChainMap(self.0.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// The hom complex `Hom(X, Y)`, with `Hom_n = ⊕_k Hom(X_k, Y_{k+n})` and
/// explicit coordinates on each `Hom_n`.
#[derive(Debug, Clone)]
pub struct HomComplex {
    source: Arc<Complex>,
    target: Arc<Complex>,
    // per degree n: the blocks (k, Hom(X_k, Y_{k+n})) with their offsets
    blocks: BTreeMap<i64, Vec<(i64, usize, HomSpace)>>,
    dims: BTreeMap<i64, usize>,
    diffs: BTreeMap<i64, Matrix>,
}

impl HomComplex {
    pub fn new(source: &Arc<Complex>, target: &Arc<Complex>) -> Result<HomComplex> {
        if !source.compatible(target) {
            return Err(Error::QuiverMismatch);
        }
        let mut blocks = BTreeMap::new();
        let mut dims = BTreeMap::new();
        if let (Some((xl, xh)), Some((yl, yh))) = (source.range(), target.range()) {
            for n in (yl - xh)..=(yh - xl) {
                let mut list = Vec::new();
                let mut offset = 0;
                for k in xl..=xh {
                    let h = hom_space(source.term(k), target.term(k + n))?;
                    if h.dimension() > 0 {
                        let d = h.dimension();
                        list.push((k, offset, h));
                        offset += d;
                    }
                }
                if offset > 0 {
                    dims.insert(n, offset);
                    blocks.insert(n, list);
                }
            }
        }
        let mut hc = HomComplex {
            source: source.clone(),
            target: target.clone(),
            blocks,
            dims,
            diffs: BTreeMap::new(),
        };
        let field = source.field();
        let degrees: Vec<i64> = hc.dims.keys().copied().collect();
        for n in degrees {
            let cols: Vec<Vector> = hc
                .basis(n)
                .iter()
                .map(|b| hc.coordinates(&b.differential()))
                .collect();
            let m = Matrix::from_columns(field, hc.dim(n - 1), &cols)?;
            hc.diffs.insert(n, m);
        }
        Ok(hc)
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.target
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    /// Degrees with a nonzero hom space, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.dims.keys().copied().collect()
    }

    /// The matrix of `d: Hom_n -> Hom_{n-1}` in the chosen coordinates.
    pub fn differential(&self, n: i64) -> Matrix {
        self.diffs
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.field(), self.dim(n - 1), self.dim(n)))
    }

    pub fn basis(&self, n: i64) -> Vec<GradedMap> {
        let field = self.field();
        (0..self.dim(n))
            .map(|i| self.element(n, &Vector::unit(field, self.dim(n), i)))
            .collect()
    }

    pub fn element(&self, n: i64, coords: &Vector) -> GradedMap {
        let mut components = BTreeMap::new();
        if let Some(list) = self.blocks.get(&n) {
            for (k, offset, h) in list {
                let pos: Vec<usize> = (*offset..offset + h.dimension()).collect();
                let c = coords.select(&pos);
                if !c.is_zero() {
                    components.insert(*k, h.element(&c));
                }
            }
        }
        GradedMap::new_unchecked(self.source.clone(), self.target.clone(), n, components)
    }

    /// Coordinates of a degree-`n` map between the same complexes.
    pub fn coordinates(&self, f: &GradedMap) -> Vector {
        let n = f.degree;
        let field = self.field();
        let mut parts = Vec::new();
        if let Some(list) = self.blocks.get(&n) {
            for (k, _, h) in list {
                parts.push(h.coordinates(&f.component(*k)));
            }
        }
        Vector::concat(&parts, field)
    }

    /// The hom complex as a complex of plain vector spaces.
    pub fn to_complex(&self) -> Complex {
        let field = self.field();
        let Some((&lo, _)) = self.dims.first_key_value() else {
            return Complex::of_spaces(field, 0, &[], vec![]).expect("empty");
        };
        let (&hi, _) = self.dims.last_key_value().expect("nonempty");
        let dims: Vec<usize> = (lo..=hi).map(|n| self.dim(n)).collect();
        let diffs = ((lo + 1)..=hi).map(|n| self.differential(n)).collect();
        Complex::of_spaces(field, lo, &dims, diffs).expect("d² = 0 in a hom complex")
    }

    /// Basis of the `n`-cycles, in coordinates.
    pub fn cycles(&self, n: i64) -> Vec<Vector> {
        let d = self.differential(n);
        if d.rows() == 0 {
            return (0..self.dim(n)).map(|i| Vector::unit(self.field(), self.dim(n), i)).collect();
        }
        d.kernel_basis()
    }

    pub fn homology_dim(&self, n: i64) -> usize {
        self.cycles(n).len() - self.differential(n + 1).rank()
    }

    /// Is the degree-`n` cycle with these coordinates a boundary?
    pub fn is_boundary(&self, n: i64, coords: &Vector) -> bool {
        let d = self.differential(n + 1);
        d.solve(coords).expect("shapes").is_some()
    }

    /// A basis of `H_n` given by cycles whose classes are independent.
    pub fn homology_basis(&self, n: i64) -> Vec<GradedMap> {
        let field = self.field();
        let dim = self.dim(n);
        let mut span = self.differential(n + 1);
        let mut rank = span.rank();
        let mut out = Vec::new();
        for z in self.cycles(n) {
            let cand = span
                .hstack(&Matrix::from_columns(field, dim, std::slice::from_ref(&z)).expect("column"))
                .expect("rows");
            let r = cand.rank();
            if r > rank {
                rank = r;
                span = cand;
                out.push(self.element(n, &z));
            }
        }
        out
    }
}
