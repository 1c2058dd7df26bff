use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Vector};

use super::{DynkinClass, Quiver};

/// A finite-dimensional representation: one space per vertex, one matrix
/// per arrow of shape `dims[target] × dims[source]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    quiver: Arc<Quiver>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A family of per-vertex matrices `dims_target[v] × dims_source[v]`.
/// Whether it intertwines two given representations is checked separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepMap {
    field: Field,
    components: Vec<Matrix>,
}

impl Rep {
    /// Explicit representations exist for type-A quivers only.
    pub fn new(quiver: Arc<Quiver>, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep> {
        match quiver.validate()? {
            DynkinClass::A(_) => {}
            other => return Err(Error::NotTypeA(other)),
        }
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrows().len() {
            return Err(Error::InvalidRep("wrong number of spaces or maps".into()));
        }
        for (m, &(s, t)) in maps.iter().zip(quiver.arrows()) {
            if m.field() != field {
                return Err(Error::InvalidRep("matrix over the wrong field".into()));
            }
            if m.shape() != (dims[t], dims[s]) {
                return Err(Error::InvalidRep(format!(
                    "arrow {}->{} carries a {:?} matrix, expected {:?}",
                    s + 1,
                    t + 1,
                    m.shape(),
                    (dims[t], dims[s])
                )));
            }
        }
        Ok(Rep {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub(crate) fn new_unchecked(quiver: Arc<Quiver>, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Rep {
        debug_assert_eq!(dims.len(), quiver.vertex_count());
        Rep {
            quiver,
            field,
            dims,
            maps,
        }
    }

    pub fn zero(quiver: Arc<Quiver>, field: Field) -> Rep {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Rep::new_unchecked(quiver, field, dims, maps)
    }

    /// A plain vector space, i.e. a representation of the one-vertex quiver.
    pub fn space(field: Field, dim: usize) -> Rep {
        Rep::new_unchecked(Arc::new(Quiver::point()), field, vec![dim], vec![])
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn arrow_map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Same quiver and field.
    pub fn compatible(&self, other: &Rep) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver)
    }

    /// The composite map along the path `from -> to` (identity for the
    /// trivial path). `None` when there is no path.
    pub fn path_map(&self, from: usize, to: usize) -> Option<Matrix> {
        let path = self.quiver.path(from, to)?;
        let mut m = Matrix::identity(self.field, self.dims[from]);
        for a in path {
            m = self.maps[a].mul(&m).expect("shapes agree along a path");
        }
        Some(m)
    }

    pub fn direct_sum(parts: &[&Rep]) -> Result<Rep> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidRep("empty direct sum".into()))?;
        if parts.iter().any(|p| !p.compatible(first)) {
            return Err(Error::QuiverMismatch);
        }
        let field = first.field;
        let n = first.quiver.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..first.maps.len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
                Matrix::direct_sum(field, &blocks)
            })
            .collect();
        Ok(Rep::new_unchecked(first.quiver.clone(), field, dims, maps))
    }

    /// The dual representation over the opposite quiver.
    pub fn dual(&self) -> Rep {
        Rep::new_unchecked(
            Arc::new(self.quiver.opposite()),
            self.field,
            self.dims.clone(),
            self.maps.iter().map(Matrix::transpose).collect(),
        )
    }
}

impl RepMap {
    pub fn new(field: Field, components: Vec<Matrix>) -> RepMap {
        debug_assert!(components.iter().all(|m| m.field() == field));
        RepMap { field, components }
    }

    pub fn zero(source: &Rep, target: &Rep) -> RepMap {
        RepMap {
            field: source.field,
            components: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(source.field, t, s))
                .collect(),
        }
    }

    pub fn identity(rep: &Rep) -> RepMap {
        RepMap {
            field: rep.field,
            components: rep.dims.iter().map(|&d| Matrix::identity(rep.field, d)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &RepMap) -> RepMap {
        RepMap {
            field: self.field,
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(g, f)| g.mul(f).expect("composable components"))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            field: self.field,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b).expect("same shapes"))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RepMap) -> RepMap {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> RepMap {
        RepMap {
            field: self.field,
            components: self.components.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> RepMap {
        RepMap {
            field: self.field,
            components: self.components.iter().map(Matrix::neg).collect(),
        }
    }

    /// Does this family intertwine the structure maps of `source` and `target`?
    pub fn is_morphism(&self, source: &Rep, target: &Rep) -> bool {
        if self.components.len() != source.dims.len() {
            return false;
        }
        let shapes_ok = self
            .components
            .iter()
            .enumerate()
            .all(|(v, m)| m.shape() == (target.dims[v], source.dims[v]));
        shapes_ok
            && source.quiver.arrows().iter().enumerate().all(|(a, &(s, t))| {
                let lhs = self.components[t].mul(&source.maps[a]).unwrap();
                let rhs = target.maps[a].mul(&self.components[s]).unwrap();
                lhs == rhs
            })
    }

    /// Injective at every vertex.
    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.cols())
    }

    /// Flatten into one coordinate vector, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vector {
        let entries = self
            .components
            .iter()
            .flat_map(|m| m.entries().iter().cloned())
            .collect();
        Vector::new(self.field, entries).expect("single field")
    }

    /// Inverse of [`RepMap::flatten`] for the given shapes.
    pub fn unflatten(field: Field, source_dims: &[usize], target_dims: &[usize], v: &Vector) -> RepMap {
        let mut offset = 0;
        let components = source_dims
            .iter()
            .zip(target_dims)
            .map(|(&s, &t)| {
                let entries = v.entries()[offset..offset + s * t].to_vec();
                offset += s * t;
                Matrix::new(field, t, s, entries).expect("consistent shapes")
            })
            .collect();
        RepMap { field, components }
    }

    /// Kernel of this morphism as a subrepresentation of `source`, together
    /// with its inclusion.
    pub fn kernel(&self, source: &Rep) -> (Rep, RepMap) {
        let field = source.field;
        let bases: Vec<Matrix> = self
            .components
            .iter()
            .enumerate()
            .map(|(v, m)| {
                let cols = m.kernel_basis();
                Matrix::from_columns(field, source.dims[v], &cols).expect("kernel columns")
            })
            .collect();
        sub_rep(source, bases)
    }

    /// Cokernel of this morphism `source -> target`, with the projection
    /// from `target`.
    pub fn cokernel(&self, target: &Rep) -> (Rep, RepMap) {
        let (quotient, projection, _) = self.cokernel_split(target);
        (quotient, projection)
    }

    /// [`RepMap::cokernel`] plus per-vertex sections of the projection
    /// (linear splittings, not morphisms of representations).
    pub fn cokernel_split(&self, target: &Rep) -> (Rep, RepMap, Vec<Matrix>) {
        let field = target.field;
        let n = target.dims.len();
        // At each vertex: a complement C_v of the image, and the projection
        // P_v: target_v -> C_v killing the image.
        let mut projections = Vec::with_capacity(n);
        let mut sections = Vec::with_capacity(n);
        for v in 0..n {
            let d = target.dims[v];
            let image = &self.components[v];
            let full = image.hstack(&Matrix::identity(field, d)).expect("same rows");
            let pivots = full.independent_columns();
            let img_rank = pivots.iter().filter(|&&c| c < image.cols()).count();
            let basis_cols: Vec<Vector> = pivots.iter().map(|&c| full.column(c)).collect();
            let basis = Matrix::from_columns(field, d, &basis_cols).expect("basis");
            let inv = basis.inverse().expect("basis of the whole space");
            let q = d - img_rank;
            projections.push(inv.submatrix(img_rank, 0, q, d));
            sections.push(basis.submatrix(0, img_rank, d, q));
        }
        let dims: Vec<usize> = projections.iter().map(Matrix::rows).collect();
        let maps = target
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                projections[t]
                    .mul(&target.maps[a])
                    .and_then(|m| m.mul(&sections[s]))
                    .expect("shapes")
            })
            .collect();
        let quotient = Rep::new_unchecked(target.quiver.clone(), field, dims, maps);
        (quotient, RepMap::new(field, projections), sections)
    }
}

/// The subrepresentation spanned at each vertex by the columns of `bases`,
/// which must be closed under the structure maps.
pub(crate) fn sub_rep(ambient: &Rep, bases: Vec<Matrix>) -> (Rep, RepMap) {
    let field = ambient.field;
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = ambient
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let image = ambient.maps[a].mul(&bases[s]).expect("shapes");
            let mut m = Matrix::zeros(field, dims[t], dims[s]);
            for c in 0..dims[s] {
                let x = bases[t]
                    .solve(&image.column(c))
                    .expect("shapes")
                    .expect("subspace closed under the structure maps");
                for r in 0..dims[t] {
                    m.set(r, c, x[r].clone());
                }
            }
            m
        })
        .collect();
    let rep = Rep::new_unchecked(ambient.quiver.clone(), field, dims, maps);
    (rep, RepMap::new(field, bases))
}
