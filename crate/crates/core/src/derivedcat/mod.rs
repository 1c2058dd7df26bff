//! The bounded derived category of a type-A quiver, as labels.
//!
//! Every indecomposable is `Σ^a M` for an interval module `M`, so objects
//! are pairs `(module, shift)`. Hom dimensions follow from hereditary
//! vanishing: `Hom(Σ^a M, Σ^b N)` is `Hom(M, N)` for `b = a`, `Ext¹(M, N)`
//! for `b = a + 1` and zero otherwise. The translate, suspension and Serre
//! functor act on labels; explicit complexes appear only through
//! [`DerivedCategory::realize`].

mod realize;

pub use realize::Realization;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::quiverrep::{
    ar_translate, ext1_dim, hom_space, indecomposables, injective, interval_of, intervals,
    is_projective, projective, DynkinClass, Interval, Quiver, Rep,
};

/// The indecomposable `Σ^shift M`, `M` the `module`-th interval module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DbIndec {
    pub module: usize,
    pub shift: i64,
}

impl DbIndec {
    pub fn new(module: usize, shift: i64) -> DbIndec {
        DbIndec { module, shift }
    }
}

impl fmt::Display for DbIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ^{} M{}", self.shift, self.module)
    }
}

/// A finite direct sum of indecomposables with multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DbObject {
    summands: BTreeMap<DbIndec, usize>,
}

impl DbObject {
    pub fn zero() -> DbObject {
        DbObject::default()
    }

    pub fn add(&mut self, x: DbIndec, mult: usize) {
        if mult > 0 {
            *self.summands.entry(x).or_insert(0) += mult;
        }
    }

    pub fn summands(&self) -> impl Iterator<Item = (DbIndec, usize)> + '_ {
        self.summands.iter().map(|(&x, &m)| (x, m))
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

impl From<DbIndec> for DbObject {
    fn from(x: DbIndec) -> DbObject {
        let mut o = DbObject::zero();
        o.add(x, 1);
        o
    }
}

impl FromIterator<(DbIndec, usize)> for DbObject {
    fn from_iter<I: IntoIterator<Item = (DbIndec, usize)>>(iter: I) -> DbObject {
        let mut o = DbObject::zero();
        for (x, m) in iter {
            o.add(x, m);
        }
        o
    }
}

/// `D^b(kQ)` for a type-A quiver, with precomputed module data.
#[derive(Debug)]
pub struct DerivedCategory {
    quiver: Arc<Quiver>,
    field: Field,
    class: DynkinClass,
    intervals: Vec<Interval>,
    modules: Vec<Rep>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    // τ on modules: Some(index) for non-projectives
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    // vertex of M when M = P_i (resp. I_i)
    proj_vertex: Vec<Option<usize>>,
    inj_vertex: Vec<Option<usize>>,
    proj_index: Vec<usize>,
    inj_index: Vec<usize>,
    realizations: realize::Cache,
}

impl DerivedCategory {
    pub fn new(quiver: Arc<Quiver>, field: Field) -> Result<DerivedCategory> {
        let class = quiver.validate()?;
        if !matches!(class, DynkinClass::A(_)) {
            return Err(Error::NotTypeA(class));
        }
        let n = quiver.vertex_count();
        let ivs = intervals(&quiver)?;
        let modules = indecomposables(&quiver, field)?;
        let count = modules.len();
        let find = |rep: &Rep| -> Result<usize> {
            let iv = interval_of(rep)
                .ok_or_else(|| Error::Internal("indecomposable is not an interval".into()))?;
            Ok(ivs.iter().position(|&x| x == iv).expect("all intervals listed"))
        };
        let mut hom = vec![vec![0; count]; count];
        let mut ext = vec![vec![0; count]; count];
        for (i, m) in modules.iter().enumerate() {
            for (j, k) in modules.iter().enumerate() {
                hom[i][j] = hom_space(m, k)?.dimension();
                ext[i][j] = ext1_dim(m, k)?;
            }
        }
        let mut tau = vec![None; count];
        let mut tau_inv = vec![None; count];
        for (i, m) in modules.iter().enumerate() {
            if let Some(t) = ar_translate(m)? {
                let j = find(&t)?;
                tau[i] = Some(j);
                tau_inv[j] = Some(i);
            }
        }
        let mut proj_vertex = vec![None; count];
        let mut inj_vertex = vec![None; count];
        let mut proj_index = Vec::with_capacity(n);
        let mut inj_index = Vec::with_capacity(n);
        for v in 0..n {
            let p = find(&projective(&quiver, field, v)?)?;
            let i = find(&injective(&quiver, field, v)?)?;
            proj_vertex[p] = Some(v);
            inj_vertex[i] = Some(v);
            proj_index.push(p);
            inj_index.push(i);
        }
        for (i, m) in modules.iter().enumerate() {
            if is_projective(m)? != proj_vertex[i].is_some() {
                return Err(Error::Internal("projective bookkeeping".into()));
            }
        }
        Ok(DerivedCategory {
            quiver,
            field,
            class,
            intervals: ivs,
            modules,
            hom,
            ext,
            tau,
            tau_inv,
            proj_vertex,
            inj_vertex,
            proj_index,
            inj_index,
            realizations: realize::Cache::default(),
        })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn class(&self) -> DynkinClass {
        self.class
    }

    pub fn rank(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// The Coxeter number `h = n + 1`.
    pub fn coxeter_number(&self) -> usize {
        self.class.coxeter_number()
    }

    pub fn module_count(&self) -> usize {
        self.modules.len()
    }

    pub fn module(&self, i: usize) -> &Rep {
        &self.modules[i]
    }

    pub fn interval(&self, i: usize) -> Interval {
        self.intervals[i]
    }

    /// Index of the module with the given interval of path positions.
    pub fn module_index(&self, interval: Interval) -> Option<usize> {
        self.intervals.iter().position(|&x| x == interval)
    }

    pub fn projective_index(&self, v: usize) -> usize {
        self.proj_index[v]
    }

    pub fn injective_index(&self, v: usize) -> usize {
        self.inj_index[v]
    }

    pub fn projective_vertex(&self, module: usize) -> Option<usize> {
        self.proj_vertex[module]
    }

    /// All labels with shift in `lo..=hi`, ordered by `(shift, module)`.
    pub fn labels(&self, lo: i64, hi: i64) -> Vec<DbIndec> {
        (lo..=hi)
            .flat_map(|a| (0..self.module_count()).map(move |m| DbIndec::new(m, a)))
            .collect()
    }

    fn check(&self, x: DbIndec) -> Result<()> {
        if x.module >= self.module_count() {
            return Err(Error::OutOfRange(format!("module index {}", x.module)));
        }
        Ok(())
    }

    pub fn hom_dim(&self, x: DbIndec, y: DbIndec) -> Result<usize> {
        self.check(x)?;
        self.check(y)?;
        Ok(match y.shift - x.shift {
            0 => self.hom[x.module][y.module],
            1 => self.ext[x.module][y.module],
            _ => 0,
        })
    }

    /// Additive extension of [`DerivedCategory::hom_dim`].
    pub fn hom_dim_objects(&self, x: &DbObject, y: &DbObject) -> Result<usize> {
        let mut total = 0;
        for (a, m) in x.summands() {
            for (b, n) in y.summands() {
                total += m * n * self.hom_dim(a, b)?;
            }
        }
        Ok(total)
    }

    pub fn suspend(&self, x: DbIndec, n: i64) -> DbIndec {
        DbIndec::new(x.module, x.shift + n)
    }

    /// The AR translate: `τ(Σ^a M) = Σ^a τM` for `M` not projective and
    /// `τ(Σ^a P_i) = Σ^{a−1} I_i`.
    pub fn translate(&self, x: DbIndec) -> DbIndec {
        match (self.tau[x.module], self.proj_vertex[x.module]) {
            (Some(t), _) => DbIndec::new(t, x.shift),
            (None, Some(v)) => DbIndec::new(self.inj_index[v], x.shift - 1),
            (None, None) => unreachable!("every non-projective indecomposable has a translate"),
        }
    }

    pub fn translate_inv(&self, x: DbIndec) -> DbIndec {
        match (self.tau_inv[x.module], self.inj_vertex[x.module]) {
            (Some(t), _) => DbIndec::new(t, x.shift),
            (None, Some(v)) => DbIndec::new(self.proj_index[v], x.shift + 1),
            (None, None) => unreachable!("every non-injective indecomposable has an inverse translate"),
        }
    }

    /// `τ^k` for any integer `k`.
    pub fn translate_pow(&self, x: DbIndec, k: i64) -> DbIndec {
        // τ^h = Σ^{-2} on labels, checked in the tests
        let h = self.coxeter_number() as i64;
        let (q, r) = (k.div_euclid(h), k.rem_euclid(h));
        let mut y = self.suspend(x, -2 * q);
        for _ in 0..r {
            y = self.translate(y);
        }
        y
    }

    /// The Serre functor `ν = Στ`.
    pub fn serre(&self, x: DbIndec) -> DbIndec {
        self.suspend(self.translate(x), 1)
    }

    pub fn serre_inv(&self, x: DbIndec) -> DbIndec {
        self.translate_inv(self.suspend(x, -1))
    }

    /// `dim Hom(X, Y) = dim Hom(Y, νX)`.
    pub fn verify_serre_duality(&self, x: DbIndec, y: DbIndec) -> Result<bool> {
        Ok(self.hom_dim(x, y)? == self.hom_dim(y, self.serre(x))?)
    }

    /// Serre duality against an arbitrary label map standing in for `ν`.
    pub fn verify_serre_duality_with(
        &self,
        x: DbIndec,
        y: DbIndec,
        nu: impl Fn(DbIndec) -> DbIndec,
    ) -> Result<bool> {
        Ok(self.hom_dim(x, y)? == self.hom_dim(y, nu(x))?)
    }

    /// The projective-resolution complex of a label, shared and cached.
    pub fn realize(&self, x: DbIndec) -> Result<Arc<Realization>> {
        self.check(x)?;
        self.realizations.get_or_build(self, x)
    }

    /// A complex realizing a direct sum of labels.
    pub fn realize_object(&self, x: &DbObject) -> Result<crate::dgkernel::Complex> {
        let mut parts = Vec::new();
        for (a, m) in x.summands() {
            let r = self.realize(a)?;
            for _ in 0..m {
                parts.push(r.complex.clone());
            }
        }
        if parts.is_empty() {
            return Ok(crate::dgkernel::Complex::zero(self.quiver.clone(), self.field));
        }
        let refs: Vec<&crate::dgkernel::Complex> = parts.iter().map(|c| c.as_ref()).collect();
        crate::dgkernel::Complex::direct_sum(&refs)
    }
}

#[cfg(test)]
mod tests;
