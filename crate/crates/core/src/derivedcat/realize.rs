use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::dgkernel::{shift, Complex, GradedMap};
use crate::error::Result;
use crate::quiverrep::{projective_resolution, AddObject, RepMap};

use super::{DbIndec, DerivedCategory};

/// A complex whose terms are sums of indecomposable projectives (or
/// injectives), remembered summand by summand.
#[derive(Debug, Clone)]
pub struct Realization {
    pub complex: Arc<Complex>,
    pub objects: BTreeMap<i64, AddObject>,
}

impl Realization {
    fn object(&self, k: i64) -> AddObject {
        self.objects.get(&k).cloned().unwrap_or_else(|| {
            let kind = self
                .objects
                .values()
                .next()
                .map_or(crate::quiverrep::Kind::Projective, |o| o.kind);
            AddObject::new(kind, vec![])
        })
    }

    /// Apply the Nakayama functor termwise: projectives become injectives
    /// (or back), with the same coefficient matrices.
    pub fn nakayama(&self) -> Result<Realization> {
        let c = &self.complex;
        let q = c.quiver();
        let Some((lo, hi)) = c.range() else {
            return Ok(self.clone());
        };
        let objects: BTreeMap<i64, AddObject> =
            self.objects.iter().map(|(&k, o)| (k, o.nakayama())).collect();
        let terms = (lo..=hi)
            .map(|k| self.object(k).nakayama().materialize(q, c.field()))
            .collect::<Result<Vec<_>>>()?;
        let diffs = ((lo + 1)..=hi)
            .map(|k| {
                let (s, t) = (self.object(k), self.object(k - 1));
                let coeffs = AddObject::coefficients(q, &s, &t, &c.d(k))?;
                AddObject::materialize_map(q, &s.nakayama(), &t.nakayama(), &coeffs)
            })
            .collect::<Result<Vec<RepMap>>>()?;
        let complex = Complex::new(lo, terms, diffs)?;
        Ok(Realization {
            complex: Arc::new(complex),
            objects,
        })
    }

    /// The Nakayama functor on a map `self -> target` of any degree, landing
    /// between the given images.
    pub fn nakayama_map(
        &self,
        target: &Realization,
        g: &GradedMap,
        nu_source: &Realization,
        nu_target: &Realization,
    ) -> Result<GradedMap> {
        let q = self.complex.quiver();
        let n = g.degree();
        let mut components = BTreeMap::new();
        for (&k, m) in g.components() {
            let (s, t) = (self.object(k), target.object(k + n));
            let coeffs = AddObject::coefficients(q, &s, &t, m)?;
            let image = AddObject::materialize_map(q, &s.nakayama(), &t.nakayama(), &coeffs)?;
            components.insert(k, image);
        }
        GradedMap::new(nu_source.complex.clone(), nu_target.complex.clone(), n, components)
    }
}

#[derive(Debug, Default)]
pub(super) struct Cache {
    map: RwLock<HashMap<DbIndec, Arc<Realization>>>,
}

impl Cache {
    pub(super) fn get_or_build(&self, db: &DerivedCategory, x: DbIndec) -> Result<Arc<Realization>> {
        if let Some(r) = self.map.read().expect("cache lock").get(&x) {
            return Ok(r.clone());
        }
        let built = Arc::new(build(db, x)?);
        let mut w = self.map.write().expect("cache lock");
        Ok(w.entry(x).or_insert(built).clone())
    }
}

// the minimal projective resolution P1 -> P0 in degrees a+1, a
fn build(db: &DerivedCategory, x: DbIndec) -> Result<Realization> {
    let q = db.quiver();
    let field = db.field();
    let res = projective_resolution(db.module(x.module))?;
    let p0 = res.p0.materialize(q, field)?;
    let base = if res.p1.is_empty() {
        Complex::concentrated(p0, 0)
    } else {
        let p1 = res.p1.materialize(q, field)?;
        let d = AddObject::materialize_map(q, &res.p1, &res.p0, &res.differential)?;
        Complex::new(0, vec![p0, p1], vec![d])?
    };
    let mut objects = BTreeMap::new();
    objects.insert(x.shift, res.p0.clone());
    if !res.p1.is_empty() {
        objects.insert(x.shift + 1, res.p1.clone());
    }
    Ok(Realization {
        complex: Arc::new(shift(&base, x.shift)),
        objects,
    })
}
