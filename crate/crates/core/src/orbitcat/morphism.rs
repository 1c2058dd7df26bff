use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use crate::derivedcat::{DbIndec, Realization};
use crate::dgkernel::{homology_homs, is_nullhomotopic, shift_map, ChainMap, GradedMap, HomComplex};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};

use super::{OrbitCategory, OrbitObj};

/// A chain map between the realizations of two labels, up to homotopy.
#[derive(Debug, Clone)]
pub struct LabeledMap {
    pub source: DbIndec,
    pub target: DbIndec,
    pub map: ChainMap,
}

/// The termwise Nakayama image of a realization together with a
/// quasi-isomorphism from the realization of `νY` into it.
#[derive(Debug, Clone)]
pub(super) struct NakayamaLift {
    image: Realization,
    // real(νY) -> ν(real Y)
    comparison: GradedMap,
}

/// A morphism of the orbit category: components `f_n: X -> FⁿY`, each a
/// homotopy class of chain maps between realizations.
#[derive(Debug, Clone)]
pub struct OrbitMorphism {
    pub source: OrbitObj,
    pub target: OrbitObj,
    pub components: BTreeMap<i64, ChainMap>,
}

// Coefficients c with Σ c_i candidates[i] homologous to rhs in `hom`.
fn solve_in_homology(hom: &HomComplex, candidates: &[GradedMap], rhs: &GradedMap) -> Result<Vec<Scalar>> {
    let field = hom.field();
    let mut cols: Vec<Vector> = candidates.iter().map(|c| hom.coordinates(c)).collect();
    let d1 = hom.differential(1);
    cols.extend((0..d1.cols()).map(|c| d1.column(c)));
    let m = Matrix::from_columns(field, hom.dim(0), &cols)?;
    let sol = m
        .solve(&hom.coordinates(rhs))?
        .ok_or_else(|| Error::Internal("class outside the image of an equivalence".into()))?;
    Ok(sol.entries()[..candidates.len()].to_vec())
}

fn combine(basis: &[ChainMap], coeffs: &[Scalar], zero: ChainMap) -> ChainMap {
    basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(zero, |acc, (b, c)| acc.add(&b.scale(c)))
}

impl OrbitCategory {
    fn real(&self, x: DbIndec) -> Result<Arc<Realization>> {
        self.db.realize(x)
    }

    fn lift(&self, y: DbIndec) -> Result<NakayamaLift> {
        if let Some(l) = self.lifts.read().expect("lift lock").get(&y) {
            return Ok(l.clone());
        }
        let ry = self.real(y)?;
        let image = ry.nakayama()?;
        let target = self.real(self.db.serre(y))?;
        let (dim, basis) = homology_homs(&target.complex, &image.complex)?;
        if dim != 1 {
            return Err(Error::Internal(format!(
                "Nakayama image of {y} is not isomorphic to the realization of its Serre image"
            )));
        }
        let lift = NakayamaLift {
            image,
            comparison: basis[0].representative.as_graded().clone(),
        };
        let mut w = self.lifts.write().expect("lift lock");
        Ok(w.entry(y).or_insert(lift).clone())
    }

    /// The Serre functor on a map between realizations.
    pub fn nu_map(&self, g: &LabeledMap) -> Result<LabeledMap> {
        let (y, w) = (g.source, g.target);
        let (ly, lw) = (self.lift(y)?, self.lift(w)?);
        let (ry, rw) = (self.real(y)?, self.real(w)?);
        let (ny, nw) = (self.db.serre(y), self.db.serre(w));
        let (rny, rnw) = (self.real(ny)?, self.real(nw)?);
        let nu_g = ry.nakayama_map(&rw, g.map.as_graded(), &ly.image, &lw.image)?;
        let rhs = nu_g.compose(&ly.comparison)?;
        let (_, basis) = homology_homs(&rny.complex, &rnw.complex)?;
        let basis: Vec<ChainMap> = basis.into_iter().map(|b| b.representative).collect();
        let candidates = basis
            .iter()
            .map(|b| lw.comparison.compose(b.as_graded()))
            .collect::<Result<Vec<_>>>()?;
        let hom = HomComplex::new(&rny.complex, &lw.image.complex)?;
        let coeffs = solve_in_homology(&hom, &candidates, &rhs)?;
        let zero = ChainMap::zero(rny.complex.clone(), rnw.complex.clone());
        Ok(LabeledMap {
            source: ny,
            target: nw,
            map: combine(&basis, &coeffs, zero),
        })
    }

    /// The inverse of [`OrbitCategory::nu_map`] on homotopy classes.
    pub fn nu_inv_map(&self, g: &LabeledMap) -> Result<LabeledMap> {
        let (y, w) = (self.db.serre_inv(g.source), self.db.serre_inv(g.target));
        let (ry, rw) = (self.real(y)?, self.real(w)?);
        let (_, basis) = homology_homs(&ry.complex, &rw.complex)?;
        let basis: Vec<ChainMap> = basis.into_iter().map(|b| b.representative).collect();
        let candidates = basis
            .iter()
            .map(|b| {
                let l = LabeledMap {
                    source: y,
                    target: w,
                    map: b.clone(),
                };
                Ok(self.nu_map(&l)?.map.into_graded())
            })
            .collect::<Result<Vec<_>>>()?;
        let (rgy, rgw) = (self.real(g.source)?, self.real(g.target)?);
        let hom = HomComplex::new(&rgy.complex, &rgw.complex)?;
        let coeffs = solve_in_homology(&hom, &candidates, g.map.as_graded())?;
        let zero = ChainMap::zero(ry.complex.clone(), rw.complex.clone());
        Ok(LabeledMap {
            source: y,
            target: w,
            map: combine(&basis, &coeffs, zero),
        })
    }

    /// `Σᵗ` on a map between realizations (exact, no choices).
    pub fn sigma_map(&self, g: &LabeledMap, t: i64) -> Result<LabeledMap> {
        let (y, w) = (self.db.suspend(g.source, t), self.db.suspend(g.target, t));
        let (ry, rw) = (self.real(y)?, self.real(w)?);
        let map = ChainMap::new(shift_map(g.map.as_graded(), t, &ry.complex, &rw.complex))?;
        Ok(LabeledMap {
            source: y,
            target: w,
            map,
        })
    }

    /// One application of `F = τ^p Σ^s = ν^p Σ^{s−p}`.
    pub fn f_map(&self, g: &LabeledMap) -> Result<LabeledMap> {
        let p = self.f.tau_power;
        let mut out = self.sigma_map(g, self.f.sigma_power - p)?;
        for _ in 0..p.abs() {
            out = if p > 0 { self.nu_map(&out)? } else { self.nu_inv_map(&out)? };
        }
        Ok(out)
    }

    pub fn f_inv_map(&self, g: &LabeledMap) -> Result<LabeledMap> {
        let p = self.f.tau_power;
        let mut out = g.clone();
        for _ in 0..p.abs() {
            out = if p > 0 { self.nu_inv_map(&out)? } else { self.nu_map(&out)? };
        }
        self.sigma_map(&out, p - self.f.sigma_power)
    }

    /// `Fⁿ` on a map between realizations.
    pub fn f_pow_map(&self, g: &LabeledMap, n: i64) -> Result<LabeledMap> {
        let mut out = g.clone();
        for _ in 0..n.abs() {
            out = if n > 0 { self.f_map(&out)? } else { self.f_inv_map(&out)? };
        }
        Ok(out)
    }

    pub fn identity(&self, x: OrbitObj) -> Result<OrbitMorphism> {
        let r = self.real(x.0)?;
        let mut components = BTreeMap::new();
        components.insert(0, ChainMap::identity(&r.complex));
        Ok(OrbitMorphism {
            source: x,
            target: x,
            components,
        })
    }

    pub fn zero_morphism(&self, x: OrbitObj, y: OrbitObj) -> OrbitMorphism {
        OrbitMorphism {
            source: x,
            target: y,
            components: BTreeMap::new(),
        }
    }

    /// A random morphism `X -> Y` with coefficients in `-coeff..=coeff` on
    /// a homology basis of every component.
    pub fn random_morphism<R: Rng>(
        &self,
        rng: &mut R,
        x: OrbitObj,
        y: OrbitObj,
        coeff: i64,
    ) -> Result<OrbitMorphism> {
        let field = self.db.field();
        let hom = self.orbit_hom_dim(x.0, y.0)?;
        let rx = self.real(x.0)?;
        let mut components = BTreeMap::new();
        for &n in hom.support.keys() {
            let ry = self.real(self.apply_f(y.0, n))?;
            let (_, basis) = homology_homs(&rx.complex, &ry.complex)?;
            let coeffs: Vec<Scalar> = basis.iter().map(|_| field.int(rng.gen_range(-coeff..=coeff))).collect();
            let reps: Vec<ChainMap> = basis.into_iter().map(|b| b.representative).collect();
            let zero = ChainMap::zero(rx.complex.clone(), ry.complex.clone());
            components.insert(n, combine(&reps, &coeffs, zero));
        }
        Ok(OrbitMorphism {
            source: x,
            target: y,
            components,
        })
    }

    /// `g ∘ f`, with components `Σ_{n+p=m} (Fⁿ g_p) ∘ f_n`.
    pub fn compose(&self, f: &OrbitMorphism, g: &OrbitMorphism) -> Result<OrbitMorphism> {
        if f.target != g.source {
            return Err(Error::NotComposable);
        }
        let mut components: BTreeMap<i64, ChainMap> = BTreeMap::new();
        for (&n, fn_) in &f.components {
            for (&p, gp) in &g.components {
                let lifted = LabeledMap {
                    source: g.source.0,
                    target: self.apply_f(g.target.0, p),
                    map: gp.clone(),
                };
                let moved = self.f_pow_map(&lifted, n)?;
                let term = moved.map.compose(fn_)?;
                let m = n + p;
                let entry = match components.remove(&m) {
                    Some(prev) => prev.add(&term),
                    None => term,
                };
                components.insert(m, entry);
            }
        }
        Ok(OrbitMorphism {
            source: f.source,
            target: g.target,
            components,
        })
    }

    /// Equality of orbit morphisms: every component agrees up to homotopy.
    pub fn morphisms_equal(&self, a: &OrbitMorphism, b: &OrbitMorphism) -> Result<bool> {
        if a.source != b.source || a.target != b.target {
            return Ok(false);
        }
        let keys: std::collections::BTreeSet<i64> =
            a.components.keys().chain(b.components.keys()).copied().collect();
        let rx = self.real(a.source.0)?;
        for n in keys {
            let ry = self.real(self.apply_f(a.target.0, n))?;
            let zero = || ChainMap::zero(rx.complex.clone(), ry.complex.clone());
            let fa = a.components.get(&n).cloned().unwrap_or_else(zero);
            let fb = b.components.get(&n).cloned().unwrap_or_else(zero);
            if !is_nullhomotopic(&fa.sub(&fb))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_morphism(&self, f: &OrbitMorphism) -> Result<bool> {
        for c in f.components.values() {
            if !is_nullhomotopic(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
