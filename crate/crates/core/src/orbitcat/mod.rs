//! Orbit categories `D^b(kQ)/F` for `F = τ^p Σ^s`, and the cluster category
//! `F = τ⁻¹Σ`.
//!
//! Objects are labels; `Hom(X, Y) = ⊕_n Hom(X, FⁿY)`. On labels
//! `τ^h = Σ^{−2}` (`h` the Coxeter number), so `F^h = Σ^D` with
//! `D = s·h − 2p`, and every orbit meets the shifts `0..|D|`.

mod dg;
mod morphism;

pub use dg::DgOrbitHom;
pub use morphism::{LabeledMap, OrbitMorphism};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::derivedcat::{DbIndec, DerivedCategory};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::quiverrep::Quiver;

/// The self-equivalence `τ^p Σ^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AutoEquivalence {
    pub tau_power: i64,
    pub sigma_power: i64,
}

impl AutoEquivalence {
    pub fn new(tau_power: i64, sigma_power: i64) -> AutoEquivalence {
        AutoEquivalence {
            tau_power,
            sigma_power,
        }
    }

    /// `τ⁻¹Σ`, which equals `ν⁻¹Σ²` because `ν = τΣ`.
    pub fn cluster() -> AutoEquivalence {
        AutoEquivalence::new(-1, 1)
    }

    /// `Fⁿ` on labels; negative `n` applies the inverse.
    pub fn apply(&self, db: &DerivedCategory, x: DbIndec, n: i64) -> DbIndec {
        let y = db.translate_pow(x, self.tau_power * n);
        db.suspend(y, self.sigma_power * n)
    }
}

impl fmt::Display for AutoEquivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ^{} Σ^{}", self.tau_power, self.sigma_power)
    }
}

/// The canonical representative of an `F`-orbit: among the members with
/// nonnegative shift, the one minimizing `(shift, module)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitObj(pub DbIndec);

impl OrbitObj {
    pub fn label(self) -> DbIndec {
        self.0
    }
}

impl fmt::Display for OrbitObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// `dim Hom(X, FⁿY)` for every `n` in the checked window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitHom {
    pub total: usize,
    /// Nonzero terms only.
    pub support: BTreeMap<i64, usize>,
    /// The window that was evaluated (inclusive), edges included.
    pub window: (i64, i64),
}

/// An orbit category over a type-A derived category.
#[derive(Debug)]
pub struct OrbitCategory {
    db: Arc<DerivedCategory>,
    f: AutoEquivalence,
    period: i64,
    h: i64,
    lifts: RwLock<HashMap<DbIndec, morphism::NakayamaLift>>,
}

impl OrbitCategory {
    pub fn new(db: Arc<DerivedCategory>, f: AutoEquivalence) -> Result<OrbitCategory> {
        let h = db.coxeter_number() as i64;
        // the label identity τ^h = Σ^{-2} that the period relies on
        for x in db.labels(0, 0) {
            let mut y = x;
            for _ in 0..h {
                y = db.translate(y);
            }
            if y != db.suspend(x, -2) {
                return Err(Error::Internal(format!("τ^{h} ≠ Σ^-2 on {x}")));
            }
        }
        let period = f.sigma_power * h - 2 * f.tau_power;
        if period == 0 {
            return Err(Error::InvalidEquivalence(format!(
                "{f} has finite order on labels; orbit homs are not finitely supported"
            )));
        }
        Ok(OrbitCategory {
            db,
            f,
            period,
            h,
            lifts: RwLock::new(HashMap::new()),
        })
    }

    /// The cluster category of a type-A quiver.
    pub fn cluster(quiver: Arc<Quiver>, field: Field) -> Result<OrbitCategory> {
        let db = Arc::new(DerivedCategory::new(quiver, field)?);
        OrbitCategory::new(db, AutoEquivalence::cluster())
    }

    pub fn db(&self) -> &Arc<DerivedCategory> {
        &self.db
    }

    pub fn equivalence(&self) -> AutoEquivalence {
        self.f
    }

    /// `D` with `F^h = Σ^D` on labels.
    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn apply_f(&self, x: DbIndec, n: i64) -> DbIndec {
        self.f.apply(&self.db, x, n)
    }

    pub fn canonical(&self, x: DbIndec) -> OrbitObj {
        let d = self.period.abs();
        let best = (0..self.h)
            .map(|r| {
                let y = self.apply_f(x, r);
                DbIndec::new(y.module, y.shift.rem_euclid(d))
            })
            .min_by_key(|y| (y.shift, y.module))
            .expect("h ≥ 2");
        OrbitObj(best)
    }

    /// One canonical representative per orbit, sorted.
    pub fn indecomposables(&self) -> Vec<OrbitObj> {
        let mut out: Vec<OrbitObj> = self
            .db
            .labels(0, self.period.abs() - 1)
            .into_iter()
            .map(|x| self.canonical(x))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `Σⁿ` on orbit objects.
    pub fn suspend(&self, x: OrbitObj, n: i64) -> OrbitObj {
        self.canonical(self.db.suspend(x.0, n))
    }

    /// The `n` for which `FⁿY` lies in shift `X.shift` or `X.shift + 1`,
    /// the only places a nonzero hom can come from.
    fn candidates(&self, x: DbIndec, y: DbIndec) -> Vec<i64> {
        let mut out = Vec::new();
        for r in 0..self.h {
            let s = self.apply_f(y, r).shift;
            for target in [x.shift, x.shift + 1] {
                let gap = target - s;
                if gap % self.period == 0 {
                    out.push(gap / self.period * self.h + r);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn orbit_hom_dim(&self, x: DbIndec, y: DbIndec) -> Result<OrbitHom> {
        self.orbit_hom_dim_padded(x, y, 2)
    }

    /// As [`OrbitCategory::orbit_hom_dim`] with a custom padding of the
    /// a-priori window; the padded edges must vanish.
    pub fn orbit_hom_dim_padded(&self, x: DbIndec, y: DbIndec, pad: i64) -> Result<OrbitHom> {
        let cands = self.candidates(x, y);
        let (lo, hi) = match (cands.first(), cands.last()) {
            (Some(&a), Some(&b)) => (a - pad, b + pad),
            _ => (-pad, pad),
        };
        let mut support = BTreeMap::new();
        for n in lo..=hi {
            let d = self.db.hom_dim(x, self.apply_f(y, n))?;
            if d > 0 {
                if !cands.contains(&n) {
                    return Err(Error::NonFiniteSupport(n));
                }
                support.insert(n, d);
            }
        }
        Ok(OrbitHom {
            total: support.values().sum(),
            support,
            window: (lo, hi),
        })
    }

    /// `dim Hom(X, Y) = dim Hom(Y, Σ²X)` in the orbit category.
    pub fn verify_2cy(&self, x: OrbitObj, y: OrbitObj) -> Result<bool> {
        let lhs = self.orbit_hom_dim(x.0, y.0)?.total;
        let rhs = self.orbit_hom_dim(y.0, self.suspend(x, 2).0)?.total;
        Ok(lhs == rhs)
    }

    /// `dim Ext¹(X, Y) = dim Hom(X, ΣY)` in the orbit category.
    pub fn ext1(&self, x: OrbitObj, y: OrbitObj) -> Result<usize> {
        Ok(self.orbit_hom_dim(x.0, self.suspend(y, 1).0)?.total)
    }
}

#[cfg(test)]
mod tests;
