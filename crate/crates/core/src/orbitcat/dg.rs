use std::collections::BTreeMap;

use serde::Serialize;

use crate::derivedcat::DbIndec;
use crate::dgkernel::HomComplex;
use crate::error::{Error, Result};

use super::OrbitCategory;

/// Degrees in which the colimit is tracked.
pub const DG_DEGREES: (i64, i64) = (-3, 3);

const MAX_STAGES: usize = 64;

/// Homology of the dg orbit hom complex `colim_p ⊕_{n≥0} Hom(FⁿX, F^pY)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DgOrbitHom {
    /// `degree -> dimension` over [`DG_DEGREES`].
    pub dims: BTreeMap<i64, usize>,
    /// The first stage already equal to the colimit.
    pub stabilization: usize,
    /// Stage dimensions in the order computed.
    pub stages: Vec<BTreeMap<i64, usize>>,
}

impl DgOrbitHom {
    pub fn degree(&self, d: i64) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }
}

impl OrbitCategory {
    // degrees where the realization of x has nonzero terms
    fn span(&self, x: DbIndec) -> Result<(i64, i64)> {
        Ok(self.db.realize(x)?.complex.range().unwrap_or((x.shift, x.shift)))
    }

    // chain-level Hom(a, b) vanishes in all tracked degrees
    fn far(&self, a: DbIndec, b: DbIndec) -> Result<bool> {
        let (lo_a, hi_a) = self.span(a)?;
        let (lo_b, hi_b) = self.span(b)?;
        Ok(hi_b - lo_a < DG_DEGREES.0 || lo_b - hi_a > DG_DEGREES.1)
    }

    // ⊕_{n≥0} H_d Hom(FⁿX, F^pY) for every tracked d
    fn stage(&self, x: DbIndec, y: DbIndec, p: i64) -> Result<BTreeMap<i64, usize>> {
        let (lo, hi) = DG_DEGREES;
        let mut dims: BTreeMap<i64, usize> = (lo..=hi).map(|d| (d, 0)).collect();
        let b = self.apply_f(y, p);
        let rb = self.db.realize(b)?;
        let mut quiet = 0;
        let mut n = 0i64;
        // once FⁿX has moved past F^pY for h consecutive n it never returns
        while quiet < self.h {
            if n as usize > MAX_STAGES * self.h as usize {
                return Err(Error::NoStabilization(MAX_STAGES));
            }
            let a = self.apply_f(x, n);
            let ra = self.db.realize(a)?;
            let (lo_a, _) = self.span(a)?;
            let (_, hi_b) = self.span(b)?;
            if hi_b - lo_a < lo {
                quiet += 1;
            } else {
                quiet = 0;
            }
            if !self.far(a, b)? {
                let hom = HomComplex::new(&ra.complex, &rb.complex)?;
                for d in lo..=hi {
                    *dims.get_mut(&d).expect("tracked") += hom.homology_dim(d);
                }
            }
            n += 1;
        }
        Ok(dims)
    }

    /// The graded hom of the dg orbit category, stage by stage.
    ///
    /// The transition from stage `p` to `p + 1` applies `F` to every
    /// summand; since `F` is an equivalence of realizations it carries
    /// `Hom(FⁿX, F^pY)` isomorphically onto `Hom(F^{n+1}X, F^{p+1}Y)`, so
    /// the colimit is the increasing union and its homology is read off the
    /// last stage. Stages stop once two consecutive ones agree and the new
    /// column `n = 0` has stayed chain-level zero for a full period.
    pub fn dg_orbit_hom(&self, x: DbIndec, y: DbIndec) -> Result<DgOrbitHom> {
        let mut stages = Vec::new();
        let mut quiet = 0;
        let mut p = 0i64;
        loop {
            if stages.len() >= MAX_STAGES {
                return Err(Error::NoStabilization(MAX_STAGES));
            }
            stages.push(self.stage(x, y, p)?);
            let b = self.apply_f(y, p);
            let (_, hi_a) = self.span(x)?;
            let (lo_b, _) = self.span(b)?;
            if lo_b - hi_a > DG_DEGREES.1 {
                quiet += 1;
            } else {
                quiet = 0;
            }
            let settled = stages.len() >= 2 && stages[stages.len() - 1] == stages[stages.len() - 2];
            if quiet >= self.h && settled {
                break;
            }
            p += 1;
        }
        let dims = stages.last().expect("at least one stage").clone();
        let stabilization = stages.iter().position(|s| *s == dims).expect("last stage");
        Ok(DgOrbitHom {
            dims,
            stabilization,
            stages,
        })
    }
}
