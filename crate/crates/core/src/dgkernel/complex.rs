use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::quiverrep::{Quiver, Rep, RepMap};

/// A bounded chain complex of representations, graded homologically:
/// `d_n: X_n -> X_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    quiver: Arc<Quiver>,
    field: Field,
    lo: i64,
    terms: Vec<Rep>,
    // diffs[j] = d_{lo + j + 1}
    diffs: Vec<RepMap>,
    zero: Rep,
}

impl Complex {
    /// `terms[j]` sits in degree `lo + j`; `diffs[j]` is the differential
    /// out of degree `lo + j + 1`.
    pub fn new(lo: i64, terms: Vec<Rep>, diffs: Vec<RepMap>) -> Result<Complex> {
        let first = terms
            .first()
            .ok_or_else(|| Error::InvalidComplex("no terms; use Complex::zero".into()))?;
        let (quiver, field) = (first.quiver().clone(), first.field());
        Complex::build(quiver, field, lo, terms, diffs)
    }

    pub fn zero(quiver: Arc<Quiver>, field: Field) -> Complex {
        let zero = Rep::zero(quiver.clone(), field);
        Complex {
            quiver,
            field,
            lo: 0,
            terms: vec![],
            diffs: vec![],
            zero,
        }
    }

    /// A single representation placed in degree `degree`.
    pub fn concentrated(rep: Rep, degree: i64) -> Complex {
        let (quiver, field) = (rep.quiver().clone(), rep.field());
        Complex::build(quiver, field, degree, vec![rep], vec![]).expect("one term")
    }

    /// A complex of plain vector spaces; `diffs[j]` is a
    /// `dims[j] × dims[j + 1]` matrix.
    pub fn of_spaces(field: Field, lo: i64, dims: &[usize], diffs: Vec<Matrix>) -> Result<Complex> {
        let quiver = Arc::new(Quiver::point());
        let terms = dims
            .iter()
            .map(|&d| Rep::new(quiver.clone(), field, vec![d], vec![]).expect("one vertex"))
            .collect();
        let diffs = diffs.into_iter().map(|m| RepMap::new(field, vec![m])).collect();
        Complex::build(quiver, field, lo, terms, diffs)
    }

    pub(crate) fn build(
        quiver: Arc<Quiver>,
        field: Field,
        lo: i64,
        terms: Vec<Rep>,
        diffs: Vec<RepMap>,
    ) -> Result<Complex> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::InvalidComplex(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                diffs.len()
            )));
        }
        let zero = Rep::zero(quiver.clone(), field);
        for t in &terms {
            if !t.compatible(&zero) {
                return Err(Error::QuiverMismatch);
            }
        }
        for (j, d) in diffs.iter().enumerate() {
            if !d.is_morphism(&terms[j + 1], &terms[j]) {
                return Err(Error::InvalidComplex(format!(
                    "d_{} is not a morphism of representations",
                    lo + j as i64 + 1
                )));
            }
        }
        for j in 1..diffs.len() {
            if !diffs[j - 1].compose(&diffs[j]).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d_{} ∘ d_{} ≠ 0",
                    lo + j as i64,
                    lo + j as i64 + 1
                )));
            }
        }
        let mut c = Complex {
            quiver,
            field,
            lo,
            terms,
            diffs,
            zero,
        };
        c.trim();
        Ok(c)
    }

    // drop zero terms at both ends so that equal complexes compare equal
    fn trim(&mut self) {
        while self.terms.last().is_some_and(Rep::is_zero) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(Rep::is_zero) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest and highest nonzero degree; `None` for the zero complex.
    pub fn range(&self) -> Option<(i64, i64)> {
        (!self.terms.is_empty()).then(|| (self.lo, self.lo + self.terms.len() as i64 - 1))
    }

    /// Degrees from `lo` to `hi` (empty for the zero complex).
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        match self.range() {
            Some((lo, hi)) => lo..=hi,
            #[allow(clippy::reversed_empty_ranges)]
            None => 1..=0,
        }
    }

    pub fn term(&self, n: i64) -> &Rep {
        match self.index(n) {
            Some(j) => &self.terms[j],
            None => &self.zero,
        }
    }

    /// The differential `d_n: X_n -> X_{n-1}`.
    pub fn d(&self, n: i64) -> RepMap {
        match (self.index(n), self.index(n - 1)) {
            (Some(j), Some(_)) => self.diffs[j - 1].clone(),
            _ => RepMap::zero(self.term(n), self.term(n - 1)),
        }
    }

    fn index(&self, n: i64) -> Option<usize> {
        let j = n - self.lo;
        (j >= 0 && (j as usize) < self.terms.len()).then_some(j as usize)
    }

    pub fn compatible(&self, other: &Complex) -> bool {
        self.zero.compatible(&other.zero)
    }

    /// Degreewise direct sum, block-diagonal differentials.
    pub fn direct_sum(parts: &[&Complex]) -> Result<Complex> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidComplex("empty direct sum".into()))?;
        if parts.iter().any(|p| !p.compatible(first)) {
            return Err(Error::QuiverMismatch);
        }
        let (quiver, field) = (first.quiver.clone(), first.field);
        let ranges: Vec<(i64, i64)> = parts.iter().filter_map(|p| p.range()).collect();
        let (Some(lo), Some(hi)) = (
            ranges.iter().map(|r| r.0).min(),
            ranges.iter().map(|r| r.1).max(),
        ) else {
            return Ok(Complex::zero(quiver, field));
        };
        let terms = (lo..=hi)
            .map(|k| {
                let reps: Vec<&Rep> = parts.iter().map(|p| p.term(k)).collect();
                Rep::direct_sum(&reps)
            })
            .collect::<Result<Vec<_>>>()?;
        let diffs = ((lo + 1)..=hi)
            .map(|k| {
                let ds: Vec<RepMap> = parts.iter().map(|p| p.d(k)).collect();
                let comps = (0..quiver.vertex_count())
                    .map(|v| {
                        let blocks: Vec<&Matrix> = ds.iter().map(|d| d.component(v)).collect();
                        Matrix::direct_sum(field, &blocks)
                    })
                    .collect();
                RepMap::new(field, comps)
            })
            .collect();
        Complex::build(quiver, field, lo, terms, diffs)
    }

    /// Dimension vector of `H_n`.
    pub fn homology_dims(&self, n: i64) -> Vec<usize> {
        let (out, inc) = (self.d(n), self.d(n + 1));
        (0..self.quiver.vertex_count())
            .map(|v| {
                let dim = self.term(n).dim(v);
                dim - out.component(v).rank() - inc.component(v).rank()
            })
            .collect()
    }

    /// `H_n` as a representation.
    pub fn homology(&self, n: i64) -> Rep {
        let (cycles, incl) = self.d(n).kernel(self.term(n));
        // boundaries factor through the cycles
        let inc = self.d(n + 1);
        let lifted: Vec<Matrix> = (0..self.quiver.vertex_count())
            .map(|v| {
                let basis = incl.component(v);
                let image = inc.component(v);
                let cols: Vec<_> = (0..image.cols())
                    .map(|c| {
                        basis
                            .solve(&image.column(c))
                            .expect("shapes")
                            .expect("boundaries are cycles")
                    })
                    .collect();
                Matrix::from_columns(self.field, basis.cols(), &cols).expect("columns")
            })
            .collect();
        RepMap::new(self.field, lifted).cokernel(&cycles).0
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees().all(|n| self.homology_dims(n).iter().all(|&d| d == 0))
    }

    /// Total dimension of each term, from `lo` to `hi`.
    pub fn total_dims(&self) -> Vec<usize> {
        self.terms.iter().map(Rep::total_dim).collect()
    }
}
