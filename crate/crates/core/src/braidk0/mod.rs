//! Braid generators on the Grothendieck group of a type-A quiver.
//!
//! The pairing is the antisymmetrized Euler form `Ω = E − Eᵀ` and the
//! generators are the transvections `T_i(x) = x − ⟨s_i, x⟩ s_i` along the
//! simple classes. The orbit quotient `L = coker(1 − [F])` with
//! `[F] = −Φ⁻¹` is computed by integer diagonal reduction.

mod intmat;

pub use intmat::{DiagonalForm, IntMatrix};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::quiverrep::{coxeter_matrix, euler_matrix, DynkinClass, Quiver};

/// The sign `ε` in `T_i(x) = x + ε⟨s_i, x⟩ s_i`, pinned by the `A_2` braid
/// relation together with `T_1 = [[1, 1], [0, 1]]`.
pub const TRANSVECTION_SIGN: i64 = -1;

/// Which symmetrization of the Euler matrix pairs the simples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FormKind {
    /// `E − Eᵀ`.
    Antisymmetric,
    /// `E + Eᵀ`, the symmetric Cartan form; a negative control.
    Symmetric,
}

/// `K₀` of a type-A quiver in the basis of simples.
#[derive(Debug, Clone)]
pub struct K0Lattice {
    quiver: Quiver,
    euler: IntMatrix,
}

impl K0Lattice {
    pub fn new(quiver: &Quiver) -> Result<K0Lattice> {
        let class = quiver.validate()?;
        if !matches!(class, DynkinClass::A(_)) {
            return Err(Error::NotTypeA(class));
        }
        Ok(K0Lattice {
            quiver: quiver.clone(),
            euler: IntMatrix::from_rows(&euler_matrix(quiver)),
        })
    }

    pub fn rank(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn euler(&self) -> &IntMatrix {
        &self.euler
    }

    pub fn form(&self, kind: FormKind) -> IntMatrix {
        let t = self.euler.transpose();
        match kind {
            FormKind::Antisymmetric => self.euler.sub(&t),
            FormKind::Symmetric => self.euler.add(&t),
        }
    }

    /// `T_i` for `1 ≤ i ≤ m`.
    pub fn generator(&self, i: usize) -> Result<IntMatrix> {
        self.generator_with(i, FormKind::Antisymmetric, TRANSVECTION_SIGN)
    }

    /// `x ↦ x + sign·⟨s_i, x⟩ s_i` for the chosen form.
    pub fn generator_with(&self, i: usize, kind: FormKind, sign: i64) -> Result<IntMatrix> {
        let m = self.rank();
        if i == 0 || i > m {
            return Err(Error::OutOfRange(format!("generator index {i} not in 1..={m}")));
        }
        let form = self.form(kind);
        let mut t = IntMatrix::identity(m);
        for j in 0..m {
            t.set(i - 1, j, t.get(i - 1, j) + sign * form.get(i - 1, j));
        }
        Ok(t)
    }

    pub fn generators(&self) -> Vec<IntMatrix> {
        (1..=self.rank()).map(|i| self.generator(i).expect("index in range")).collect()
    }

    /// The Coxeter transformation `Φ` on dimension vectors.
    pub fn coxeter(&self) -> Result<IntMatrix> {
        to_int(&coxeter_matrix(&self.quiver)?)
    }

    /// `[F] = −Φ⁻¹` for the cluster equivalence `F = τ⁻¹Σ`.
    pub fn cluster_class(&self) -> Result<IntMatrix> {
        let phi = coxeter_matrix(&self.quiver)?;
        Ok(to_int(&phi.inverse()?)?.neg())
    }
}

fn to_int(m: &Matrix) -> Result<IntMatrix> {
    let mut out = IntMatrix::zeros(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m
                .get(r, c)
                .to_i64()
                .ok_or_else(|| Error::Internal("non-integral Coxeter entry".into()))?;
            out.set(r, c, v);
        }
    }
    Ok(out)
}

/// Outcome of checking the braid and far-commutation relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidCheck {
    pub rank: usize,
    pub braid: bool,
    pub far_commutation: bool,
    pub form_preserved: bool,
    pub unimodular: bool,
    /// Human-readable descriptions of the relations that failed.
    pub failures: Vec<String>,
}

impl BraidCheck {
    pub fn ok(&self) -> bool {
        self.braid && self.far_commutation && self.form_preserved && self.unimodular
    }
}

pub fn verify_braid_relations(quiver: &Quiver) -> Result<BraidCheck> {
    verify_braid_relations_with(quiver, FormKind::Antisymmetric, TRANSVECTION_SIGN)
}

pub fn verify_braid_relations_with(quiver: &Quiver, kind: FormKind, sign: i64) -> Result<BraidCheck> {
    let lat = K0Lattice::new(quiver)?;
    let m = lat.rank();
    let ts = (1..=m)
        .map(|i| lat.generator_with(i, kind, sign))
        .collect::<Result<Vec<_>>>()?;
    let form = lat.form(kind);
    let mut check = BraidCheck {
        rank: m,
        braid: true,
        far_commutation: true,
        form_preserved: true,
        unimodular: true,
        failures: Vec::new(),
    };
    for i in 0..m {
        if ts[i].det() != 1 {
            check.unimodular = false;
            check.failures.push(format!("det T{} = {}", i + 1, ts[i].det()));
        }
        if ts[i].transpose().mul(&form).mul(&ts[i]) != form {
            check.form_preserved = false;
            check.failures.push(format!("T{} does not preserve the form", i + 1));
        }
        for j in (i + 1)..m {
            let (a, b) = (&ts[i], &ts[j]);
            if j == i + 1 {
                if a.mul(b).mul(a) != b.mul(a).mul(b) {
                    check.braid = false;
                    check.failures.push(format!("T{0}T{1}T{0} ≠ T{1}T{0}T{1}", i + 1, j + 1));
                }
            } else if a.mul(b) != b.mul(a) {
                check.far_commutation = false;
                check.failures.push(format!("T{}T{} ≠ T{}T{}", i + 1, j + 1, j + 1, i + 1));
            }
        }
    }
    Ok(check)
}

/// The braid action on `L = coker(1 − [F])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientAction {
    /// Diagonal of the reduced `1 − [F]`; `L ≅ ⊕ ℤ/d` (`ℤ` for `d = 0`).
    pub invariants: Vec<i64>,
    /// Each `T_i` on the coordinates of `L` with `d ≠ ±1`, entries reduced
    /// modulo `d` where `d ≠ 0`.
    pub generator_images: Vec<IntMatrix>,
    pub trivial: bool,
}

pub fn orbit_quotient_action(quiver: &Quiver) -> Result<QuotientAction> {
    let lat = K0Lattice::new(quiver)?;
    let m = lat.rank();
    let a = IntMatrix::identity(m).sub(&lat.cluster_class()?);
    let red = a.diagonalize();
    let invariants: Vec<i64> = (0..m).map(|i| red.diagonal.get(i, i).abs()).collect();
    let keep: Vec<usize> = (0..m).filter(|&i| invariants[i] != 1).collect();
    let mut images = Vec::with_capacity(m);
    let mut trivial = true;
    for (k, t) in lat.generators().iter().enumerate() {
        // T maps im(A) into itself iff every column of T·A lies in im(A)
        let ta = t.mul(&a);
        for c in 0..m {
            if !red.in_image(&ta.column(c)) {
                return Err(Error::NotInduced(format!(
                    "T{} moves column {} of 1 − [F] out of its image",
                    k + 1,
                    c + 1
                )));
            }
        }
        // in the coordinates y = U x the quotient is ⊕ ℤ/d_i
        let conj = red.left.mul(t).mul(&red.left_inv);
        let mut img = IntMatrix::zeros(keep.len(), keep.len());
        for (r, &i) in keep.iter().enumerate() {
            for (c, &j) in keep.iter().enumerate() {
                let d = invariants[i];
                let v = conj.get(i, j);
                img.set(r, c, if d == 0 { v } else { v.rem_euclid(d) });
            }
        }
        let id_mod = (0..keep.len()).all(|r| {
            (0..keep.len()).all(|c| {
                let d = invariants[keep[r]];
                let want = i64::from(r == c);
                let want = if d == 0 { want } else { want.rem_euclid(d) };
                img.get(r, c) == want
            })
        });
        trivial &= id_mod;
        images.push(img);
    }
    Ok(QuotientAction {
        invariants,
        generator_images: images,
        trivial,
    })
}

#[cfg(test)]
mod tests;
