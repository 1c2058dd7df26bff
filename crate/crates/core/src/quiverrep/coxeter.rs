use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Vector};

use super::Quiver;

/// Cartan matrix over ℚ: column `i` is the dimension vector of the
/// projective at `i`, so entry `(v, i)` counts paths `i -> v`.
pub fn cartan_matrix(q: &Quiver) -> Result<Matrix> {
    q.validate()?;
    let n = q.vertex_count();
    let mut c = Matrix::zeros(Field::Rational, n, n);
    for v in 0..n {
        for i in 0..n {
            c.set(v, i, Field::Rational.int(q.path_count(i, v) as i64));
        }
    }
    Ok(c)
}

/// The Euler matrix `E_ij = δ_ij − #arrows i -> j`, with
/// `dim Hom(M, N) − dim Ext¹(M, N) = dim(M)ᵀ E dim(N)`.
pub fn euler_matrix(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.vertex_count();
    let mut e = vec![vec![0i64; n]; n];
    for (i, row) in e.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(s, t) in q.arrows() {
        e[s][t] -= 1;
    }
    e
}

pub fn euler_form(q: &Quiver, x: &[usize], y: &[usize]) -> i64 {
    let e = euler_matrix(q);
    let mut acc = 0;
    for (i, row) in e.iter().enumerate() {
        for (j, &eij) in row.iter().enumerate() {
            acc += x[i] as i64 * eij * y[j] as i64;
        }
    }
    acc
}

/// The Coxeter matrix `Φ = −Cᵀ C⁻¹`, acting on dimension vectors as the
/// AR translate does on non-projective indecomposables.
pub fn coxeter_matrix(q: &Quiver) -> Result<Matrix> {
    let c = cartan_matrix(q)?;
    let inv = c
        .inverse()
        .map_err(|_| Error::Internal("Cartan matrix is singular".into()))?;
    Ok(c.transpose().mul(&inv)?.neg())
}

/// `Φ · x` for an integer dimension vector; entries may be negative.
pub fn coxeter_apply(phi: &Matrix, x: &[usize]) -> Vec<i64> {
    let v = Vector::from_i64(phi.field(), &x.iter().map(|&d| d as i64).collect::<Vec<_>>());
    phi.mul_vec(&v)
        .expect("square matrix of matching size")
        .entries()
        .iter()
        .map(|s| s.to_i64().expect("integer entries"))
        .collect()
}
