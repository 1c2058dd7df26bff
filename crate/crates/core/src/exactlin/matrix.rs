use std::fmt;

use super::{Field, LinalgError, Result, Scalar};

/// A dense row-major matrix over a single field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// A column vector over a single field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(LinalgError::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, values: &[i64]) -> Matrix {
        assert_eq!(values.len(), rows * cols, "wrong number of values");
        Matrix {
            field,
            rows,
            cols,
            entries: values.iter().map(|&v| field.int(v)).collect(),
        }
    }

    /// Build from nested rows of integers. All rows must have equal length.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let flat: Vec<i64> = rows
            .iter()
            .inspect(|row| assert_eq!(row.len(), c, "ragged rows"))
            .flatten()
            .copied()
            .collect();
        Matrix::from_i64(field, r, c, &flat)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, v) in columns.iter().enumerate() {
            if v.len() != rows {
                return Err(LinalgError::DimensionMismatch(format!(
                    "column of length {} in a matrix with {rows} rows",
                    v.len()
                )));
            }
            if v.field() != field {
                return Err(LinalgError::FieldMismatch(field, v.field()));
            }
            for i in 0..rows {
                m.set(i, j, v[i].clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector {
            field: self.field,
            entries: (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        }
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.field != v.field {
            return Err(LinalgError::FieldMismatch(self.field, v.field));
        }
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() && !v[k].is_zero() {
                        acc = &acc + &(a * &v[k]);
                    }
                }
                acc
            })
            .collect();
        Ok(Vector {
            field: self.field,
            entries,
        })
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{:?} vs {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(LinalgError::DimensionMismatch("hstack row counts".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, rhs);
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch("vstack column counts".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(row, c);
                    if sub.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &sub;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().pivots.len()
    }

    /// A basis of the right null space. The basis vector attached to the
    /// `j`-th free column has a 1 there and 0 at every other free column, so
    /// coordinates of a null vector can be read off at the free columns
    /// (see [`Matrix::free_columns`]).
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let rref = self.rref();
        let free = free_columns(self.cols, &rref.pivots);
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix.get(i, f);
                }
                Vector {
                    field: self.field,
                    entries: v,
                }
            })
            .collect()
    }

    /// Columns without a pivot in the reduced row echelon form, in order.
    pub fn free_columns(&self) -> Vec<usize> {
        free_columns(self.cols, &self.rref().pivots)
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        if b.field != self.field {
            return Err(LinalgError::FieldMismatch(self.field, b.field));
        }
        let rhs = Matrix {
            field: self.field,
            rows: self.rows,
            cols: 1,
            entries: b.entries.clone(),
        };
        let rref = self.hstack(&rhs)?.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in rref.pivots.iter().enumerate() {
            x[p] = rref.matrix.get(i, self.cols).clone();
        }
        Ok(Some(Vector {
            field: self.field,
            entries: x,
        }))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let rref = self.hstack(&Matrix::identity(self.field, n))?.rref();
        if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        Ok(rref.matrix.submatrix(0, n, n, n))
    }

    /// Indices of a maximal linearly independent subset of the columns,
    /// chosen greedily left to right.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Vector {
    pub fn new(field: Field, entries: Vec<Scalar>) -> Result<Vector> {
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(LinalgError::FieldMismatch(field, bad.field()));
        }
        Ok(Vector { field, entries })
    }

    pub fn zeros(field: Field, len: usize) -> Vector {
        Vector {
            field,
            entries: vec![field.zero(); len],
        }
    }

    pub fn from_i64(field: Field, values: &[i64]) -> Vector {
        Vector {
            field,
            entries: values.iter().map(|&v| field.int(v)).collect(),
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(field: Field, len: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, len);
        v.entries[i] = field.one();
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn add(&self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len());
        Vector {
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len());
        Vector {
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Entries at the given positions.
    pub fn select(&self, positions: &[usize]) -> Vector {
        Vector {
            field: self.field,
            entries: positions.iter().map(|&p| self.entries[p].clone()).collect(),
        }
    }

    pub fn concat(parts: &[Vector], field: Field) -> Vector {
        Vector {
            field,
            entries: parts.iter().flat_map(|p| p.entries.iter().cloned()).collect(),
        }
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 3).rank(), 3);
        assert_eq!(Matrix::zeros(Q, 2, 5).rank(), 0);
        assert_eq!(Matrix::from_rows(Q, &[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Q, 2).kernel_basis().is_empty());
        let k = Matrix::from_rows(Q, &[vec![1, -1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], Vector::from_i64(Q, &[1, 1]));
    }

    #[test]
    fn kernel_of_rank_three_4x6() {
        // rows 3 and 4 are combinations of rows 0..2
        let m = Matrix::from_rows(
            Q,
            &[
                vec![1, 2, 0, -1, 3, 1],
                vec![0, 1, 1, 2, -2, 0],
                vec![2, 0, -3, 1, 1, 4],
                vec![3, 3, -2, 2, 2, 5],
            ],
        );
        assert_eq!(m.rank(), 3);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_examples() {
        let b = Vector::from_i64(Q, &[4, -7]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(Q, 2, 2).solve(&b).unwrap(), None);
        let m = Matrix::from_rows(Q, &[vec![1, 1], vec![0, 1]]);
        let x = m.solve(&Vector::from_i64(Q, &[3, 2])).unwrap().unwrap();
        assert_eq!(x, Vector::from_i64(Q, &[1, 2]));
        assert!(m.solve(&Vector::from_i64(Q, &[1])).is_err());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let f7 = Field::prime(7).unwrap();
        let err = Matrix::new(Q, 1, 2, vec![Q.one(), f7.one()]).unwrap_err();
        assert!(matches!(err, LinalgError::FieldMismatch(..)));
        let a = Matrix::identity(Q, 2);
        let b = Matrix::identity(f7, 2);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(Q, &[vec![2, 1], vec![7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert!(Matrix::from_rows(Q, &[vec![1, 2], vec![2, 4]]).inverse().is_err());
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c))
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant((r, c, vals) in small_matrix()) {
            let m = Matrix::from_i64(Q, r, c, &vals);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity((r, c, vals) in small_matrix()) {
            let m = Matrix::from_i64(Q, r, c, &vals);
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), c);
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
        }

        #[test]
        fn solve_is_exact((r, c, vals) in small_matrix(), seed in proptest::collection::vec(-3i64..=3, 6)) {
            let m = Matrix::from_i64(Q, r, c, &vals);
            let x0 = Vector::from_i64(Q, &seed[..c]);
            let b = m.mul_vec(&x0).unwrap();
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        }

        // Small entries and a large prime: no pivot can degenerate mod p.
        #[test]
        fn rational_and_prime_ranks_agree((r, c, vals) in small_matrix()) {
            let fp = Field::prime(32003).unwrap();
            let mq = Matrix::from_i64(Q, r, c, &vals);
            let mp = Matrix::from_i64(fp, r, c, &vals);
            prop_assert_eq!(mq.rank(), mp.rank());
            prop_assert_eq!(mq.kernel_basis().len(), mp.kernel_basis().len());
        }
    }
}
