use std::fmt;

use serde::{Serialize, Serializer};

/// A dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == i64::from(r == c)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn zip(&self, rhs: &IntMatrix, f: impl Fn(i64, i64) -> i64) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    out.data[r * rhs.cols + c] += a * rhs.get(k, c);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = self.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        let d = if n == 0 { 1 } else { sign * a[n - 1][n - 1] };
        i64::try_from(d).expect("determinant fits in i64")
    }

    /// `U · self · V = D` with `D` diagonal and `U`, `V` unimodular, by
    /// elementary integer row and column operations.
    pub fn diagonalize(&self) -> DiagonalForm {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut u_inv = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        for t in 0..m.min(n) {
            loop {
                // smallest nonzero entry of the remaining block becomes the pivot
                let pivot = (t..m)
                    .flat_map(|r| (t..n).map(move |c| (r, c)))
                    .filter(|&(r, c)| d.get(r, c) != 0)
                    .min_by_key(|&(r, c)| d.get(r, c).abs());
                let Some((pr, pc)) = pivot else {
                    return DiagonalForm {
                        left: u,
                        left_inv: u_inv,
                        diagonal: d,
                        right: v,
                    };
                };
                d.swap_rows(t, pr);
                u.swap_rows(t, pr);
                u_inv.swap_cols(t, pr);
                d.swap_cols(t, pc);
                v.swap_cols(t, pc);
                let p = d.get(t, t);
                let mut clean = true;
                for r in (t + 1)..m {
                    let q = d.get(r, t).div_euclid(p);
                    if q != 0 {
                        d.add_row(r, t, -q);
                        u.add_row(r, t, -q);
                        u_inv.add_col(t, r, q);
                    }
                    clean &= d.get(r, t) == 0;
                }
                for c in (t + 1)..n {
                    let q = d.get(t, c).div_euclid(p);
                    if q != 0 {
                        d.add_col(c, t, -q);
                        v.add_col(c, t, -q);
                    }
                    clean &= d.get(t, c) == 0;
                }
                if clean {
                    break;
                }
            }
        }
        DiagonalForm {
            left: u,
            left_inv: u_inv,
            diagonal: d,
            right: v,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    // row[dst] += k·row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + k * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    // col[dst] += k·col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        for r in 0..self.rows {
            let v = self.get(r, dst) + k * self.get(r, src);
            self.set(r, dst, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// The result of [`IntMatrix::diagonalize`].
#[derive(Debug, Clone)]
pub struct DiagonalForm {
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
}

impl DiagonalForm {
    /// Whether `x` lies in the column span of the original matrix over ℤ.
    pub fn in_image(&self, x: &[i64]) -> bool {
        let y = self.left.mul_vec(x);
        let k = self.diagonal.rows().min(self.diagonal.cols());
        y.iter().enumerate().all(|(i, &yi)| {
            let d = if i < k { self.diagonal.get(i, i) } else { 0 };
            if d == 0 {
                yi == 0
            } else {
                yi % d == 0
            }
        })
    }
}
