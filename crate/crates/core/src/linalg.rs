//! Dense exact matrices and the handful of eliminations the rest of the
//! crate needs: rank, kernel, left kernel, particular solutions and basis
//! completion.

use alloc::vec::Vec;

use crate::field::Field;

/// A dense row-major matrix over `F`. Zero-row and zero-column shapes are
/// valid and common (maps out of or into the zero space).
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Clone for Matrix<F> {
    fn clone(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<F: Field> core::fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)).take(self.rows))
            .finish()
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&v| field.integer(v)).collect(),
        }
    }

    /// A single column vector.
    pub fn column_vector(data: Vec<F::Elem>) -> Self {
        let rows = data.len();
        Matrix {
            rows,
            cols: 1,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, field: &F, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, field: &F, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, field: &F, s: &F::Elem) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| field.mul(a, s)).collect(),
        }
    }

    pub fn neg(&self, field: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| field.neg(a)).collect(),
        }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Matrix {
            rows: self.rows,
            cols,
            data,
        }
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    /// Columns `c0..c0 + n`.
    pub fn columns(&self, c0: usize, n: usize) -> Self {
        let mut data = Vec::with_capacity(self.rows * n);
        for r in 0..self.rows {
            data.extend_from_slice(&self.row(r)[c0..c0 + n]);
        }
        Matrix {
            rows: self.rows,
            cols: n,
            data,
        }
    }

    /// Rows `r0..r0 + n`.
    pub fn row_block(&self, r0: usize, n: usize) -> Self {
        Matrix {
            rows: n,
            cols: self.cols,
            data: self.data[r0 * self.cols..(r0 + n) * self.cols].to_vec(),
        }
    }

    /// Selects the listed columns, in order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for r in 0..self.rows {
            for &c in idx {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }
}

/// Reduced row echelon form and the pivot columns.
pub fn rref<F: Field>(field: &F, m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !field.is_zero(a.get(r, col))) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = field.inv(a.get(row, col));
        if !field.is_one(&inv) {
            for c in col..a.cols {
                let idx = row * a.cols + c;
                a.data[idx] = field.mul(&a.data[idx], &inv);
            }
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for c in col..a.cols {
                let pv = &a.data[row * a.cols + c];
                if field.is_zero(pv) {
                    continue;
                }
                let delta = field.mul(&factor, pv);
                let idx = r * a.cols + c;
                a.data[idx] = field.sub(&a.data[idx], &delta);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F>) -> usize {
    rref(field, m).1.len()
}

/// Basis of `{x : m x = 0}` as the columns of a `cols × k` matrix.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F>) -> Matrix<F> {
    let (r, pivots) = rref(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zeros(field, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, field.one());
        for (i, &pc) in pivots.iter().enumerate() {
            let v = r.get(i, fc);
            if !field.is_zero(v) {
                out.set(pc, k, field.neg(v));
            }
        }
    }
    out
}

/// Basis of `{y : y m = 0}` as the rows of a `k × rows` matrix.
pub fn left_kernel<F: Field>(field: &F, m: &Matrix<F>) -> Matrix<F> {
    kernel(field, &m.transpose()).transpose()
}

/// A particular solution `x` of `a x = b`, or `None` when inconsistent.
pub fn solve<F: Field>(field: &F, a: &Matrix<F>, b: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(a.rows, b.rows, "solve shape mismatch");
    let aug = a.hstack(b);
    let (r, pivots) = rref(field, &aug);
    if pivots.iter().any(|&p| p >= a.cols) {
        return None;
    }
    let mut x = Matrix::zeros(field, a.cols, b.cols);
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, r.get(i, a.cols + j).clone());
        }
    }
    Some(x)
}

/// A maximal linearly independent subset of the columns of `m`.
pub fn column_basis<F: Field>(field: &F, m: &Matrix<F>) -> Matrix<F> {
    let (_, pivots) = rref(field, m);
    m.select_columns(&pivots)
}

/// Standard basis vectors completing the column span of `u` to the whole
/// ambient space, chosen greedily by index.
pub fn complement<F: Field>(field: &F, u: &Matrix<F>) -> Matrix<F> {
    let n = u.rows;
    let aug = u.hstack(&Matrix::identity(field, n));
    let (_, pivots) = rref(field, &aug);
    let picked: Vec<usize> = pivots
        .into_iter()
        .filter(|&p| p >= u.cols)
        .map(|p| p - u.cols)
        .collect();
    Matrix::identity(field, n).select_columns(&picked)
}
