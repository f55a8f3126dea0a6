//! Dense matrices over a finite field: reduced row echelon form, rank,
//! determinant and null space.

use crate::field::{FieldDesc, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldDesc,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: &FieldDesc, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub(crate) fn from_fn(
        field: &FieldDesc,
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> u32,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = entry(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.field.elem_unchecked(self.at(i, j))
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns and
    /// the determinant factor `(-1)^swaps * prod(pivots)` accumulated on the
    /// way (only meaningful for square matrices).
    fn reduce(&mut self) -> (Vec<usize>, u32) {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut factor = 1u32;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else {
                continue;
            };
            if pr != r {
                self.swap_rows(pr, r);
                factor = f.neg_raw(factor);
            }
            let pv = self.at(r, c);
            factor = f.mul_raw(factor, pv);
            let inv = f.inv_raw(pv).expect("pivot is nonzero");
            for j in 0..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = f.mul_raw(self.data[idx], inv);
            }
            for i in 0..self.rows {
                let m = self.at(i, c);
                if i == r || m == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let sub = f.mul_raw(m, self.at(r, j));
                    let idx = i * self.cols + j;
                    self.data[idx] = f.sub_raw(self.data[idx], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, factor)
    }

    /// Reduced row echelon form (pivots leftmost, pivot entries 1) and the
    /// pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let (pivots, _) = m.reduce();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> FieldElem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let (pivots, factor) = m.reduce();
        if pivots.len() < self.rows {
            self.field.zero()
        } else {
            self.field.elem_unchecked(factor)
        }
    }

    /// Basis of `{x : M x = 0}`, itself in reduced row echelon form so the
    /// output is canonical.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let basis = Matrix::from_fn(f, free.len(), self.cols, |b, j| {
            let fc = free[b];
            if j == fc {
                1
            } else if let Some(pi) = pivots.iter().position(|&pc| pc == j) {
                f.neg_raw(r.at(pi, fc))
            } else {
                0
            }
        });
        let (reduced, _) = basis.rref();
        (0..reduced.rows).map(|i| reduced.row(i).to_vec()).collect()
    }
}
