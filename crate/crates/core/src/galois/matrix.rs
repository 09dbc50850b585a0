//! Dense row-major matrices and Gauss-Jordan elimination over any
//! [`FieldArith`].

use super::arith::FieldArith;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<E> {
    pub matrix: Matrix<E>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Affine solution set `particular + span(kernel rows)` of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace<E> {
    pub particular: Vec<E>,
    pub kernel: Matrix<E>,
}

impl<E: Copy> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(rows * cols, data.len(), "entry count must equal rows * cols");
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<E>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> E {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn take_rows(&self, n: usize) -> Matrix<E> {
        Matrix { rows: n, cols: self.cols, data: self.data[..n * self.cols].to_vec() }
    }

    pub fn transpose(&self) -> Matrix<E> {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }
}

impl<E: Copy> Matrix<E> {
    pub fn zeros<F: FieldArith<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: FieldArith<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn mul<F: FieldArith<Elem = E>>(&self, f: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec<F: FieldArith<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        self.row_iter().map(|row| row.iter().zip(v).fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }

    pub fn add<F: FieldArith<Elem = E>>(&self, f: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero<F: FieldArith<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|&x| f.is_zero(x))
    }

    /// Gauss-Jordan elimination. Zero rows trail and pivots strictly increase.
    pub fn rref<F: FieldArith<Elem = E>>(&self, f: &F) -> Echelon<E> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if f.is_zero(factor) {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, rank: row, pivots }
    }

    pub fn rank<F: FieldArith<Elem = E>>(&self, f: &F) -> usize {
        self.rref(f).rank
    }

    /// Basis of the right kernel `{v : self * v = 0}`. Free variables are set
    /// to unit vectors in increasing column order.
    pub fn kernel_basis<F: FieldArith<Elem = E>>(&self, f: &F) -> Matrix<E> {
        let ech = self.rref(f);
        kernel_from_echelon(f, &ech, self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

fn kernel_from_echelon<F: FieldArith>(f: &F, ech: &Echelon<F::Elem>, cols: usize) -> Matrix<F::Elem> {
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &p) in ech.pivots.iter().enumerate() {
            v[p] = f.neg(ech.matrix.get(r, free));
        }
        out.push(v);
    }
    Matrix::from_rows(cols, &out)
}

/// Solves `a * x = b`. Returns `None` when the system is inconsistent.
pub fn solve_affine<F: FieldArith>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<AffineSpace<F::Elem>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut aug = Matrix::zeros(f, a.rows(), n + 1);
    for (r, &rhs) in b.iter().enumerate() {
        for c in 0..n {
            aug.set(r, c, a.get(r, c));
        }
        aug.set(r, n, rhs);
    }
    let ech = aug.rref(f);
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut particular = vec![f.zero(); n];
    for (r, &p) in ech.pivots.iter().enumerate() {
        particular[p] = ech.matrix.get(r, n);
    }
    let kernel = kernel_from_echelon(f, &ech, n);
    Some(AffineSpace { particular, kernel })
}
