use std::fmt;

use super::scalar::{Scalar, Summand};

/// Dense matrix; `get(r, c)` is the component from source summand `c` to
/// target summand `r`.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Rows of equal length; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<S>>, cols: usize) -> Option<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| c.mul(x))
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn without(&self, row: Option<usize>, col: Option<usize>) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| Some(r) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| Some(c) != col).collect();
        self.select(&rows, &cols)
    }

    /// `[[a, b], [c, d]]` as one matrix.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        Self::from_fn(a.rows + c.rows, a.cols + b.cols, |r, col| {
            let m = match (r < a.rows, col < a.cols) {
                (true, true) => return a.get(r, col).clone(),
                (true, false) => b.get(r, col - a.cols),
                (false, true) => c.get(r - a.rows, col),
                (false, false) => d.get(r - a.rows, col - a.cols),
            };
            m.clone()
        })
    }

    /// Inverse by Gauss-Jordan, pivoting only on entries that are
    /// isomorphisms between the corresponding summands. A `None` for a
    /// matrix invertible by other means is possible over non-fields.
    pub fn inverse(&self, source: &[Summand], target: &[Summand]) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        // row r of `a` stays attached to target summand `labels[r]`
        let mut labels: Vec<usize> = (0..n).collect();
        for c in 0..n {
            let p = (c..n).find(|&r| a.get(r, c).is_iso(&source[c], &target[labels[r]]))?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            labels.swap(c, p);
            let pinv = a.get(c, c).inverse()?;
            a.scale_row(c, &pinv);
            inv.scale_row(c, &pinv);
            for r in 0..n {
                if r != c && !a.get(r, c).is_zero() {
                    let f = a.get(r, c).neg();
                    a.add_row_multiple(r, c, &f);
                    inv.add_row_multiple(r, c, &f);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: &S) {
        for c in 0..self.cols {
            let v = f.mul(self.get(r, c));
            self.set(r, c, v);
        }
    }

    /// `row[r] += f * row[src]`.
    fn add_row_multiple(&mut self, r: usize, src: usize, f: &S) {
        for c in 0..self.cols {
            let v = self.get(r, c).add(&f.mul(self.get(src, c)));
            self.set(r, c, v);
        }
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]{}x{}", self.rows, self.cols)
    }
}
