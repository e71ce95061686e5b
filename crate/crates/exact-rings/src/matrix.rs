//! Dense row-major matrices over any coefficient field.

use std::fmt;

use crate::field::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Scalar> Matrix<E> {
    /// A `rows x cols` matrix with every entry equal to `fill`.
    pub fn filled(rows: usize, cols: usize, fill: E) -> Self {
        Matrix { rows, cols, data: vec![fill; rows * cols] }
    }

    /// The identity matrix, with `zero` and `one` taken from the target field.
    pub fn identity(n: usize, zero: &E, one: &E) -> Self {
        let mut m = Matrix::filled(n, n, zero.clone());
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at the 0-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn zero_entry(&self) -> E {
        self.data.first().expect("empty matrix").zero_like()
    }

    /// Matrix product, skipping zero entries on both sides.
    pub fn mul(&self, o: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let zero = self.zero_entry();
        let mut out = Matrix::filled(self.rows, o.cols, zero.clone());
        // Nonzero positions of each row of `o`.
        let nz: Vec<Vec<usize>> =
            (0..o.rows).map(|k| (0..o.cols).filter(|&j| !o.get(k, j).is_zero()).collect()).collect();
        for i in 0..self.rows {
            let mut acc: Vec<Option<E>> = vec![None; o.cols];
            for (k, cols) in nz.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in cols {
                    let t = a.mul(o.get(k, j));
                    acc[j] = Some(match acc[j].take() {
                        Some(s) => s.add(&t),
                        None => t,
                    });
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                if let Some(v) = v {
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let zero = self.zero_entry();
        (0..self.rows)
            .map(|i| {
                let mut s = zero.clone();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s = s.add(&a.mul(b));
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix<E>) -> Matrix<E> {
        self.zip_with(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Matrix<E>) -> Matrix<E> {
        self.zip_with(o, |a, b| a.sub(b))
    }

    fn zip_with(&self, o: &Matrix<E>, f: impl Fn(&E, &E) -> E) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &E) -> Matrix<E> {
        self.map(|a| if a.is_zero() { a.clone() } else { a.mul(c) })
    }

    pub fn map<F: Scalar>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Fallible entrywise map.
    pub fn try_map<F: Scalar, Err>(&self, f: impl Fn(&E) -> Result<F, Err>) -> Result<Matrix<F>, Err> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Matrix<E> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Submatrix on the given 0-based row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<E> {
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    /// Indices of rows with at least one nonzero entry.
    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..self.rows).filter(|&i| self.row(i).iter().any(|e| !e.is_zero())).collect()
    }

    /// Entries as canonical strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(Scalar::canonical).collect()).collect()
    }
}

impl<E: Scalar> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Scalar::canonical).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
