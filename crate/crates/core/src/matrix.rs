//! Dense exact matrices and fraction-free elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::scalar::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn scalar(n: usize, value: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn diagonal(values: Vec<S>) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Self { rows: nrows, cols, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-S::one()))
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|x| x.clone() * factor.clone())
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a matrix: the nonzero rows, each with a
/// leading 1 in its pivot column and zeros elsewhere in pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<S>>,
}

impl<S: Field> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space: one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![S::zero(); self.cols];
                v[free] = S::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

/// Fraction-free (Bareiss) forward elimination followed by normalisation.
///
/// Rows are first scaled to integral entries; the Bareiss recurrence then
/// keeps every intermediate entry integral, with exact divisions by the
/// previous pivot. Pivots are chosen by largest [`Field::pivot_weight`].
pub fn row_echelon<S: Field>(rows: Vec<Vec<S>>, cols: usize) -> Echelon<S> {
    let mut a: Vec<Vec<S>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|mut r| {
            debug_assert_eq!(r.len(), cols);
            S::clear_denominators(&mut r);
            r
        })
        .collect();
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let best = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .max_by_key(|&i| (a[i][c].pivot_weight(), std::cmp::Reverse(i)));
        let Some(p) = best else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row.iter().skip(c).all(Zero::is_zero) {
                continue;
            }
            let factor = row[c].clone();
            for j in c + 1..cols {
                let lhs = pivot.clone() * row[j].clone();
                let value = if factor.is_zero() || pivot_row[j].is_zero() {
                    lhs
                } else {
                    lhs - factor.clone() * pivot_row[j].clone()
                };
                row[j] = if value.is_zero() { value } else { value / prev.clone() };
            }
            row[c] = S::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    // back substitution to reduced form
    for k in (0..r).rev() {
        let p = pivots[k];
        let inv = a[k][p].recip();
        for x in a[k].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = a[k].clone();
        for row in a.iter_mut().take(k) {
            let factor = row[p].clone();
            if factor.is_zero() {
                continue;
            }
            for j in p..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].clone() - factor.clone() * pivot_row[j].clone();
                }
            }
        }
    }
    Echelon { cols, pivots, rows: a }
}

impl<S: Field> Matrix<S> {
    pub fn echelon(&self) -> Echelon<S> {
        row_echelon(self.to_rows(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        self.echelon().kernel_basis()
    }

    /// A particular solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let augmented: Vec<Vec<S>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let ech = row_echelon(augmented, self.cols + 1);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n)
                .filter(|&i| !a[i][c].is_zero())
                .max_by_key(|&i| (a[i][c].pivot_weight(), std::cmp::Reverse(i)))
            else {
                return S::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det = det * pivot.clone();
            let inv = pivot.recip();
            for i in c + 1..n {
                let factor = a[i][c].clone() * inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    a[i][j] = a[i][j].clone() - factor.clone() * a[c][j].clone();
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let augmented: Vec<Vec<S>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
                r
            })
            .collect();
        let ech = row_echelon(augmented, 2 * n);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| ech.rows[i][n + j].clone()))
    }
}

/// Basis (as echelon rows) of the span of `vectors`, each of length `dim`.
pub fn span_basis<S: Field>(vectors: Vec<Vec<S>>, dim: usize) -> Vec<Vec<S>> {
    row_echelon(vectors, dim).rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as G;

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix<G> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| g(s)).collect()).collect())
    }

    #[test]
    fn identity_and_zero() {
        let id = Matrix::<G>::identity(3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
        let z = Matrix::<G>::zeros(2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 3);
        let empty = Matrix::<G>::zeros(0, 0);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn hermitian_rank_one() {
        // [[1, i], [-i, 1]]: second row is -i times the first
        let a = m(&[&["1", "i"], &["-i", "1"]]);
        assert_eq!(a.rank(), 1);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        // spanned by (-i, 1)
        assert_eq!(ker[0], vec![g("-i"), g("1")]);
        assert!(a.mul_vec(&ker[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&["2", "1", "0"], &["1/2", "i", "3"], &["0", "0", "1"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        let b = vec![g("1"), g("2"), g("3")];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let singular = m(&[&["1", "2"], &["2", "4"]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), G::zero());
        assert!(singular.solve(&[g("1"), g("0")]).is_none());
        assert_eq!(m(&[&["0", "1"], &["1", "0"]]).determinant(), g("-1"));
    }
}
