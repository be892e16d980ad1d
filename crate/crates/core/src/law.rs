//! Lie algebra laws stored as structure constants.
//!
//! A law on `K^n` is the tensor `C^k_{ij}` with `mu(e_i, e_j) = sum_k
//! C^k_{ij} e_k`. Only pairs `i < j` are stored, so antisymmetry cannot be
//! violated. Indices are zero-based throughout the library.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{span_basis, Matrix};
use crate::scalar::{Field, Ring};
use crate::tuples::combinations;

/// Position of the pair `i < j` in the stored list of pairs.
pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone)]
pub struct StructureConstants<S> {
    dim: usize,
    data: Vec<S>,
    jacobi_verified: bool,
}

impl<S: PartialEq> PartialEq for StructureConstants<S> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.data == other.data
    }
}

impl<S: Eq> Eq for StructureConstants<S> {}

impl<S: fmt::Debug + Zero> fmt::Debug for StructureConstants<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Law(dim {}", self.dim)?;
        let n = self.dim;
        for (p, pair) in combinations(n, 2).iter().enumerate() {
            for k in 0..n {
                let c = &self.data[p * n + k];
                if !c.is_zero() {
                    write!(f, "; [e{},e{}] e{}: {:?}", pair[0] + 1, pair[1] + 1, k + 1, c)?;
                }
            }
        }
        write!(f, ")")
    }
}

impl<S: Ring> StructureConstants<S> {
    /// The abelian law on `K^dim`.
    pub fn zero(dim: usize) -> Self {
        Self { dim, data: vec![S::zero(); pair_count(dim) * dim], jacobi_verified: true }
    }

    /// Builds a law from entries `(i, j, k, C^k_{ij})`; entries with `i > j`
    /// are stored with the opposite sign and repeated entries are summed.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, S)>,
    ) -> Result<Self> {
        let mut law = Self::zero(dim);
        law.jacobi_verified = false;
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, limit: dim });
                }
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::NotAlternating);
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
            let slot = pair_index(dim, a, b) * dim + k;
            law.data[slot] = law.data[slot].clone() + c;
        }
        Ok(law)
    }

    /// Coordinates in the stored layout: pair-major, output component minor.
    pub fn from_coordinates(dim: usize, data: Vec<S>) -> Result<Self> {
        let expected = pair_count(dim) * dim;
        if data.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: data.len() });
        }
        Ok(Self { dim, data, jacobi_verified: false })
    }

    pub fn coordinates(&self) -> &[S] {
        &self.data
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn jacobi_verified(&self) -> bool {
        self.jacobi_verified
    }

    /// `C^k_{ij}` for any ordered pair.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> S {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.data[pair_index(self.dim, i, j) * self.dim + k].clone(),
            Ordering::Greater => -self.data[pair_index(self.dim, j, i) * self.dim + k].clone(),
            Ordering::Equal => S::zero(),
        }
    }

    /// `mu(e_i, e_j)` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        (0..self.dim).map(|k| self.coefficient(i, j, k)).collect()
    }

    pub(crate) fn stored_bracket(&self, pair: usize) -> &[S] {
        &self.data[pair * self.dim..(pair + 1) * self.dim]
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                let w = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
                if w.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(self.stored_bracket(pair_index(n, i, j))) {
                    if !c.is_zero() {
                        *o = o.clone() + w.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<T: Ring>(&self, f: impl FnMut(&S) -> T) -> StructureConstants<T> {
        StructureConstants {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
            jacobi_verified: false,
        }
    }

    /// `sum_cyc mu(mu(e_i, e_j), e_k)` for one triple.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for l in 0..n {
                let x = self.coefficient(a, b, l);
                if x.is_zero() {
                    continue;
                }
                for (s, o) in out.iter_mut().enumerate() {
                    let y = self.coefficient(l, c, s);
                    if !y.is_zero() {
                        *o = o.clone() + x.clone() * y;
                    }
                }
            }
        }
        out
    }

    /// Evaluates the Jacobi identity on every triple `i < j < k`.
    pub fn validate_law(&self) -> ValidationReport<S> {
        let mut violations = Vec::new();
        for t in combinations(self.dim, 3) {
            let residual = self.jacobi_residual(t[0], t[1], t[2]);
            for (s, r) in residual.into_iter().enumerate() {
                if !r.is_zero() {
                    violations.push(JacobiViolation { triple: (t[0], t[1], t[2]), component: s, residual: r });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Validates and marks the law as verified.
    pub fn into_verified(mut self) -> Result<Self> {
        if self.jacobi_verified || self.validate_law().is_valid() {
            self.jacobi_verified = true;
            Ok(self)
        } else {
            Err(Error::NotALieLaw)
        }
    }

    /// Block law on `K^{n1 + n2}` with zero cross brackets.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let slot = pair_index(n, i, j) * n;
                if j < n1 {
                    let src = self.stored_bracket(pair_index(n1, i, j));
                    out.data[slot..slot + n1].clone_from_slice(src);
                } else if i >= n1 {
                    let src = other.stored_bracket(pair_index(n2, i - n1, j - n1));
                    out.data[slot + n1..slot + n].clone_from_slice(src);
                }
            }
        }
        out.jacobi_verified = self.jacobi_verified && other.jacobi_verified;
        out
    }

    /// Matrix of `ad X = mu(X, .)`; column `j` is `mu(X, e_j)`.
    pub fn adjoint(&self, x: &[S]) -> Matrix<S> {
        let n = self.dim;
        let columns: Vec<Vec<S>> = (0..n)
            .map(|j| {
                let mut e = vec![S::zero(); n];
                e[j] = S::one();
                self.bracket(x, &e)
            })
            .collect();
        Matrix::from_columns(n, &columns)
    }

    /// Checks `f mu(e_i, e_j) = mu(f e_i, e_j) + mu(e_i, f e_j)` on all pairs.
    pub fn is_derivation(&self, f: &Matrix<S>) -> bool {
        let n = self.dim;
        if f.rows() != n || f.cols() != n {
            return false;
        }
        let cols: Vec<Vec<S>> = (0..n).map(|j| f.column(j)).collect();
        let basis = identity_vectors::<S>(n);
        for i in 0..n {
            for j in i + 1..n {
                let lhs = f.mul_vec(&self.bracket_basis(i, j));
                let a = self.bracket(&cols[i], &basis[j]);
                let b = self.bracket(&basis[i], &cols[j]);
                let rhs: Vec<S> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Semidirect extension `g + K e_{n}` with `mu'(X, e_n) = f(X)`.
    pub fn solvable_extension(&self, f: &Matrix<S>) -> Result<Self> {
        if !self.is_derivation(f) {
            return Err(Error::NotADerivation);
        }
        let n = self.dim;
        let m = n + 1;
        let mut out = Self::zero(m);
        for i in 0..n {
            for j in i + 1..n {
                let slot = pair_index(m, i, j) * m;
                out.data[slot..slot + n].clone_from_slice(self.stored_bracket(pair_index(n, i, j)));
            }
            let slot = pair_index(m, i, n) * m;
            for k in 0..n {
                out.data[slot + k] = f[(k, i)].clone();
            }
        }
        out.jacobi_verified = self.jacobi_verified;
        Ok(out)
    }
}

pub(crate) fn identity_vectors<S: Ring>(n: usize) -> Vec<Vec<S>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

/// One violated scalar Jacobi equation: component `component` of the
/// cyclic sum over `triple`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiViolation<S> {
    pub triple: (usize, usize, usize),
    pub component: usize,
    pub residual: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport<S> {
    pub violations: Vec<JacobiViolation<S>>,
}

impl<S> ValidationReport<S> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An invertible change of basis; column `j` of the matrix is `f(e_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisChange<S> {
    matrix: Matrix<S>,
    inverse: Matrix<S>,
}

impl<S: Field> BasisChange<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        let inverse = matrix.inverse().ok_or(Error::SingularMatrix)?;
        Ok(Self { matrix, inverse })
    }

    /// Uses a known inverse; the caller guarantees `matrix * inverse = 1`.
    pub(crate) fn with_inverse(matrix: Matrix<S>, inverse: Matrix<S>) -> Self {
        debug_assert_eq!(matrix.mul(&inverse), Matrix::identity(matrix.rows()));
        Self { matrix, inverse }
    }

    pub fn identity(n: usize) -> Self {
        Self { matrix: Matrix::identity(n), inverse: Matrix::identity(n) }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix<S> {
        &self.inverse
    }

    pub fn inverted(&self) -> Self {
        Self { matrix: self.inverse.clone(), inverse: self.matrix.clone() }
    }

    /// `self` followed by `other` as maps: `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.mul(&other.matrix),
            inverse: other.inverse.mul(&self.inverse),
        }
    }
}

impl<S: Field> StructureConstants<S> {
    /// `(f* mu)(X, Y) = f^{-1} mu(f X, f Y)`.
    pub fn apply_basis_change(&self, f: &BasisChange<S>) -> Result<Self> {
        let n = self.dim;
        if f.matrix.rows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.matrix.rows() });
        }
        let cols: Vec<Vec<S>> = (0..n).map(|j| f.matrix.column(j)).collect();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let image = f.inverse.mul_vec(&self.bracket(&cols[i], &cols[j]));
                let slot = pair_index(n, i, j) * n;
                out.data[slot..slot + n].clone_from_slice(&image);
            }
        }
        out.jacobi_verified = self.jacobi_verified;
        Ok(out)
    }

    pub fn lower_central_series(&self) -> SeriesProfile {
        let n = self.dim;
        let basis = identity_vectors::<S>(n);
        let mut current = basis.clone();
        let mut dims = vec![n];
        while let Some(&last) = dims.last() {
            if last == 0 {
                break;
            }
            let images: Vec<Vec<S>> = current
                .iter()
                .flat_map(|x| basis.iter().map(move |e| self.bracket(x, e)))
                .collect();
            current = span_basis(images, n);
            dims.push(current.len());
            if current.len() == last {
                break;
            }
        }
        SeriesProfile { kind: SeriesKind::LowerCentral, dims }
    }

    pub fn derived_series(&self) -> SeriesProfile {
        let n = self.dim;
        let mut current = identity_vectors::<S>(n);
        let mut dims = vec![n];
        while let Some(&last) = dims.last() {
            if last == 0 {
                break;
            }
            let mut images = Vec::new();
            for a in 0..current.len() {
                for b in a + 1..current.len() {
                    images.push(self.bracket(&current[a], &current[b]));
                }
            }
            current = span_basis(images, n);
            dims.push(current.len());
            if current.len() == last {
                break;
            }
        }
        SeriesProfile { kind: SeriesKind::Derived, dims }
    }

    /// Both series are always computed so that reports can show them.
    pub fn classify_structure(&self) -> StructureClass {
        let lower = self.lower_central_series();
        let derived = self.derived_series();
        if self.is_abelian() {
            return StructureClass::Abelian;
        }
        if let Some(nilindex) = lower.terminal_index() {
            debug_assert!(nilindex < self.dim, "nilindex exceeds n - 1");
            return StructureClass::Nilpotent { nilindex, filiform: nilindex + 1 == self.dim };
        }
        if let Some(solvindex) = derived.terminal_index() {
            return StructureClass::Solvable { solvindex };
        }
        StructureClass::Neither
    }

    /// Basis of the center, the common kernel of all `ad e_j`.
    pub fn center(&self) -> Vec<Vec<S>> {
        let n = self.dim;
        let rows: Vec<Vec<S>> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.coefficient(i, j, k)).collect())
            .collect();
        let matrix = Matrix::from_rows(rows);
        if n == 0 {
            return Vec::new();
        }
        matrix.kernel_basis()
    }

    /// Basis of `Der(mu)`, solving the derivation identity on all pairs.
    pub fn derivations(&self) -> Vec<Matrix<S>> {
        let n = self.dim;
        if n == 0 {
            return Vec::new();
        }
        let var = |a: usize, b: usize| a * n + b;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut row = vec![S::zero(); n * n];
                    for a in 0..n {
                        let x = self.coefficient(a, j, k);
                        if !x.is_zero() {
                            row[var(a, i)] = row[var(a, i)].clone() + x;
                        }
                        let y = self.coefficient(i, a, k);
                        if !y.is_zero() {
                            row[var(a, j)] = row[var(a, j)].clone() + y;
                        }
                        let z = self.coefficient(i, j, a);
                        if !z.is_zero() {
                            row[var(k, a)] = row[var(k, a)].clone() - z;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        crate::matrix::row_echelon(rows, n * n)
            .kernel_basis()
            .into_iter()
            .map(|v| Matrix::from_fn(n, n, |a, b| v[var(a, b)].clone()))
            .collect()
    }

    /// Normal form of a two-dimensional law: abelian, or `r2` together with
    /// an explicit `f` such that `f* mu` is `[e1, e2] = e2`.
    pub fn normalize_2dim(&self) -> Result<TwoDimNormalForm<S>> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: self.dim });
        }
        let a = self.coefficient(0, 1, 0);
        let b = self.coefficient(0, 1, 1);
        if a.is_zero() && b.is_zero() {
            return Ok(TwoDimNormalForm::Abelian);
        }
        let (swap, a, b) = if b.is_zero() {
            // after exchanging e1 and e2 the bracket is -a e2
            (true, S::zero(), -a)
        } else {
            (false, a, b)
        };
        let inv_b = b.recip();
        let recipe = Matrix::from_rows(vec![
            vec![inv_b.clone(), a * inv_b],
            vec![S::zero(), S::one()],
        ]);
        let matrix = if swap {
            let p = Matrix::from_rows(vec![vec![S::zero(), S::one()], vec![S::one(), S::zero()]]);
            p.mul(&recipe)
        } else {
            recipe
        };
        Ok(TwoDimNormalForm::R2 { witness: BasisChange::new(matrix)? })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Dimensions of successive terms of a series, starting with `n`; the list
/// ends at the first zero or the first repeated value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesProfile {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
}

impl SeriesProfile {
    /// Smallest `k` with a zero `k`-th term, if the series reaches zero.
    pub fn terminal_index(&self) -> Option<usize> {
        (self.dims.last() == Some(&0)).then(|| self.dims.len() - 1)
    }

    /// The `k`-th term's dimension, continuing the stationary tail.
    pub fn dim_at(&self, k: usize) -> usize {
        self.dims.get(k).or(self.dims.last()).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClass {
    Abelian,
    Nilpotent { nilindex: usize, filiform: bool },
    Solvable { solvindex: usize },
    Neither,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TwoDimNormalForm<S> {
    Abelian,
    R2 { witness: BasisChange<S> },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as G;

    fn g(v: i64) -> G {
        G::from_integer(v)
    }

    fn law(n: usize, entries: &[(usize, usize, usize, i64)]) -> StructureConstants<G> {
        StructureConstants::from_entries(n, entries.iter().map(|&(i, j, k, c)| (i, j, k, g(c)))).unwrap()
    }

    fn sl2() -> StructureConstants<G> {
        law(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
    }

    fn h1() -> StructureConstants<G> {
        law(3, &[(0, 1, 2, 1)])
    }

    fn r2() -> StructureConstants<G> {
        law(2, &[(0, 1, 1, 1)])
    }

    #[test]
    fn antisymmetry_by_construction() {
        let l = law(3, &[(2, 0, 1, 5)]);
        assert_eq!(l.coefficient(0, 2, 1), g(-5));
        assert_eq!(l.coefficient(2, 0, 1), g(5));
        assert_eq!(l.coefficient(1, 1, 1), g(0));
        assert!(matches!(
            StructureConstants::<G>::from_entries(3, [(0, 4, 0, g(1))]),
            Err(Error::IndexOutOfRange { index: 4, limit: 3 })
        ));
    }

    #[test]
    fn jacobi_validation() {
        assert!(StructureConstants::<G>::zero(3).validate_law().is_valid());
        assert!(sl2().validate_law().is_valid());
        let broken = law(3, &[(0, 1, 2, 1), (0, 2, 2, 1), (1, 2, 0, 1)]);
        let report = broken.validate_law();
        // mu(mu(e3, e1), e2) = mu(-e3, e2) = e1; the other two terms vanish
        assert_eq!(report.violations, vec![JacobiViolation { triple: (0, 1, 2), component: 0, residual: g(1) }]);
        assert_eq!(broken.into_verified(), Err(Error::NotALieLaw));
    }

    #[test]
    fn basis_change_examples() {
        let s = sl2();
        assert_eq!(s.apply_basis_change(&BasisChange::identity(3)).unwrap(), s);
        let doubled = BasisChange::new(Matrix::scalar(3, g(2))).unwrap();
        let halved = law(3, &[(0, 1, 1, 4), (0, 2, 2, -4), (1, 2, 0, 2)]);
        assert_eq!(s.apply_basis_change(&doubled).unwrap(), halved);
        assert_eq!(
            BasisChange::new(Matrix::<G>::zeros(2, 2)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn direct_sums() {
        let a = StructureConstants::<G>::zero(1);
        assert_eq!(a.direct_sum(&a), StructureConstants::zero(2));
        let double = r2().direct_sum(&r2());
        assert_eq!(double, law(4, &[(0, 1, 1, 1), (2, 3, 3, 1)]));
        assert!(double.validate_law().is_valid());
    }

    #[test]
    fn series_examples() {
        assert_eq!(h1().lower_central_series().dims, vec![3, 1, 0]);
        assert_eq!(r2().derived_series().dims, vec![2, 1, 0]);
        assert_eq!(sl2().lower_central_series().dims, vec![3, 3]);
        assert_eq!(h1().classify_structure(), StructureClass::Nilpotent { nilindex: 2, filiform: true });
        let fil = law(4, &[(0, 1, 2, 1), (0, 2, 3, 1)]);
        assert_eq!(fil.classify_structure(), StructureClass::Nilpotent { nilindex: 3, filiform: true });
        assert_eq!(sl2().classify_structure(), StructureClass::Neither);
        assert_eq!(r2().classify_structure(), StructureClass::Solvable { solvindex: 2 });
        assert_eq!(StructureConstants::<G>::zero(2).classify_structure(), StructureClass::Abelian);
    }

    #[test]
    fn centers_and_derivations() {
        assert_eq!(StructureConstants::<G>::zero(3).center().len(), 3);
        let c = h1().center();
        assert_eq!(c, vec![vec![g(0), g(0), g(1)]]);
        assert!(sl2().center().is_empty());
        assert_eq!(StructureConstants::<G>::zero(2).derivations().len(), 4);
        assert_eq!(r2().derivations().len(), 2);
        let ders = sl2().derivations();
        assert_eq!(ders.len(), 3);
        assert!(ders.iter().all(|d| sl2().is_derivation(d)));
    }

    #[test]
    fn adjoint_and_extension() {
        let ad = h1().adjoint(&[g(1), g(0), g(0)]);
        let mut expected = Matrix::zeros(3, 3);
        expected[(2, 1)] = g(1);
        assert_eq!(ad, expected);
        let r = StructureConstants::<G>::zero(1).solvable_extension(&Matrix::identity(1)).unwrap();
        // [e1, e2] = e1, which is r2 after exchanging the basis vectors
        assert_eq!(r, law(2, &[(0, 1, 0, 1)]));
        let ext = h1().solvable_extension(&Matrix::diagonal(vec![g(1), g(1), g(2)])).unwrap();
        assert!(ext.validate_law().is_valid());
        assert!(matches!(ext.classify_structure(), StructureClass::Solvable { .. }));
        assert_eq!(
            h1().solvable_extension(&Matrix::diagonal(vec![g(1), g(0), g(0)])),
            Err(Error::NotADerivation)
        );
    }

    #[test]
    fn two_dimensional_normal_form() {
        assert_eq!(StructureConstants::<G>::zero(2).normalize_2dim().unwrap(), TwoDimNormalForm::Abelian);
        for (a, b) in [(3, 2), (1, 0), (0, -4)] {
            let mu = law(2, &[(0, 1, 0, a), (0, 1, 1, b)]);
            let TwoDimNormalForm::R2 { witness } = mu.normalize_2dim().unwrap() else {
                panic!("expected r2");
            };
            assert_eq!(mu.apply_basis_change(&witness).unwrap(), r2());
        }
    }
}
