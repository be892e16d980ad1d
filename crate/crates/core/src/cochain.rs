//! Multilinear maps on `K^n` and the insertion products between them.
//!
//! A cochain of arity `a` (degree `a - 1`) is a multilinear map from `a`
//! copies of `K^n` to `K^n`. Alternating cochains are stored on strictly
//! increasing index tuples; general ones on every word of length `a`.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::law::StructureConstants;
use crate::matrix::Matrix;
use crate::scalar::{Field, Ring};
use crate::tuples::{binomial, combinations, rank_combination, rank_word, sort_with_sign, unrank_word};

#[derive(Debug, Clone)]
pub struct Cochain<S> {
    dim: usize,
    arity: usize,
    alternating: bool,
    values: Vec<S>,
}

fn tuple_count(dim: usize, arity: usize, alternating: bool) -> usize {
    if alternating {
        binomial(dim, arity)
    } else {
        dim.pow(arity as u32)
    }
}

impl<S: Ring> Cochain<S> {
    pub fn zero(dim: usize, arity: usize, alternating: bool) -> Self {
        let alternating = alternating || arity <= 1;
        Self { dim, arity, alternating, values: vec![S::zero(); tuple_count(dim, arity, alternating) * dim] }
    }

    /// `values` lists, tuple by tuple in lexicographic order, the `dim`
    /// coordinates of the image.
    pub fn from_values(dim: usize, arity: usize, alternating: bool, values: Vec<S>) -> Result<Self> {
        let alternating = alternating || arity <= 1;
        let expected = tuple_count(dim, arity, alternating) * dim;
        if values.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: values.len() });
        }
        Ok(Self { dim, arity, alternating, values })
    }

    /// A vector, seen as a cochain of degree -1.
    pub fn vector(v: Vec<S>) -> Self {
        Self { dim: v.len(), arity: 0, alternating: true, values: v }
    }

    /// An endomorphism; column `j` of the matrix is the image of `e_j`.
    pub fn endomorphism(m: &Matrix<S>) -> Self {
        let n = m.rows();
        assert!(m.is_square(), "endomorphisms are square");
        let values = (0..n).flat_map(|j| m.column(j)).collect();
        Self { dim: n, arity: 1, alternating: true, values }
    }

    pub fn identity(n: usize) -> Self {
        Self::endomorphism(&Matrix::identity(n))
    }

    /// The law as an alternating bilinear map.
    pub fn from_law(law: &StructureConstants<S>) -> Self {
        Self {
            dim: law.dim(),
            arity: 2,
            alternating: true,
            values: law.coordinates().to_vec(),
        }
    }

    pub fn to_law(&self) -> Result<StructureConstants<S>> {
        if self.arity != 2 {
            return Err(Error::DegreeOutOfRange(self.arity));
        }
        let alt = self.to_alternating()?;
        StructureConstants::from_coordinates(alt.dim, alt.values)
    }

    pub fn to_matrix(&self) -> Result<Matrix<S>> {
        if self.arity != 1 {
            return Err(Error::DegreeOutOfRange(self.arity));
        }
        let n = self.dim;
        Ok(Matrix::from_fn(n, n, |i, j| self.values[j * n + i].clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `arity - 1`; vectors have degree -1.
    pub fn degree(&self) -> isize {
        self.arity as isize - 1
    }

    pub fn is_alternating(&self) -> bool {
        self.alternating
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn slot(&self, tuple: &[usize]) -> Option<(usize, bool)> {
        if self.alternating {
            let mut sorted = tuple.to_vec();
            let sign = sort_with_sign(&mut sorted)?;
            Some((rank_combination(self.dim, &sorted), sign < 0))
        } else {
            Some((rank_word(self.dim, tuple), false))
        }
    }

    /// Value on a tuple of basis vectors.
    pub fn eval_basis(&self, tuple: &[usize]) -> Vec<S> {
        debug_assert_eq!(tuple.len(), self.arity);
        let n = self.dim;
        match self.slot(tuple) {
            None => vec![S::zero(); n],
            Some((r, negate)) => {
                let v = &self.values[r * n..(r + 1) * n];
                if negate {
                    v.iter().map(|x| -x.clone()).collect()
                } else {
                    v.to_vec()
                }
            }
        }
    }

    /// Single coordinate of the value on a tuple of basis vectors.
    pub fn component(&self, tuple: &[usize], k: usize) -> S {
        match self.slot(tuple) {
            None => S::zero(),
            Some((r, negate)) => {
                let v = self.values[r * self.dim + k].clone();
                if negate {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Value on arbitrary vectors, by multilinear expansion.
    pub fn eval(&self, args: &[&[S]]) -> Vec<S> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let mut out = vec![S::zero(); self.dim];
        let mut word = Vec::with_capacity(self.arity);
        self.eval_rec(args, &mut word, S::one(), &mut out);
        out
    }

    fn eval_rec(&self, args: &[&[S]], word: &mut Vec<usize>, weight: S, out: &mut [S]) {
        let depth = word.len();
        if depth == self.arity {
            for (o, v) in out.iter_mut().zip(self.eval_basis(word)) {
                if !v.is_zero() {
                    *o = o.clone() + weight.clone() * v;
                }
            }
            return;
        }
        for (i, c) in args[depth].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            word.push(i);
            self.eval_rec(args, word, weight.clone() * c.clone(), out);
            word.pop();
        }
    }

    /// The same map stored on all words.
    pub fn to_general(&self) -> Self {
        if !self.alternating || self.arity <= 1 {
            return self.clone();
        }
        let n = self.dim;
        let count = n.pow(self.arity as u32);
        let mut values = Vec::with_capacity(count * n);
        for r in 0..count {
            values.extend(self.eval_basis(&unrank_word(n, self.arity, r)));
        }
        Self { dim: n, arity: self.arity, alternating: false, values }
    }

    /// The same map stored on increasing tuples, if it is alternating.
    pub fn to_alternating(&self) -> Result<Self> {
        if self.alternating {
            return Ok(self.clone());
        }
        let n = self.dim;
        let mut out = Self::zero(n, self.arity, true);
        // alternating means: zero on repeated indices and sign-changing
        // under every transposition of adjacent arguments
        for r in 0..n.pow(self.arity as u32) {
            let word = unrank_word(n, self.arity, r);
            let value = self.eval_basis(&word);
            let mut sorted = word.clone();
            match sort_with_sign(&mut sorted) {
                None => {
                    if value.iter().any(|x| !x.is_zero()) {
                        return Err(Error::NotAlternating);
                    }
                }
                Some(sign) => {
                    let slot = rank_combination(n, &sorted) * n;
                    let stored = &mut out.values[slot..slot + n];
                    if word == sorted {
                        stored.clone_from_slice(&value);
                    } else {
                        let expected: Vec<S> = stored
                            .iter()
                            .map(|x| if sign < 0 { -x.clone() } else { x.clone() })
                            .collect();
                        // increasing words come first in lexicographic order
                        if expected != value {
                            return Err(Error::NotAlternating);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self { values: self.values.iter().map(|x| x.clone() * factor.clone()).collect(), ..self.clone() }
    }

    fn combine(self, rhs: Self, op: impl Fn(S, S) -> S) -> Self {
        assert_eq!((self.dim, self.arity), (rhs.dim, rhs.arity), "cochain shapes differ");
        let (a, b) = if self.alternating == rhs.alternating {
            (self, rhs)
        } else {
            (self.to_general(), rhs.to_general())
        };
        let values = a.values.into_iter().zip(b.values).map(|(x, y)| op(x, y)).collect();
        Self { values, ..a }
    }
}

impl<S: Ring> PartialEq for Cochain<S> {
    fn eq(&self, other: &Self) -> bool {
        if (self.dim, self.arity) != (other.dim, other.arity) {
            return false;
        }
        if self.alternating == other.alternating {
            self.values == other.values
        } else {
            self.to_general().values == other.to_general().values
        }
    }
}

impl<S: Ring> Add for Cochain<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, |x, y| x + y)
    }
}

impl<S: Ring> Sub for Cochain<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, |x, y| x - y)
    }
}

impl<S: Ring> Neg for Cochain<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { values: self.values.into_iter().map(|x| -x).collect(), ..self }
    }
}

fn check_dims<S>(a: &Cochain<S>, b: &Cochain<S>) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, found: b.dim });
    }
    Ok(())
}

/// Insertion of `psi` into argument `i` of `phi`:
/// `(phi o_i psi)(v_0, .., v_{p+q}) = phi(v_0, .., psi(v_i, .., v_{i+q}), .., v_{p+q})`.
pub fn comp_i<S: Ring>(phi: &Cochain<S>, i: usize, psi: &Cochain<S>) -> Result<Cochain<S>> {
    check_dims(phi, psi)?;
    if i >= phi.arity {
        return Err(Error::IndexOutOfRange { index: i, limit: phi.arity });
    }
    let n = phi.dim;
    let arity = phi.arity + psi.arity - 1;
    let mut out = Cochain::zero(n, arity, false);
    let mut inner = Vec::with_capacity(phi.arity);
    for r in 0..n.pow(arity as u32) {
        let word = unrank_word(n, arity, r);
        let w = psi.eval_basis(&word[i..i + psi.arity]);
        let target: &mut [S] = &mut out.values[r * n..(r + 1) * n];
        for (m, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            inner.clear();
            inner.extend_from_slice(&word[..i]);
            inner.push(m);
            inner.extend_from_slice(&word[i + psi.arity..]);
            for (t, v) in target.iter_mut().zip(phi.eval_basis(&inner)) {
                if !v.is_zero() {
                    *t = t.clone() + c.clone() * v;
                }
            }
        }
    }
    Ok(out)
}

/// `phi o psi = sum_i s_i phi o_i psi` with `s_i = (-1)^i` when the degree
/// of `psi` is odd and `s_i = 1` when it is even.
pub fn circle<S: Ring>(phi: &Cochain<S>, psi: &Cochain<S>) -> Result<Cochain<S>> {
    check_dims(phi, psi)?;
    if phi.arity + psi.arity == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    let odd = psi.arity.is_multiple_of(2);
    let mut acc = Cochain::zero(phi.dim, phi.arity + psi.arity - 1, false);
    for i in 0..phi.arity {
        let term = comp_i(phi, i, psi)?;
        acc = if odd && i % 2 == 1 { acc - term } else { acc + term };
    }
    Ok(acc)
}

fn require_alternating_bilinear<S: Ring>(c: &Cochain<S>) -> Result<()> {
    if c.arity != 2 {
        return Err(Error::DegreeOutOfRange(c.arity));
    }
    if !c.alternating {
        return Err(Error::NotAlternating);
    }
    Ok(())
}

/// `(phi o psi)(X, Y, Z) = phi(psi(X, Y), Z) + phi(psi(Y, Z), X) + phi(psi(Z, X), Y)`
/// for alternating bilinear maps. An alternating `mu` is a Lie law exactly
/// when this vanishes for `phi = psi = mu`.
pub fn alternating_circle<S: Ring>(phi: &Cochain<S>, psi: &Cochain<S>) -> Result<Cochain<S>> {
    check_dims(phi, psi)?;
    require_alternating_bilinear(phi)?;
    require_alternating_bilinear(psi)?;
    let n = phi.dim;
    let mut out = Cochain::zero(n, 3, true);
    for (r, t) in combinations(n, 3).iter().enumerate() {
        let target: &mut [S] = &mut out.values[r * n..(r + 1) * n];
        for (a, b, c) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            let inner = psi.eval_basis(&[a, b]);
            for (m, w) in inner.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                for (o, v) in target.iter_mut().zip(phi.eval_basis(&[m, c])) {
                    if !v.is_zero() {
                        *o = o.clone() + w.clone() * v;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `[phi, psi] = phi o psi + psi o phi` for bilinear maps. Alternating
/// inputs use [`alternating_circle`]; with that choice `[mu, phi]` is the
/// coboundary of `phi`.
pub fn graded_bracket<S: Ring>(phi: &Cochain<S>, psi: &Cochain<S>) -> Result<Cochain<S>> {
    check_dims(phi, psi)?;
    if phi.arity != 2 || psi.arity != 2 {
        return Err(Error::DegreeOutOfRange(if phi.arity != 2 { phi.arity } else { psi.arity }));
    }
    if phi.alternating && psi.alternating {
        Ok(alternating_circle(phi, psi)? + alternating_circle(psi, phi)?)
    } else {
        Ok(circle(phi, psi)? + circle(psi, phi)?)
    }
}

/// The six subgroups of the symmetric group on three letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricSubgroup {
    /// The trivial group.
    G1,
    /// Generated by the transposition of the first two letters.
    G2,
    /// Generated by the transposition of the last two letters.
    G3,
    /// Generated by the transposition of the first and last letters.
    G4,
    /// The alternating group.
    G5,
    /// The full symmetric group.
    G6,
}

impl SymmetricSubgroup {
    pub const ALL: [SymmetricSubgroup; 6] = [Self::G1, Self::G2, Self::G3, Self::G4, Self::G5, Self::G6];

    /// Elements as images `(s(0), s(1), s(2))` with their signs.
    pub fn elements(self) -> Vec<([usize; 3], i64)> {
        const ID: ([usize; 3], i64) = ([0, 1, 2], 1);
        const T12: ([usize; 3], i64) = ([1, 0, 2], -1);
        const T23: ([usize; 3], i64) = ([0, 2, 1], -1);
        const T13: ([usize; 3], i64) = ([2, 1, 0], -1);
        const C1: ([usize; 3], i64) = ([1, 2, 0], 1);
        const C2: ([usize; 3], i64) = ([2, 0, 1], 1);
        match self {
            Self::G1 => vec![ID],
            Self::G2 => vec![ID, T12],
            Self::G3 => vec![ID, T23],
            Self::G4 => vec![ID, T13],
            Self::G5 => vec![ID, C1, C2],
            Self::G6 => vec![ID, T12, T23, T13, C1, C2],
        }
    }
}

/// `sum_{s in G} sgn(s) (phi o psi)(x_{s(1)}, x_{s(2)}, x_{s(3)})` for
/// bilinear `phi`, `psi`.
pub fn circle_group<S: Ring>(
    phi: &Cochain<S>,
    psi: &Cochain<S>,
    group: SymmetricSubgroup,
) -> Result<Cochain<S>> {
    if phi.arity != 2 || psi.arity != 2 {
        return Err(Error::DegreeOutOfRange(if phi.arity != 2 { phi.arity } else { psi.arity }));
    }
    let base = circle(&phi.to_general(), &psi.to_general())?;
    let n = phi.dim;
    let elements = group.elements();
    let mut out = Cochain::zero(n, 3, false);
    for r in 0..n.pow(3) {
        let word = unrank_word(n, 3, r);
        let target: &mut [S] = &mut out.values[r * n..(r + 1) * n];
        for (perm, sign) in &elements {
            let permuted = [word[perm[0]], word[perm[1]], word[perm[2]]];
            for (o, v) in target.iter_mut().zip(base.eval_basis(&permuted)) {
                if !v.is_zero() {
                    *o = if *sign < 0 { o.clone() - v } else { o.clone() + v };
                }
            }
        }
    }
    Ok(out)
}

/// A bilinear product with no symmetry assumed: `e_i . e_j = sum_k m_{ijk} e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonassociativeProduct<S> {
    dim: usize,
    table: Vec<S>,
}

impl<S: Ring> NonassociativeProduct<S> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, table: vec![S::zero(); dim * dim * dim] }
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, S)>) -> Result<Self> {
        let mut m = Self::zero(dim);
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, limit: dim });
                }
            }
            let slot = (i * dim + j) * dim + k;
            m.table[slot] = m.table[slot].clone() + c;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vec<S> {
        let start = (i * self.dim + j) * self.dim;
        self.table[start..start + self.dim].to_vec()
    }

    pub fn to_cochain(&self) -> Cochain<S> {
        Cochain { dim: self.dim, arity: 2, alternating: false, values: self.table.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraClass {
    Associative,
    Vinberg,
    PreLie,
    LieAdmissible,
}

impl AlgebraClass {
    pub fn subgroup(self) -> SymmetricSubgroup {
        match self {
            Self::Associative => SymmetricSubgroup::G1,
            Self::Vinberg => SymmetricSubgroup::G2,
            Self::PreLie => SymmetricSubgroup::G3,
            Self::LieAdmissible => SymmetricSubgroup::G6,
        }
    }
}

/// Whether `m o_G m` vanishes for the subgroup attached to `class`.
pub fn algebra_class_check<S: Ring>(m: &NonassociativeProduct<S>, class: AlgebraClass) -> bool {
    let c = m.to_cochain();
    circle_group(&c, &c, class.subgroup()).is_ok_and(|r| r.is_zero())
}

/// The Lie law `[A, B] = AB - BA` of a Lie-admissible product.
pub fn commutator_law<S: Ring>(m: &NonassociativeProduct<S>) -> Result<StructureConstants<S>> {
    if !algebra_class_check(m, AlgebraClass::LieAdmissible) {
        return Err(Error::NotLieAdmissible);
    }
    let n = m.dim;
    let entries = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).flat_map(|(i, j)| {
        let ab = m.product_basis(i, j);
        let ba = m.product_basis(j, i);
        ab.into_iter().zip(ba).enumerate().map(move |(k, (x, y))| (i, j, k, x - y)).collect::<Vec<_>>()
    });
    StructureConstants::from_entries(n, entries)?.into_verified()
}

/// `X + Y + 1/2 [X,Y] + 1/12 [[X,Y],Y] - 1/12 [[X,Y],X]`, exact when the law
/// is nilpotent of nilindex at most 3.
pub fn bch_product<S: Field>(law: &StructureConstants<S>, x: &[S], y: &[S]) -> Result<Vec<S>> {
    match law.lower_central_series().terminal_index() {
        Some(k) if k <= 3 => {}
        _ => return Err(Error::NilindexTooLarge),
    }
    let half = S::one() / S::from_i64(2);
    let twelfth = S::one() / S::from_i64(12);
    let xy = law.bracket(x, y);
    let xyy = law.bracket(&xy, y);
    let xyx = law.bracket(&xy, x);
    Ok((0..law.dim())
        .map(|k| {
            x[k].clone() + y[k].clone() + half.clone() * xy[k].clone()
                + twelfth.clone() * (xyy[k].clone() - xyx[k].clone())
        })
        .collect())
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

    fn product(n: usize, entries: &[(usize, usize, usize, i64)]) -> NonassociativeProduct<G> {
        NonassociativeProduct::from_entries(n, entries.iter().map(|&(i, j, k, c)| (i, j, k, g(c)))).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let f = Cochain::from_values(1, 2, false, vec![g(1)]).unwrap();
        assert_eq!(comp_i(&f, 0, &f).unwrap().eval_basis(&[0, 0, 0]), vec![g(1)]);
        let r2 = Cochain::from_law(&law(2, &[(0, 1, 1, 1)]));
        assert_eq!(comp_i(&r2, 1, &r2).unwrap().eval_basis(&[0, 0, 1]), vec![g(0), g(1)]);
        assert!(matches!(comp_i(&r2, 2, &r2), Err(Error::IndexOutOfRange { index: 2, limit: 2 })));
        // phi o_0 g = phi(g., .)
        let m = Matrix::from_rows(vec![vec![g(0), g(1)], vec![g(2), g(3)]]);
        let gm = Cochain::endomorphism(&m);
        let pre = comp_i(&r2, 0, &gm).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(pre.eval_basis(&[a, b]), r2.eval(&[&m.column(a), &[g(i64::from(b == 0)), g(i64::from(b == 1))]]));
            }
        }
    }

    #[test]
    fn circle_examples() {
        let mu = Cochain::from_law(&law(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]));
        let assoc = circle(&mu, &mu).unwrap();
        for w in 0..27 {
            let t = unrank_word(3, 3, w);
            let lhs = mu.eval(&[&mu.eval_basis(&[t[0], t[1]]), &unit(3, t[2])]);
            let rhs = mu.eval(&[&unit(3, t[0]), &mu.eval_basis(&[t[1], t[2]])]);
            let expected: Vec<G> = lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect();
            assert_eq!(assoc.eval_basis(&t), expected);
        }
        assert!(circle(&mu, &Cochain::zero(3, 2, true)).unwrap().is_zero());
        let a = Matrix::from_rows(vec![vec![g(1), g(2)], vec![g(0), g(1)]]);
        let b = Matrix::from_rows(vec![vec![g(0), g(1)], vec![g(1), g(1)]]);
        let comp = circle(&Cochain::endomorphism(&a), &Cochain::endomorphism(&b)).unwrap();
        assert_eq!(comp.to_matrix().unwrap(), a.mul(&b));
    }

    fn unit(n: usize, i: usize) -> Vec<G> {
        (0..n).map(|j| g(i64::from(i == j))).collect()
    }

    #[test]
    fn brackets_and_jacobi() {
        let sl2 = Cochain::from_law(&law(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]));
        assert!(alternating_circle(&sl2, &sl2).unwrap().is_zero());
        let phi = Cochain::from_law(&law(3, &[(0, 1, 2, 1), (0, 2, 2, 1), (1, 2, 0, 1)]));
        assert_eq!(graded_bracket(&phi, &phi).unwrap(), alternating_circle(&phi, &phi).unwrap().scale(&g(2)));
        assert!(!alternating_circle(&phi, &phi).unwrap().is_zero());
        let r2 = Cochain::from_law(&law(2, &[(0, 1, 1, 1)]));
        assert!(graded_bracket(&r2, &r2).unwrap().is_zero());
        assert_eq!(alternating_circle(&r2.to_general(), &r2), Err(Error::NotAlternating));
    }

    #[test]
    fn remm_products() {
        let phi = Cochain::from_law(&law(3, &[(0, 1, 2, 1), (0, 2, 2, 1), (1, 2, 0, 1)]));
        let psi = Cochain::from_law(&law(3, &[(0, 1, 0, 3), (1, 2, 1, -1)]));
        assert_eq!(
            circle_group(&phi, &psi, SymmetricSubgroup::G1).unwrap(),
            circle(&phi, &psi).unwrap()
        );
        assert_eq!(
            circle_group(&phi, &psi, SymmetricSubgroup::G5).unwrap(),
            alternating_circle(&phi, &psi).unwrap().scale(&g(2))
        );
    }

    #[test]
    fn algebra_classes() {
        let comm = product(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)]);
        assert!(algebra_class_check(&comm, AlgebraClass::Associative));
        assert!(algebra_class_check(&comm, AlgebraClass::LieAdmissible));
        assert!(commutator_law(&comm).unwrap().is_abelian());
        let zero = NonassociativeProduct::<G>::zero(3);
        for class in [AlgebraClass::Associative, AlgebraClass::Vinberg, AlgebraClass::PreLie, AlgebraClass::LieAdmissible] {
            assert!(algebra_class_check(&zero, class));
        }
        let bad = product(2, &[(0, 1, 0, 1)]);
        assert!(!algebra_class_check(&bad, AlgebraClass::Associative));
        let tri = product(2, &[(0, 1, 1, 1)]);
        assert_eq!(commutator_law(&tri).unwrap(), law(2, &[(0, 1, 1, 1)]));
    }

    #[test]
    fn bch_examples() {
        let h1 = law(3, &[(0, 1, 2, 1)]);
        let half = G::ratio(1, 2);
        assert_eq!(bch_product(&h1, &unit(3, 0), &unit(3, 1)).unwrap(), vec![g(1), g(1), half]);
        let x = vec![g(2), g(-1), g(5)];
        assert_eq!(bch_product(&h1, &x, &x).unwrap(), x.iter().map(|v| v.clone() * g(2)).collect::<Vec<_>>());
        let sl2 = law(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]);
        assert_eq!(bch_product(&sl2, &x, &x), Err(Error::NilindexTooLarge));
    }

    #[test]
    fn alternating_conversion() {
        let r2 = Cochain::from_law(&law(2, &[(0, 1, 1, 1)]));
        let general = r2.to_general();
        assert!(!general.is_alternating());
        assert_eq!(general.to_alternating().unwrap().values(), r2.values());
        let sym = Cochain::from_values(2, 2, false, vec![g(0), g(0), g(1), g(0), g(1), g(0), g(0), g(0)]).unwrap();
        assert_eq!(sym.to_alternating(), Err(Error::NotAlternating));
    }
}
