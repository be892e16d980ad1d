//! Chevalley-Eilenberg cohomology with values in the adjoint module.
//!
//! Cochains of order `p` are alternating `p`-linear maps `g^p -> g`. The
//! coboundary is normalized so that
//!
//! * on vectors, `d v = ad v`;
//! * on endomorphisms, `d g(X, Y) = -g(mu(X, Y)) + mu(g X, Y) + mu(X, g Y)`;
//! * on bilinear maps, `d phi = mu o phi + phi o mu` (cyclic composition);
//!
//! which amounts to `(-1)^(p+1)` times the textbook differential on
//! `p`-cochains. Signs never change kernels or images, so every dimension
//! reported here agrees with the textbook convention.


use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::law::StructureConstants;
use crate::matrix::Matrix;
use crate::scalar::{Field, Ring};
use crate::tuples::{binomial, combinations, rank_combination, sort_with_sign};

/// One-line statement of the coboundary convention, printed by reports.
pub const NORMALIZATION: &str =
    "coboundary normalization: d(phi) = mu o phi + phi o mu on 2-cochains; d(g) = -g(mu) + mu(g.,.) + mu(.,g.)";

/// Largest cochain order whose cohomology is computed.
pub const MAX_ORDER: usize = 3;

/// Matrix of the coboundary from `p`-cochains to `(p+1)`-cochains in the
/// coordinates of increasing index tuples (tuple-major, component minor).
pub fn coboundary_matrix<S: Ring>(law: &StructureConstants<S>, p: usize) -> Result<Matrix<S>> {
    if p > MAX_ORDER {
        return Err(Error::DegreeOutOfRange(p));
    }
    let n = law.dim();
    let rows = binomial(n, p + 1) * n;
    let cols = binomial(n, p) * n;
    let mut m = Matrix::zeros(rows, cols);
    let global = if p.is_multiple_of(2) { -S::one() } else { S::one() };
    for (r, x) in combinations(n, p + 1).iter().enumerate() {
        // x_i acting on phi(x without x_i)
        for i in 0..=p {
            let sign = if i % 2 == 0 { global.clone() } else { -global.clone() };
            let rest: Vec<usize> = x.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &v)| v).collect();
            let col_base = rank_combination(n, &rest) * n;
            for mm in 0..n {
                for k in 0..n {
                    let c = law.coefficient(x[i], mm, k);
                    if !c.is_zero() {
                        let entry: &mut S = &mut m[(r * n + k, col_base + mm)];
                        *entry = entry.clone() + sign.clone() * c;
                    }
                }
            }
        }
        // phi(mu(x_i, x_j), remaining arguments)
        for i in 0..=p {
            for j in i + 1..=p {
                let base_sign = if (i + j) % 2 == 0 { global.clone() } else { -global.clone() };
                let rest: Vec<usize> = x
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &v)| v)
                    .collect();
                for l in 0..n {
                    let c = law.coefficient(x[i], x[j], l);
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(p);
                    args.push(l);
                    args.extend_from_slice(&rest);
                    let Some(perm_sign) = sort_with_sign(&mut args) else { continue };
                    let col_base = rank_combination(n, &args) * n;
                    let w = if perm_sign < 0 { -(base_sign.clone() * c) } else { base_sign.clone() * c };
                    for k in 0..n {
                        let entry: &mut S = &mut m[(r * n + k, col_base + k)];
                        *entry = entry.clone() + w.clone();
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Coboundary of an alternating cochain with at most three arguments.
pub fn coboundary<S: Ring>(law: &StructureConstants<S>, phi: &Cochain<S>) -> Result<Cochain<S>> {
    if phi.dim() != law.dim() {
        return Err(Error::DimensionMismatch { expected: law.dim(), found: phi.dim() });
    }
    if !phi.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let p = phi.arity();
    let m = coboundary_matrix(law, p)?;
    Cochain::from_values(law.dim(), p + 1, true, m.mul_vec(phi.values()))
}

/// Dimensions attached to one cochain order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeDims {
    pub order: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub dim: usize,
    pub degrees: Vec<DegreeDims>,
}

impl CohomologyReport {
    pub fn h(&self, p: usize) -> usize {
        self.degrees[p].cohomology
    }

    pub fn z(&self, p: usize) -> usize {
        self.degrees[p].cocycles
    }

    pub fn b(&self, p: usize) -> usize {
        self.degrees[p].coboundaries
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.cohomology).collect()
    }
}

/// `dim Z^p`, `dim B^p` and `dim H^p` for `p = 0..=3`.
pub fn cohomology_report<S: Field>(law: &StructureConstants<S>) -> CohomologyReport {
    let n = law.dim();
    let ranks: Vec<usize> = (0..=MAX_ORDER)
        .map(|p| coboundary_matrix(law, p).expect("order in range").rank())
        .collect();
    let degrees = (0..=MAX_ORDER)
        .map(|p| {
            let cochains = binomial(n, p) * n;
            let cocycles = cochains - ranks[p];
            let coboundaries = if p == 0 { 0 } else { ranks[p - 1] };
            DegreeDims { order: p, cochains, cocycles, coboundaries, cohomology: cocycles - coboundaries }
        })
        .collect();
    CohomologyReport { dim: n, degrees }
}

/// Basis of the `p`-cocycles.
pub fn cocycle_basis<S: Field>(law: &StructureConstants<S>, p: usize) -> Result<Vec<Cochain<S>>> {
    let m = coboundary_matrix(law, p)?;
    let n = law.dim();
    m.kernel_basis()
        .into_iter()
        .map(|v| Cochain::from_values(n, p, true, v))
        .collect()
}

/// A cochain `g` with `d g = psi`, if one exists.
pub fn is_coboundary<S: Field>(law: &StructureConstants<S>, psi: &Cochain<S>) -> Result<Option<Cochain<S>>> {
    if psi.dim() != law.dim() {
        return Err(Error::DimensionMismatch { expected: law.dim(), found: psi.dim() });
    }
    let p = psi.arity();
    if p == 0 || p > MAX_ORDER + 1 {
        return Err(Error::DegreeOutOfRange(p));
    }
    let psi = psi.to_alternating()?;
    let m = coboundary_matrix(law, p - 1)?;
    if m.cols() == 0 {
        return Ok(psi.is_zero().then(|| Cochain::zero(law.dim(), p - 1, true)));
    }
    match m.solve(psi.values()) {
        Some(g) => Ok(Some(Cochain::from_values(law.dim(), p - 1, true, g)?)),
        None => Ok(None),
    }
}
