//! The variety of Lie laws: Jacobi polynomials, orbits, tangent spaces and
//! the cohomological rigidity test.

use std::collections::BTreeMap;
use std::fmt;

use crate::cohomology::cohomology_report;
use crate::law::StructureConstants;
use crate::scalar::{Field, Ring};
use crate::tuples::combinations;

/// The unknown `C^k_{ij}` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StructureVariable {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl StructureVariable {
    fn signed(a: usize, b: usize, k: usize) -> Option<(i64, Self)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some((1, Self { i: a, j: b, k })),
            std::cmp::Ordering::Greater => Some((-1, Self { i: b, j: a, k })),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn evaluate<S: Ring>(&self, law: &StructureConstants<S>) -> S {
        law.coefficient(self.i, self.j, self.k)
    }
}

impl fmt::Display for StructureVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{};{})", self.i + 1, self.j + 1, self.k + 1)
    }
}

/// `coefficient * left * right` with `left <= right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobiMonomial {
    pub coefficient: i64,
    pub left: StructureVariable,
    pub right: StructureVariable,
}

/// The quadratic polynomial attached to a triple `i < j < k` and an output
/// component `s`:
/// `sum_l C^l_{ij} C^s_{lk} + C^l_{jk} C^s_{li} + C^l_{ki} C^s_{lj}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiGenerator {
    pub triple: (usize, usize, usize),
    pub component: usize,
    pub monomials: Vec<JacobiMonomial>,
}

impl JacobiGenerator {
    pub fn evaluate<S: Ring>(&self, law: &StructureConstants<S>) -> S {
        self.monomials.iter().fold(S::zero(), |acc, m| {
            acc + S::from_i64(m.coefficient) * m.left.evaluate(law) * m.right.evaluate(law)
        })
    }
}

impl fmt::Display for JacobiGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (n, m) in self.monomials.iter().enumerate() {
            let sign = match (n, m.coefficient < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let abs = m.coefficient.abs();
            let c = if abs == 1 { String::new() } else { format!("{abs}*") };
            write!(f, "{sign}{c}{}*{}", m.left, m.right)?;
        }
        Ok(())
    }
}

/// The generators of the ideal cutting out the laws of dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiSystem {
    pub n: usize,
    pub generators: Vec<JacobiGenerator>,
}

impl JacobiSystem {
    pub fn evaluate<S: Ring>(&self, law: &StructureConstants<S>) -> Vec<S> {
        self.generators.iter().map(|g| g.evaluate(law)).collect()
    }
}

/// One generator per triple `i < j < k` and component `s`, so
/// `binomial(n, 3) * n` in total.
pub fn jacobi_polynomials(n: usize) -> JacobiSystem {
    let mut generators = Vec::new();
    for t in combinations(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        for s in 0..n {
            let mut terms: BTreeMap<(StructureVariable, StructureVariable), i64> = BTreeMap::new();
            for l in 0..n {
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let (Some((s1, inner)), Some((s2, outer))) =
                        (StructureVariable::signed(a, b, l), StructureVariable::signed(l, c, s))
                    else {
                        continue;
                    };
                    let key = if inner <= outer { (inner, outer) } else { (outer, inner) };
                    *terms.entry(key).or_insert(0) += s1 * s2;
                }
            }
            let monomials = terms
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|((left, right), coefficient)| JacobiMonomial { coefficient, left, right })
                .collect();
            generators.push(JacobiGenerator { triple: (i, j, k), component: s, monomials });
        }
    }
    JacobiSystem { n, generators }
}

/// `n^2 - dim Der(mu)`, the dimension of the orbit of `mu` under `GL(n)`.
pub fn orbit_dimension<S: Field>(law: &StructureConstants<S>) -> usize {
    let n = law.dim();
    n * n - law.derivations().len()
}

/// Tangent spaces at `mu`: to the orbit (`B^2`), to the variety and to the
/// scheme (both `Z^2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangentDims {
    pub orbit_tangent: usize,
    pub variety_tangent: usize,
    pub scheme_tangent: usize,
}

pub fn tangent_dims<S: Field>(law: &StructureConstants<S>) -> TangentDims {
    let report = cohomology_report(law);
    TangentDims { orbit_tangent: report.b(2), variety_tangent: report.z(2), scheme_tangent: report.z(2) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidityStatus {
    Rigid,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub status: RigidityStatus,
    pub b2: usize,
    pub z2: usize,
    pub h2: usize,
    pub orbit_dim: usize,
    pub ambient: usize,
    pub note: &'static str,
}

pub const RIGID_NOTE: &str = "H2 = 0, so the orbit is open in the variety of laws";
pub const INCONCLUSIVE_NOTE: &str =
    "H2 != 0; a rigid law with H2 != 0 would be a non-reduced point of the scheme of laws";

pub fn rigidity_verdict<S: Field>(law: &StructureConstants<S>) -> RigidityVerdict {
    let n = law.dim();
    let report = cohomology_report(law);
    let h2 = report.h(2);
    let (status, note) =
        if h2 == 0 { (RigidityStatus::Rigid, RIGID_NOTE) } else { (RigidityStatus::Inconclusive, INCONCLUSIVE_NOTE) };
    RigidityVerdict {
        status,
        b2: report.b(2),
        z2: report.z(2),
        h2,
        orbit_dim: orbit_dimension(law),
        ambient: n * n,
        note,
    }
}
