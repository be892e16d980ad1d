#![allow(dead_code)]

use liestruct::catalog;
use liestruct::cochain::Cochain;
use liestruct::{BasisChange, GaussianRational as G, Law, Matrix};
use proptest::prelude::*;

pub fn g(v: i64) -> G {
    G::from_integer(v)
}

/// Lie laws of dimension at most 4 used as seeds for random laws.
pub fn seeds() -> Vec<Law> {
    vec![
        catalog::abelian(3),
        catalog::r2(),
        catalog::heisenberg(1),
        catalog::sl2(),
        catalog::filiform4(),
        catalog::double_r2(),
        catalog::frobenius_model(&[g(2)]),
        catalog::two_dim(g(1), g(-2)),
        catalog::r2().direct_sum(&catalog::abelian(1)),
        catalog::sl2().direct_sum(&catalog::abelian(1)),
    ]
}

/// `L * U` with unit diagonals, built from `2 * n * n` small integers, so
/// the determinant is 1.
pub fn unimodular(n: usize, entries: &[i64]) -> Matrix<G> {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => g(1),
        std::cmp::Ordering::Greater => g(entries[i * n + j]),
        std::cmp::Ordering::Less => g(0),
    });
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => g(1),
        std::cmp::Ordering::Less => g(entries[n * n + i * n + j]),
        std::cmp::Ordering::Greater => g(0),
    });
    lower.mul(&upper)
}

pub fn transported(seed: &Law, entries: &[i64]) -> Law {
    let f = BasisChange::new(unimodular(seed.dim(), entries)).expect("unimodular");
    seed.apply_basis_change(&f).expect("dimensions agree")
}

pub fn small() -> impl Strategy<Value = i64> {
    -2i64..=2
}

/// A Lie law: a seed moved by a random unimodular basis change.
pub fn lie_law() -> impl Strategy<Value = Law> {
    (0..seeds().len(), prop::collection::vec(-1i64..=1, 32)).prop_map(|(i, entries)| {
        let seed = &seeds()[i];
        transported(seed, &entries)
    })
}

pub fn cochain(n: usize, arity: usize, alternating: bool) -> impl Strategy<Value = Cochain<G>> {
    let len = if alternating {
        liestruct::tuples::binomial(n, arity) * n
    } else {
        n.pow(arity as u32) * n
    };
    prop::collection::vec(small(), len).prop_map(move |v| {
        Cochain::from_values(n, arity, alternating, v.into_iter().map(g).collect()).expect("sizes agree")
    })
}

/// A random alternating bilinear map with few nonzero entries.
pub fn sparse_bilinear(n: usize) -> impl Strategy<Value = Law> {
    let len = n * (n - 1) / 2 * n;
    prop::collection::vec(prop_oneof![6 => Just(0i64), 1 => Just(1), 1 => Just(-1)], len)
        .prop_map(move |v| Law::from_coordinates(n, v.into_iter().map(g).collect()).expect("sizes agree"))
}
