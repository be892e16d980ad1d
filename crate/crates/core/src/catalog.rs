//! Named Lie algebras.
//!
//! Basis vectors are numbered from 1 in the descriptions below and from 0 in
//! code. Laws given by Maurer-Cartan equations use the convention
//! `d w(X, Y) = -w([X, Y])`, that is `d w_k = -sum_{i<j} C^k_{ij} w_i ^ w_j`.

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::law::{BasisChange, StructureConstants};
use crate::matrix::Matrix;
use crate::Law;

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub law: Law,
    pub description: &'static str,
}

/// Names accepted by [`catalog_build`], with their parameters.
pub const CATALOG: &[(&str, &str, &str)] = &[
    ("abelian", "n=2", "abelian law of dimension n"),
    ("r2", "", "[e1,e2] = e2"),
    ("heisenberg", "p=1", "[e(2i+1),e(2i+2)] = e(2p+1) for i < p"),
    ("sl2", "", "[e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1"),
    ("sl2xsl2", "", "direct sum of two copies of sl2"),
    ("filiform_model", "n=4", "[e1,ei] = e(i+1) for 2 <= i < n"),
    ("filiform4", "", "[e1,e2] = e3, [e1,e3] = e4"),
    ("frobenius_model", "p=2 phi=0,..", "frobeniusian model of dimension 2p"),
    ("double_r2", "", "[e1,e2] = e2, [e3,e4] = e4"),
    ("two_dim", "a=0 b=1", "[e1,e2] = a e1 + b e2"),
    ("contact5", "", "sl2 + r2 in a basis where w1 is a contact form"),
];

fn g(v: i64) -> GaussianRational {
    GaussianRational::from_integer(v)
}

fn build(n: usize, entries: impl IntoIterator<Item = (usize, usize, usize, GaussianRational)>) -> Law {
    StructureConstants::from_entries(n, entries)
        .and_then(StructureConstants::into_verified)
        .expect("catalog laws are Lie laws")
}

pub fn abelian(n: usize) -> Law {
    StructureConstants::zero(n)
}

pub fn r2() -> Law {
    build(2, [(0, 1, 1, g(1))])
}

/// The Heisenberg algebra of dimension `2p + 1`; its center is the last
/// basis vector.
pub fn heisenberg(p: usize) -> Law {
    build(2 * p + 1, (0..p).map(|i| (2 * i, 2 * i + 1, 2 * p, g(1))))
}

pub fn sl2() -> Law {
    build(3, [(0, 1, 1, g(2)), (0, 2, 2, g(-2)), (1, 2, 0, g(1))])
}

pub fn sl2_sum() -> Law {
    sl2().direct_sum(&sl2())
}

/// `[X1, Xi] = X(i+1)` for `2 <= i <= n - 1`.
pub fn filiform_model(n: usize) -> Law {
    build(n, (1..n.saturating_sub(1)).map(|i| (0, i, i + 1, g(1))))
}

pub fn filiform4() -> Law {
    build(4, [(0, 1, 2, g(1)), (0, 2, 3, g(1))])
}

/// The model `F_phi` of dimension `2p`:
/// `d w1 = w1^w2 + sum_k w(2k+1)^w(2k+2)`, `d w2 = 0`,
/// `d w(2k+1) = phi_k w2^w(2k+1)`, `d w(2k+2) = -(1 + phi_k) w2^w(2k+2)`.
/// It is graded with `X2` in degree 0, `X3 .. X2p` in degree 1 and `X1` in
/// degree 2.
pub fn frobenius_model(phi: &[GaussianRational]) -> Law {
    let p = phi.len() + 1;
    let mut entries = vec![(0, 1, 0, g(-1))];
    for (k, f) in phi.iter().enumerate() {
        let (a, b) = (2 * k + 2, 2 * k + 3);
        entries.push((a, b, 0, g(-1)));
        entries.push((1, a, a, -f.clone()));
        entries.push((1, b, b, g(1) + f.clone()));
    }
    build(2 * p, entries)
}

pub fn double_r2() -> Law {
    r2().direct_sum(&r2())
}

/// `[e1, e2] = a e1 + b e2`.
pub fn two_dim(a: GaussianRational, b: GaussianRational) -> Law {
    build(2, [(0, 1, 0, a), (0, 1, 1, b)])
}

/// `sl2 + r2` written in the basis `X1 = h, X2 = x, X3 = y, X4 = f1,
/// X5 = f2 - h`, whose dual basis starts with the contact form
/// `w_h + w_f2`. The brackets are `[X2,X3] = X1` and `[X4,X5] = X1 + X5`
/// plus terms that vanish under the weights `(2,1,1,1,1)`.
pub fn contact5() -> Law {
    let sum = sl2().direct_sum(&r2());
    let mut m = Matrix::identity(5);
    m[(0, 4)] = g(-1);
    let f = BasisChange::new(m).expect("unipotent");
    sum.apply_basis_change(&f).expect("dimensions agree")
}

fn bad(name: &str, reason: impl Into<String>) -> Error {
    Error::BadParams { name: name.to_string(), reason: reason.into() }
}

struct Params<'a> {
    name: &'a str,
    given: &'a [(String, String)],
    used: Vec<&'a str>,
}

impl<'a> Params<'a> {
    fn get(&mut self, key: &'a str) -> Option<&'a str> {
        self.used.push(key);
        self.given.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn count(&mut self, key: &'a str, default: usize, min: usize) -> Result<usize> {
        let value = match self.get(key) {
            None => default,
            Some(text) => text
                .trim()
                .parse::<usize>()
                .map_err(|_| bad(self.name, format!("{key} must be a nonnegative integer, got `{text}`")))?,
        };
        if value < min {
            return Err(bad(self.name, format!("{key} must be at least {min}")));
        }
        Ok(value)
    }

    fn scalar(&mut self, key: &'a str, default: i64) -> Result<GaussianRational> {
        match self.get(key) {
            None => Ok(g(default)),
            Some(text) => text.parse().map_err(|_| bad(self.name, format!("{key}: invalid scalar `{text}`"))),
        }
    }

    fn finish(self) -> Result<()> {
        for (k, _) in self.given {
            if !self.used.contains(&k.as_str()) {
                return Err(bad(self.name, format!("unknown parameter `{k}`")));
            }
        }
        Ok(())
    }
}

/// Builds a named algebra. Parameters are `key=value` pairs; missing ones
/// take the defaults listed in [`CATALOG`].
pub fn catalog_build(name: &str, params: &[(String, String)]) -> Result<CatalogEntry> {
    let Some(&(_, _, description)) = CATALOG.iter().find(|(n, _, _)| *n == name) else {
        return Err(Error::UnknownName(name.to_string()));
    };
    let mut p = Params { name, given: params, used: Vec::new() };
    let law = match name {
        "abelian" => abelian(p.count("n", 2, 1)?),
        "r2" => r2(),
        "heisenberg" => heisenberg(p.count("p", 1, 1)?),
        "sl2" => sl2(),
        "sl2xsl2" => sl2_sum(),
        "filiform_model" => filiform_model(p.count("n", 4, 3)?),
        "filiform4" => filiform4(),
        "frobenius_model" => {
            let order = p.count("p", 2, 1)?;
            let phi = match p.get("phi") {
                None => vec![g(0); order - 1],
                Some(text) if text.trim().is_empty() => Vec::new(),
                Some(text) => text
                    .split(',')
                    .map(|s| s.parse().map_err(|_| bad(name, format!("phi: invalid scalar `{s}`"))))
                    .collect::<Result<Vec<GaussianRational>>>()?,
            };
            if phi.len() != order - 1 {
                return Err(bad(name, format!("phi must have {} entries", order - 1)));
            }
            frobenius_model(&phi)
        }
        "double_r2" => double_r2(),
        "two_dim" => {
            let a = p.scalar("a", 0)?;
            let b = p.scalar("b", 1)?;
            two_dim(a, b)
        }
        "contact5" => contact5(),
        _ => unreachable!("name checked against the catalog"),
    };
    p.finish()?;
    Ok(CatalogEntry { name: name.to_string(), params: params.to_vec(), law, description })
}
