//! One-parameter contractions `mu_0 = lim_{eps -> 0} f_eps * mu`.
//!
//! A family `f_eps` is a matrix of Laurent polynomials in `eps`; its inverse
//! lives over the fraction field. The transformed law `f_eps * mu` is
//! computed exactly there and the limit exists when every entry has
//! nonnegative valuation.

use crate::cohomology::coboundary_matrix;
use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentFraction};
use crate::law::{BasisChange, SeriesProfile, StructureConstants};
use crate::matrix::Matrix;
use crate::scalar::Field;
use num_traits::{One, Zero};

/// An invertible basis change over `K[eps, eps^-1]`; column `j` is `f_eps(e_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricFamily<C: Field> {
    matrix: Matrix<Laurent<C>>,
    inverse: Matrix<LaurentFraction<C>>,
}

impl<C: Field> ParametricFamily<C> {
    pub fn new(matrix: Matrix<Laurent<C>>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        let inverse = matrix.map(|x| LaurentFraction::from_laurent(x.clone())).inverse().ok_or(Error::SingularMatrix)?;
        Ok(Self { matrix, inverse })
    }

    /// A family that does not depend on `eps`.
    pub fn constant(matrix: &Matrix<C>) -> Result<Self> {
        Self::new(matrix.map(|c| Laurent::constant(c.clone())))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<Laurent<C>> {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix<LaurentFraction<C>> {
        &self.inverse
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.mul(&other.matrix),
            inverse: other.inverse.mul(&self.inverse),
        }
    }

    pub fn basis_change(&self) -> BasisChange<LaurentFraction<C>> {
        BasisChange::with_inverse(self.matrix.map(|x| LaurentFraction::from_laurent(x.clone())), self.inverse.clone())
    }
}

/// `f(e_i) = eps^{n_i} e_i`.
pub fn ww_family<C: Field>(weights: &[i64]) -> ParametricFamily<C> {
    let n = weights.len();
    let matrix = Matrix::diagonal(weights.iter().map(|&w| Laurent::eps_pow(w)).collect());
    let inverse = Matrix::diagonal(weights.iter().map(|&w| LaurentFraction::from_laurent(Laurent::eps_pow(-w))).collect());
    debug_assert_eq!(matrix.rows(), n);
    ParametricFamily { matrix, inverse }
}

/// The Inonu-Wigner family fixing the subalgebra spanned by `indices`:
/// `f(e_i) = (1 + eps) e_i` on the subalgebra and `f(e_l) = eps e_l` elsewhere.
pub fn iw_family<C: Field>(law: &StructureConstants<C>, indices: &[usize]) -> Result<ParametricFamily<C>> {
    let n = law.dim();
    let mut inside = vec![false; n];
    for &i in indices {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        inside[i] = true;
    }
    for &i in indices {
        for &j in indices {
            let b = law.bracket_basis(i, j);
            if (0..n).any(|k| !inside[k] && !b[k].is_zero()) {
                let mut sorted = indices.to_vec();
                sorted.sort_unstable();
                sorted.dedup();
                return Err(Error::NotASubalgebra(sorted));
            }
        }
    }
    let one_plus = Laurent::from_terms([(0, C::one()), (1, C::one())]);
    let entries: Vec<Laurent<C>> =
        (0..n).map(|i| if inside[i] { one_plus.clone() } else { Laurent::epsilon() }).collect();
    let inverse = entries
        .iter()
        .map(|e| LaurentFraction::new(Laurent::one(), e.clone()).expect("nonzero"))
        .collect();
    Ok(ParametricFamily { matrix: Matrix::diagonal(entries), inverse: Matrix::diagonal(inverse) })
}

/// `f = eps Id + (1 - eps) g` for a singular endomorphism `g`.
pub fn saletan_family<C: Field>(g: &Matrix<C>) -> Result<ParametricFamily<C>> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch { expected: g.rows(), found: g.cols() });
    }
    if !g.determinant().is_zero() {
        return Err(Error::SaletanRequiresSingular);
    }
    let one_minus = Laurent::from_terms([(0, C::one()), (1, -C::one())]);
    let matrix = Matrix::from_fn(g.rows(), g.cols(), |i, j| {
        let mut x = one_minus.scale(&g[(i, j)]);
        if i == j {
            x = x + Laurent::epsilon();
        }
        x
    });
    ParametricFamily::new(matrix)
}

fn check_dim<C: Field>(law: &StructureConstants<C>, family: &ParametricFamily<C>) -> Result<()> {
    if family.dim() != law.dim() {
        return Err(Error::DimensionMismatch { expected: law.dim(), found: family.dim() });
    }
    Ok(())
}

/// `f_eps * mu` over the fraction field.
pub fn transform<C: Field>(
    law: &StructureConstants<C>,
    family: &ParametricFamily<C>,
) -> Result<StructureConstants<LaurentFraction<C>>> {
    check_dim(law, family)?;
    law.map(|c| LaurentFraction::constant(c.clone())).apply_basis_change(&family.basis_change())
}

/// Entrywise limit at `eps = 0` of a law over the fraction field.
pub fn limit_law<C: Field>(law: &StructureConstants<LaurentFraction<C>>) -> Result<StructureConstants<C>> {
    let n = law.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (k, x) in law.bracket_basis(i, j).into_iter().enumerate() {
                let value = x.limit_at_zero().map_err(|_| Error::DivergentEntry {
                    context: format!("[e{},e{}] component e{} = {x:?}", i + 1, j + 1, k + 1),
                    valuation: x.valuation().finite().unwrap_or(0),
                })?;
                entries.push((i, j, k, value));
            }
        }
    }
    StructureConstants::from_entries(n, entries)
}

/// The contraction of `law` along `family`. The limit of Lie laws is a Lie
/// law; this is checked before returning.
pub fn contract<C: Field>(law: &StructureConstants<C>, family: &ParametricFamily<C>) -> Result<StructureConstants<C>> {
    let limit = limit_law(&transform(law, family)?)?;
    if law.jacobi_verified() || law.validate_law().is_valid() {
        limit.into_verified()
    } else {
        Ok(limit)
    }
}

/// Iterates the Saletan contraction until two consecutive laws agree.
/// The returned chain starts with `law` and ends with the stationary law.
pub fn saletan_sequence<C: Field>(law: &StructureConstants<C>, g: &Matrix<C>) -> Result<Vec<StructureConstants<C>>> {
    let family = saletan_family(g)?;
    check_dim(law, &family)?;
    let mut chain = vec![law.clone()];
    // a chain has at most n + 1 distinct steps before the nilpotent part dies
    for _ in 0..=law.dim() + 1 {
        let last = chain.last().expect("nonempty");
        let next = contract(last, &family)?;
        if &next == last {
            return Ok(chain);
        }
        chain.push(next);
    }
    Ok(chain)
}

/// Invariants that can only move one way along a contraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub derivations: usize,
    pub lower_central: SeriesProfile,
    pub derived: SeriesProfile,
    pub center: usize,
    pub h1: usize,
}

pub fn fingerprint<S: Field>(law: &StructureConstants<S>) -> Fingerprint {
    let n = law.dim();
    let r0 = coboundary_matrix(law, 0).expect("order 0").rank();
    let r1 = coboundary_matrix(law, 1).expect("order 1").rank();
    Fingerprint {
        dim: n,
        derivations: n * n - r1,
        lower_central: law.lower_central_series(),
        derived: law.derived_series(),
        center: law.center().len(),
        h1: n * n - r1 - r0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Necessary conditions for `target` to be a contraction of `source`.
/// Passing all of them does not prove that a contraction exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConditionsReport {
    pub source: Fingerprint,
    pub target: Fingerprint,
    pub conditions: Vec<ConditionCheck>,
}

impl NecessaryConditionsReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    /// True when some condition rules the contraction out.
    pub fn impossible(&self) -> bool {
        !self.passed()
    }
}

fn series_dominated(target: &SeriesProfile, source: &SeriesProfile, n: usize) -> bool {
    (0..=n + 1).all(|k| target.dim_at(k) <= source.dim_at(k))
}

pub fn contraction_invariant_check<S: Field>(
    source: &StructureConstants<S>,
    target: &StructureConstants<S>,
) -> Result<NecessaryConditionsReport> {
    if source.dim() != target.dim() {
        return Err(Error::DimensionMismatch { expected: source.dim(), found: target.dim() });
    }
    let n = source.dim();
    let s = fingerprint(source);
    let t = fingerprint(target);
    let same = s == t;
    let conditions = vec![
        ConditionCheck {
            name: "derivations",
            passed: same || t.derivations > s.derivations,
            detail: format!("dim Der {} -> {}", s.derivations, t.derivations),
        },
        ConditionCheck {
            name: "lower central series",
            passed: series_dominated(&t.lower_central, &s.lower_central, n),
            detail: format!("{:?} -> {:?}", s.lower_central.dims, t.lower_central.dims),
        },
        ConditionCheck {
            name: "derived series",
            passed: series_dominated(&t.derived, &s.derived, n),
            detail: format!("{:?} -> {:?}", s.derived.dims, t.derived.dims),
        },
        ConditionCheck {
            name: "center",
            passed: t.center >= s.center,
            detail: format!("dim center {} -> {}", s.center, t.center),
        },
        ConditionCheck {
            name: "H1 of target",
            passed: same || t.h1 != 0,
            detail: format!("dim H1 of target {}", t.h1),
        },
    ];
    Ok(NecessaryConditionsReport { source: s, target: t, conditions })
}

/// A family contracting `[e1,e2] = e2, [e3,e4] = e4` onto the filiform law
/// `[e1,e2] = e3, [e1,e3] = e4`. In the basis `x1 = e1 + e4, x2 = e2 + e3,
/// x3 = e2 - e4, x4 = e2` the source law reads `[x1,x2] = x3, [x1,x3] = x4,
/// [x1,x4] = x4, [x2,x3] = x3 - x4`; the weights `(1,2,3,4)` then kill the
/// last two brackets. The subalgebra fixed by an Inonu-Wigner contraction
/// would have to be the whole filiform law, so this family is not of that
/// kind.
pub fn double_r2_filiform_family<C: Field>() -> ParametricFamily<C> {
    let z = || Laurent::zero();
    let m = |c: i64, w: i64| Laurent::monomial(C::from_i64(c), w);
    let matrix = Matrix::from_rows(vec![
        vec![m(1, 1), z(), z(), z()],
        vec![z(), m(1, 2), m(1, 3), m(1, 4)],
        vec![z(), m(1, 2), z(), z()],
        vec![m(1, 1), z(), m(-1, 3), z()],
    ]);
    ParametricFamily::new(matrix).expect("invertible family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gaussian::GaussianRational as G;

    fn g(v: i64) -> G {
        G::from_integer(v)
    }

    #[test]
    fn scaling_to_abelian() {
        for law in [catalog::sl2(), catalog::heisenberg(2), catalog::double_r2()] {
            let f = ww_family::<G>(&vec![1; law.dim()]);
            assert!(contract(&law, &f).unwrap().is_abelian());
        }
    }

    #[test]
    fn sl2_contracts_to_heisenberg() {
        // [e2, e3] = e1 after the weights (2, 1, 1)
        let h = contract(&catalog::sl2(), &ww_family(&[2, 1, 1])).unwrap();
        assert_eq!(h, StructureConstants::from_entries(3, [(1, 2, 0, g(1))]).unwrap());
    }

    #[test]
    fn divergence() {
        let r2 = catalog::r2();
        assert_eq!(contract(&r2, &ww_family(&[0, -1])).unwrap(), r2);
        let other = StructureConstants::from_entries(2, [(0, 1, 0, g(1))]).unwrap();
        assert!(matches!(contract(&other, &ww_family(&[0, -1])), Err(Error::DivergentEntry { .. })));
    }

    #[test]
    fn inonu_wigner() {
        let sl2 = catalog::sl2();
        let limit = contract(&sl2, &iw_family(&sl2, &[0]).unwrap()).unwrap();
        let expected = StructureConstants::from_entries(3, [(0, 1, 1, g(2)), (0, 2, 2, g(-2))]).unwrap();
        assert_eq!(limit, expected);
        let h1 = catalog::heisenberg(1);
        assert!(contract(&h1, &iw_family(&h1, &[2]).unwrap()).unwrap().is_abelian());
        assert_eq!(iw_family(&sl2, &[1, 2]).unwrap_err(), Error::NotASubalgebra(vec![1, 2]));
        assert_eq!(contract(&sl2, &iw_family(&sl2, &[0, 1, 2]).unwrap()).unwrap(), sl2);
    }

    #[test]
    fn saletan() {
        assert_eq!(saletan_family::<G>(&Matrix::identity(2)).unwrap_err(), Error::SaletanRequiresSingular);
        let zero = saletan_family::<G>(&Matrix::zeros(3, 3)).unwrap();
        assert_eq!(zero, ww_family(&[1, 1, 1]));
        let sl2 = catalog::sl2();
        let chain = saletan_sequence(&sl2, &Matrix::zeros(3, 3)).unwrap();
        assert_eq!(chain, vec![sl2, StructureConstants::zero(3)]);
    }

    #[test]
    fn constant_family_matches_basis_change() {
        let m = Matrix::from_rows(vec![vec![g(1), g(2), g(0)], vec![g(0), g(1), g(3)], vec![g(1), g(0), g(1)]]);
        let sl2 = catalog::sl2();
        let direct = sl2.apply_basis_change(&BasisChange::new(m.clone()).unwrap()).unwrap();
        assert_eq!(contract(&sl2, &ParametricFamily::constant(&m).unwrap()).unwrap(), direct);
    }

    #[test]
    fn non_inonu_wigner_example() {
        let limit = contract(&catalog::double_r2(), &double_r2_filiform_family()).unwrap();
        assert_eq!(limit, catalog::filiform4());
        let forward = contraction_invariant_check(&catalog::double_r2(), &catalog::filiform4()).unwrap();
        assert!(forward.passed(), "{forward:?}");
        let backward = contraction_invariant_check(&catalog::filiform4(), &catalog::double_r2()).unwrap();
        assert!(backward.impossible());
    }

    #[test]
    fn invariant_check_examples() {
        let r2 = catalog::r2();
        let ab = catalog::abelian(2);
        let report = contraction_invariant_check(&r2, &ab).unwrap();
        assert!(report.passed());
        assert_eq!((report.source.derivations, report.target.derivations), (2, 4));
        assert!(!contraction_invariant_check(&ab, &r2).unwrap().conditions[0].passed);
        assert!(contraction_invariant_check(&catalog::sl2(), &catalog::sl2()).unwrap().passed());
        assert_eq!(
            contraction_invariant_check(&r2, &catalog::sl2()).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
    }
}
