//! Formal deformations `mu_t = mu_0 + sum t^i phi_i`, their integration
//! degree by degree, and decompositions of valued perturbations.
//!
//! The Jacobi identity of `mu_t` is `mu_t o mu_t = 0` (cyclic composition).
//! Its coefficient of `t^p` reads
//! `d phi_p + sum_{i+j=p, i,j>0} phi_i o phi_j = 0`.

use num_traits::{One, Zero};

use crate::cochain::{alternating_circle, graded_bracket, Cochain};
use crate::cohomology::{coboundary, is_coboundary};
use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentFraction, Valuation};
use crate::law::StructureConstants;
use crate::matrix::{span_basis, Matrix};
use crate::scalar::Field;
use crate::tuples::combinations;

fn require_bilinear<S: Field>(dim: usize, phi: &Cochain<S>) -> Result<()> {
    if phi.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: phi.dim() });
    }
    if phi.arity() != 2 {
        return Err(Error::DegreeOutOfRange(phi.arity()));
    }
    if !phi.is_alternating() {
        return Err(Error::NotAlternating);
    }
    Ok(())
}

/// A deformation truncated at `truncation_order`; only nonzero
/// coefficients are stored, with strictly increasing degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalDeformation<S: Field> {
    base: StructureConstants<S>,
    terms: Vec<(usize, Cochain<S>)>,
    truncation_order: usize,
}

impl<S: Field> FormalDeformation<S> {
    pub fn new(
        base: StructureConstants<S>,
        terms: Vec<(usize, Cochain<S>)>,
        truncation_order: usize,
    ) -> Result<Self> {
        let mut previous = 0;
        for (degree, phi) in &terms {
            if *degree <= previous {
                return Err(Error::InvalidDeformation(format!(
                    "degree {degree} does not exceed the previous degree {previous}"
                )));
            }
            if phi.is_zero() {
                return Err(Error::InvalidDeformation(format!("coefficient of degree {degree} is zero")));
            }
            require_bilinear(base.dim(), phi)?;
            previous = *degree;
        }
        if previous > truncation_order {
            return Err(Error::InvalidDeformation(format!(
                "truncation order {truncation_order} is below degree {previous}"
            )));
        }
        Ok(Self { base, terms, truncation_order })
    }

    /// From the coefficients of `t, t^2, ..`; zero coefficients are dropped.
    pub fn from_dense(base: StructureConstants<S>, coefficients: Vec<Cochain<S>>, truncation_order: usize) -> Result<Self> {
        let terms = coefficients
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Self::new(base, terms, truncation_order)
    }

    pub fn trivial(base: StructureConstants<S>, truncation_order: usize) -> Self {
        Self { base, terms: Vec::new(), truncation_order }
    }

    pub fn base(&self) -> &StructureConstants<S> {
        &self.base
    }

    pub fn terms(&self) -> &[(usize, Cochain<S>)] {
        &self.terms
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation_order
    }

    /// Coefficient of `t^degree`; degree 0 is the base law.
    pub fn coefficient(&self, degree: usize) -> Cochain<S> {
        if degree == 0 {
            return Cochain::from_law(&self.base);
        }
        self.terms
            .iter()
            .find(|(d, _)| *d == degree)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Cochain::zero(self.base.dim(), 2, true))
    }

    fn dense(&self) -> Vec<Cochain<S>> {
        (0..=self.truncation_order).map(|d| self.coefficient(d)).collect()
    }
}

/// Coefficient of `t^degree` in `mu_t o mu_t`.
pub fn deformation_residual<S: Field>(d: &FormalDeformation<S>, degree: usize) -> Result<Cochain<S>> {
    if degree > d.truncation_order {
        return Err(Error::InvalidDeformation(format!(
            "degree {degree} exceeds the truncation order {}",
            d.truncation_order
        )));
    }
    let mut acc = Cochain::zero(d.base.dim(), 3, true);
    for i in 0..=degree {
        let (a, b) = (d.coefficient(i), d.coefficient(degree - i));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc = acc + alternating_circle(&a, &b)?;
    }
    Ok(acc)
}

/// Left-hand side of the degree-`p` equation written with symmetric pairs:
/// `d phi_p + sum_{i <= p/2} a_{i,p} (phi_i o phi_{p-i} + phi_{p-i} o phi_i)`
/// with `a_{i,p} = 1/2` when `2i = p` and `1` otherwise.
pub fn symmetric_system_lhs<S: Field>(d: &FormalDeformation<S>, p: usize) -> Result<Cochain<S>> {
    let mut acc = coboundary(&d.base, &d.coefficient(p))?;
    let half = S::one() / S::from_i64(2);
    for i in 1..=p / 2 {
        let (a, b) = (d.coefficient(i), d.coefficient(p - i));
        let pair = alternating_circle(&a, &b)? + alternating_circle(&b, &a)?;
        acc = acc + if 2 * i == p { pair.scale(&half) } else { pair };
    }
    Ok(acc)
}

/// The class of a 3-cocycle in `H^3`, with a preimage when it vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionClass<S: Field> {
    pub representative: Cochain<S>,
    pub vanishes: bool,
    pub preimage: Option<Cochain<S>>,
}

impl<S: Field> ObstructionClass<S> {
    fn of(base: &StructureConstants<S>, representative: Cochain<S>) -> Result<Self> {
        let preimage = is_coboundary(base, &representative)?;
        Ok(Self { vanishes: preimage.is_some(), representative, preimage })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StepOutcome<S: Field> {
    Integrated(Cochain<S>),
    Obstructed(ObstructionClass<S>),
}

fn quadratic_part<S: Field>(dim: usize, established: &[Cochain<S>], p: usize) -> Result<Cochain<S>> {
    let mut omega = Cochain::zero(dim, 3, true);
    for i in 1..p {
        let (a, b) = (&established[i - 1], &established[p - i - 1]);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        omega = omega + alternating_circle(a, b)?;
    }
    Ok(omega)
}

/// Given `phi_1 .. phi_{p-1}` satisfying the equations up to degree
/// `p - 1`, finds some `phi_p` solving the degree-`p` equation or reports
/// the obstruction.
pub fn integrate_step<S: Field>(base: &StructureConstants<S>, established: &[Cochain<S>]) -> Result<StepOutcome<S>> {
    let n = base.dim();
    for phi in established {
        require_bilinear(n, phi)?;
    }
    let p = established.len() + 1;
    let omega = quadratic_part(n, established, p)?;
    if !coboundary(base, &omega)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    let class = ObstructionClass::of(base, omega)?;
    Ok(match class.preimage {
        Some(g) => StepOutcome::Integrated(-g),
        None => StepOutcome::Obstructed(class),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Integration<S: Field> {
    Complete(FormalDeformation<S>),
    Obstructed {
        /// Terms established before the obstruction.
        partial: FormalDeformation<S>,
        degree: usize,
        obstruction: ObstructionClass<S>,
    },
}

/// Integrates the infinitesimal deformation `phi_1` up to `order`.
pub fn integrate<S: Field>(base: &StructureConstants<S>, phi1: &Cochain<S>, order: usize) -> Result<Integration<S>> {
    require_bilinear(base.dim(), phi1)?;
    if !coboundary(base, phi1)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    let mut coefficients = vec![phi1.clone()];
    for p in 2..=order {
        match integrate_step(base, &coefficients)? {
            StepOutcome::Integrated(phi) => coefficients.push(phi),
            StepOutcome::Obstructed(obstruction) => {
                let partial = FormalDeformation::from_dense(base.clone(), coefficients, p - 1)?;
                return Ok(Integration::Obstructed { partial, degree: p, obstruction });
            }
        }
    }
    Ok(Integration::Complete(FormalDeformation::from_dense(base.clone(), coefficients, order.max(1))?))
}

/// `sq([phi]) = [phi o phi]` in `H^3`.
pub fn rim_square<S: Field>(base: &StructureConstants<S>, phi: &Cochain<S>) -> Result<ObstructionClass<S>> {
    require_bilinear(base.dim(), phi)?;
    if !coboundary(base, phi)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    ObstructionClass::of(base, alternating_circle(phi, phi)?)
}

fn bilinear_from_fn<S: Field>(n: usize, mut f: impl FnMut(usize, usize) -> Vec<S>) -> Cochain<S> {
    let values = combinations(n, 2).into_iter().flat_map(|t| f(t[0], t[1])).collect();
    Cochain::from_values(n, 2, true, values).expect("shape")
}

/// `(X, Y) -> c(gX, Y) + c(X, gY)`.
fn precompose_each<S: Field>(c: &Cochain<S>, g: &Matrix<S>) -> Cochain<S> {
    let n = c.dim();
    bilinear_from_fn(n, |i, j| {
        let gi = g.column(i);
        let gj = g.column(j);
        let mut ei = vec![S::zero(); n];
        ei[i] = S::one();
        let mut ej = vec![S::zero(); n];
        ej[j] = S::one();
        let a = c.eval(&[&gi, &ej]);
        let b = c.eval(&[&ei, &gj]);
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    })
}

/// `(X, Y) -> c(gX, gY)`.
fn precompose_both<S: Field>(c: &Cochain<S>, g: &Matrix<S>) -> Cochain<S> {
    bilinear_from_fn(c.dim(), |i, j| c.eval(&[&g.column(i), &g.column(j)]))
}

fn postcompose<S: Field>(h: &Matrix<S>, c: &Cochain<S>) -> Cochain<S> {
    bilinear_from_fn(c.dim(), |i, j| h.mul_vec(&c.eval_basis(&[i, j])))
}

/// Coefficients of `Phi^{-1} mu_t(Phi ., Phi .)` for `Phi = 1 + t^d g`,
/// truncated at the length of `coefficients`.
fn conjugate<S: Field>(coefficients: &[Cochain<S>], g: &Matrix<S>, d: usize) -> Vec<Cochain<S>> {
    let len = coefficients.len();
    let n = g.rows();
    let zero = || Cochain::zero(n, 2, true);
    let mut inner: Vec<Cochain<S>> = coefficients.to_vec();
    for m in 0..len {
        if m + d < len {
            inner[m + d] = inner[m + d].clone() + precompose_each(&coefficients[m], g);
        }
        if m + 2 * d < len {
            inner[m + 2 * d] = inner[m + 2 * d].clone() + precompose_both(&coefficients[m], g);
        }
    }
    let mut out: Vec<Cochain<S>> = (0..len).map(|_| zero()).collect();
    let mut power = Matrix::identity(n);
    let mut k = 0;
    while k * d < len {
        let signed = if k % 2 == 0 { power.clone() } else { power.scale(&-S::one()) };
        for m in 0..len - k * d {
            out[m + k * d] = out[m + k * d].clone() + postcompose(&signed, &inner[m]);
        }
        power = power.mul(g);
        k += 1;
        if d == 0 {
            break;
        }
    }
    out
}

/// Repeatedly removes the lowest-degree term while it is a coboundary
/// `d h`, by conjugating with `1 + t^d g` where `g = -h`.
pub fn equivalence_reduce<S: Field>(d: &FormalDeformation<S>) -> Result<FormalDeformation<S>> {
    let mut coefficients = d.dense();
    let mut floor = 1;
    while let Some(lowest) = (floor..coefficients.len()).find(|&m| !coefficients[m].is_zero()) {
        let Some(h) = is_coboundary(&d.base, &coefficients[lowest])? else {
            break;
        };
        let g = h.to_matrix()?.scale(&-S::one());
        coefficients = conjugate(&coefficients, &g, lowest);
        debug_assert!(coefficients[lowest].is_zero());
        floor = lowest + 1;
    }
    let rest = coefficients.split_off(1);
    FormalDeformation::from_dense(d.base.clone(), rest, d.truncation_order)
}

/// `v = sum_i (b_1 .. b_i) V_i` with independent constant vectors `V_i` and
/// multipliers of positive valuation.
#[derive(Debug, Clone, PartialEq)]
pub struct FlagDecomposition<C: Field> {
    pub vectors: Vec<Vec<C>>,
    /// The products `b_1 .. b_i`, which are Laurent polynomials.
    pub cumulative: Vec<Laurent<C>>,
    /// The individual `b_i`; a quotient of consecutive products need not be
    /// a polynomial, so these are fractions.
    pub multipliers: Vec<LaurentFraction<C>>,
}

impl<C: Field> FlagDecomposition<C> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn reconstruct(&self, k: usize) -> Vec<Laurent<C>> {
        let mut out = vec![Laurent::zero(); k];
        for (beta, v) in self.cumulative.iter().zip(&self.vectors) {
            for (o, c) in out.iter_mut().zip(v) {
                *o = o.clone() + beta.scale(c);
            }
        }
        out
    }
}

/// Decomposes a vector of elements of positive valuation. Exponents are
/// processed in increasing order; a coefficient vector outside the span of
/// the flag so far opens a new flag vector, otherwise it is distributed
/// over the existing ones.
pub fn valued_decompose<C: Field>(v: &[Laurent<C>]) -> Result<FlagDecomposition<C>> {
    for (index, x) in v.iter().enumerate() {
        if let Valuation::Finite(valuation) = x.valuation() {
            if valuation < 1 {
                return Err(Error::NegativeValuation { index, valuation });
            }
        }
    }
    let mut exponents: Vec<i64> = v.iter().flat_map(|x| x.terms().map(|(e, _)| e)).collect();
    exponents.sort_unstable();
    exponents.dedup();
    let k = v.len();
    let mut vectors: Vec<Vec<C>> = Vec::new();
    let mut cumulative: Vec<Laurent<C>> = Vec::new();
    for m in exponents {
        let c: Vec<C> = v.iter().map(|x| x.coefficient(m)).collect();
        let lambda = if vectors.is_empty() {
            None
        } else {
            Matrix::from_columns(k, &vectors).solve(&c)
        };
        match lambda {
            Some(lambda) => {
                for (beta, l) in cumulative.iter_mut().zip(lambda) {
                    *beta = beta.clone() + Laurent::monomial(l, m);
                }
            }
            None => {
                vectors.push(c);
                cumulative.push(Laurent::eps_pow(m));
            }
        }
    }
    let mut multipliers = Vec::with_capacity(cumulative.len());
    let mut previous = Laurent::one();
    for beta in &cumulative {
        multipliers.push(LaurentFraction::new(beta.clone(), previous)?);
        previous = beta.clone();
    }
    Ok(FlagDecomposition { vectors, cumulative, multipliers })
}

/// `mu' - mu_0 = sum_i (b_1 .. b_i) phi_i` with independent bilinear `phi_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationDecomposition<C: Field> {
    pub flag: FlagDecomposition<C>,
    pub cochains: Vec<Cochain<C>>,
}

/// Decomposes a perturbed law over the Laurent ring; the first term must be
/// a 2-cocycle of `mu_0`.
pub fn perturbation_decompose<C: Field>(
    perturbed: &StructureConstants<Laurent<C>>,
    base: &StructureConstants<C>,
) -> Result<PerturbationDecomposition<C>> {
    let n = base.dim();
    if perturbed.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: perturbed.dim() });
    }
    let difference: Vec<Laurent<C>> = perturbed
        .coordinates()
        .iter()
        .zip(base.coordinates())
        .map(|(x, c)| x.clone() - Laurent::constant(c.clone()))
        .collect();
    let flag = valued_decompose(&difference)?;
    let cochains = flag
        .vectors
        .iter()
        .map(|v| Cochain::from_values(n, 2, true, v.clone()))
        .collect::<Result<Vec<_>>>()?;
    if let Some(first) = cochains.first() {
        if !coboundary(base, first)?.is_zero() {
            return Err(Error::FirstTermNotCocycle);
        }
    }
    Ok(PerturbationDecomposition { flag, cochains })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxRankReport {
    pub span_dim: usize,
    pub bound: usize,
    pub maximal: bool,
}

/// Dimension of the span of `[phi_i, phi_j]` (`1 <= i <= j <= k-1`) and
/// `d phi_i` (`2 <= i <= k-1`), compared with `k(k-1)/2`.
pub fn max_rank_check<S: Field>(base: &StructureConstants<S>, phis: &[Cochain<S>]) -> Result<MaxRankReport> {
    let n = base.dim();
    for phi in phis {
        require_bilinear(n, phi)?;
    }
    let k = phis.len();
    let mut vectors = Vec::new();
    for i in 0..k.saturating_sub(1) {
        for j in i..k - 1 {
            vectors.push(graded_bracket(&phis[i], &phis[j])?.values().to_vec());
        }
        if i >= 1 {
            vectors.push(coboundary(base, &phis[i])?.values().to_vec());
        }
    }
    let width = crate::tuples::binomial(n, 3) * n;
    let span_dim = span_basis(vectors, width).len();
    let bound = k * k.saturating_sub(1) / 2;
    Ok(MaxRankReport { span_dim, bound, maximal: span_dim == bound })
}
