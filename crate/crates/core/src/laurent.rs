//! Laurent polynomials in a formal parameter `eps`, and their fractions.
//!
//! A [`Laurent`] has finite support, so equality is decidable. Positive
//! valuation models the maximal ideal of the valuation ring used for
//! valued deformations, and `eps -> 0` limits are read off the constant
//! coefficient. [`LaurentFraction`] is the fraction field; it appears when a
//! parametric basis change is inverted.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// Order of vanishing at `eps = 0`. `Infinite` is the valuation of zero and
/// compares above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// A finite sum `sum_m c_m eps^m`, `m` in the integers. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Ring> Default for Laurent<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Ring> Laurent<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// The parameter `eps` itself.
    pub fn epsilon() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `eps^exponent`.
    pub fn eps_pow(exponent: i64) -> Self {
        Self::monomial(C::one(), exponent)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::default();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exponent: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exponent) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exponent, sum);
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponent: i64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn valuation(&self) -> Valuation {
        self.terms
            .keys()
            .next()
            .map_or(Valuation::Infinite, |e| Valuation::Finite(*e))
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term, provided no negative powers of `eps` occur.
    pub fn limit_at_zero(&self) -> Result<C> {
        match self.valuation() {
            Valuation::Finite(v) if v < 0 => Err(Error::DivergentEntry {
                context: format!("{self:?}"),
                valuation: v,
            }),
            _ => Ok(self.coefficient(0)),
        }
    }

    /// Multiplies by `eps^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone() * factor.clone())))
    }

    /// Substitutes `eps` by `value`; only defined without negative powers
    /// unless the ring is a field.
    pub fn evaluate_polynomial(&self, value: &C) -> Option<C> {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            if *e < 0 {
                return None;
            }
            let mut p = C::one();
            for _ in 0..*e {
                p = p * value.clone();
            }
            acc = acc + c.clone() * p;
        }
        Some(acc)
    }

    /// Dense ascending coefficients of `self / eps^valuation`. Empty for zero.
    fn dense_from_valuation(&self) -> (i64, Vec<C>) {
        let Some(v) = self.valuation().finite() else {
            return (0, Vec::new());
        };
        let top = self.degree().unwrap_or(v);
        let mut dense = vec![C::zero(); (top - v + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - v) as usize] = c.clone();
        }
        (v, dense)
    }

    fn from_dense(offset: i64, dense: &[C]) -> Self {
        Self::from_terms(dense.iter().enumerate().map(|(i, c)| (offset + i as i64, c.clone())))
    }
}

impl<C: Field> Laurent<C> {
    /// Exact quotient, if it is again a Laurent polynomial.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if rhs.is_monomial() {
            let (e, c) = rhs.terms().next().expect("monomial");
            let inv = c.recip();
            return Ok(self.scale(&inv).shift(-e));
        }
        let (va, a) = self.dense_from_valuation();
        let (vb, b) = rhs.dense_from_valuation();
        // both have nonzero constant terms after the shift, so any Laurent
        // quotient is an ordinary polynomial quotient
        let (q, r) = poly_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonPolynomialQuotient);
        }
        Ok(Self::from_dense(va - vb, &q))
    }
}

impl<C: Ring> Zero for Laurent<C> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for Laurent<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Add for Laurent<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Ring> Sub for Laurent<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Ring> Mul for Laurent<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn from_i64(value: i64) -> Self {
        Self::constant(C::from_i64(value))
    }
}

impl<C: Ring> Laurent<C> {
    fn write_terms(
        &self,
        f: &mut fmt::Formatter<'_>,
        show: impl Fn(&C) -> String,
    ) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let text = show(c);
            let coeff = if text.contains(' ') { format!("({text})") } else { text };
            match e {
                0 => write!(f, "{coeff}")?,
                _ => write!(f, "{coeff} eps^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, |c| c.to_string())
    }
}

impl<C: Ring> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, |c| format!("{c:?}"))
    }
}

fn trim<C: Ring>(p: &mut Vec<C>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Long division of dense ascending polynomials.
fn poly_divrem<C: Field>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().expect("nonzero").recip();
    let mut q = vec![C::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().expect("nonempty").clone() * lead_inv.clone();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - factor.clone() * bc.clone();
        }
        q[shift] = factor;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn poly_gcd<C: Field>(a: &[C], b: &[C]) -> Vec<C> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        let inv = lead.recip();
        for c in x.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
    x
}

/// A quotient of Laurent polynomials, kept in a canonical form: the
/// denominator is a polynomial with constant term 1 that is coprime to the
/// numerator. All powers of `eps` live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentFraction<C> {
    num: Laurent<C>,
    den: Laurent<C>,
}

impl<C: Field> LaurentFraction<C> {
    pub fn new(num: Laurent<C>, den: Laurent<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_laurent(value: Laurent<C>) -> Self {
        Self { num: value, den: Laurent::one() }
    }

    pub fn constant(c: C) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    fn normalized(num: Laurent<C>, den: Laurent<C>) -> Self {
        if num.is_zero() {
            return Self { num, den: Laurent::one() };
        }
        let (vd, d) = den.dense_from_valuation();
        let (vn, n) = num.dense_from_valuation();
        let g = poly_gcd(&n, &d);
        let (mut n, _) = poly_divrem(&n, &g);
        let (mut d, _) = poly_divrem(&d, &g);
        let lead_inv = d[0].recip();
        for c in n.iter_mut().chain(d.iter_mut()) {
            *c = c.clone() * lead_inv.clone();
        }
        Self {
            num: Laurent::from_dense(vn - vd, &n),
            den: Laurent::from_dense(0, &d),
        }
    }

    pub fn numerator(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent<C> {
        &self.den
    }

    pub fn valuation(&self) -> Valuation {
        // the denominator has valuation zero in canonical form
        self.num.valuation()
    }

    /// The Laurent polynomial this fraction equals, if any.
    pub fn to_laurent(&self) -> Option<Laurent<C>> {
        self.den.is_one_poly().then(|| self.num.clone())
    }

    pub fn limit_at_zero(&self) -> Result<C> {
        // den(0) = 1
        self.num.limit_at_zero()
    }
}

impl<C: Ring> Laurent<C> {
    fn is_one_poly(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}

impl<C: Field> Zero for LaurentFraction<C> {
    fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Field> One for LaurentFraction<C> {
    fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }
}

impl<C: Field> Add for LaurentFraction<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(self.num + rhs.num, self.den);
        }
        let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        Self::normalized(num, self.den * rhs.den)
    }
}

impl<C: Field> Sub for LaurentFraction<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Field> Neg for LaurentFraction<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { num: -self.num, den: self.den }
    }
}

impl<C: Field> Mul for LaurentFraction<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::normalized(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<C: Field> Div for LaurentFraction<C> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        Self::normalized(self.num * rhs.den, self.den * rhs.num)
    }
}

impl<C: Field> Ring for LaurentFraction<C> {
    fn from_i64(value: i64) -> Self {
        Self::constant(C::from_i64(value))
    }
}

impl<C: Field> Field for LaurentFraction<C> {
    fn pivot_weight(&self) -> u64 {
        if self.is_zero() {
            0
        } else {
            // prefer short entries
            u64::MAX - (self.num.term_count() + self.den.term_count()) as u64
        }
    }
}

impl<C: Field + fmt::Display> fmt::Display for LaurentFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<C: Field> fmt::Debug for LaurentFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

impl<C: Field> From<Laurent<C>> for LaurentFraction<C> {
    fn from(value: Laurent<C>) -> Self {
        Self::from_laurent(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational;

    type Eps = Laurent<GaussianRational>;

    fn c(v: i64) -> GaussianRational {
        GaussianRational::from_integer(v)
    }

    fn eps(e: i64) -> Eps {
        Eps::eps_pow(e)
    }

    #[test]
    fn exponent_arithmetic() {
        let a = eps(1) + eps(2);
        assert_eq!(a.clone() * eps(-1), Eps::one() + eps(1));
        assert_eq!(eps(2).checked_div(&eps(1)).unwrap(), eps(1));
        assert_eq!(a.checked_div(&(Eps::one() + eps(1))).unwrap(), eps(1));
    }

    #[test]
    fn division_errors() {
        assert_eq!(eps(1).checked_div(&Eps::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            Eps::one().checked_div(&(Eps::one() + eps(1))),
            Err(Error::NonPolynomialQuotient)
        );
    }

    #[test]
    fn valuations_and_limits() {
        assert_eq!((eps(1) + eps(2)).valuation(), Valuation::Finite(1));
        assert_eq!(Eps::constant(c(3)).valuation(), Valuation::Finite(0));
        assert_eq!(Eps::zero().valuation(), Valuation::Infinite);
        assert_eq!((Eps::constant(c(2)) + eps(1)).limit_at_zero().unwrap(), c(2));
        assert_eq!(eps(3).limit_at_zero().unwrap(), c(0));
        assert!(matches!(eps(-1).limit_at_zero(), Err(Error::DivergentEntry { .. })));
    }

    #[test]
    fn fractions_normalize() {
        let one_plus = Eps::one() + eps(1);
        let f = LaurentFraction::new(one_plus.clone() * eps(2), one_plus.clone() * eps(1)).unwrap();
        assert_eq!(f.to_laurent(), Some(eps(1)));
        let g = LaurentFraction::new(eps(1), one_plus.clone()).unwrap();
        assert_eq!(g.to_laurent(), None);
        assert_eq!(g.valuation(), Valuation::Finite(1));
        assert_eq!(g.limit_at_zero().unwrap(), c(0));
        let h = LaurentFraction::new(Eps::constant(c(3)), Eps::constant(c(2)) + eps(1)).unwrap();
        assert_eq!(h.limit_at_zero().unwrap(), GaussianRational::ratio(3, 2));
        // (1+e)^-1 * (1+e) = 1
        let inv = LaurentFraction::new(Eps::one(), one_plus.clone()).unwrap();
        assert_eq!(inv * LaurentFraction::from(one_plus), LaurentFraction::one());
    }

    #[test]
    fn display() {
        let a = Eps::constant(c(3)) + eps(-1).scale(&GaussianRational::ratio(1, 2)) + eps(2);
        assert_eq!(a.to_string(), "1/2 eps^-1 + 3 + 1 eps^2");
    }
}
