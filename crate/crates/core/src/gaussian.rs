//! Gaussian rationals `a + b i` with arbitrary-precision rational parts.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{denom_lcm, rational_abs_bits, Field, Ring};

/// An element of `Q(i)`. Both parts are kept in lowest terms with positive
/// denominators, so derived equality is canonical-form equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_integer(value: i64) -> Self {
        Self::from_real(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom` on the real axis. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_real(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as `p/q`, `r/s i` or `p/q+r/s i`, the coefficient grammar used by
/// algebra documents.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{} i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{} i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{} i", self.re, self.im)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Gaussian rational `{0}`")]
pub struct ParseGaussianError(pub String);

fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.strip_prefix('+').unwrap_or(text);
    if text.is_empty() {
        return None;
    }
    let value = BigRational::from_str(text).ok()?;
    Some(value)
}

fn parse_imag_coefficient(text: &str) -> Option<BigRational> {
    match text {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(text),
    }
}

impl FromStr for GaussianRational {
    type Err = ParseGaussianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || ParseGaussianError(s.to_string());
        if compact.is_empty() {
            return Err(err());
        }
        let Some(body) = compact.strip_suffix('i') else {
            return parse_rational(&compact).map(Self::from_real).ok_or_else(err);
        };
        // split before the sign that starts the imaginary part
        let split = body
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .next_back();
        match split {
            Some(idx) => {
                let re = parse_rational(&body[..idx]).ok_or_else(err)?;
                let im = parse_imag_coefficient(&body[idx..]).ok_or_else(err)?;
                Ok(Self::new(re, im))
            }
            None => {
                let im = parse_imag_coefficient(body).ok_or_else(err)?;
                Ok(Self::new(BigRational::zero(), im))
            }
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::from_real(self.re * rhs.re);
        }
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Self { re, im }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        if rhs.im.is_zero() {
            return Self { re: self.re / &rhs.re, im: self.im / &rhs.re };
        }
        let norm = rhs.norm_sqr();
        let num = self * rhs.conj();
        Self { re: num.re / &norm, im: num.im / norm }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Ring for GaussianRational {
    fn from_i64(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl Field for GaussianRational {
    fn pivot_weight(&self) -> u64 {
        if self.is_zero() {
            0
        } else {
            rational_abs_bits(&self.re).max(rational_abs_bits(&self.im)) + 1
        }
    }

    fn clear_denominators(row: &mut [Self]) {
        let lcm = denom_lcm(row.iter().flat_map(|x| [&x.re, &x.im]));
        if lcm.is_one() {
            return;
        }
        let factor = BigRational::from_integer(lcm);
        for x in row.iter_mut().filter(|x| !x.is_zero()) {
            x.re = &x.re * &factor;
            x.im = &x.im * &factor;
        }
    }
}

impl From<BigRational> for GaussianRational {
    fn from(value: BigRational) -> Self {
        Self::from_real(value)
    }
}

impl From<i64> for GaussianRational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}
