//! Scalar traits shared by every algebraic routine in the crate.
//!
//! Structure constants, cochains and matrices are generic over [`Ring`];
//! anything that needs rank, kernels or inverses additionally requires
//! [`Field`]. Everything is exact: there is no floating-point implementation.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(value: i64) -> Self;

    fn from_ratio(numer: i64, denom: i64) -> Option<Self>
    where
        Self: Field,
    {
        if denom == 0 {
            return None;
        }
        Some(Self::from_i64(numer) / Self::from_i64(denom))
    }
}

/// A commutative field. Division by zero panics; callers check first.
pub trait Field: Ring + Div<Output = Self> {
    /// Size heuristic used for pivot selection during elimination.
    /// Larger means "bigger numerator".
    fn pivot_weight(&self) -> u64 {
        u64::from(!self.is_zero())
    }

    /// Rescales `row` by a nonzero constant so that its entries become
    /// integral, when the field has a notion of integrality.
    fn clear_denominators(_row: &mut [Self]) {}

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

impl Ring for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

impl Field for BigRational {
    fn pivot_weight(&self) -> u64 {
        if self.is_zero() {
            0
        } else {
            self.numer().bits() + 1
        }
    }

    fn clear_denominators(row: &mut [Self]) {
        let lcm = row
            .iter()
            .filter(|x| !x.is_zero())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        if lcm.is_one() {
            return;
        }
        let factor = BigRational::from_integer(lcm);
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &factor;
            }
        }
    }
}

/// Least common multiple of the denominators of a rational, as an integer.
pub(crate) fn denom_lcm<'a>(values: impl Iterator<Item = &'a BigRational>) -> BigInt {
    values
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub(crate) fn rational_abs_bits(x: &BigRational) -> u64 {
    if x.is_zero() {
        0
    } else {
        x.numer().abs().bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d).unwrap()
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-1, -2), q(1, 2));
        assert_eq!(*q(3, -6).denom(), BigInt::from(2));
    }

    #[test]
    fn clear_denominators_makes_row_integral() {
        let mut row = vec![q(1, 2), q(2, 3), Rational::zero(), q(-5, 4)];
        Rational::clear_denominators(&mut row);
        assert!(row.iter().all(|x| x.is_integer()));
        assert_eq!(row[0], q(6, 1));
        assert_eq!(row[3], q(-15, 1));
    }
}
