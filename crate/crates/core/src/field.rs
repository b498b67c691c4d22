//! The scalar abstraction used by the exact linear algebra.
//!
//! Everything in this crate is exact: there is no floating-point instance of
//! [`Field`]. The two instances shipped are [`num_rational::BigRational`] and
//! [`crate::CycNum`].

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn mul_ref(&self, other: &Self) -> Self;

    fn add_ref(&self, other: &Self) -> Self;

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        *self = self.add_ref(&prod);
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        *self = self.add_ref(&-prod);
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
}
