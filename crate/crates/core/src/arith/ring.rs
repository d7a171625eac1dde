//! Scalar ring abstractions shared by polynomials and matrices.
//!
//! Scalars such as [`ModScalar`](super::ModScalar) carry their modulus at
//! runtime, so the additive and multiplicative identities are obtained from
//! an existing element of the same ring (`zero_like` / `one_like`) rather
//! than from an associated constant.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Image of an integer under the canonical map `Z -> R`.
    fn from_integer_like(&self, value: &BigInt) -> Self;

    /// Whether `self` and `other` belong to the same concrete ring
    /// (same modulus, same extension polynomial, ...).
    fn same_ring(&self, other: &Self) -> bool {
        let _ = other;
        true
    }

    /// Short human/JSON tag for the ring, e.g. `Q`, `Q(phi)`, `GF(3)`.
    fn ring_tag(&self) -> String;

    /// True when the rendering starts with a `-` that a polynomial printer
    /// may lift into the surrounding sum.
    fn renders_negative(&self) -> bool {
        false
    }

    /// True when the rendering is a sum and needs parentheses as a factor.
    fn renders_compound(&self) -> bool {
        false
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.clone() * inv)
    }
}

/// A ring with a total order compatible with its arithmetic.
pub trait OrderedRing: Ring {
    fn sign(&self) -> Ordering;

    fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}
