//! Dense univariate polynomials over any [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Ring;
use crate::error::{Error, Result};

/// Coefficients in ascending degree; index `i` holds the coefficient of
/// `x^i`. Trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> DensePolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `a + b x`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    /// Monic `prod (x - r)` over the given roots.
    pub fn from_roots(one: &T, roots: &[T]) -> Self {
        roots.iter().fold(Self::constant(one.clone()), |acc, r| {
            acc * Self::linear(-r.clone(), one.clone())
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, or `None` past the degree.
    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    fn ring_of(&self) -> Option<&T> {
        self.coeffs.first()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        match (self.ring_of(), other.ring_of()) {
            (Some(a), Some(b)) if !a.same_ring(b) => Err(Error::MixedRings {
                left: a.ring_tag(),
                right: b.ring_tag(),
            }),
            _ => Ok(()),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.clone() + s.clone();
        }
        Ok(Self::new(out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::new(out))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self^k` by binary exponentiation; `p^0 = 1`. The zero polynomial
    /// carries no ring, so `0^0` is reported as the (ringless) zero.
    pub fn pow(&self, mut k: u64) -> Self {
        let Some(one) = self.ring_of().map(|c| c.one_like()) else {
            return Self::zero();
        };
        let mut acc = Self::constant(one);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation in a ring the coefficients embed into.
    pub fn eval_with<U: Ring>(&self, x: &U, embed: impl Fn(&T) -> U) -> U {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc * x.clone() + embed(c))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> DensePolynomial<U> {
        DensePolynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<DensePolynomial<U>> {
        Ok(DensePolynomial::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// `(-1)^n * self`; turns the monic `det(xI - A)` of an order-`n`
    /// matrix into `det(A - xI)`.
    pub fn sign_flipped(&self, n: usize) -> Self {
        if n.is_multiple_of(2) {
            self.clone()
        } else {
            -self.clone()
        }
    }

    /// Ascending text form `c0 + c1*x + c2*x^2`, unit coefficients elided.
    pub fn to_ascending_string(&self) -> String {
        render(self.coeffs.iter().enumerate(), "*")
    }

    /// Descending text form `x^4 - 3x^3 + 1`, coefficients juxtaposed.
    pub fn to_descending_string(&self) -> String {
        render(self.coeffs.iter().enumerate().rev(), "")
    }
}

fn render<'a, T: Ring + 'a>(terms: impl Iterator<Item = (usize, &'a T)>, times: &str) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.renders_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        let sep = match (out.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sep);
        let power = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        if magnitude.renders_compound() && k == 0 {
            out.push_str(&format!("({magnitude})"));
        } else if k == 0 {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&power);
        } else if magnitude.renders_compound() {
            out.push_str(&format!("({magnitude}){times}{power}"));
        } else {
            out.push_str(&format!("{magnitude}{times}{power}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl<T: Ring> fmt::Display for DensePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascending_string())
    }
}

// The operator impls panic on mixed rings; use the `checked_*` methods when
// operands come from outside.
impl<T: Ring> Add for DensePolynomial<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("polynomial ring mismatch")
    }
}

impl<T: Ring> Sub for DensePolynomial<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("polynomial ring mismatch")
    }
}

impl<T: Ring> Mul for DensePolynomial<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("polynomial ring mismatch")
    }
}

impl<T: Ring> Neg for DensePolynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DensePolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}
