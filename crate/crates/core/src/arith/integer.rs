//! Integer sequences: Fibonacci numbers, binomial and signed fibonomial
//! coefficients, and the small primality test used to validate moduli.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// Fibonacci number `F_k` for any signed index.
///
/// `F_0 = 0`, `F_1 = F_2 = 1`, and `F_{-k} = (-1)^{k+1} F_k`, which is the
/// unique extension keeping `F_{k+1} = F_k + F_{k-1}` valid everywhere.
/// Computed by fast doubling in `O(log |k|)` big-integer multiplications.
pub fn fib(k: i64) -> BigInt {
    let m = k.unsigned_abs();
    let (f, _) = fib_pair(m);
    if k < 0 && m.is_multiple_of(2) {
        -f
    } else {
        f
    }
}

/// Returns `(F_m, F_{m+1})`.
fn fib_pair(m: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if m == 0 {
        return (a, b);
    }
    let bits = 64 - m.leading_zeros();
    for shift in (0..bits).rev() {
        // F_{2t} = F_t (2 F_{t+1} - F_t), F_{2t+1} = F_t^2 + F_{t+1}^2
        let two_b = &b << 1;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (m >> shift) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// Binomial coefficient `C(a, b)` for `a >= 0`; zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Checked binomial coefficient accepting a signed upper index.
pub fn binom(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::Domain(format!(
            "binomial upper index must be nonnegative, got {a}"
        )));
    }
    Ok(binomial(a as u64, b))
}

/// Signed fibonomial array: `b(n,0) = 1`, `b(n,m) = 0` for `m > n`, and
/// `b(n,m) = b(n-1,m-1) * (-1)^m * F_n / F_m` otherwise.
///
/// The value is always an integer; it is returned as a [`Rational`] because
/// the recurrence divides.
pub fn fibonomial_b(n: u64, m: u64) -> Rational {
    if m > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    // walk (n-m, 0) -> (n-m+1, 1) -> ... -> (n, m)
    for step in 1..=m {
        let row = (n - m + step) as i64;
        let col = step as i64;
        let ratio = Rational::from_parts(fib(row), fib(col));
        acc = if step % 2 == 1 { -(acc * ratio) } else { acc * ratio };
    }
    acc
}

/// Trial-division primality test; adequate for desk-scale moduli.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p | F_{p+1}`, the hypothesis of the power identity.
pub fn divides_fib_successor(p: u64) -> bool {
    let f = fib(p as i64 + 1);
    f.is_multiple_of(&BigInt::from(p))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow_big(base: &BigInt, exp: u64) -> BigInt {
    num_traits::pow(base.clone(), exp as usize)
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn one_like(&self) -> Self {
        BigInt::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_integer_like(&self, value: &BigInt) -> Self {
        value.clone()
    }

    fn ring_tag(&self) -> String {
        "Z".into()
    }

    fn renders_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
}
