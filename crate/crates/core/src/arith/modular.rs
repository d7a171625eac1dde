//! Prime fields GF(p) and their quadratic extensions GF(p^2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{is_prime, Field, Ring};
use crate::error::{Error, Result};
use crate::poly::DensePolynomial;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Residue `value mod p`, `0 <= value < p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModScalar {
    value: u64,
    modulus: u64,
}

impl ModScalar {
    /// Reduces a signed integer into GF(p). `p` is not checked for primality
    /// here; use [`ModScalar::checked`] at API boundaries.
    pub fn new(value: i64, p: u64) -> Self {
        let v = value.rem_euclid(p as i64) as u64;
        ModScalar { value: v, modulus: p }
    }

    pub fn checked(value: i64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::new(value, p))
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        ModScalar { value: value % p, modulus: p }
    }

    pub fn from_bigint(value: &BigInt, p: u64) -> Result<Self> {
        let r = value.mod_floor(&BigInt::from(p));
        let v = r
            .to_u64()
            .ok_or_else(|| Error::Domain(format!("cannot reduce {value} mod {p}")))?;
        Ok(ModScalar { value: v, modulus: p })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Euler criterion; zero counts as a square.
    pub fn is_square(&self) -> bool {
        if self.value == 0 || self.modulus == 2 {
            return true;
        }
        pow_mod(self.value, (self.modulus - 1) / 2, self.modulus) == 1
    }

    /// A square root when one exists in GF(p), normalized to the smaller of
    /// the two representatives.
    pub fn sqrt(&self) -> Option<Self> {
        let p = self.modulus;
        if !self.is_square() {
            return None;
        }
        let r = if self.value == 0 || p == 2 {
            self.value
        } else {
            tonelli_shanks(self.value, p)
        };
        Some(ModScalar::from_u64(r.min(p - r), p))
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between GF({}) and GF({})",
            self.modulus, other.modulus
        );
    }
}

fn tonelli_shanks(n: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

impl fmt::Display for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ModScalar {
    type Output = ModScalar;
    fn add(self, rhs: ModScalar) -> ModScalar {
        self.check(&rhs);
        let p = self.modulus;
        ModScalar { value: ((self.value as u128 + rhs.value as u128) % p as u128) as u64, modulus: p }
    }
}

impl Sub for ModScalar {
    type Output = ModScalar;
    fn sub(self, rhs: ModScalar) -> ModScalar {
        self + (-rhs)
    }
}

impl Mul for ModScalar {
    type Output = ModScalar;
    fn mul(self, rhs: ModScalar) -> ModScalar {
        self.check(&rhs);
        ModScalar { value: mul_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl Neg for ModScalar {
    type Output = ModScalar;
    fn neg(self) -> ModScalar {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        ModScalar { value: v, modulus: self.modulus }
    }
}

impl Ring for ModScalar {
    fn zero_like(&self) -> Self {
        ModScalar { value: 0, modulus: self.modulus }
    }

    fn one_like(&self) -> Self {
        ModScalar::from_u64(1, self.modulus)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn from_integer_like(&self, value: &BigInt) -> Self {
        ModScalar::from_bigint(value, self.modulus).expect("residue fits in u64")
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }

    fn ring_tag(&self) -> String {
        format!("GF({})", self.modulus)
    }
}

impl Field for ModScalar {
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(ModScalar {
                value: pow_mod(self.value, self.modulus - 2, self.modulus),
                modulus: self.modulus,
            })
        }
    }
}

/// Monic irreducible `t^2 + m1 t + m0` over GF(p) defining GF(p^2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QuadModulus {
    p: u64,
    m1: u64,
    m0: u64,
}

impl QuadModulus {
    pub fn new(p: u64, m1: i64, m0: i64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m = QuadModulus {
            p,
            m1: ModScalar::new(m1, p).value,
            m0: ModScalar::new(m0, p).value,
        };
        if !m.is_irreducible() {
            return Err(Error::Domain(format!(
                "t^2 + {}t + {} is reducible over GF({p})",
                m.m1, m.m0
            )));
        }
        Ok(m)
    }

    /// The fixed extension used throughout: `t^2 - t - 1` whenever it is
    /// irreducible (so `t` is the image of phi), otherwise `t^2 - d` for the
    /// least quadratic non-residue `d`.
    pub fn standard(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Ok(m) = QuadModulus::new(p, -1, -1) {
            return Ok(m);
        }
        let d = (2..p)
            .find(|&d| !ModScalar::from_u64(d, p).is_square())
            .ok_or_else(|| Error::Domain(format!("no quadratic non-residue mod {p}")))?;
        QuadModulus::new(p, 0, -(d as i64))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `(m1, m0)` as residues.
    pub fn coefficients(&self) -> (ModScalar, ModScalar) {
        (ModScalar::from_u64(self.m1, self.p), ModScalar::from_u64(self.m0, self.p))
    }

    fn is_irreducible(&self) -> bool {
        if self.p == 2 {
            // only t^2 + t + 1 lacks a root in GF(2)
            return self.m1 == 1 && self.m0 == 1;
        }
        let (m1, m0) = self.coefficients();
        let four = ModScalar::from_u64(4, self.p);
        !(m1 * m1 - four * m0).is_square()
    }

    /// The generator `t`.
    pub fn generator(&self) -> ModQuadScalar {
        ModQuadScalar { c0: 0, c1: 1 % self.p, modulus: *self }
    }

    /// Image of phi: the first root returned by [`quad_ext_roots`] for
    /// `x^2 - x - 1`.
    pub fn golden_root(&self) -> Result<ModQuadScalar> {
        let p = self.p;
        let golden = DensePolynomial::new(vec![
            ModScalar::new(-1, p),
            ModScalar::new(-1, p),
            ModScalar::new(1, p),
        ]);
        Ok(quad_ext_roots_in(&golden, *self)?.0)
    }
}

/// Element `c0 + c1 t` of GF(p)[t]/(m(t)).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModQuadScalar {
    c0: u64,
    c1: u64,
    modulus: QuadModulus,
}

impl ModQuadScalar {
    pub fn new(c0: i64, c1: i64, modulus: QuadModulus) -> Self {
        ModQuadScalar {
            c0: ModScalar::new(c0, modulus.p).value,
            c1: ModScalar::new(c1, modulus.p).value,
            modulus,
        }
    }

    pub fn from_base(x: ModScalar, modulus: QuadModulus) -> Self {
        assert_eq!(x.modulus, modulus.p, "base field mismatch");
        ModQuadScalar { c0: x.value, c1: 0, modulus }
    }

    pub fn c0(&self) -> ModScalar {
        ModScalar::from_u64(self.c0, self.modulus.p)
    }

    pub fn c1(&self) -> ModScalar {
        ModScalar::from_u64(self.c1, self.modulus.p)
    }

    pub fn modulus(&self) -> QuadModulus {
        self.modulus
    }

    fn parts(&self) -> (ModScalar, ModScalar) {
        (self.c0(), self.c1())
    }

    fn from_parts(c0: ModScalar, c1: ModScalar, modulus: QuadModulus) -> Self {
        ModQuadScalar { c0: c0.value, c1: c1.value, modulus }
    }

    /// Frobenius-style conjugate: the image under `t -> -m1 - t`.
    pub fn conj(&self) -> Self {
        let (c0, c1) = self.parts();
        let (m1, _) = self.modulus.coefficients();
        Self::from_parts(c0 - c1 * m1, -c1, self.modulus)
    }

    pub fn is_base(&self) -> bool {
        self.c1 == 0
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "arithmetic across different GF(p^2) models");
    }
}

impl fmt::Display for ModQuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0, self.c1) {
            (c0, 0) => write!(f, "{c0}"),
            (0, 1) => write!(f, "t"),
            (0, c1) => write!(f, "{c1}*t"),
            (c0, 1) => write!(f, "{c0}+t"),
            (c0, c1) => write!(f, "{c0}+{c1}*t"),
        }
    }
}

impl Add for ModQuadScalar {
    type Output = ModQuadScalar;
    fn add(self, rhs: ModQuadScalar) -> ModQuadScalar {
        self.check(&rhs);
        let (a0, a1) = self.parts();
        let (b0, b1) = rhs.parts();
        Self::from_parts(a0 + b0, a1 + b1, self.modulus)
    }
}

impl Sub for ModQuadScalar {
    type Output = ModQuadScalar;
    fn sub(self, rhs: ModQuadScalar) -> ModQuadScalar {
        self + (-rhs)
    }
}

impl Mul for ModQuadScalar {
    type Output = ModQuadScalar;
    fn mul(self, rhs: ModQuadScalar) -> ModQuadScalar {
        self.check(&rhs);
        let (a0, a1) = self.parts();
        let (b0, b1) = rhs.parts();
        let (m1, m0) = self.modulus.coefficients();
        // t^2 = -m1 t - m0
        let top = a1 * b1;
        let c0 = a0 * b0 - top * m0;
        let c1 = a0 * b1 + a1 * b0 - top * m1;
        Self::from_parts(c0, c1, self.modulus)
    }
}

impl Neg for ModQuadScalar {
    type Output = ModQuadScalar;
    fn neg(self) -> ModQuadScalar {
        let (c0, c1) = self.parts();
        Self::from_parts(-c0, -c1, self.modulus)
    }
}

impl Ring for ModQuadScalar {
    fn zero_like(&self) -> Self {
        ModQuadScalar { c0: 0, c1: 0, modulus: self.modulus }
    }

    fn one_like(&self) -> Self {
        ModQuadScalar { c0: 1 % self.modulus.p, c1: 0, modulus: self.modulus }
    }

    fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    fn from_integer_like(&self, value: &BigInt) -> Self {
        let base = ModScalar::from_bigint(value, self.modulus.p).expect("residue fits in u64");
        ModQuadScalar::from_base(base, self.modulus)
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }

    fn ring_tag(&self) -> String {
        format!("GF({}^2)", self.modulus.p)
    }

    fn renders_compound(&self) -> bool {
        self.c0 != 0 && self.c1 != 0
    }
}

impl Field for ModQuadScalar {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let c = self.conj();
        let norm = (*self * c).c0();
        let inv = norm.inverse()?;
        Some(c * ModQuadScalar::from_base(inv, self.modulus))
    }
}

/// Both roots of a monic quadratic over GF(p), inside GF(p^2) built with
/// [`QuadModulus::standard`]. Roots already in GF(p) come back embedded.
pub fn quad_ext_roots(
    p: u64,
    poly: &DensePolynomial<ModScalar>,
) -> Result<(ModQuadScalar, ModQuadScalar)> {
    let modulus = QuadModulus::standard(p)?;
    quad_ext_roots_in(poly, modulus)
}

/// Like [`quad_ext_roots`] with an explicit extension model.
pub fn quad_ext_roots_in(
    poly: &DensePolynomial<ModScalar>,
    modulus: QuadModulus,
) -> Result<(ModQuadScalar, ModQuadScalar)> {
    let p = modulus.p;
    let not_monic = || Error::NotMonicQuadratic {
        degree: poly.degree(),
        leading: poly.leading().map(|c| c.to_string()).unwrap_or_else(|| "0".into()),
    };
    if poly.degree() != Some(2) || !poly.leading().is_some_and(|c| c.is_one()) {
        return Err(not_monic());
    }
    let c = poly.coeffs()[0];
    let b = poly.coeffs()[1];
    if c.modulus() != p {
        return Err(Error::MixedRings { left: c.ring_tag(), right: format!("GF({p})") });
    }
    let (m1, m0) = modulus.coefficients();
    let embed = |x: ModScalar| ModQuadScalar::from_base(x, modulus);
    let t = modulus.generator();
    if b == m1 && c == m0 {
        return Ok((t, embed(-m1) - t));
    }
    if p == 2 {
        let elements = [
            ModQuadScalar::new(0, 0, modulus),
            ModQuadScalar::new(1, 0, modulus),
            ModQuadScalar::new(0, 1, modulus),
            ModQuadScalar::new(1, 1, modulus),
        ];
        let eval = |z: ModQuadScalar| z * z + embed(b) * z + embed(c);
        let roots: Vec<_> = elements.iter().copied().filter(|&z| eval(z).is_zero()).collect();
        return match roots.as_slice() {
            [r] => Ok((*r, *r)),
            [r, s] => Ok((*r, *s)),
            _ => Err(Error::Domain("polynomial has no roots in GF(4)".into())),
        };
    }
    let four = ModScalar::from_u64(4, p);
    let disc = b * b - four * c;
    let sqrt_disc = match disc.sqrt() {
        Some(s) => embed(s),
        None => {
            // (2t + m1)^2 = m1^2 - 4 m0, a non-residue; the quotient is a residue
            let disc_m = m1 * m1 - four * m0;
            let ratio = disc * disc_m.inverse().expect("irreducible modulus has nonzero discriminant");
            let scale = ratio.sqrt().expect("quotient of non-residues is a residue");
            embed(scale) * (embed(ModScalar::from_u64(2, p)) * t + embed(m1))
        }
    };
    let half = embed(ModScalar::from_u64(2, p).inverse().expect("p is odd"));
    let r1 = (embed(-b) + sqrt_disc) * half;
    let r2 = (embed(-b) - sqrt_disc) * half;
    Ok((r1, r2))
}
