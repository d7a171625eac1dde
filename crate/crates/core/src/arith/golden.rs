//! The real quadratic field Q(phi), phi = (1 + sqrt 5) / 2.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{fib, Field, ModQuadScalar, OrderedRing, QuadModulus, Rational, Ring};
use crate::error::Result;

/// `a + b*phi` with rational `a`, `b`; multiplication uses `phi^2 = phi + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GoldenNumber {
    pub a: Rational,
    pub b: Rational,
}

impl GoldenNumber {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNumber { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        GoldenNumber { a, b: Rational::zero() }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        GoldenNumber::new(Rational::from_i64(a), Rational::from_i64(b))
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn phi() -> Self {
        Self::from_i64(0, 1)
    }

    /// `phibar = 1 - phi = (1 - sqrt 5) / 2`.
    pub fn phi_bar() -> Self {
        Self::from_i64(1, -1)
    }

    /// `phi^k = F_{k-1} + F_k phi`, valid for every signed `k`.
    pub fn phi_pow(k: i64) -> Self {
        GoldenNumber::new(Rational::from_integer(fib(k - 1)), Rational::from_integer(fib(k)))
    }

    /// Galois conjugate, `phi -> 1 - phi`.
    pub fn conj(&self) -> Self {
        GoldenNumber::new(self.a.clone() + self.b.clone(), -self.b.clone())
    }

    /// `x * conj(x) = a^2 + ab - b^2`.
    pub fn norm(&self) -> Rational {
        let (a, b) = (&self.a, &self.b);
        a.clone() * a.clone() + a.clone() * b.clone() - b.clone() * b.clone()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Image under `phi -> t` where `t` is the chosen root of `x^2 - x - 1`
    /// in GF(p^2). Fails when `p` divides a denominator.
    pub fn to_mod_quad(&self, modulus: QuadModulus) -> Result<ModQuadScalar> {
        let phi = modulus.golden_root()?;
        let a = ModQuadScalar::from_base(self.a.to_mod(modulus.p())?, modulus);
        let b = ModQuadScalar::from_base(self.b.to_mod(modulus.p())?, modulus);
        Ok(a + b * phi)
    }

    /// Lossy float value, for diagnostics only.
    pub fn approx(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * phi
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Exact sign of `a + b*phi` without floating point.
///
/// Writes the value as `(u + v sqrt 5) / 2` with `u = 2a + b`, `v = b` and
/// compares `u^2` with `5 v^2` when the two parts disagree in sign.
pub fn golden_sign(x: &GoldenNumber) -> Ordering {
    let two = Rational::from_i64(2);
    let u = two * x.a.clone() + x.b.clone();
    let v = x.b.clone();
    let su = u.sign();
    let sv = v.sign();
    match (su, sv) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        _ => {
            let lhs = u.clone() * u;
            let rhs = Rational::from_i64(5) * v.clone() * v;
            // u^2 = 5 v^2 forces u = v = 0, excluded above
            if lhs > rhs {
                su
            } else {
                sv
            }
        }
    }
}

/// Order of `|x|` against `|y|`.
pub fn cmp_abs(x: &GoldenNumber, y: &GoldenNumber) -> Ordering {
    golden_sign(&(x.abs() - y.abs()))
}

impl fmt::Display for GoldenNumber {
    /// Renders `a+b*phi`, dropping zero parts and unit coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b_one = self.b == Rational::one();
        let b_minus_one = self.b == Rational::from_i64(-1);
        let phi_term = if b_one {
            "phi".to_string()
        } else if b_minus_one {
            "-phi".to_string()
        } else {
            format!("{}*phi", self.b)
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{phi_term}"),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}{}", self.a, phi_term)
                } else {
                    write!(f, "{}+{}", self.a, phi_term)
                }
            }
        }
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: GoldenNumber) -> GoldenNumber {
        // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        let bd = b.clone() * d.clone();
        GoldenNumber::new(
            a.clone() * c.clone() + bd.clone(),
            a * d + b * c + bd,
        )
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.a, -self.b)
    }
}

impl From<Rational> for GoldenNumber {
    fn from(a: Rational) -> Self {
        GoldenNumber::rational(a)
    }
}

impl Ring for GoldenNumber {
    fn zero_like(&self) -> Self {
        GoldenNumber::zero()
    }

    fn one_like(&self) -> Self {
        GoldenNumber::one()
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn from_integer_like(&self, value: &BigInt) -> Self {
        GoldenNumber::rational(Rational::from_integer(value.clone()))
    }

    fn ring_tag(&self) -> String {
        "Q(phi)".into()
    }

    fn renders_negative(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_negative()
        } else {
            self.b.is_zero() && self.a.is_negative()
        }
    }

    fn renders_compound(&self) -> bool {
        !self.a.is_zero() && !self.b.is_zero()
    }
}

impl Field for GoldenNumber {
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        let inv = n.inverse()?;
        let c = self.conj();
        Some(GoldenNumber::new(c.a * inv.clone(), c.b * inv))
    }
}

impl OrderedRing for GoldenNumber {
    fn sign(&self) -> Ordering {
        golden_sign(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn golden() -> impl Strategy<Value = GoldenNumber> {
        (small_rational(), small_rational()).prop_map(|(a, b)| GoldenNumber::new(a, b))
    }

    #[test]
    fn sign_examples() {
        let phi = GoldenNumber::phi();
        let one = GoldenNumber::one();
        assert_eq!(golden_sign(&(phi.clone() - one.clone())), Ordering::Greater);
        assert_eq!(
            golden_sign(&(GoldenNumber::phi_bar() + phi - one)),
            Ordering::Equal
        );
        assert_eq!(golden_sign(&GoldenNumber::phi_bar()), Ordering::Less);
    }

    #[test]
    fn phi_relations() {
        let phi = GoldenNumber::phi();
        let bar = GoldenNumber::phi_bar();
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + GoldenNumber::one());
        assert_eq!(phi.clone() * bar.clone(), GoldenNumber::from_i64(-1, 0));
        assert_eq!(phi.clone() + bar.clone(), GoldenNumber::one());
        assert_eq!(phi.conj(), bar);
        for k in 0..=12i64 {
            let up = GoldenNumber::phi_pow(k);
            assert_eq!(up, Ring::pow(&phi, k as u64));
            assert_eq!(GoldenNumber::phi_pow(-k), up.inverse().unwrap());
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(GoldenNumber::phi_pow(3).to_string(), "1+2*phi");
        assert_eq!(GoldenNumber::phi_bar().to_string(), "1-phi");
        assert_eq!(GoldenNumber::from_i64(0, -1).to_string(), "-phi");
        assert_eq!(GoldenNumber::from_i64(-1, 0).to_string(), "-1");
        assert_eq!(
            GoldenNumber::new(Rational::new(1, 2), Rational::new(-1, 3)).to_string(),
            "1/2-1/3*phi"
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn norm_is_rational(x in golden()) {
            let prod = x.clone() * x.conj();
            prop_assert!(prod.is_rational());
            prop_assert_eq!(prod.a, x.norm());
        }

        #[test]
        fn inverse_roundtrip(x in golden()) {
            prop_assume!(!x.is_zero());
            prop_assert!(!x.norm().is_zero());
            prop_assert_eq!(x.clone() * x.inverse().unwrap(), GoldenNumber::one());
        }

        #[test]
        fn field_axioms(x in golden(), y in golden(), z in golden()) {
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * y.clone(), y * x);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn sign_agrees_with_float(x in golden()) {
            let approx = x.approx();
            prop_assume!(approx.abs() > 1e-6);
            let expected = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(golden_sign(&x), expected);
        }
    }
}
