//! Power series truncated at a fixed order `x^N`.

use std::fmt;

use crate::arith::{Field, Ring};
use crate::error::{Error, Result};
use crate::poly::DensePolynomial;

/// First `N` coefficients of a formal power series. All arithmetic is
/// modulo `x^N`; combining series of different orders truncates to the
/// shorter one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> TruncatedSeries<T> {
    /// Truncates or zero-pads `poly` to `order` coefficients; `zero` fixes
    /// the ring when padding is needed.
    pub fn from_polynomial(poly: &DensePolynomial<T>, order: usize, zero: &T) -> Self {
        let coeffs = (0..order)
            .map(|i| poly.coeff(i).cloned().unwrap_or_else(|| zero.zero_like()))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(self.coeffs[k].zero_like(), |acc, i| {
                    acc + self.coeffs[i].clone() * other.coeffs[k - i].clone()
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul_poly(&self, poly: &DensePolynomial<T>) -> Self {
        match self.coeffs.first() {
            Some(z) => self.mul(&Self::from_polynomial(poly, self.order(), z)),
            None => self.clone(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().take(order).cloned().collect() }
    }
}

impl<T: Field> TruncatedSeries<T> {
    /// First `order` coefficients of `num / den` as a formal power series.
    pub fn divide(
        num: &DensePolynomial<T>,
        den: &DensePolynomial<T>,
        order: usize,
    ) -> Result<Self> {
        series_div(num, den, order)
    }
}

/// First `order` coefficients of `num / den`; `den(0)` must be a unit.
pub fn series_div<T: Field>(
    num: &DensePolynomial<T>,
    den: &DensePolynomial<T>,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    let d0 = den
        .coeff(0)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::NotInvertible("denominator has zero constant term".into()))?;
    let d0_inv = d0
        .inverse()
        .ok_or_else(|| Error::NotInvertible(format!("constant term {d0}")))?;
    let zero = d0.zero_like();
    let mut out: Vec<T> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = num.coeff(k).cloned().unwrap_or_else(|| zero.clone());
        for i in 1..=k {
            if let Some(d) = den.coeff(i) {
                acc = acc - d.clone() * out[k - i].clone();
            }
        }
        out.push(acc * d0_inv.clone());
    }
    Ok(TruncatedSeries { coeffs: out })
}

impl<T: Ring> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", body.join(", "), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use proptest::prelude::*;

    fn q(c: &[i64]) -> DensePolynomial<Rational> {
        DensePolynomial::new(c.iter().map(|&v| Rational::from_i64(v)).collect())
    }

    fn ints(s: &TruncatedSeries<Rational>) -> Vec<Rational> {
        s.coeffs().to_vec()
    }

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn division_examples() {
        assert_eq!(ints(&series_div(&q(&[1]), &q(&[1, -1]), 4).unwrap()), r(&[1, 1, 1, 1]));
        assert_eq!(ints(&series_div(&q(&[1]), &q(&[1, -2]), 2).unwrap()), r(&[1, 2]));
        let den = q(&[1, -2]).pow(2);
        assert_eq!(ints(&series_div(&q(&[2, -5]), &den, 2).unwrap()), r(&[2, 3]));
    }

    #[test]
    fn zero_constant_term_rejected() {
        assert!(matches!(series_div(&q(&[1]), &q(&[0, 1]), 3), Err(Error::NotInvertible(_))));
        assert!(matches!(
            series_div(&q(&[1]), &DensePolynomial::zero(), 3),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn mixed_orders_truncate_to_shorter() {
        let a = series_div(&q(&[1]), &q(&[1, -1]), 5).unwrap();
        let b = series_div(&q(&[1]), &q(&[1, -2]), 3).unwrap();
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(ints(&a.mul(&b)), r(&[1, 3, 7]));
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = DensePolynomial<Rational>> {
        prop::collection::vec(-6i64..=6, 0..max_len)
            .prop_map(|c| DensePolynomial::new(c.into_iter().map(Rational::from_i64).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn multiply_back(a in small_poly(5), b in small_poly(5), d0 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), n in 1usize..10) {
            let mut bc = b.coeffs().to_vec();
            if bc.is_empty() { bc.push(Rational::zero()); }
            bc[0] = Rational::from_i64(d0);
            let den = DensePolynomial::new(bc);
            let s = series_div(&a, &den, n).unwrap();
            let back = s.mul_poly(&den);
            prop_assert_eq!(back, TruncatedSeries::from_polynomial(&a, n, &Rational::zero()));
        }
    }
}
