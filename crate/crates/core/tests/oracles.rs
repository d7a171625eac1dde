//! Closed forms against oracles that share no code path with them.

use binomat::arith::{binomial, fib, fibonomial_b};
use binomat::family::{abs_inverse, binomial_r, exchange, lower_pascal};
use binomat::genfun::{col_gf, row_gf};
use binomat::spectra::{closed_form_eigenvalues, modular_charpoly_closed};
use binomat::{DensePolynomial, Field, GoldenNumber, ModQuadScalar, ModScalar, QuadModulus, Rational, Ring, SquareMatrix};
use num_traits::Signed;
use proptest::prelude::*;

/// Plain nested-loop product.
fn naive_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

/// `R_n` from the binomial table, independent of the library builders.
fn r_rows(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(binomial(i as u64, (n - 1 - j) as i64))).collect())
        .collect()
}

fn naive_pow(n: usize, e: u64) -> Vec<Vec<Rational>> {
    let base = r_rows(n);
    (1..e).fold(base.clone(), |acc, _| naive_mul(&acc, &base))
}

/// Monic characteristic polynomial by Faddeev-LeVerrier (uses division by k).
fn faddeev_leverrier(a: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let identity: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let am = naive_mul(a, &m);
        m = (0..n)
            .map(|i| (0..n).map(|j| am[i][j].clone() + coeffs[n - k + 1].clone() * identity[i][j].clone()).collect())
            .collect();
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + naive_mul(a, &m)[i][i].clone());
        coeffs[n - k] = -(trace * Rational::new(1, k as i64));
    }
    coeffs
}

#[test]
fn charpoly_matches_faddeev_leverrier() {
    for n in 1..=12 {
        let berkowitz = binomial_r(n, &Rational::one()).charpoly();
        let integral = binomial_r(n, &Rational::one()).charpoly_over_z();
        let oracle = faddeev_leverrier(&r_rows(n));
        assert_eq!(berkowitz.coeffs(), oracle.as_slice(), "n = {n}");
        assert_eq!(integral, berkowitz, "n = {n}");
    }
}

#[test]
fn known_charpolys() {
    let expect = |n: usize, s: &str| {
        assert_eq!(binomial_r(n, &Rational::one()).charpoly().to_descending_string(), s);
    };
    expect(1, "x - 1");
    expect(2, "x^2 - x - 1");
    expect(3, "x^3 - 2x^2 - 2x + 1");
    expect(4, "x^4 - 3x^3 - 6x^2 + 3x + 1");
}

#[test]
fn modular_closed_forms_match_reduced_integer_charpoly() {
    for n in 1..=40 {
        let exact = binomial_r(n, &Rational::one()).charpoly_over_z().sign_flipped(n);
        for p in [3, 5] {
            let reduced = exact.try_map(|c| c.to_mod(p)).unwrap();
            let form = modular_charpoly_closed(p, n).unwrap();
            assert_eq!(form.polynomial, reduced, "p = {p}, n = {n}");
            if let Some(compact) = form.compact {
                assert_eq!(compact, reduced, "compact, n = {n}");
            }
        }
    }
}

#[test]
fn eigenvalues_reduce_to_roots_mod_p() {
    // Reducing the golden spectrum into GF(p^2) must factor the reduced
    // characteristic polynomial, for split and inert primes alike.
    for p in [2u64, 3, 5, 7, 11, 13] {
        let modulus = QuadModulus::standard(p).unwrap();
        let one = ModQuadScalar::new(1, 0, modulus);
        for n in 1..=10 {
            let roots: Vec<ModQuadScalar> = closed_form_eigenvalues(n)
                .values()
                .iter()
                .map(|v| v.to_mod_quad(modulus).unwrap())
                .collect();
            let product = DensePolynomial::from_roots(&one, &roots);
            let expected = binomial_r(n, &ModScalar::new(1, p))
                .charpoly()
                .map(|c| ModQuadScalar::from_base(*c, modulus));
            assert_eq!(product, expected, "p = {p}, n = {n}");
        }
    }
}

#[test]
fn fourth_power_mod_3() {
    for n in 1..=32 {
        let r = binomial_r(n, &ModScalar::new(1, 3));
        let r4 = &(&r * &r) * &(&r * &r);
        let sign = if n % 2 == 0 { ModScalar::new(-1, 3) } else { ModScalar::new(1, 3) };
        assert_eq!(r4, SquareMatrix::scalar(n, &sign), "n = {n}");
    }
}

#[test]
fn pascal_relatives() {
    for n in 1..=10 {
        let one = Rational::one();
        let (r, l, k, a) = (binomial_r(n, &one), lower_pascal(n, &one), exchange(n, &one), abs_inverse(n, &one));
        // L is the lower-triangular Pascal matrix, L^-1 has signed entries
        let l_inv = l.inverse().unwrap();
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let expected = Rational::from_integer(sign * binomial(i as u64, j as i64));
                assert_eq!(l_inv.get(i, j), &expected);
            }
        }
        // det R = product of eigenvalues = +-1
        let det = r.determinant();
        assert!(det == Rational::one() || det == -Rational::one());
        assert_eq!(&(&k * &a) * &k, r);
    }
}

#[test]
fn trace_equals_fibonacci_by_diagonal_sum() {
    for n in 1..=90usize {
        let diag = (0..n).fold(num_bigint::BigInt::from(0), |acc, i| acc + binomial(i as u64, (n - 1 - i) as i64));
        assert_eq!(diag, fib(n as i64), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn row_gf_matches_naive_power(n in 1usize..=7, e in 1u64..=6, i_seed in 0usize..100) {
        let i = i_seed % n + 1;
        let table = naive_pow(n, e);
        let poly = row_gf(n, e, i).unwrap();
        for j in 1..=n {
            prop_assert_eq!(poly.coeff(j - 1).cloned().unwrap_or_else(Rational::zero), table[i - 1][j - 1].clone());
        }
    }

    #[test]
    fn col_gf_matches_naive_power(n in 1usize..=7, e in 1u64..=6, j_seed in 0usize..100) {
        let j = j_seed % n + 1;
        let table = naive_pow(n, e);
        let series = col_gf(n, e, j, n).unwrap();
        for i in 1..=n {
            prop_assert_eq!(series.coeffs()[i - 1].clone(), table[i - 1][j - 1].clone());
        }
    }

    #[test]
    fn row_sums_are_fibonacci_products(n in 1usize..=8, e in 1u64..=6) {
        let table = naive_pow(n, e);
        for i in 1..=n {
            let sum = table[i - 1].iter().fold(Rational::zero(), |acc, x| acc + x.clone());
            let expected = Rational::from_integer(
                num_traits::pow(fib(e as i64 + 2), i - 1) * num_traits::pow(fib(e as i64 + 1), n - i),
            );
            prop_assert_eq!(sum, expected);
        }
    }

    #[test]
    fn fibonomial_symmetry(n in 0u64..=30, m_seed in 0u64..100) {
        let m = m_seed % (n + 1);
        prop_assert_eq!(fibonomial_b(n, m).numer().abs(), fibonomial_b(n, n - m).numer().abs());
    }

    #[test]
    fn eigenvalue_power_sums_are_traces(n in 1usize..=9, k in 1u64..=4) {
        // sum lambda^k = trace(R^k)
        let values = closed_form_eigenvalues(n).values();
        let sum = values.iter().fold(GoldenNumber::zero(), |acc, v| acc + Ring::pow(v, k));
        let r = binomial_r(n, &Rational::one()).pow(k);
        prop_assert_eq!(sum, GoldenNumber::rational(r.trace()));
    }

    #[test]
    fn eigenvalues_invert_to_eigenvalues(n in 1usize..=12) {
        // R_n^-1 is similar to A_n up to sign pattern, and |det| = 1, so
        // the spectrum is closed under lambda -> +-1/lambda.
        let values = closed_form_eigenvalues(n).values();
        for v in &values {
            let inv = v.inverse().unwrap();
            prop_assert!(values.iter().any(|w| *w == inv || *w == -inv.clone()));
        }
    }
}
