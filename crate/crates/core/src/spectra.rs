//! Golden-ratio spectrum and eigenvectors of `R_n`, and its characteristic
//! polynomial modulo 3 and 5.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::arith::{
    cmp_abs, divides_fib_successor, fib, is_prime, GoldenNumber, ModScalar, Rational, Ring,
};
use crate::error::{Error, Result};
use crate::family::{abs_inverse, binomial_r, eigen_diagonal, eigen_vandermonde, exchange, x_matrix};
use crate::matrix::SquareMatrix;
use crate::poly::DensePolynomial;
use crate::report::Verification;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    One,
    Phi,
    PhiBar,
}

/// `sign * base^exponent` together with its value in Q(phi).
#[derive(Clone, PartialEq, Debug)]
pub struct Eigenvalue {
    pub negative: bool,
    pub base: Base,
    pub exponent: u32,
    pub value: GoldenNumber,
}

impl Eigenvalue {
    fn new(negative: bool, base: Base, exponent: u32) -> Self {
        let unsigned = match base {
            Base::One => GoldenNumber::one(),
            Base::Phi => Ring::pow(&GoldenNumber::phi(), exponent as u64),
            Base::PhiBar => Ring::pow(&GoldenNumber::phi_bar(), exponent as u64),
        };
        let value = if negative { -unsigned } else { unsigned };
        Eigenvalue { negative, base, exponent, value }
    }

    /// Symbolic form such as `phi^3`, `-phibar` or `-1`.
    pub fn label(&self) -> String {
        let sign = if self.negative { "-" } else { "" };
        let body = match (self.base, self.exponent) {
            (Base::One, _) | (_, 0) => "1".to_string(),
            (Base::Phi, 1) => "phi".to_string(),
            (Base::PhiBar, 1) => "phibar".to_string(),
            (Base::Phi, k) => format!("phi^{k}"),
            (Base::PhiBar, k) => format!("phibar^{k}"),
        };
        format!("{sign}{body}")
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Eigenvalues of `R_n` sorted by strictly decreasing absolute value.
#[derive(Clone, PartialEq, Debug)]
pub struct SpectrumClosedForm {
    pub n: usize,
    pub eigenvalues: Vec<Eigenvalue>,
}

impl SpectrumClosedForm {
    pub fn values(&self) -> Vec<GoldenNumber> {
        self.eigenvalues.iter().map(|e| e.value.clone()).collect()
    }

    pub fn has_distinct_magnitudes(&self) -> bool {
        self.eigenvalues
            .windows(2)
            .all(|w| cmp_abs(&w[0].value, &w[1].value) == Ordering::Greater)
    }

    pub fn labels(&self) -> Vec<String> {
        self.eigenvalues.iter().map(Eigenvalue::label).collect()
    }
}

/// Closed-form eigenvalues of `R_n`.
///
/// For `n = 2k`: `(-1)^(k+i) phi^(2i-1)` and `(-1)^(k+i) phibar^(2i-1)`,
/// `i = 1..k`. For `n = 2k+1`: `(-1)^k` together with `(-1)^(k+i) phi^(2i)`
/// and `(-1)^(k+i) phibar^(2i)`.
pub fn closed_form_eigenvalues(n: usize) -> SpectrumClosedForm {
    assert!(n >= 1, "order must be positive");
    let k = n / 2;
    let mut list = Vec::with_capacity(n);
    if n % 2 == 1 {
        list.push(Eigenvalue::new(k % 2 == 1, Base::One, 0));
    }
    for i in 1..=k {
        let negative = (k + i) % 2 == 1;
        let exponent = if n.is_multiple_of(2) { 2 * i - 1 } else { 2 * i } as u32;
        list.push(Eigenvalue::new(negative, Base::Phi, exponent));
        list.push(Eigenvalue::new(negative, Base::PhiBar, exponent));
    }
    list.sort_by(|x, y| cmp_abs(&y.value, &x.value));
    SpectrumClosedForm { n, eigenvalues: list }
}

/// `trace(R_n) = F_n`.
pub fn verify_trace(n: usize) -> Verification {
    let mut v = Verification::new();
    let trace = binomial_r(n, &Rational::one()).trace();
    let expected = Rational::from_integer(fib(n as i64));
    v.check("trace_equals_fibonacci", trace == expected, || format!("trace {trace} vs F_{n} = {expected}"));
    v
}

/// Expands `prod (x - lambda)` over Q(phi) and compares it with the
/// Berkowitz polynomial of `R_n`.
pub fn verify_spectrum(n: usize) -> Verification {
    let mut v = Verification::new();
    let spectrum = closed_form_eigenvalues(n);
    let values = spectrum.values();
    v.check("eigenvalue_count", values.len() == n, || format!("{} eigenvalues", values.len()));
    v.check("magnitudes_distinct", spectrum.has_distinct_magnitudes(), || {
        spectrum.labels().join(", ")
    });

    let product = DensePolynomial::from_roots(&GoldenNumber::one(), &values);
    let irrational = product.coeffs().iter().position(|c| !c.is_rational());
    v.check("product_has_rational_coefficients", irrational.is_none(), || {
        let k = irrational.unwrap();
        format!("coefficient of x^{k} is {}", product.coeffs()[k])
    });
    let rational_product = product.map(|c| GoldenNumber::rational(c.a.clone()));
    let r = binomial_r(n, &Rational::one());
    let charpoly = r.charpoly_over_z();
    let lifted = charpoly.map(|c| GoldenNumber::rational(c.clone()));
    v.check("product_equals_charpoly", rational_product == lifted && irrational.is_none(), || {
        format!("{} vs {}", product.to_descending_string(), charpoly.to_descending_string())
    });

    let sum = values.iter().fold(GoldenNumber::zero(), |acc, x| acc + x.clone());
    let fib_n = GoldenNumber::rational(Rational::from_integer(fib(n as i64)));
    v.check("eigenvalue_sum_equals_fibonacci", sum == fib_n, || format!("sum {sum} vs F_{n} = {fib_n}"));
    v.merge(verify_trace(n));

    let prod = values.iter().fold(GoldenNumber::one(), |acc, x| acc * x.clone());
    let c0 = charpoly.coeff(0).cloned().unwrap_or_else(Rational::zero);
    let expected = GoldenNumber::rational(if n.is_multiple_of(2) { c0 } else { -c0 });
    v.check("eigenvalue_product_matches_constant_term", prod == expected, || {
        format!("product {prod} vs {expected}")
    });
    v
}

/// Eigenvector matrices of `A_n` and `R_n` over Q(phi).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub spectrum: SpectrumClosedForm,
    /// Columns are kernel vectors of `A_n - lambda I`, last coordinate 1.
    pub e: SquareMatrix<GoldenNumber>,
    /// `K_n E_n`, the eigenvectors of `R_n`.
    pub w: SquareMatrix<GoldenNumber>,
    pub d: SquareMatrix<GoldenNumber>,
    /// Columns whose last coordinate vanished and were scaled by the last
    /// nonzero coordinate instead.
    pub fallback_columns: Vec<usize>,
}

/// Solves `(A_n - lambda I) v = 0` for each closed-form eigenvalue.
pub fn eigvec_matrix(n: usize) -> Result<EigenDecomposition> {
    if n == 0 {
        return Err(Error::Domain("matrix order must be positive".into()));
    }
    let one = GoldenNumber::one();
    let a = abs_inverse(n, &one);
    let spectrum = closed_form_eigenvalues(n);
    let mut columns = Vec::with_capacity(n);
    let mut fallback_columns = Vec::new();
    for (col, ev) in spectrum.eigenvalues.iter().enumerate() {
        let shifted = SquareMatrix::from_fn(n, |i, j| {
            if i == j {
                a.get(i, j).clone() - ev.value.clone()
            } else {
                a.get(i, j).clone()
            }
        });
        let mut basis = shifted.kernel_basis();
        if basis.len() != 1 {
            return Err(Error::KernelDimension { eigenvalue: ev.label(), dimension: basis.len() });
        }
        let vector = basis.pop().expect("one basis vector");
        if vector[n - 1].is_zero() {
            fallback_columns.push(col);
        }
        columns.push(vector);
    }
    let e = SquareMatrix::from_fn(n, |i, j| columns[j][i].clone());
    let w = &exchange(n, &one) * &e;
    Ok(EigenDecomposition { spectrum, e, w, d: eigen_diagonal(n), fallback_columns })
}

/// Eigenvector identities over Q(phi), plus the Vandermonde route when the
/// printed `X_n` happens to be invertible.
pub fn verify_eigenvectors(n: usize) -> Verification {
    let mut v = Verification::new();
    let dec = match eigvec_matrix(n) {
        Ok(dec) => dec,
        Err(e) => {
            v.check("eigenspaces_one_dimensional", false, || e.to_string());
            return v;
        }
    };
    v.check("eigenspaces_one_dimensional", true, String::new);
    let one = GoldenNumber::one();
    let a = abs_inverse(n, &one);
    let r = binomial_r(n, &one);
    v.check_matrix("A_E_equals_E_D", &(&a * &dec.e), &(&dec.e * &dec.d));
    v.check_matrix("R_W_equals_W_D", &(&r * &dec.w), &(&dec.w * &dec.d));
    let last_row_ones = dec.e.row(n - 1).iter().all(Ring::is_one);
    v.check("E_last_row_all_ones", last_row_ones && dec.fallback_columns.is_empty(), || {
        format!("fallback normalization in columns {:?}", dec.fallback_columns)
    });

    let x = x_matrix(n, &one);
    match x.inverse() {
        Ok(x_inv) => {
            let vdm = eigen_vandermonde(n);
            v.check_matrix("X_E_equals_V", &(&x * &dec.e), &vdm);
            v.check_matrix("W_equals_K_Xinv_V", &dec.w, &(&(&exchange(n, &one) * &x_inv) * &vdm));
        }
        Err(_) => v.info("X_route", format!("X_{n} singular; Vandermonde factorization skipped")),
    }
    v
}

/// Candidate eigenvector columns of the printed `W_4` with `alpha` given
/// and `beta = 1 - alpha`.
pub fn printed_w4(alpha: &GoldenNumber) -> SquareMatrix<GoldenNumber> {
    let a = alpha.clone();
    let b = GoldenNumber::one() - a.clone();
    let third = GoldenNumber::rational(Rational::new(1, 3));
    let p = |x: &GoldenNumber, k: u64| Ring::pow(x, k);
    let rows = vec![
        vec![-p(&a, 3), a.clone(), b.clone(), -p(&b, 3)],
        vec![p(&a, 2), -(third.clone() * b.clone()), -(third.clone() * a.clone()), p(&b, 2)],
        vec![-a.clone(), -(third.clone() * p(&a, 2)), -(third * p(&b, 2)), -b],
        vec![GoldenNumber::one(); 4],
    ];
    SquareMatrix::from_rows(rows).expect("square")
}

/// Checks that every printed `W_4` column is an eigenvector of `R_4` under
/// both identifications of `alpha`, and reports which eigenvalue order
/// each one produces.
pub fn verify_printed_w4() -> Verification {
    let mut v = Verification::new();
    let one = GoldenNumber::one();
    let r = binomial_r(4, &one);
    let spectrum = closed_form_eigenvalues(4);
    let mut orders = Vec::new();
    for (name, alpha) in [("phi", GoldenNumber::phi()), ("phibar", GoldenNumber::phi_bar())] {
        let w = printed_w4(&alpha);
        let mut labels = Vec::new();
        let mut ok = true;
        for j in 0..4 {
            let col = w.column(j);
            let image = r.mul_vec(&col);
            // last coordinate of the column is 1
            let lambda = image[3].clone();
            let eigen = col.iter().zip(&image).all(|(c, y)| c.clone() * lambda.clone() == *y);
            let label = spectrum.eigenvalues.iter().find(|e| e.value == lambda).map(Eigenvalue::label);
            ok &= eigen && label.is_some();
            labels.push(label.unwrap_or_else(|| lambda.to_string()));
        }
        let distinct = {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            sorted.len() == 4
        };
        v.check(&format!("printed_W4_columns_are_eigenvectors_alpha_{name}"), ok && distinct, || {
            format!("eigenvalues {}", labels.join(", "))
        });
        orders.push((name, labels));
    }
    let decreasing = spectrum.labels();
    let matching: Vec<&str> =
        orders.iter().filter(|(_, l)| *l == decreasing).map(|(name, _)| *name).collect();
    let described: Vec<String> =
        orders.iter().map(|(name, l)| format!("alpha={name}: ({})", l.join(", "))).collect();
    v.info("printed_W4_column_order", described.join("; "));
    v.note(
        "w4-column-order",
        format!(
            "printed W_4 columns carry eigenvalues {}; decreasing |lambda| is ({}), matched only by {}; \
             printed D_4 = diag(alpha^3, -alpha, -beta, beta^3) pairs with the columns under neither choice",
            described.join("; "),
            decreasing.join(", "),
            if matching.is_empty() { "neither choice".to_string() } else { format!("alpha={}", matching.join(",")) },
        ),
    );
    v
}

/// Closed forms of `det(R_n - xI)` over GF(p).
#[derive(Clone, PartialEq, Debug)]
pub struct ModularCharPolyForm {
    pub p: u64,
    pub n: usize,
    /// Product-of-factors style (the only style for p = 5).
    pub polynomial: DensePolynomial<ModScalar>,
    /// The `x^4 +- 1` style, p = 3 only.
    pub compact: Option<DensePolynomial<ModScalar>>,
}

fn gf(p: u64, coeffs: &[i64]) -> DensePolynomial<ModScalar> {
    DensePolynomial::new(coeffs.iter().map(|&c| ModScalar::new(c, p)).collect())
}

/// Closed form of the paper-sign characteristic polynomial of `R_n` mod `p`.
pub fn modular_charpoly_closed(p: u64, n: usize) -> Result<ModularCharPolyForm> {
    if n == 0 {
        return Err(Error::Domain("matrix order must be positive".into()));
    }
    let k = (n / 4) as u64;
    let (polynomial, compact) = match p {
        3 => {
            let (one_x, two_x, quad) = (gf(3, &[1, 1]), gf(3, &[2, 1]), gf(3, &[1, 0, 1]));
            let (f1, f2) = (gf(3, &[2, 1, 1]), gf(3, &[2, 2, 1]));
            let x4p1 = gf(3, &[1, 0, 0, 0, 1]);
            let x4m1 = gf(3, &[-1, 0, 0, 0, 1]);
            let two = gf(3, &[2]);
            let minus = gf(3, &[-1]);
            let half_up = 2 * k.div_ceil(2);
            let half = 2 * (k / 2);
            let even = k.is_multiple_of(2);
            let (factored, compact) = match n % 4 {
                0 => (f1.pow(k) * f2.pow(k), x4p1.pow(k)),
                1 => (
                    two * one_x.pow(half_up) * two_x.pow(half + 1) * quad.pow(k),
                    minus * x4m1.pow(k) * if even { gf(3, &[-1, 1]) } else { gf(3, &[1, 1]) },
                ),
                2 => (
                    f1.pow(half_up) * f2.pow(half + 1),
                    x4p1.pow(k) * if even { gf(3, &[-1, -1, 1]) } else { gf(3, &[-1, 1, 1]) },
                ),
                _ => (
                    two * one_x.pow(half + 1) * two_x.pow(half_up) * quad.pow(k + 1),
                    minus * x4m1.pow(k) * if even { gf(3, &[1, 1]) } else { gf(3, &[-1, 1]) } * quad,
                ),
            };
            (factored, Some(compact))
        }
        5 => {
            let m = n as u64;
            let poly = match n % 4 {
                0 => gf(5, &[-2, 1]).pow(m),
                1 => -gf(5, &[-1, 1]).pow(m),
                2 => gf(5, &[2, 1]).pow(m),
                _ => -gf(5, &[1, 1]).pow(m),
            };
            (poly, None)
        }
        other => return Err(Error::UnsupportedModulus(other)),
    };
    Ok(ModularCharPolyForm { p, n, polynomial, compact })
}

/// Berkowitz over GF(p) against the closed forms; for p = 3 both printed
/// styles are checked against each other as well.
pub fn verify_modular_charpoly(p: u64, n: usize) -> Verification {
    let mut v = Verification::new();
    let form = match modular_charpoly_closed(p, n) {
        Ok(f) => f,
        Err(e) => {
            v.check("closed_form_available", false, || e.to_string());
            return v;
        }
    };
    let computed = binomial_r(n, &ModScalar::new(1, p)).charpoly_paper_sign();
    let show = |q: &DensePolynomial<ModScalar>| q.to_ascending_string();
    let name = if p == 3 { "charpoly_equals_factored_form" } else { "charpoly_equals_closed_form" };
    v.check(name, computed == form.polynomial, || {
        format!("computed {} vs closed form {}", show(&computed), show(&form.polynomial))
    });
    if let Some(compact) = &form.compact {
        v.check("charpoly_equals_compact_form", computed == *compact, || {
            format!("computed {} vs compact form {}", show(&computed), show(compact))
        });
        v.check("printed_styles_agree", form.polynomial == *compact, || {
            format!("factored {} vs compact {}", show(&form.polynomial), show(compact))
        });
    }
    v
}

/// Monic irreducible factors over GF(3) of `x^4 + 1` (n even) or
/// `x^4 - 1` (n odd).
fn mod3_target_factors(n: usize) -> Vec<DensePolynomial<ModScalar>> {
    if n.is_multiple_of(2) {
        vec![gf(3, &[2, 1, 1]), gf(3, &[2, 2, 1])]
    } else {
        vec![gf(3, &[1, 1]), gf(3, &[2, 1]), gf(3, &[1, 0, 1])]
    }
}

/// Monic divisor of `x^4 -+ 1` of least degree annihilating `R_n` mod 3.
pub fn mod3_minimal_polynomial(n: usize) -> DensePolynomial<ModScalar> {
    let r = binomial_r(n, &ModScalar::new(1, 3));
    let factors = mod3_target_factors(n);
    let mut best: Option<DensePolynomial<ModScalar>> = None;
    for mask in 0u32..(1 << factors.len()) {
        let divisor = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(gf(3, &[1]), |acc, (_, f)| acc * f.clone());
        if r.eval_poly(&divisor).is_zero() && best.as_ref().is_none_or(|b| divisor.degree() < b.degree()) {
            best = Some(divisor);
        }
    }
    best.expect("x^4 -+ 1 annihilates R_n mod 3")
}

/// `R_n^(p+1) = -(-1)^n I` mod `p` whenever `p | F_(p+1)`, plus the minimal
/// polynomial of `R_n` mod 3.
pub fn verify_power_identity(p: u64, n: usize) -> Verification {
    let mut v = Verification::new();
    if !is_prime(p) {
        v.check("modulus_is_prime", false, || format!("{p} is not prime"));
        return v;
    }
    let one = ModScalar::new(1, p);
    let r = binomial_r(n, &one);
    // R_(2k) -> -I, R_(2k+1) -> I
    let sign = if n.is_multiple_of(2) { -one } else { one };
    let signed_identity = SquareMatrix::scalar(n, &sign);
    if divides_fib_successor(p) {
        v.info("hypothesis", format!("{p} divides F_{} = {}", p + 1, fib(p as i64 + 1)));
        v.check_matrix("R_pow_p_plus_1_equals_signed_identity", &r.pow(p + 1), &signed_identity);
    } else {
        v.info(
            "hypothesis",
            format!("skipped: {p} does not divide F_{} = {}", p + 1, fib(p as i64 + 1)),
        );
    }
    if p == 3 {
        v.check_matrix("R_pow_4_equals_signed_identity", &r.pow(4), &signed_identity);
        let target = if n.is_multiple_of(2) { "x^4 + 1" } else { "x^4 - 1" };
        let minimal = mod3_minimal_polynomial(n);
        let degree = minimal.degree().unwrap_or(0);
        if n >= 4 {
            v.check("minimal_polynomial_is_x4_pm_1", degree == 4, || {
                format!("proper divisor {} of {target} annihilates R_{n}", minimal.to_ascending_string())
            });
        } else {
            let monic_charpoly = r.charpoly();
            v.check("minimal_polynomial_equals_charpoly", minimal == monic_charpoly && degree == n, || {
                format!("minimal {} vs charpoly {}", minimal.to_ascending_string(), monic_charpoly.to_ascending_string())
            });
            v.note(
                "min-poly-small-order",
                format!(
                    "R_{n} mod 3 has minimal polynomial {} of degree {n} < 4, a proper divisor of {target}; \
                     the minimal polynomial is {target} only for n >= 4",
                    minimal.to_descending_string()
                ),
            );
        }
    }
    v
}
