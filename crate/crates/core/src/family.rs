//! Constructors for the binomial matrix family and the structural
//! identities that relate its members.
//!
//! All formulas below use 1-based `(i, j)`:
//!
//! | kind | entry |
//! |------|-------|
//! | `L`  | `C(i-1, j-1)` |
//! | `R`  | `C(i-1, n-j)` |
//! | `K`  | `1` if `i + j = n + 1` else `0` |
//! | `A`  | `C(n-i, j-1)` |
//! | `Rinv` | `(-1)^(n+i+j+1) C(n-i, j-1)` |
//! | `X`  | `C(n-i, j-1) F_{i-2}^(j-1) F_{i-1}^(n-j)` |
//! | `C`  | ones on the superdiagonal, last row `-b(n, n+1-j)` |
//! | `D`  | eigenvalues of `R_n` by decreasing absolute value |
//! | `V`  | `lambda_j^(i-1)` over the same eigenvalue order |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::arith::{
    binomial, fib, fibonomial_b, is_prime, pow_big, GoldenNumber, ModQuadScalar, ModScalar,
    QuadModulus, Rational, Ring,
};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::report::Verification;
use crate::spectra::closed_form_eigenvalues;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MatrixKind {
    /// Lower-triangular Pascal matrix.
    L,
    /// Column-reversed Pascal matrix.
    R,
    /// Exchange matrix, ones on the secondary diagonal.
    K,
    /// Entrywise absolute value of `R^-1`.
    A,
    /// Closed-form inverse of `R`.
    RInverse,
    /// Transition matrix as printed; singular for most orders.
    X,
    /// Companion matrix of the signed fibonomial polynomial.
    Companion,
    /// Diagonal matrix of eigenvalues.
    Diagonal,
    /// Vandermonde matrix of eigenvalues.
    Vandermonde,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 9] = [
        MatrixKind::L,
        MatrixKind::R,
        MatrixKind::K,
        MatrixKind::A,
        MatrixKind::RInverse,
        MatrixKind::X,
        MatrixKind::Companion,
        MatrixKind::Diagonal,
        MatrixKind::Vandermonde,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            MatrixKind::L => "L",
            MatrixKind::R => "R",
            MatrixKind::K => "K",
            MatrixKind::A => "A",
            MatrixKind::RInverse => "Rinv",
            MatrixKind::X => "X",
            MatrixKind::Companion => "C",
            MatrixKind::Diagonal => "D",
            MatrixKind::Vandermonde => "V",
        }
    }

    /// Whether the entries are integers (and so live in every ring).
    pub fn is_integral(self) -> bool {
        !matches!(self, MatrixKind::Diagonal | MatrixKind::Vandermonde)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "L" => MatrixKind::L,
            "R" => MatrixKind::R,
            "K" => MatrixKind::K,
            "A" => MatrixKind::A,
            "Rinv" | "R_inverse" => MatrixKind::RInverse,
            "X" => MatrixKind::X,
            "C" | "C_companion" => MatrixKind::Companion,
            "D" | "D_diag" => MatrixKind::Diagonal,
            "V" | "V_vandermonde" => MatrixKind::Vandermonde,
            other => return Err(Error::Domain(format!("unknown matrix kind {other:?}"))),
        })
    }
}

/// Scalar ring for [`build`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingSelector {
    Rational,
    Golden,
    Prime(u64),
    PrimeSquare(u64),
}

/// A matrix over one of the supported scalar rings.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyMatrix {
    Rational(SquareMatrix<Rational>),
    Golden(SquareMatrix<GoldenNumber>),
    Prime(SquareMatrix<ModScalar>),
    PrimeSquare(SquareMatrix<ModQuadScalar>),
}

macro_rules! dispatch {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            AnyMatrix::Rational($m) => $body,
            AnyMatrix::Golden($m) => $body,
            AnyMatrix::Prime($m) => $body,
            AnyMatrix::PrimeSquare($m) => $body,
        }
    };
}

impl AnyMatrix {
    pub fn order(&self) -> usize {
        dispatch!(self, m => m.order())
    }

    pub fn ring_tag(&self) -> String {
        dispatch!(self, m => m.ring_tag())
    }

    pub fn to_pretty(&self) -> String {
        dispatch!(self, m => m.to_pretty())
    }

    pub fn to_csv(&self) -> String {
        dispatch!(self, m => m.to_csv())
    }

    pub fn to_json(&self) -> Value {
        dispatch!(self, m => m.to_json())
    }
}

/// Integer entry of an integral kind at 1-based `(i, j)`.
fn integer_entry(kind: MatrixKind, n: usize, i: usize, j: usize, fibonomials: &[BigInt]) -> BigInt {
    let (n64, i64_, j64) = (n as i64, i as i64, j as i64);
    match kind {
        MatrixKind::L => binomial((i - 1) as u64, j64 - 1),
        MatrixKind::R => binomial((i - 1) as u64, n64 - j64),
        MatrixKind::K => {
            if i + j == n + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        MatrixKind::A => binomial((n - i) as u64, j64 - 1),
        MatrixKind::RInverse => {
            let c = binomial((n - i) as u64, j64 - 1);
            if (n + i + j + 1).is_multiple_of(2) {
                c
            } else {
                -c
            }
        }
        MatrixKind::X => {
            binomial((n - i) as u64, j64 - 1)
                * pow_big(&fib(i64_ - 2), (j - 1) as u64)
                * pow_big(&fib(i64_ - 1), (n - j) as u64)
        }
        MatrixKind::Companion => {
            if j == i + 1 {
                BigInt::one()
            } else if i == n {
                -fibonomials[n + 1 - j].clone()
            } else {
                BigInt::zero()
            }
        }
        MatrixKind::Diagonal | MatrixKind::Vandermonde => unreachable!("not an integral kind"),
    }
}

/// Builds an integral kind over the ring of `one`.
pub fn build_integral<T: Ring>(kind: MatrixKind, n: usize, one: &T) -> Result<SquareMatrix<T>> {
    if n == 0 {
        return Err(Error::Domain("matrix order must be positive".into()));
    }
    if !kind.is_integral() {
        return Err(Error::Domain(format!(
            "{kind} has irrational entries; build it over Q(phi) or GF(p^2)"
        )));
    }
    let fibonomials: Vec<BigInt> = if kind == MatrixKind::Companion {
        (0..=n as u64).map(|m| fibonomial_b(n as u64, m).numer().clone()).collect()
    } else {
        Vec::new()
    };
    Ok(SquareMatrix::from_fn(n, |i, j| {
        one.from_integer_like(&integer_entry(kind, n, i + 1, j + 1, &fibonomials))
    }))
}

pub fn lower_pascal<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::L, n, one).expect("n >= 1")
}

pub fn binomial_r<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::R, n, one).expect("n >= 1")
}

pub fn exchange<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::K, n, one).expect("n >= 1")
}

pub fn abs_inverse<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::A, n, one).expect("n >= 1")
}

pub fn r_inverse<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::RInverse, n, one).expect("n >= 1")
}

pub fn x_matrix<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::X, n, one).expect("n >= 1")
}

pub fn companion<T: Ring>(n: usize, one: &T) -> SquareMatrix<T> {
    build_integral(MatrixKind::Companion, n, one).expect("n >= 1")
}

/// `diag(lambda_1, ..., lambda_n)` with `|lambda_1| > ... > |lambda_n|`.
pub fn eigen_diagonal(n: usize) -> SquareMatrix<GoldenNumber> {
    let values = sorted_eigenvalues(n);
    SquareMatrix::from_fn(n, |i, j| if i == j { values[i].clone() } else { GoldenNumber::zero() })
}

/// `V[i][j] = lambda_j^i` (zero-based), columns are companion eigenvectors.
pub fn eigen_vandermonde(n: usize) -> SquareMatrix<GoldenNumber> {
    let values = sorted_eigenvalues(n);
    SquareMatrix::from_fn(n, |i, j| Ring::pow(&values[j], i as u64))
}

fn sorted_eigenvalues(n: usize) -> Vec<GoldenNumber> {
    let spectrum = closed_form_eigenvalues(n);
    assert!(
        spectrum.has_distinct_magnitudes(),
        "eigenvalue magnitudes of R_{n} must be pairwise distinct"
    );
    spectrum.values()
}

/// Builds any kind over the selected ring.
pub fn build(kind: MatrixKind, n: usize, ring: RingSelector) -> Result<AnyMatrix> {
    if n == 0 {
        return Err(Error::Domain("matrix order must be positive".into()));
    }
    if let RingSelector::Prime(p) | RingSelector::PrimeSquare(p) = ring {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    if kind.is_integral() {
        return Ok(match ring {
            RingSelector::Rational => AnyMatrix::Rational(build_integral(kind, n, &Rational::one())?),
            RingSelector::Golden => AnyMatrix::Golden(build_integral(kind, n, &GoldenNumber::one())?),
            RingSelector::Prime(p) => AnyMatrix::Prime(build_integral(kind, n, &ModScalar::new(1, p))?),
            RingSelector::PrimeSquare(p) => {
                let one = ModQuadScalar::new(1, 0, QuadModulus::standard(p)?);
                AnyMatrix::PrimeSquare(build_integral(kind, n, &one)?)
            }
        });
    }
    let golden = match kind {
        MatrixKind::Diagonal => eigen_diagonal(n),
        _ => eigen_vandermonde(n),
    };
    match ring {
        RingSelector::Golden => Ok(AnyMatrix::Golden(golden)),
        RingSelector::PrimeSquare(p) => {
            let modulus = QuadModulus::standard(p)?;
            Ok(AnyMatrix::PrimeSquare(golden.try_map(|x| x.to_mod_quad(modulus))?))
        }
        RingSelector::Rational | RingSelector::Prime(_) => Err(Error::Domain(format!(
            "{kind} needs phi; build it over Q(phi) or GF(p^2)"
        ))),
    }
}

/// Exact checks of the permutation identities relating `R`, `L`, `K`, `A`
/// and the closed-form inverse.
pub fn verify_structure(n: usize) -> Verification {
    let one = Rational::one();
    let r = binomial_r(n, &one);
    let l = lower_pascal(n, &one);
    let k = exchange(n, &one);
    let a = abs_inverse(n, &one);
    let r_inv = r_inverse(n, &one);
    let id = SquareMatrix::identity(n, &one);

    let mut v = Verification::new();
    v.check_matrix("R_K_equals_L", &(&r * &k), &l);
    v.check_matrix("L_K_equals_R", &(&l * &k), &r);
    v.check_matrix("K_squared_is_identity", &(&k * &k), &id);
    v.check_matrix("K_R_K_equals_A", &(&(&k * &r) * &k), &a);
    v.check_matrix("R_times_closed_form_inverse_is_identity", &(&r * &r_inv), &id);
    match r.inverse() {
        Ok(inv) => {
            v.check_matrix("closed_form_inverse_matches_elimination", &inv, &r_inv);
            v.check_matrix("A_is_entrywise_abs_of_inverse", &inv.abs(), &a);
        }
        Err(e) => v.check("closed_form_inverse_matches_elimination", false, || e.to_string()),
    }
    v.check_matrix("K_L_equals_A", &(&k * &l), &a);
    let (pa, pr) = (a.charpoly_over_z(), r.charpoly_over_z());
    v.check("charpoly_A_equals_charpoly_R", pa == pr, || {
        format!("{} vs {}", pa.to_descending_string(), pr.to_descending_string())
    });
    let above = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
        // 1-based: j > n - i + 1
        j + 1 > n - (i + 1) + 1 && !a.get(i, j).is_zero()
    });
    v.check("A_vanishes_below_antidiagonal", above.is_none(), || {
        let (i, j) = above.unwrap();
        format!("A[{}][{}] = {}", i + 1, j + 1, a.get(i, j))
    });
    v
}

/// Companion-matrix side of the eigenvalue argument: `charpoly(C) =
/// charpoly(A)`, the fibonomial expansion of `charpoly(R)`, and the
/// similarity `X A = C X` when the printed `X` is invertible.
pub fn verify_companion_similarity(n: usize) -> Verification {
    let one = Rational::one();
    let a = abs_inverse(n, &one);
    let c = companion(n, &one);
    let r = binomial_r(n, &one);
    let x = x_matrix(n, &one);

    let mut v = Verification::new();
    let (pc, pa) = (c.charpoly_over_z(), a.charpoly_over_z());
    v.check("charpoly_C_equals_charpoly_A", pc == pa, || {
        format!("{} vs {}", pc.to_descending_string(), pa.to_descending_string())
    });
    let expansion = crate::poly::DensePolynomial::new(
        (0..=n as u64).rev().map(|m| fibonomial_b(n as u64, m)).collect(),
    );
    let pr = r.charpoly_over_z();
    v.check("charpoly_R_is_fibonomial_expansion", pr == expansion, || {
        format!("{} vs {}", pr.to_descending_string(), expansion.to_descending_string())
    });

    let rank = x.rank();
    if rank == n {
        v.info("X_invertible", format!("X_{n} has full rank"));
        v.check_matrix("X_A_equals_C_X", &(&x * &a), &(&c * &x));
    } else {
        v.info("X_invertible", format!("X_{n} singular (rank {rank}); similarity skipped"));
        v.note(
            "x-matrix-singular",
            format!(
                "X_{n} built from C(n-i,j-1) F_(i-2)^(j-1) F_(i-1)^(n-j) has rank {rank} < {n}; \
                 X_n A_n X_n^-1 = C_n cannot be checked; eigenvectors are computed from the \
                 closed-form eigenvalues instead"
            ),
        );
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> SquareMatrix<Rational> {
        SquareMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect()).collect(),
        )
        .unwrap()
    }

    fn rat(kind: MatrixKind, n: usize) -> SquareMatrix<Rational> {
        build_integral(kind, n, &Rational::one()).unwrap()
    }

    #[test]
    fn r4_and_a4() {
        assert_eq!(
            rat(MatrixKind::R, 4),
            q(&[&[0, 0, 0, 1], &[0, 0, 1, 1], &[0, 1, 2, 1], &[1, 3, 3, 1]])
        );
        let a4 = q(&[&[1, 3, 3, 1], &[1, 2, 1, 0], &[1, 1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(rat(MatrixKind::A, 4), a4);
        assert_eq!(rat(MatrixKind::R, 4).inverse().unwrap().abs(), a4);
    }

    #[test]
    fn r_inverse_closed_form() {
        let r4 = rat(MatrixKind::R, 4);
        assert_eq!(r4.inverse().unwrap(), rat(MatrixKind::RInverse, 4));
        let expected = SquareMatrix::from_fn(4, |i, j| {
            let (i, j) = (i as i64 + 1, j as i64 + 1);
            let sign = if (4 + i + j + 1) % 2 == 0 { 1 } else { -1 };
            Rational::from_integer(sign * binomial((4 - i) as u64, j - 1))
        });
        assert_eq!(rat(MatrixKind::RInverse, 4), expected);
    }

    #[test]
    fn companion_last_row() {
        let c4 = rat(MatrixKind::Companion, 4);
        let last: Vec<_> = c4.row(3).to_vec();
        assert_eq!(last, [-1, -3, 6, 3].map(Rational::from_i64).to_vec());
        assert_eq!(c4.get(0, 1), &Rational::one());
        assert_eq!(c4.get(2, 3), &Rational::one());
        assert_eq!(c4.charpoly().to_descending_string(), "x^4 - 3x^3 - 6x^2 + 3x + 1");
    }

    #[test]
    fn x4_as_printed_is_singular() {
        let x4 = rat(MatrixKind::X, 4);
        assert_eq!(x4, q(&[&[0, 0, 0, 1], &[1, 0, 0, 0], &[1, 1, 0, 0], &[8, 0, 0, 0]]));
        assert_eq!(x4.rank(), 3);
        assert!(matches!(x4.inverse(), Err(Error::Singular { order: 4, rank: 3 })));
    }

    #[test]
    fn small_products() {
        let k3 = rat(MatrixKind::K, 3);
        assert_eq!(k3.to_csv(), "0,0,1\n0,1,0\n1,0,0");
        let k = rat(MatrixKind::K, 5);
        assert_eq!(&k * &k, SquareMatrix::identity(5, &Rational::one()));
        assert_eq!(&rat(MatrixKind::R, 4) * &rat(MatrixKind::K, 4), rat(MatrixKind::L, 4));
    }

    #[test]
    fn diagonal_and_vandermonde() {
        let d4 = eigen_diagonal(4);
        let diag: Vec<_> = (0..4).map(|i| d4.get(i, i).clone()).collect();
        let phi = GoldenNumber::phi();
        let bar = GoldenNumber::phi_bar();
        assert_eq!(
            diag,
            vec![Ring::pow(&phi, 3), -phi.clone(), -bar.clone(), Ring::pow(&bar, 3)]
        );
        assert_eq!(d4.get(0, 0).to_string(), "1+2*phi");
        // C V = V D with superdiagonal-ones companion form
        for n in 1..=8 {
            let c = companion(n, &GoldenNumber::one());
            let vdm = eigen_vandermonde(n);
            assert_eq!(&c * &vdm, &vdm * &eigen_diagonal(n), "n = {n}");
        }
    }

    #[test]
    fn build_selects_rings() {
        let m = build(MatrixKind::R, 3, RingSelector::Prime(3)).unwrap();
        assert_eq!(m.ring_tag(), "GF(3)");
        assert!(matches!(build(MatrixKind::Diagonal, 4, RingSelector::Rational), Err(Error::Domain(_))));
        assert!(matches!(build(MatrixKind::Diagonal, 4, RingSelector::Prime(3)), Err(Error::Domain(_))));
        assert!(matches!(build(MatrixKind::R, 4, RingSelector::Prime(9)), Err(Error::NotPrime(9))));
        assert!(matches!(build(MatrixKind::R, 0, RingSelector::Rational), Err(Error::Domain(_))));
        let d = build(MatrixKind::Diagonal, 2, RingSelector::PrimeSquare(3)).unwrap();
        // phi -> t, phibar -> 1 - t = 1 + 2t in GF(9)
        assert_eq!(d.to_pretty(), "    t     0\n    0 1+2*t");
        assert_eq!("Rinv".parse::<MatrixKind>().unwrap(), MatrixKind::RInverse);
        assert!("Q".parse::<MatrixKind>().is_err());
    }

    #[test]
    fn structure_holds_small_orders() {
        for n in [1, 4, 7] {
            let v = verify_structure(n);
            assert!(v.passed(), "n = {n}: {}", v.summary());
        }
    }

    #[test]
    fn companion_similarity_reports_singular_x() {
        let v = verify_companion_similarity(4);
        assert!(v.passed(), "{}", v.summary());
        assert!(v.has_note("x-matrix-singular"));
        let v1 = verify_companion_similarity(1);
        assert!(v1.passed());
        assert!(!v1.has_note("x-matrix-singular"));
    }
}
