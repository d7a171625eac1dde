//! Exact arithmetic for the binomial matrices `R_n = (C(i-1, n-j))` and
//! `L_n = (C(i-1, j-1))` and their relatives.
//!
//! The crate builds the matrices over Q, Q(phi), GF(p) and GF(p^2), computes
//! powers and division-free characteristic polynomials, produces the
//! closed-form golden-ratio spectrum and eigenvectors, the modular
//! characteristic polynomials for p = 3 and p = 5, and the row/column
//! generating functions of `R_n^e`. Every closed form has a `verify_*`
//! companion that checks it against direct computation.

pub mod arith;
pub mod error;
pub mod family;
pub mod genfun;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod series;
pub mod spectra;
pub mod suite;

pub use arith::{
    binom, fib, fibonomial_b, golden_sign, quad_ext_roots, Field, GoldenNumber, ModQuadScalar,
    ModScalar, OrderedRing, QuadModulus, Rational, Ring,
};
pub use error::{Error, Result};
pub use family::{build, AnyMatrix, MatrixKind, RingSelector};
pub use report::{CaseRecord, PaperNote, RunReport, Verification};
pub use matrix::SquareMatrix;
pub use poly::DensePolynomial;
pub use series::{series_div, TruncatedSeries};
pub use suite::{run_suite, Suite, SuiteOptions};
