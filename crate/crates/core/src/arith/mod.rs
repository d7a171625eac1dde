//! Scalars: integers and Fibonacci machinery, Q, Q(phi), GF(p), GF(p^2).

mod golden;
mod integer;
mod modular;
mod rational;
mod ring;

pub use golden::{cmp_abs, golden_sign, GoldenNumber};
pub use integer::{binom, binomial, divides_fib_successor, fib, fibonomial_b, is_prime, pow_big};
pub use modular::{quad_ext_roots, quad_ext_roots_in, ModQuadScalar, ModScalar, QuadModulus};
pub use rational::Rational;
pub use ring::{Field, OrderedRing, Ring};
