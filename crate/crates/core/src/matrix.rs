//! Dense square matrices over a [`Ring`], with field-only operations
//! (inverse, determinant, kernel) behind a [`Field`] bound.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use serde_json::{json, Value};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{pow_big, Field, GoldenNumber, ModScalar, OrderedRing, Rational, Ring};
use crate::error::{Error, Result};
use crate::poly::DensePolynomial;

/// Row-major `n x n` matrix, `n >= 1`. Indexing is zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquareMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Ring> SquareMatrix<T> {
    /// Builds from a zero-based entry function. Panics when `order == 0`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(order >= 1, "matrix order must be positive");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Domain("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::OrderMismatch { left: order, right: bad.len() });
        }
        Ok(SquareMatrix { order, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(order: usize, one: &T) -> Self {
        Self::from_fn(order, |i, j| if i == j { one.one_like() } else { one.zero_like() })
    }

    pub fn scalar(order: usize, c: &T) -> Self {
        Self::from_fn(order, |i, j| if i == j { c.clone() } else { c.zero_like() })
    }

    pub fn zeros(order: usize, like: &T) -> Self {
        Self::from_fn(order, |_, _| like.zero_like())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.order)
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.order).map(|i| self.get(i, j).clone()).collect()
    }

    fn sample(&self) -> &T {
        &self.entries[0]
    }

    pub fn ring_tag(&self) -> String {
        self.sample().ring_tag()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        if !self.sample().same_ring(other.sample()) {
            return Err(Error::MixedRings {
                left: self.sample().ring_tag(),
                right: other.sample().ring_tag(),
            });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.order;
        let zero = self.sample().zero_like();
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    entries[idx] = entries[idx].clone() + a.clone() * other.get(k, j).clone();
                }
            }
        }
        Ok(SquareMatrix { order: n, entries })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        SquareMatrix {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.order, "vector length must equal matrix order");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(self.sample().zero_like(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `self^e` by binary exponentiation; `A^0 = I`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.order, self.sample());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(self.sample().zero_like(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix { order: self.order, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<SquareMatrix<U>> {
        Ok(SquareMatrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// First zero-based `(row, col)` where the two matrices differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        if self.order != other.order {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.order, k % self.order))
    }

    /// Monic characteristic polynomial `det(xI - A)` by the division-free
    /// Berkowitz recursion over leading principal submatrices.
    ///
    /// With `A_{k+1} = [[A_k, c], [r, a]]` and `p_k = det(xI - A_k)`:
    /// `p_{k+1} = (x - a) p_k - sum_i x^{k-1-i} sum_{j<=i} p_k[j] (r A_k^{i-j} c)`,
    /// where `p_k[j]` is the coefficient of `x^{k-j}`.
    pub fn charpoly(&self) -> DensePolynomial<T> {
        let zero = self.sample().zero_like();
        let one = self.sample().one_like();
        // descending coefficients of p_k
        let mut p = vec![one.clone(), -self.get(0, 0).clone()];
        for k in 1..self.order {
            let a = self.get(k, k);
            // s_m = r A_k^m c for m = 0..k-1
            let mut v: Vec<T> = (0..k).map(|i| self.get(i, k).clone()).collect();
            let mut s = Vec::with_capacity(k);
            for m in 0..k {
                let dot = (0..k).fold(zero.clone(), |acc, j| acc + self.get(k, j).clone() * v[j].clone());
                s.push(dot);
                if m + 1 < k {
                    v = (0..k)
                        .map(|i| {
                            (0..k).fold(zero.clone(), |acc, j| acc + self.get(i, j).clone() * v[j].clone())
                        })
                        .collect();
                }
            }
            let mut q = vec![zero.clone(); k + 2];
            for t in 0..=k + 1 {
                let mut c = zero.clone();
                if t <= k {
                    c = c + p[t].clone();
                }
                if t >= 1 {
                    c = c - a.clone() * p[t - 1].clone();
                }
                if t >= 2 {
                    let i = t - 2;
                    for j in 0..=i {
                        c = c - p[j].clone() * s[i - j].clone();
                    }
                }
                q[t] = c;
            }
            p = q;
        }
        p.reverse();
        DensePolynomial::new(p)
    }

    /// `det(A - xI)`, the sign convention of the closed forms mod 3 and 5.
    pub fn charpoly_paper_sign(&self) -> DensePolynomial<T> {
        self.charpoly().sign_flipped(self.order)
    }

    /// `poly(A)` by Horner's rule.
    pub fn eval_poly(&self, poly: &DensePolynomial<T>) -> Self {
        let mut acc = Self::zeros(self.order, self.sample());
        for c in poly.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..self.order {
                let idx = i * self.order + i;
                acc.entries[idx] = acc.entries[idx].clone() + c.clone();
            }
        }
        acc
    }

    /// `n` lines of space-separated entries.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.rows().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| {
                r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_csv(&self) -> String {
        self.rows()
            .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// `{"order": n, "ring": tag, "rows": [[...], ...]}` with string entries.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> =
            self.rows().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        json!({ "order": self.order, "ring": self.ring_tag(), "rows": rows })
    }
}

impl<T: OrderedRing> SquareMatrix<T> {
    /// Entrywise absolute value.
    pub fn abs(&self) -> Self {
        self.map(OrderedRing::abs)
    }
}

impl SquareMatrix<Rational> {
    /// Entrywise reduction into GF(p); fails on a denominator divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<SquareMatrix<ModScalar>> {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        self.try_map(|x| x.to_mod(p))
    }

    pub fn embed_golden(&self) -> SquareMatrix<GoldenNumber> {
        self.map(|x| GoldenNumber::rational(x.clone()))
    }

    /// Same polynomial as [`charpoly`](Self::charpoly), computed over Z
    /// after clearing denominators: for `A = B / d`, `p_A(x) = d^-n p_B(d x)`.
    /// Avoids a gcd per operation, which dominates for large orders.
    pub fn charpoly_over_z(&self) -> DensePolynomial<Rational> {
        let d = self.entries.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled = self.map(|x| x.numer() * (&d / x.denom()));
        let n = self.order;
        let coeffs = scaled
            .charpoly()
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(k, b)| Rational::from_parts(b, pow_big(&d, (n - k) as u64)))
            .collect();
        DensePolynomial::new(coeffs)
    }
}

/// Outcome of Gauss–Jordan reduction: reduced row echelon form and pivots.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

/// Row-reduces an `r x c` array with first-nonzero pivoting.
fn rref<T: Field>(mut rows: Vec<Vec<T>>) -> Echelon<T> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inverse().expect("nonzero pivot in a field");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in 0..ncols {
                let delta = factor.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

impl<T: Field> SquareMatrix<T> {
    pub fn rank(&self) -> usize {
        rref(self.rows().map(<[T]>::to_vec).collect()).pivots.len()
    }

    /// Exact inverse by Gauss–Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order;
        let one = self.sample().one_like();
        let aug: Vec<Vec<T>> = self
            .rows()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.to_vec();
                r.extend((0..n).map(|j| if i == j { one.clone() } else { one.zero_like() }));
                r
            })
            .collect();
        let ech = rref(aug);
        let rank = ech.pivots.iter().take_while(|&&c| c < n).count();
        if rank < n {
            return Err(Error::Singular { order: n, rank });
        }
        Ok(Self::from_fn(n, |i, j| ech.rows[i][n + j].clone()))
    }

    /// Determinant by elimination, tracking row swaps and pivot scalings.
    pub fn determinant(&self) -> T {
        let n = self.order;
        let mut rows: Vec<Vec<T>> = self.rows().map(<[T]>::to_vec).collect();
        let mut det = self.sample().one_like();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return self.sample().zero_like();
            };
            if pr != c {
                rows.swap(pr, c);
                det = -det;
            }
            det = det * rows[c][c].clone();
            let inv = rows[c][c].inverse().expect("nonzero pivot in a field");
            for i in c + 1..n {
                if rows[i][c].is_zero() {
                    continue;
                }
                let factor = rows[i][c].clone() * inv.clone();
                for j in c..n {
                    let delta = factor.clone() * rows[c][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
            }
        }
        det
    }

    /// Basis of the right null space; empty iff `A` is invertible. Each
    /// vector is scaled so its last nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let n = self.order;
        let ech = rref(self.rows().map(<[T]>::to_vec).collect());
        let free: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.sample().zero_like(); n];
                v[f] = self.sample().one_like();
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = -ech.rows[r][f].clone();
                }
                normalize_last_nonzero(v)
            })
            .collect()
    }
}

/// Scales `v` so that its last nonzero coordinate becomes 1.
pub fn normalize_last_nonzero<T: Field>(v: Vec<T>) -> Vec<T> {
    match v.iter().rev().find(|c| !c.is_zero()).and_then(Field::inverse) {
        Some(inv) => v.into_iter().map(|c| c * inv.clone()).collect(),
        None => v,
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.order + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.order + j]
    }
}

/// Panics on order or ring mismatch; see [`SquareMatrix::checked_mul`].
impl<T: Ring> Mul for &SquareMatrix<T> {
    type Output = SquareMatrix<T>;
    fn mul(self, rhs: &SquareMatrix<T>) -> SquareMatrix<T> {
        self.checked_mul(rhs).expect("matrix product of incompatible operands")
    }
}

impl<T: Ring> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}
