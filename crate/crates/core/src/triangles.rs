//! Memoized number triangles and the sequences and polynomials built on them.
//!
//! Stirling numbers come from their three-term recursions. Eulerian numbers
//! are obtained by inverting the Worpitzky identities
//!
//! ```text
//! (1 + 2m)^n = sum_k C(n + m - k, n) E^B(n, k)
//!        m^n = sum_k C(n + m - k, n) a(n, k)
//! ```
//!
//! at `m = 0, 1, ..., n`. The system is unit lower-triangular because
//! `C(n + m - k, n)` vanishes for `k > m` and equals 1 for `k = m`.
//!
//! Type-A Eulerian rows use 1-based `k`: `a(n, k)` counts permutations of
//! `[n]` with `k - 1` descents, and `a(n, 0) = 0` for `n >= 1`.

use std::sync::RwLock;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Basis, Poly};
use crate::scalar::{binomial, factorial, pow, IntScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    StirlingB,
    StirlingA,
    EulerianB,
    EulerianA,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::StirlingB => "stirling-b",
            TriangleKind::StirlingA => "stirling-a",
            TriangleKind::EulerianB => "eulerian-b",
            TriangleKind::EulerianA => "eulerian-a",
        }
    }
}

/// Lower-triangular table `rows[n][k]`, `0 <= k <= n`, filled on demand.
///
/// Rows are materialized under a write lock, so readers only ever see
/// complete rows.
#[derive(Debug)]
pub struct Triangle<I> {
    kind: TriangleKind,
    rows: RwLock<Vec<Vec<I>>>,
}

impl<I: IntScalar> Triangle<I> {
    pub fn new(kind: TriangleKind) -> Self {
        Triangle { kind, rows: RwLock::new(Vec::new()) }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// Number of rows currently cached.
    pub fn cached_rows(&self) -> usize {
        self.rows.read().unwrap().len()
    }

    pub fn row(&self, n: usize) -> Result<Vec<I>> {
        self.ensure(n)?;
        Ok(self.rows.read().unwrap()[n].clone())
    }

    /// Entry `(n, k)`; zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<I> {
        if k > n {
            return Ok(I::zero());
        }
        self.ensure(n)?;
        Ok(self.rows.read().unwrap()[n][k].clone())
    }

    fn ensure(&self, n: usize) -> Result<()> {
        if self.rows.read().unwrap().len() > n {
            return Ok(());
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let next = rows.len();
            let row = match self.kind {
                TriangleKind::StirlingB => stirling_row(rows.last(), next, |k| 2 * k + 1),
                TriangleKind::StirlingA => stirling_row(rows.last(), next, |k| k),
                TriangleKind::EulerianB => worpitzky_row(next, |m| 2 * m + 1, "eulerian-b")?,
                TriangleKind::EulerianA => worpitzky_row(next, |m| m, "eulerian-a")?,
            };
            rows.push(row);
        }
        Ok(())
    }
}

/// `S(n, k) = S(n-1, k-1) + weight(k) S(n-1, k)` with `S(0, 0) = 1`.
fn stirling_row<I: IntScalar>(prev: Option<&Vec<I>>, n: usize, weight: impl Fn(usize) -> usize) -> Vec<I> {
    let Some(prev) = prev else {
        return vec![I::one()];
    };
    let at = |k: usize| prev.get(k).cloned().unwrap_or_else(I::zero);
    (0..=n)
        .map(|k| {
            let left = if k == 0 { I::zero() } else { at(k - 1) };
            left + I::from_usize_exact(weight(k)) * at(k)
        })
        .collect()
}

/// Solve `base(m)^n = sum_{k <= m} C(n + m - k, n) e_k` for `m = 0..=n`.
fn worpitzky_row<I: IntScalar>(n: usize, base: impl Fn(usize) -> usize, what: &'static str) -> Result<Vec<I>> {
    let mut row: Vec<I> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut e = pow(&I::from_usize_exact(base(m)), n);
        for (k, ek) in row.iter().enumerate() {
            e = e - binomial::<I>(n + m - k, n) * ek.clone();
        }
        if e.is_negative() {
            return Err(Error::Inconsistent {
                what,
                detail: format!("negative entry {e} at (n, k) = ({n}, {m})"),
            });
        }
        row.push(e);
    }
    Ok(row)
}

/// A Bell number together with its generating polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellData<I: IntScalar> {
    pub n: usize,
    pub number: I,
    pub polynomial: Poly<Ratio<I>>,
}

/// The four base triangles plus everything derived from them.
///
/// All generating polynomials produced here are in the variable `u`.
#[derive(Debug)]
pub struct Tables<I> {
    stirling_b: Triangle<I>,
    stirling_a: Triangle<I>,
    eulerian_b: Triangle<I>,
    eulerian_a: Triangle<I>,
}

impl<I: IntScalar> Default for Tables<I> {
    fn default() -> Self {
        Self::new()
    }
}

impl<I: IntScalar> Tables<I> {
    pub fn new() -> Self {
        Tables {
            stirling_b: Triangle::new(TriangleKind::StirlingB),
            stirling_a: Triangle::new(TriangleKind::StirlingA),
            eulerian_b: Triangle::new(TriangleKind::EulerianB),
            eulerian_a: Triangle::new(TriangleKind::EulerianA),
        }
    }

    pub fn triangle(&self, kind: TriangleKind) -> &Triangle<I> {
        match kind {
            TriangleKind::StirlingB => &self.stirling_b,
            TriangleKind::StirlingA => &self.stirling_a,
            TriangleKind::EulerianB => &self.eulerian_b,
            TriangleKind::EulerianA => &self.eulerian_a,
        }
    }

    /// `S^B(n, k)`, the number of type-B partitions of `[n]` with `k`
    /// representative non-zero blocks. Zero for `k > n`.
    pub fn stirling_b(&self, n: usize, k: usize) -> I {
        self.stirling_b.get(n, k).expect("stirling rows are infallible")
    }

    pub fn stirling_b_row(&self, n: usize) -> Vec<I> {
        self.stirling_b.row(n).expect("stirling rows are infallible")
    }

    /// Classical Stirling number of the second kind. Zero for `k > n`.
    pub fn stirling_a(&self, n: usize, k: usize) -> I {
        self.stirling_a.get(n, k).expect("stirling rows are infallible")
    }

    pub fn stirling_a_row(&self, n: usize) -> Vec<I> {
        self.stirling_a.row(n).expect("stirling rows are infallible")
    }

    /// `E^B(n, k)`: signed permutations of `[n]` with `k` descents.
    pub fn eulerian_b(&self, n: usize, k: usize) -> Result<I> {
        self.eulerian_b.get(n, k)
    }

    pub fn eulerian_b_row(&self, n: usize) -> Result<Vec<I>> {
        self.eulerian_b.row(n)
    }

    /// `a(n, k)` with 1-based `k`; requires `n >= 1`.
    pub fn eulerian_a(&self, n: usize, k: usize) -> Result<I> {
        if n == 0 {
            return Err(Error::Domain { what: "eulerian_a", n });
        }
        self.eulerian_a.get(n, k)
    }

    /// `[a(n, 1), ..., a(n, n)]`; requires `n >= 1`.
    pub fn eulerian_a_row(&self, n: usize) -> Result<Vec<I>> {
        if n == 0 {
            return Err(Error::Domain { what: "eulerian_a", n });
        }
        let mut row = self.eulerian_a.row(n)?;
        if !row[0].is_zero() {
            return Err(Error::Inconsistent {
                what: "eulerian-a",
                detail: format!("a({n}, 0) = {} should vanish", row[0]),
            });
        }
        row.remove(0);
        Ok(row)
    }

    pub fn bell_b(&self, n: usize) -> BellData<I>
    where
        Ratio<I>: Scalar,
    {
        let row = self.stirling_b_row(n);
        let number = row.iter().cloned().fold(I::zero(), |a, b| a + b);
        BellData { n, number, polynomial: int_poly(row) }
    }

    /// `B^B_n(u) = sum_k S^B(n, k) u^k`.
    pub fn bell_poly_b(&self, n: usize) -> Poly<Ratio<I>>
    where
        Ratio<I>: Scalar,
    {
        int_poly(self.stirling_b_row(n))
    }

    pub fn bell_a(&self, n: usize) -> I {
        self.stirling_a_row(n).into_iter().fold(I::zero(), |a, b| a + b)
    }

    fn ordered_b_row(&self, n: usize) -> Vec<I> {
        self.stirling_b_row(n)
            .into_iter()
            .enumerate()
            .map(|(k, s)| pow(&I::from_usize_exact(2), k) * factorial::<I>(k) * s)
            .collect()
    }

    /// `sum_k 2^k k! S^B(n, k)`.
    pub fn ordered_bell_b(&self, n: usize) -> I {
        self.ordered_b_row(n).into_iter().fold(I::zero(), |a, b| a + b)
    }

    pub fn ordered_bell_poly_b(&self, n: usize) -> Poly<Ratio<I>>
    where
        Ratio<I>: Scalar,
    {
        int_poly(self.ordered_b_row(n))
    }

    /// `F_n(u) = sum_k k! S(n, k) u^k`, the ordered set partitions of `[n]`
    /// counted by number of blocks.
    pub fn ordered_bell_poly_a(&self, n: usize) -> Poly<Ratio<I>>
    where
        Ratio<I>: Scalar,
    {
        let row = self
            .stirling_a_row(n)
            .into_iter()
            .enumerate()
            .map(|(k, s)| factorial::<I>(k) * s)
            .collect();
        int_poly(row)
    }

    /// Coordinates of the ordered Bell-B polynomial in the basis
    /// `u^k (1+u)^(n-k)`. Every coordinate must be a non-negative integer.
    pub fn gamma_expansion_b(&self, n: usize) -> Result<Vec<I>>
    where
        Ratio<I>: Scalar,
    {
        let gamma = self.ordered_bell_poly_b(n).convert(Basis::Gamma(n))?;
        nonnegative_integers(&gamma, n + 1, "gamma_expansion_b")
    }

    /// Coordinates `[c_1, ..., c_n]` of `F_n(u)` in the basis
    /// `u^(n-k+1) (1+u)^(k-1)`, `k = 1..=n`. Requires `n >= 1`.
    pub fn gamma_expansion_a(&self, n: usize) -> Result<Vec<I>>
    where
        Ratio<I>: Scalar,
    {
        if n == 0 {
            return Err(Error::Domain { what: "gamma_expansion_a", n });
        }
        let f = self.ordered_bell_poly_a(n);
        if !f.coeff(0).is_zero() {
            return Err(Error::Inconsistent {
                what: "gamma_expansion_a",
                detail: format!("F_{n} has nonzero constant term"),
            });
        }
        // F_n(u) / u = sum_j c_{n-j} u^j (1+u)^(n-1-j)
        let reduced = Poly::new("u", Basis::Monomial, f.coeffs()[1..].to_vec());
        let gamma = reduced.convert(Basis::Gamma(n - 1))?;
        let mut out = nonnegative_integers(&gamma, n, "gamma_expansion_a")?;
        out.reverse();
        Ok(out)
    }
}

fn int_poly<I>(row: Vec<I>) -> Poly<Ratio<I>>
where
    I: IntScalar,
    Ratio<I>: Scalar,
{
    Poly::new("u", Basis::Monomial, row.into_iter().map(Ratio::from_integer).collect())
}

fn nonnegative_integers<I>(p: &Poly<Ratio<I>>, len: usize, what: &'static str) -> Result<Vec<I>>
where
    I: IntScalar,
    Ratio<I>: Scalar,
{
    (0..len)
        .map(|k| {
            let c = p.coeff(k);
            if !c.is_integer() || c.is_negative() {
                return Err(Error::Inconsistent {
                    what,
                    detail: format!("coordinate {k} is {c}, not a non-negative integer"),
                });
            }
            Ok(c.to_integer())
        })
        .collect()
}
