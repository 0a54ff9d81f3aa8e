//! Dense univariate polynomials with a basis tag.
//!
//! A [`Poly`] stores coefficients against one of four bases of the space of
//! polynomials in a single variable:
//!
//! * [`Basis::Monomial`]: `1, x, x^2, ...`
//! * [`Basis::FallingA`]: `(x)_k = x(x-1)...(x-k+1)`
//! * [`Basis::FallingB`]: `(x)^B_k = (x-1)(x-3)...(x-2k+1)`
//! * [`Basis::Gamma`]`(n)`: `x^k (1+x)^(n-k)` for `0 <= k <= n`
//!
//! Conversions never use precomputed tables. Falling-factorial coordinates
//! come from iterated synthetic division by the factors `x - r_k`, and gamma
//! coordinates come from a unit-triangular solve, so the number triangles
//! computed elsewhere in the crate can be checked against them.

use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::scalar::{binomial, pow, Scalar};

/// Which family of falling factorials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Falling {
    /// `(x)_k = x(x-1)...(x-k+1)`
    A,
    /// `(x)^B_k = (x-1)(x-3)...(x-2k+1)`
    B,
}

impl Falling {
    /// Root of the `(j+1)`-th linear factor, so that element `k` is
    /// `prod_{j<k} (x - root(j))`.
    pub fn root(self, j: usize) -> i64 {
        match self {
            Falling::A => j as i64,
            Falling::B => 2 * j as i64 + 1,
        }
    }

    pub fn basis(self) -> Basis {
        match self {
            Falling::A => Basis::FallingA,
            Falling::B => Basis::FallingB,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    FallingA,
    FallingB,
    /// `x^k (1+x)^(n-k)`, `0 <= k <= n`; spans polynomials of degree at most `n`.
    Gamma(usize),
}

impl Basis {
    fn falling(self) -> Option<Falling> {
        match self {
            Basis::FallingA => Some(Falling::A),
            Basis::FallingB => Some(Falling::B),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Monomial => f.write_str("monomial"),
            Basis::FallingA => f.write_str("falling-A"),
            Basis::FallingB => f.write_str("falling-B"),
            Basis::Gamma(n) => write!(f, "gamma({n})"),
        }
    }
}

/// A polynomial in one named variable, stored densely in some [`Basis`].
///
/// `coeffs[k]` multiplies basis element `k`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    var: String,
    basis: Basis,
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(var: impl Into<String>, basis: Basis, coeffs: Vec<T>) -> Self {
        let mut p = Poly { var: var.into(), basis, coeffs };
        p.trim();
        p
    }

    pub fn monomial_coeffs(var: impl Into<String>, coeffs: Vec<T>) -> Self {
        Self::new(var, Basis::Monomial, coeffs)
    }

    /// Monomial-basis polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::monomial_coeffs(var, coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(var, Basis::Monomial, Vec::new())
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, T::one())
    }

    pub fn constant(var: impl Into<String>, c: T) -> Self {
        Self::new(var, Basis::Monomial, vec![c])
    }

    /// The polynomial `var` itself.
    pub fn variable(var: impl Into<String>) -> Self {
        Self::new(var, Basis::Monomial, vec![T::zero(), T::one()])
    }

    /// `c * var^k`.
    pub fn term(var: impl Into<String>, c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, Basis::Monomial, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of basis element `k` (zero past the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial function; `None` stands for the degree of zero.
    pub fn degree(&self) -> Option<usize> {
        match self.basis {
            Basis::Gamma(_) => self.to_monomial().degree(),
            _ => self.coeffs.len().checked_sub(1),
        }
    }

    /// Same coefficients under another variable name.
    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.clone(),
                right: other.var.clone(),
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.check_var(other)?;
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { left: self.basis, right: other.basis });
        }
        Ok(())
    }

    /// Coefficientwise sum. Both operands must share variable and basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect();
        Self::new(self.var.clone(), self.basis, coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.clone() * c.clone()).collect();
        Self::new(self.var.clone(), self.basis, coeffs)
    }

    /// Product, returned in the monomial basis. Operands in other bases are
    /// converted first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let a = self.to_monomial();
        let b = other.to_monomial();
        if a.is_zero() || b.is_zero() {
            return Ok(Self::zero(self.var.clone()));
        }
        let mut out = vec![T::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        Ok(Self::monomial_coeffs(self.var.clone(), out))
    }

    pub fn pow(&self, exp: usize) -> Result<Self> {
        let mut acc = Self::one(self.var.clone());
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `p(a*x + b)` in the monomial basis.
    pub fn compose_shift(&self, a: &T, b: &T) -> Result<Self> {
        if self.basis != Basis::Monomial {
            return Err(Error::NotMonomial(self.basis));
        }
        let lin = Self::monomial_coeffs(self.var.clone(), vec![b.clone(), a.clone()]);
        let mut acc = Self::zero(self.var.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin)?.add(&Self::constant(self.var.clone(), c.clone()))?;
        }
        Ok(acc)
    }

    /// Basis element `k` of the given falling-factorial family, expanded in
    /// the monomial basis.
    pub fn falling_factorial(var: impl Into<String>, family: Falling, k: usize) -> Self {
        let var = var.into();
        let mut acc = Self::one(var.clone());
        for j in 0..k {
            let factor = Self::monomial_coeffs(var.clone(), vec![-T::from_int(family.root(j)), T::one()]);
            acc = acc.mul(&factor).expect("same variable");
        }
        acc
    }

    /// Divide a monomial-basis polynomial by `(x - root)`; returns the
    /// quotient and the remainder `p(root)`.
    pub fn div_linear(&self, root: &T) -> (Self, T) {
        debug_assert_eq!(self.basis, Basis::Monomial);
        if self.coeffs.is_empty() {
            return (self.clone(), T::zero());
        }
        let mut quotient = vec![T::zero(); self.coeffs.len() - 1];
        let mut carry = T::zero();
        for k in (0..self.coeffs.len()).rev() {
            carry = self.coeffs[k].clone() + carry * root.clone();
            if k > 0 {
                quotient[k - 1] = carry.clone();
            }
        }
        (Self::monomial_coeffs(self.var.clone(), quotient), carry)
    }

    pub fn to_monomial(&self) -> Self {
        match self.basis {
            Basis::Monomial => self.clone(),
            Basis::FallingA | Basis::FallingB => {
                let family = self.basis.falling().unwrap();
                // c_0 + (x - r_0)(c_1 + (x - r_1)(c_2 + ...))
                let mut acc = Self::zero(self.var.clone());
                for (k, c) in self.coeffs.iter().enumerate().rev() {
                    let factor = Self::monomial_coeffs(
                        self.var.clone(),
                        vec![-T::from_int(family.root(k)), T::one()],
                    );
                    acc = acc
                        .mul(&factor)
                        .and_then(|a| a.add(&Self::constant(self.var.clone(), c.clone())))
                        .expect("same variable and basis");
                }
                acc
            }
            Basis::Gamma(n) => {
                let mut out = vec![T::zero(); n + 1];
                for (k, c) in self.coeffs.iter().enumerate() {
                    for (j, slot) in out.iter_mut().enumerate().skip(k) {
                        *slot = slot.clone() + c.clone() * binomial::<T>(n - k, j - k);
                    }
                }
                Self::monomial_coeffs(self.var.clone(), out)
            }
        }
    }

    /// Re-express in `target`. The polynomial function is unchanged.
    pub fn convert(&self, target: Basis) -> Result<Self> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let mono = self.to_monomial();
        match target {
            Basis::Monomial => Ok(mono),
            Basis::FallingA | Basis::FallingB => {
                let family = target.falling().unwrap();
                let mut coeffs = Vec::with_capacity(mono.coeffs.len());
                let mut rest = mono;
                let mut k = 0;
                while !rest.is_zero() {
                    let (q, r) = rest.div_linear(&T::from_int(family.root(k)));
                    coeffs.push(r);
                    rest = q;
                    k += 1;
                }
                Ok(Self::new(self.var.clone(), target, coeffs))
            }
            Basis::Gamma(n) => {
                if let Some(d) = mono.degree().filter(|&d| d > n) {
                    return Err(Error::GammaDegreeOverflow { degree: d, bound: n });
                }
                // [x^j] p = sum_{k <= j} c_k C(n-k, j-k); unit diagonal.
                let mut coeffs: Vec<T> = Vec::with_capacity(n + 1);
                for j in 0..=n {
                    let mut c = mono.coeff(j);
                    for (k, ck) in coeffs.iter().enumerate() {
                        c = c - ck.clone() * binomial::<T>(n - k, j - k);
                    }
                    coeffs.push(c);
                }
                Ok(Self::new(self.var.clone(), target, coeffs))
            }
        }
    }

    /// Value at `x0`, evaluated directly in the stored basis.
    pub fn eval(&self, x0: &T) -> T {
        match self.basis {
            Basis::Monomial => self
                .coeffs
                .iter()
                .rev()
                .fold(T::zero(), |acc, c| acc * x0.clone() + c.clone()),
            Basis::FallingA | Basis::FallingB => {
                let family = self.basis.falling().unwrap();
                self.coeffs.iter().enumerate().rev().fold(T::zero(), |acc, (k, c)| {
                    acc * (x0.clone() - T::from_int(family.root(k))) + c.clone()
                })
            }
            Basis::Gamma(n) => {
                let one_plus = T::one() + x0.clone();
                self.coeffs
                    .iter()
                    .enumerate()
                    .fold(T::zero(), |acc, (k, c)| {
                        acc + c.clone() * pow(x0, k) * pow(&one_plus, n - k)
                    })
            }
        }
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-T::one())
    }
}

fn write_coeff_term<T: Scalar>(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &T,
    element: Option<String>,
) -> fmt::Result {
    let negative = c.is_negative();
    let mag = c.abs();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    match element {
        None => write!(f, "{mag}"),
        Some(e) if mag.is_one() => f.write_str(&e),
        Some(e) => write!(f, "{mag}*{e}"),
    }
}

/// Ascending powers, e.g. `1 + 4*u + u^2`, `x/2`-style coefficients as `1/2*x`.
/// Non-monomial bases render their elements symbolically.
impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let v = &self.var;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let element = match self.basis {
                Basis::Monomial => match k {
                    0 => None,
                    1 => Some(v.clone()),
                    _ => Some(format!("{v}^{k}")),
                },
                Basis::FallingA => Some(format!("({v})_{k}")),
                Basis::FallingB => Some(format!("({v})^B_{k}")),
                Basis::Gamma(n) => Some(format!("{v}^{k}*(1+{v})^{}", n - k)),
            };
            write_coeff_term(f, first, c, element)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Polynomial, Rational};
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(c: &[i64]) -> Polynomial {
        Polynomial::from_ints("x", c)
    }

    #[test]
    fn add_cancels_and_trims() {
        let p = ints(&[1, 0, 1]).add(&ints(&[0, 0, -1])).unwrap();
        assert_eq!(p, ints(&[1]));
        assert_eq!(Polynomial::zero("x").add(&ints(&[2, 3])).unwrap(), ints(&[2, 3]));
        assert_eq!(ints(&[-1, 1]).add(&ints(&[-3, 1])).unwrap(), ints(&[-4, 2]));
    }

    #[test]
    fn add_rejects_mismatch() {
        let err = ints(&[1]).add(&Polynomial::from_ints("u", &[1])).unwrap_err();
        assert!(matches!(err, Error::VariableMismatch { .. }));
        let fb = Polynomial::new("x", Basis::FallingB, vec![q(1, 1)]);
        let err = ints(&[1, 1]).add(&fb).unwrap_err();
        assert!(matches!(err, Error::BasisMismatch { .. }));
    }

    #[test]
    fn mul_expands() {
        let p = ints(&[-1, 1]).mul(&ints(&[-3, 1])).unwrap();
        assert_eq!(p, ints(&[3, -4, 1]));
        assert_eq!(p.mul(&Polynomial::one("x")).unwrap(), p);
        assert!(matches!(
            p.mul(&Polynomial::one("u")).unwrap_err(),
            Error::VariableMismatch { .. }
        ));
    }

    #[test]
    fn cubic_product_agrees_with_pointwise_values() {
        let p = ints(&[-1, 1]).mul(&ints(&[-3, 1])).unwrap().mul(&ints(&[-5, 1])).unwrap();
        assert_eq!(p, ints(&[-15, 23, -9, 1]));
        for x in 0..4i64 {
            let direct = (x - 1) * (x - 3) * (x - 5);
            assert_eq!(p.eval(&q(x, 1)), q(direct, 1));
        }
    }

    #[test]
    fn compose_shift_cases() {
        let x2 = ints(&[0, 0, 1]);
        assert_eq!(x2.compose_shift(&q(1, 1), &q(-2, 1)).unwrap(), ints(&[4, -4, 1]));
        let p = ints(&[3, -1, 0, 7]);
        assert_eq!(p.compose_shift(&q(1, 1), &q(0, 1)).unwrap(), p);
        let x = ints(&[0, 1]);
        let half = x.compose_shift(&q(1, 2), &q(-1, 2)).unwrap();
        assert_eq!(half, Polynomial::monomial_coeffs("x", vec![q(-1, 2), q(1, 2)]));
        let fb = Polynomial::new("x", Basis::FallingB, vec![q(1, 1)]);
        assert!(matches!(fb.compose_shift(&q(1, 1), &q(0, 1)), Err(Error::NotMonomial(_))));
    }

    #[test]
    fn falling_factorial_elements() {
        assert_eq!(Polynomial::falling_factorial("x", Falling::B, 0), ints(&[1]));
        assert_eq!(Polynomial::falling_factorial("x", Falling::B, 2), ints(&[3, -4, 1]));
        assert_eq!(Polynomial::falling_factorial("x", Falling::A, 3), ints(&[0, 2, -3, 1]));
    }

    #[test]
    fn convert_examples() {
        let x2 = ints(&[0, 0, 1]);
        let fb = x2.convert(Basis::FallingB).unwrap();
        assert_eq!(fb.coeffs(), &[q(1, 1), q(4, 1), q(1, 1)]);
        let elem = Polynomial::new("x", Basis::FallingB, vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(elem.convert(Basis::Monomial).unwrap(), ints(&[3, -4, 1]));
        let g = ints(&[1, 8, 8]).convert(Basis::Gamma(2)).unwrap();
        assert_eq!(g.coeffs(), &[q(1, 1), q(6, 1), q(1, 1)]);
    }

    #[test]
    fn gamma_rejects_high_degree() {
        let err = ints(&[1, 2, 3]).convert(Basis::Gamma(1)).unwrap_err();
        assert_eq!(err, Error::GammaDegreeOverflow { degree: 2, bound: 1 });
    }

    #[test]
    fn gamma_accepts_lower_degree_and_round_trips() {
        let p = ints(&[2, -1]);
        let g = p.convert(Basis::Gamma(4)).unwrap();
        assert_eq!(g.convert(Basis::Monomial).unwrap(), p);
        assert_eq!(g.degree(), Some(1));
    }

    #[test]
    fn eval_examples() {
        let elem = Polynomial::new("x", Basis::FallingB, vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(elem.eval(&q(5, 1)), q(8, 1));
        assert_eq!(elem.eval(&q(3, 1)), q(0, 1));
        let x3 = ints(&[0, 0, 0, 1]).convert(Basis::FallingB).unwrap();
        assert_eq!(x3.eval(&q(3, 1)), q(27, 1));
    }

    #[test]
    fn zero_polynomial_conventions() {
        let z = Polynomial::zero("x");
        assert_eq!(z.degree(), None);
        assert!(z.coeffs().is_empty());
        assert!(z.convert(Basis::FallingA).unwrap().is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display_rules() {
        assert_eq!(ints(&[1, 4, 1]).with_var("u").to_string(), "1 + 4*u + u^2");
        assert_eq!(ints(&[0, -1, 0, 2]).to_string(), "-x + 2*x^3");
        let p = Polynomial::monomial_coeffs("x", vec![q(-3, 1), q(1, 2)]);
        assert_eq!(p.to_string(), "-3 + 1/2*x");
    }

    #[test]
    fn works_over_small_rationals_and_floats() {
        use num_rational::Rational64;
        let p = Poly::<Rational64>::from_ints("x", &[0, 0, 1]);
        let fb = p.convert(Basis::FallingB).unwrap();
        assert_eq!(fb.coeffs(), &[1.into(), 4.into(), 1.into()]);
        let pf = Poly::<f64>::from_ints("x", &[1, 8, 8]).convert(Basis::Gamma(2)).unwrap();
        assert_eq!(pf.coeffs(), &[1.0, 6.0, 1.0]);
    }
}
