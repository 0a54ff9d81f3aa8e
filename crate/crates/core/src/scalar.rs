//! Scalar abstractions.
//!
//! Polynomial code is written against [`Scalar`], which only asks for field
//! operations; number triangles are written against [`IntScalar`]. The exact
//! instantiations used throughout the crate are [`crate::Int`] and
//! [`crate::Rational`].

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Coefficient field for polynomials.
///
/// Exact arithmetic is only guaranteed for rational instantiations.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every i64 is representable")
    }

    /// Whether this value is an integer (for rational types, denominator 1).
    fn is_integral(&self) -> bool;
}

impl<I> Scalar for Ratio<I>
where
    I: IntScalar,
    Ratio<I>: FromPrimitive,
{
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for f64 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }
}

/// Integer type backing the number triangles.
pub trait IntScalar:
    Clone + Debug + Display + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("index fits in the integer type")
    }
}

impl<I> IntScalar for I where
    I: Clone + Debug + Display + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// `base^exp` by repeated squaring.
pub fn pow<T: Clone + Num>(base: &T, mut exp: usize) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial<T: Clone + Num + FromPrimitive>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i) * ... stays integral
        acc = acc * T::from_usize(n - i).unwrap() / T::from_usize(i + 1).unwrap();
    }
    acc
}

/// `n!`.
pub fn factorial<T: Clone + Num + FromPrimitive>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * T::from_usize(i).unwrap())
}
