//! Umbral linear functionals.
//!
//! Each [`Functional`] is fixed by where it sends the elements of a
//! falling-factorial basis. Applying it means converting the input to that
//! basis and substituting the images, so the result is a polynomial in the
//! formal variable `u`:
//!
//! | functional          | basis       | image of element `k` |
//! |---------------------|-------------|----------------------|
//! | [`Functional::LB`]        | `(x)^B_k` | `u^k`            |
//! | [`Functional::LBOrdered`] | `(x)^B_k` | `2^k k! u^k`     |
//! | [`Functional::LA`]        | `(x)_k`   | `u^k`            |
//!
//! Specializing `u = 1` in `LA` recovers the scalar functional that sends
//! every `(x)_k` to 1.

use crate::error::Result;
use crate::poly::{Basis, Falling, Poly};
use crate::scalar::{factorial, pow, Scalar};

/// Output variable of every functional.
pub const OUTPUT_VAR: &str = "u";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functional {
    LB,
    LBOrdered,
    LA,
}

impl Functional {
    pub fn basis(self) -> Falling {
        match self {
            Functional::LB | Functional::LBOrdered => Falling::B,
            Functional::LA => Falling::A,
        }
    }

    /// Coefficient `c` in the image `c * u^k` of basis element `k`.
    pub fn weight<T: Scalar>(self, k: usize) -> T {
        match self {
            Functional::LB | Functional::LA => T::one(),
            Functional::LBOrdered => pow(&T::from_int(2), k) * factorial::<T>(k),
        }
    }

    /// Image of `p` as a polynomial in `u`.
    pub fn apply<T: Scalar>(self, p: &Poly<T>) -> Result<Poly<T>> {
        let coords = p.convert(self.basis().basis())?;
        let coeffs = coords
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone() * self.weight::<T>(k))
            .collect();
        Ok(Poly::new(OUTPUT_VAR, Basis::Monomial, coeffs))
    }

    /// Image of `p` with `u` specialized to `u0`.
    pub fn apply_at<T: Scalar>(self, p: &Poly<T>, u0: &T) -> Result<T> {
        Ok(self.apply(p)?.eval(u0))
    }
}

/// Both sides of `L_B((x - 1) p(x - 2)) = u L_B(p(x))` for one `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftLemmaWitness<T> {
    pub holds: bool,
    pub lhs: Poly<T>,
    pub rhs: Poly<T>,
}

pub fn check_shift_lemma<T: Scalar>(p: &Poly<T>) -> Result<ShiftLemmaWitness<T>> {
    let var = p.var().to_string();
    let mono = p.to_monomial();
    let shifted = mono.compose_shift(&T::one(), &T::from_int(-2))?;
    let factor = Poly::from_ints(var, &[-1, 1]);
    let lhs = Functional::LB.apply(&factor.mul(&shifted)?)?;
    let rhs = Poly::variable(OUTPUT_VAR).mul(&Functional::LB.apply(&mono)?)?;
    Ok(ShiftLemmaWitness { holds: lhs == rhs, lhs, rhs })
}
