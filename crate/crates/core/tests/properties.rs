use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use typeb::scalar::{binomial, pow};
use typeb::umbral::check_shift_lemma;
use typeb::{Basis, ExactTables, Falling, Functional, Polynomial, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(|c| Polynomial::monomial_coeffs("x", c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conversions_round_trip(p in poly(12)) {
        let n = p.degree().unwrap_or(0);
        for basis in [Basis::FallingA, Basis::FallingB, Basis::Gamma(n), Basis::Gamma(n + 3)] {
            let there = p.convert(basis).unwrap();
            prop_assert_eq!(there.basis(), basis);
            prop_assert_eq!(there.convert(Basis::Monomial).unwrap(), p.clone());
            if basis != Basis::Gamma(n + 3) || p.is_zero() {
                prop_assert_eq!(there.degree(), p.degree());
            }
        }
    }

    #[test]
    fn gamma_round_trip_from_gamma_side(c in prop::collection::vec(rational(), 1..8)) {
        let n = c.len() - 1;
        let g = Polynomial::new("u", Basis::Gamma(n), c);
        let back = g.convert(Basis::Monomial).unwrap().convert(Basis::Gamma(n)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn eval_is_basis_independent(p in poly(10), x0 in rational()) {
        let n = p.degree().unwrap_or(0);
        let expected = p.eval(&x0);
        for basis in [Basis::FallingA, Basis::FallingB, Basis::Gamma(n)] {
            prop_assert_eq!(p.convert(basis).unwrap().eval(&x0), expected.clone());
        }
    }

    #[test]
    fn functionals_are_linear(p in poly(8), r in poly(8), a in rational(), b in rational()) {
        for f in [Functional::LB, Functional::LBOrdered, Functional::LA] {
            let combo = p.scale(&a).add(&r.scale(&b)).unwrap();
            let lhs = f.apply(&combo).unwrap();
            let rhs = f.apply(&p).unwrap().scale(&a).add(&f.apply(&r).unwrap().scale(&b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shift_lemma_holds(p in poly(8)) {
        let w = check_shift_lemma(&p).unwrap();
        prop_assert!(w.holds, "lhs {} rhs {}", w.lhs, w.rhs);
    }

    #[test]
    fn mul_matches_pointwise(p in poly(6), r in poly(6), x0 in rational()) {
        let prod = p.mul(&r).unwrap();
        prop_assert_eq!(prod.eval(&x0), p.eval(&x0) * r.eval(&x0));
    }
}

#[test]
fn stirling_rows_are_falling_b_coordinates() {
    let t = ExactTables::new();
    for n in 0..=12 {
        let coords = Polynomial::term("x", Rational::one(), n).convert(Basis::FallingB).unwrap();
        let row: Vec<Rational> = t.stirling_b_row(n).into_iter().map(Rational::from_integer).collect();
        assert_eq!(coords.coeffs(), row.as_slice(), "n = {n}");
        let row_a: Vec<Rational> = t.stirling_a_row(n).into_iter().map(Rational::from_integer).collect();
        let coords_a = Polynomial::term("x", Rational::one(), n).convert(Basis::FallingA).unwrap();
        let mut expected = row_a;
        while expected.last().is_some_and(|c| c.is_zero()) {
            expected.pop();
        }
        assert_eq!(coords_a.coeffs(), expected.as_slice(), "n = {n}");
    }
}

#[test]
fn halved_falling_a_is_scaled_falling_b() {
    for n in 0..=12 {
        let a = Polynomial::falling_factorial("x", Falling::A, n);
        let shifted = a.compose_shift(&q(1, 2), &q(-1, 2)).unwrap();
        let b = Polynomial::falling_factorial("x", Falling::B, n).scale(&(Rational::one() / pow(&q(2, 1), n)));
        assert_eq!(shifted, b, "n = {n}");
    }
}

fn falling_value(a: i64, k: usize) -> BigInt {
    (0..k as i64).map(|j| BigInt::from(a - j)).product()
}

#[test]
fn falling_factorial_binomial_identity_on_grid() {
    for n in 0..=8usize {
        for a in -10i64..10 {
            for b in -10i64..10 {
                let lhs = falling_value(a + b, n);
                let rhs: BigInt = (0..=n)
                    .map(|k| binomial::<BigInt>(n, k) * falling_value(a, k) * falling_value(b, n - k))
                    .sum();
                assert_eq!(lhs, rhs, "n = {n}, a = {a}, b = {b}");
            }
        }
    }
}

#[test]
fn bell_polynomials_at_zero_and_one() {
    let t = ExactTables::new();
    for n in 0..=12 {
        let data = t.bell_b(n);
        assert_eq!(data.polynomial.eval(&Rational::one()), Rational::from_integer(data.number.clone()));
        assert_eq!(data.polynomial.eval(&Rational::zero()), Rational::one());
        assert_eq!(data.polynomial, t.bell_poly_b(n));
    }
}

#[test]
fn functionals_reproduce_generating_polynomials() {
    let t = ExactTables::new();
    for n in 0..=12 {
        let xn = Polynomial::term("x", Rational::one(), n);
        assert_eq!(Functional::LB.apply(&xn).unwrap(), t.bell_poly_b(n));
        assert_eq!(Functional::LBOrdered.apply(&xn).unwrap(), t.ordered_bell_poly_b(n));
        assert_eq!(Functional::LA.apply(&xn).unwrap(), stirling_a_poly(&t, n));
    }
}

fn stirling_a_poly(t: &ExactTables, n: usize) -> Polynomial {
    Polynomial::monomial_coeffs("u", t.stirling_a_row(n).into_iter().map(Rational::from_integer).collect())
}

#[test]
fn independent_tables_agree() {
    let a = ExactTables::new();
    let b = ExactTables::new();
    for n in (0..=12).rev() {
        assert_eq!(a.stirling_b_row(n), b.stirling_b_row(n));
        assert_eq!(a.stirling_a_row(n), b.stirling_a_row(n));
        assert_eq!(a.eulerian_b_row(n).unwrap(), b.eulerian_b_row(n).unwrap());
    }
}

#[test]
fn worpitzky_b_forward_including_m_above_n() {
    let t = ExactTables::new();
    for n in 0..=10usize {
        let row = t.eulerian_b_row(n).unwrap();
        for m in 0..=10usize {
            let rhs: BigInt = row
                .iter()
                .enumerate()
                .map(|(k, e)| if k > n + m { BigInt::zero() } else { binomial::<BigInt>(n + m - k, n) * e })
                .sum();
            assert_eq!(pow(&BigInt::from(2 * m + 1), n), rhs, "n = {n}, m = {m}");
        }
    }
}
