//! Named identity checks.
//!
//! Every check is deterministic in its parameters and stops at the smallest
//! failing instance, reporting both sides. Polynomial identities are compared
//! coefficientwise in exact arithmetic. The Dobinski check is the only
//! numeric one; it still works with exact rationals and compares against a
//! fixed tolerance.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate;
use crate::poly::{Basis, Falling};
use crate::scalar::{binomial, factorial, pow};
use crate::umbral::check_shift_lemma;
use crate::{ExactTables, Int, Polynomial, Rational};

pub const DEFAULT_SEED: u64 = 0x7970_6542;
/// Largest `n` accepted by the falling-factorial expansion check.
pub const MAX_BALLS_URNS_N: usize = 16;
/// Largest `n` for the Dobinski series check.
pub const MAX_DOBINSKI_N: usize = 12;
/// Largest `n` the enumeration oracles are run at.
pub const MAX_ORACLE_N: usize = 6;
/// Largest `n` for the ordered-partition oracle.
pub const MAX_ORDERED_ORACLE_N: usize = 5;
/// Largest `n` for replaying the insertion count behind the Bell-B recurrence.
pub const MAX_REPLAY_N: usize = 5;
/// Terms of the exponential series used for `e`; truncation error below `10^-30`.
const E_TERMS: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub max_n: usize,
    pub max_m: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams { max_n: 10, max_m: 10, trials: 200, seed: DEFAULT_SEED }
    }
}

/// The failing instantiation and both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub ranges: String,
    pub outcome: Outcome,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {} ({})", self.name, self.ranges),
            Outcome::Fail(w) => write!(
                f,
                "FAIL {} ({}): at {}: lhs = {}, rhs = {}",
                self.name, self.ranges, w.instance, w.lhs, w.rhs
            ),
        }
    }
}

fn fail(instance: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Outcome {
    Outcome::Fail(Witness { instance: instance.into(), lhs: lhs.to_string(), rhs: rhs.to_string() })
}

fn error_outcome(instance: impl Into<String>, err: crate::Error) -> Outcome {
    fail(instance, format!("error: {err}"), "-")
}

fn report(name: &'static str, ranges: String, outcome: Outcome) -> CheckReport {
    CheckReport { name, ranges, outcome }
}

/// First failing outcome of `check(n)` for `n` in `range`, else pass.
fn first_failure(range: impl IntoIterator<Item = usize>, mut check: impl FnMut(usize) -> Outcome) -> Outcome {
    for n in range {
        let o = check(n);
        if o != Outcome::Pass {
            return o;
        }
    }
    Outcome::Pass
}

fn int(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

fn rat(v: &Int) -> Rational {
    Rational::from_integer(v.clone())
}

fn x_pow(var: &str, n: usize) -> Polynomial {
    Polynomial::term(var, Rational::one(), n)
}

/// `u^a (1+u)^b`.
fn gamma_element(a: usize, b: usize) -> Polynomial {
    let one_plus = Polynomial::from_ints("u", &[1, 1]);
    x_pow("u", a).mul(&one_plus.pow(b).unwrap()).unwrap()
}

/// `x^n = sum_k S^B(n, k) (x)^B_k` for all `n <= max_n`, both by summing the
/// expanded right side and by converting `x^n` to the falling-B basis.
pub fn verify_balls_urns(tables: &ExactTables, max_n: usize) -> CheckReport {
    let max_n = max_n.min(MAX_BALLS_URNS_N);
    let outcome = first_failure(0..=max_n, |n| {
        let lhs = x_pow("x", n);
        let row = tables.stirling_b_row(n);
        let mut rhs = Polynomial::zero("x");
        for (k, s) in row.iter().enumerate() {
            let term = Polynomial::falling_factorial("x", Falling::B, k).scale(&rat(s));
            rhs = rhs.add(&term).unwrap();
        }
        if lhs != rhs {
            return fail(format!("n = {n}"), &lhs, &rhs);
        }
        let coords = lhs.convert(Basis::FallingB).unwrap();
        let expected: Vec<Rational> = row.iter().map(rat).collect();
        if coords.coeffs() != expected.as_slice() {
            return fail(format!("n = {n} (conversion)"), coords, format!("{expected:?}"));
        }
        Outcome::Pass
    });
    report("balls-urns", format!("n <= {max_n}"), outcome)
}

/// `B_{n+1}(u) = B_n(u) + u sum_j 2^(n-j) C(n, j) B_j(u)` for `n <= max_n`,
/// plus the insertion count replay at `u = 1` for `n <= 5`.
pub fn verify_rota_recurrence_b(tables: &ExactTables, max_n: usize) -> CheckReport {
    let u = Polynomial::variable("u");
    let symbolic = first_failure(0..=max_n, |n| {
        let lhs = tables.bell_poly_b(n + 1);
        let mut sum = Polynomial::zero("u");
        for j in 0..=n {
            let w = pow(&int(2), n - j) * binomial::<Rational>(n, j);
            sum = sum.add(&tables.bell_poly_b(j).scale(&w)).unwrap();
        }
        let rhs = tables.bell_poly_b(n).add(&u.mul(&sum).unwrap()).unwrap();
        if lhs != rhs {
            return fail(format!("n = {n}"), lhs, rhs);
        }
        Outcome::Pass
    });
    let replay_n = max_n.min(MAX_REPLAY_N);
    let outcome = if symbolic != Outcome::Pass {
        symbolic
    } else {
        first_failure(0..=replay_n, |n| replay_outcome(tables, n))
    };
    report("rota-b", format!("n <= {max_n}, replay n <= {replay_n}"), outcome)
}

fn replay_outcome(tables: &ExactTables, n: usize) -> Outcome {
    let replay = match enumerate::insertion_replay(n) {
        Ok(r) => r,
        Err(e) => return error_outcome(format!("replay n = {n}"), e),
    };
    let bell = |k: usize| tables.bell_b(k).number;
    if Int::from(replay.in_zero_block) != bell(n) {
        return fail(format!("replay n = {n}, zero block"), replay.in_zero_block, bell(n));
    }
    for k in 0..=n {
        let expected = binomial::<Int>(n, k) * pow(&Int::from(2), n - k) * bell(k);
        if Int::from(replay.by_rest[k]) != expected {
            return fail(format!("replay n = {n}, k = {k}"), replay.by_rest[k], expected);
        }
    }
    let total: u64 = replay.in_zero_block + replay.by_rest.iter().sum::<u64>();
    if Int::from(total) != bell(n + 1) {
        return fail(format!("replay n = {n}, total"), total, bell(n + 1));
    }
    Outcome::Pass
}

/// `B_{n+1} = sum_j C(n, j) B_j` for `n <= max_n`.
pub fn verify_rota_recurrence_a(tables: &ExactTables, max_n: usize) -> CheckReport {
    let outcome = first_failure(0..=max_n, |n| {
        let lhs = tables.bell_a(n + 1);
        let rhs: Int = (0..=n).map(|j| binomial::<Int>(n, j) * tables.bell_a(j)).sum();
        if lhs != rhs {
            return fail(format!("n = {n}"), lhs, rhs);
        }
        Outcome::Pass
    });
    report("rota-a", format!("n <= {max_n}"), outcome)
}

/// Number of series terms used for `n`.
pub fn dobinski_terms(n: usize) -> usize {
    3 * n + 40
}

/// Upper bound on `sum_{j >= terms} j^n / j!` from the ratio test. `None` if
/// the term ratio at `terms` is not below 1.
pub fn dobinski_tail_bound(n: usize, terms: usize) -> Option<Rational> {
    let t = terms.max(1);
    let first = pow(&int(t as i64), n) / factorial::<Rational>(t);
    // (j+1)^n / ((j+1) j^n) is decreasing in j, so its value at t bounds the rest.
    let ratio = pow(&(int(t as i64 + 1) / int(t as i64)), n) / int(t as i64 + 1);
    if ratio >= Rational::one() {
        return None;
    }
    Some(first / (Rational::one() - ratio))
}

fn e_approx() -> Rational {
    (0..E_TERMS).map(|i| Rational::one() / factorial::<Rational>(i)).sum()
}

/// Truncated Dobinski sum `(1/e) sum_{j < 3n+40} j^n / j!` against `B_n`,
/// tolerance `10^-6`, for `n <= min(max_n, 12)`.
pub fn verify_dobinski(tables: &ExactTables, max_n: usize) -> CheckReport {
    let max_n = max_n.min(MAX_DOBINSKI_N);
    let e = e_approx();
    let tol = Rational::new(Int::one(), Int::from(1_000_000));
    let tail_tol = Rational::new(Int::one(), Int::from(1_000_000_000));
    let outcome = first_failure(0..=max_n, |n| {
        let terms = dobinski_terms(n);
        match dobinski_tail_bound(n, terms) {
            Some(b) if b < tail_tol => {}
            other => return fail(format!("n = {n}, tail bound"), format!("{other:?}"), "< 1e-9"),
        }
        let partial: Rational = (0..terms)
            .map(|j| pow(&int(j as i64), n) / factorial::<Rational>(j))
            .sum();
        let approx = partial / e.clone();
        let bell = rat(&tables.bell_a(n));
        if (approx.clone() - bell.clone()).abs() >= tol {
            return fail(format!("n = {n}"), to_f64(&approx), bell);
        }
        Outcome::Pass
    });
    report("dobinski", format!("n <= {max_n}, tol 1e-6"), outcome)
}

fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn worpitzky(
    name: &'static str,
    row: impl Fn(usize) -> crate::Result<Vec<Int>>,
    base: impl Fn(usize) -> Int,
    first_k: usize,
    n_range: std::ops::RangeInclusive<usize>,
    max_m: usize,
) -> CheckReport {
    let ranges = format!("n in {}..={}, m <= {max_m}", n_range.start(), n_range.end());
    let outcome = first_failure(n_range, |n| {
        let row = match row(n) {
            Ok(r) => r,
            Err(e) => return error_outcome(format!("n = {n}"), e),
        };
        for m in 0..=max_m {
            let lhs = pow(&base(m), n);
            let rhs: Int = row
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let k = i + first_k;
                    if k > n + m {
                        Int::zero()
                    } else {
                        binomial::<Int>(n + m - k, n) * e
                    }
                })
                .sum();
            if lhs != rhs {
                return fail(format!("n = {n}, m = {m}"), lhs, rhs);
            }
        }
        Outcome::Pass
    });
    report(name, ranges, outcome)
}

/// `(1 + 2m)^n = sum_k C(n + m - k, n) E^B(n, k)`.
pub fn verify_worpitzky_b(tables: &ExactTables, max_n: usize, max_m: usize) -> CheckReport {
    worpitzky(
        "worpitzky-b",
        |n| tables.eulerian_b_row(n),
        |m| Int::from(2 * m + 1),
        0,
        0..=max_n,
        max_m,
    )
}

/// `m^n = sum_{k >= 1} C(n + m - k, n) a(n, k)` for `n >= 1`.
pub fn verify_worpitzky_a(tables: &ExactTables, max_n: usize, max_m: usize) -> CheckReport {
    worpitzky("worpitzky-a", |n| tables.eulerian_a_row(n), |m| Int::from(m), 1, 1..=max_n, max_m)
}

/// Ordered Bell-B polynomial against `sum_k E^B(n, k) u^k (1+u)^(n-k)`,
/// expanded directly, and the gamma coordinates against the Eulerian row.
pub fn verify_gamma_b(tables: &ExactTables, max_n: usize) -> CheckReport {
    let outcome = first_failure(0..=max_n, |n| {
        let row = match tables.eulerian_b_row(n) {
            Ok(r) => r,
            Err(e) => return error_outcome(format!("n = {n}"), e),
        };
        let lhs = tables.ordered_bell_poly_b(n);
        let mut rhs = Polynomial::zero("u");
        for (k, e) in row.iter().enumerate() {
            rhs = rhs.add(&gamma_element(k, n - k).scale(&rat(e))).unwrap();
        }
        if lhs != rhs {
            return fail(format!("n = {n}"), lhs, rhs);
        }
        match tables.gamma_expansion_b(n) {
            Ok(g) if g == row => Outcome::Pass,
            Ok(g) => fail(format!("n = {n} (gamma coordinates)"), format!("{g:?}"), format!("{row:?}")),
            Err(e) => error_outcome(format!("n = {n}"), e),
        }
    });
    report("gamma-b", format!("n <= {max_n}"), outcome)
}

/// `F_n(u) = sum_{k=1}^n a(n, k) u^(n-k+1) (1+u)^(k-1)` for `1 <= n <= max_n`.
pub fn verify_tanny_a(tables: &ExactTables, max_n: usize) -> CheckReport {
    let outcome = first_failure(1..=max_n, |n| {
        let row = match tables.eulerian_a_row(n) {
            Ok(r) => r,
            Err(e) => return error_outcome(format!("n = {n}"), e),
        };
        let lhs = tables.ordered_bell_poly_a(n);
        let mut rhs = Polynomial::zero("u");
        for (i, a) in row.iter().enumerate() {
            let k = i + 1;
            rhs = rhs.add(&gamma_element(n - k + 1, k - 1).scale(&rat(a))).unwrap();
        }
        if lhs != rhs {
            return fail(format!("n = {n}"), lhs, rhs);
        }
        match tables.gamma_expansion_a(n) {
            Ok(g) if g == row => Outcome::Pass,
            Ok(g) => fail(format!("n = {n} (gamma coordinates)"), format!("{g:?}"), format!("{row:?}")),
            Err(e) => error_outcome(format!("n = {n}"), e),
        }
    });
    report("tanny-a", format!("1 <= n <= {max_n}"), outcome)
}

/// Random polynomial in `x` of degree at most `max_deg` with small rational
/// coefficients.
pub fn random_polynomial(rng: &mut impl Rng, max_deg: usize) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| Rational::new(Int::from(rng.gen_range(-20i64..=20)), Int::from(rng.gen_range(1i64..=12))))
        .collect();
    Polynomial::monomial_coeffs("x", coeffs)
}

/// `L_B((x-1) p(x-2)) = u L_B(p)` on `trials` seeded random `p`, degree <= 8.
pub fn verify_shift_lemma(trials: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = Outcome::Pass;
    for t in 0..trials {
        let p = random_polynomial(&mut rng, 8);
        match check_shift_lemma(&p) {
            Ok(w) if w.holds => {}
            Ok(w) => {
                outcome = fail(format!("trial {t}, p = {p}"), w.lhs, w.rhs);
                break;
            }
            Err(e) => {
                outcome = error_outcome(format!("trial {t}"), e);
                break;
            }
        }
    }
    report("shift-lemma", format!("trials = {trials}, seed = {seed}"), outcome)
}

fn hist_matches(hist: &[u64], expected: &[Int]) -> bool {
    hist.len() == expected.len() && hist.iter().zip(expected).all(|(h, e)| Int::from(*h) == *e)
}

fn oracle_instance(tables: &ExactTables, n: usize) -> crate::Result<Outcome> {
    // type-B partitions: histogram, invariants, text round trip
    let mut hist = vec![0u64; n + 1];
    for p in enumerate::gen_partitions_b(n)? {
        if !p.is_valid() {
            return Ok(fail(format!("partitions-b n = {n}"), &p, "valid standard presentation"));
        }
        if n <= MAX_ORDERED_ORACLE_N {
            let text = p.to_string();
            match enumerate::parse_standard(&text) {
                Ok(q) if q == p => {}
                other => return Ok(fail(format!("round trip n = {n}"), text, format!("{other:?}"))),
            }
        }
        hist[p.num_blocks()] += 1;
    }
    let row = tables.stirling_b_row(n);
    if !hist_matches(&hist, &row) {
        return Ok(fail(format!("stirling-b n = {n}"), format!("{hist:?}"), format!("{row:?}")));
    }

    let desc = enumerate::descent_histogram_b(n)?;
    let row = tables.eulerian_b_row(n)?;
    if !hist_matches(&desc, &row) {
        return Ok(fail(format!("eulerian-b n = {n}"), format!("{desc:?}"), format!("{row:?}")));
    }

    if n <= MAX_ORDERED_ORACLE_N {
        let ordered = enumerate::count_ordered_partitions_b(n)?;
        let expected: Vec<Int> = tables
            .stirling_b_row(n)
            .iter()
            .enumerate()
            .map(|(k, s)| pow(&Int::from(2), k) * factorial::<Int>(k) * s)
            .collect();
        if !hist_matches(&ordered, &expected) {
            return Ok(fail(format!("ordered-b n = {n}"), format!("{ordered:?}"), format!("{expected:?}")));
        }
    }

    let hist = enumerate::count_partitions_a_by_blocks(n)?;
    let row = tables.stirling_a_row(n);
    if !hist_matches(&hist, &row) {
        return Ok(fail(format!("stirling-a n = {n}"), format!("{hist:?}"), format!("{row:?}")));
    }

    if n >= 1 {
        // a(n, k) counts permutations with k - 1 descents
        let desc = enumerate::descent_histogram_a(n)?;
        let row = tables.eulerian_a_row(n)?;
        if !hist_matches(&desc, &row) {
            return Ok(fail(format!("eulerian-a n = {n}"), format!("{desc:?}"), format!("{row:?}")));
        }
    }
    Ok(Outcome::Pass)
}

/// Every enumeration-versus-closed-form equality for `n <= min(max_n, 6)`;
/// ordered partitions and text round trips for `n <= 5`.
pub fn verify_oracles(tables: &ExactTables, max_n: usize) -> CheckReport {
    let max_n = max_n.min(MAX_ORACLE_N);
    let outcome = first_failure(0..=max_n, |n| {
        oracle_instance(tables, n).unwrap_or_else(|e| error_outcome(format!("n = {n}"), e))
    });
    report("oracles", format!("n <= {max_n}"), outcome)
}

/// Catalog of check names, in reporting order.
pub const CATALOG: &[&str] = &[
    "balls-urns",
    "rota-b",
    "rota-a",
    "dobinski",
    "worpitzky-b",
    "worpitzky-a",
    "gamma-b",
    "tanny-a",
    "shift-lemma",
    "oracles",
];

/// Run one named check; `None` for an unknown name.
pub fn run(name: &str, tables: &ExactTables, params: &CheckParams) -> Option<CheckReport> {
    let p = params;
    Some(match name {
        "balls-urns" => verify_balls_urns(tables, p.max_n),
        "rota-b" => verify_rota_recurrence_b(tables, p.max_n),
        "rota-a" => verify_rota_recurrence_a(tables, p.max_n),
        "dobinski" => verify_dobinski(tables, p.max_n),
        "worpitzky-b" => verify_worpitzky_b(tables, p.max_n, p.max_m),
        "worpitzky-a" => verify_worpitzky_a(tables, p.max_n, p.max_m),
        "gamma-b" => verify_gamma_b(tables, p.max_n),
        "tanny-a" => verify_tanny_a(tables, p.max_n),
        "shift-lemma" => verify_shift_lemma(p.trials, p.seed),
        "oracles" => verify_oracles(tables, p.max_n),
        _ => return None,
    })
}

/// Run the whole catalog concurrently; reports come back in catalog order.
pub fn run_all(tables: &ExactTables, params: &CheckParams) -> Vec<CheckReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CATALOG
            .iter()
            .map(|name| s.spawn(move || run(name, tables, params).expect("catalog names are known")))
            .collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    })
}
