//! Symbolic verification of the identities linking the triangles, the Cauchy
//! polynomials and their generating functions.
//!
//! Checks read the triangles from a [`Tables`] value rather than rebuilding
//! them, so a corrupted entry shows up as a [`Mismatch`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::{binomial, Rational};
use crate::cauchy::{
    c_integral_oracle, c_poly_from, c_via_stirling_from, chat_at_neg_r_from, chat_integral_oracle,
    chat_poly_from, cq_number_from, CauchyKind,
};
use crate::poly::{BiPoly, XPoly};
use crate::series::{egf_c, egf_chat, egf_w};
use crate::triangle::{rising_fact, rstirling1, stirling1, whitney1, whitney2, Triangle};

/// Shift values used when none are given.
pub const DEFAULT_SHIFTS: [(i64, i64); 5] = [(0, 1), (1, 1), (-2, 1), (3, 5), (7, 2)];

/// `r0` values for the `q = 1` reduction to r-Stirling numbers.
pub const RSTIRLING_R0: [i64; 4] = [0, 1, 2, 5];

pub fn default_shifts() -> Vec<Rational> {
    DEFAULT_SHIFTS.iter().map(|&(n, d)| Rational::new(n, d)).collect()
}

/// The triangles every check reads from.
#[derive(Debug, Clone)]
pub struct Tables {
    pub w: Triangle,
    pub big_w: Triangle,
    pub s: Triangle,
}

impl Tables {
    pub fn new(n_max: usize) -> Self {
        Tables { w: whitney1(n_max), big_w: whitney2(n_max), s: stirling1(n_max) }
    }

    pub fn n_max(&self) -> usize {
        self.w.n_max().min(self.big_w.n_max()).min(self.s.n_max())
    }
}

/// The first failing instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    pub n: usize,
    pub k: Option<usize>,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed at n={}", self.check, self.n)?;
        if let Some(k) = self.k {
            write!(f, ", k={k}")?;
        }
        write!(f, "\n  lhs: {}\n  rhs: {}", self.lhs, self.rhs)
    }
}

type Check = Result<(), Mismatch>;

fn expect_eq(check: impl Into<String>, n: usize, k: Option<usize>, lhs: BiPoly, rhs: BiPoly) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch { check: check.into(), n, k, lhs, rhs })
    }
}

// (-1)^(n-j) C(n,j) [r|q]_(n-j)
fn shift_weight(n: usize, j: usize, q: &BiPoly) -> BiPoly {
    let c = Rational::from(binomial(n as u64, j as u64)) * Rational::sign_power(n - j);
    rising_fact(&BiPoly::r(), q, n - j).scale(&c)
}

/// Explicit formula for the first kind against the integral and Stirling routes.
pub fn check_theorem1(t: &Tables, n: usize) -> Check {
    let direct = c_poly_from(&t.w, n);
    expect_eq("c_poly = c_integral_oracle", n, None, direct.clone(), c_integral_oracle(n))?;
    expect_eq("c_poly = c_via_stirling", n, None, direct, c_via_stirling_from(&t.s, n))
}

/// Explicit formula for the second kind against its integral route.
pub fn check_theorem2(t: &Tables, n: usize) -> Check {
    expect_eq(
        "chat_poly = chat_integral_oracle",
        n,
        None,
        chat_poly_from(&t.w, n),
        chat_integral_oracle(n),
    )
}

/// `sum_k W(n,k) c_k^q(r) = 1/(n+1)` and `sum_k W(n,k) \hat c_k^q(-r) = (-1)^n/(n+1)`.
pub fn check_w_inversion(t: &Tables, n: usize) -> Check {
    let first: BiPoly = (0..=n).map(|k| t.big_w.get(n, k) * &c_poly_from(&t.w, k)).sum();
    let target = Rational::new(1, n as i64 + 1);
    expect_eq("sum_k W(n,k) c_k(r) = 1/(n+1)", n, None, first, BiPoly::constant(target.clone()))?;
    let second: BiPoly = (0..=n).map(|k| t.big_w.get(n, k) * &chat_at_neg_r_from(&t.w, k)).sum();
    expect_eq(
        "sum_k W(n,k) chat_k(-r) = (-1)^n/(n+1)",
        n,
        None,
        second,
        BiPoly::constant(Rational::sign_power(n) * target),
    )
}

/// `sum_j W(n,j) w(j,k) = delta(n,k)` for every `k <= n`.
pub fn check_orthogonality(t: &Tables, n: usize) -> Check {
    for k in 0..=n {
        let sum: BiPoly = (k..=n).map(|j| t.big_w.get(n, j) * t.w.get(j, k)).sum();
        let delta = if n == k { BiPoly::one() } else { BiPoly::zero() };
        expect_eq("sum_j W(n,j) w(j,k) = delta", n, Some(k), sum, delta)?;
    }
    Ok(())
}

/// `c_n^q(r+s) = sum_j (-1)^(n-j) C(n,j) [r|q]_(n-j) c_j^q(s)`.
pub fn check_shift(t: &Tables, n: usize, s: &Rational) -> Check {
    let one = Rational::one();
    let zero = Rational::zero();
    let lhs = c_poly_from(&t.w, n).subst_r(&one, s);
    let q = BiPoly::q();
    let rhs: BiPoly = (0..=n)
        .map(|j| shift_weight(n, j, &q) * c_poly_from(&t.w, j).subst_r(&zero, s))
        .sum();
    expect_eq(format!("shift identity (s={s})"), n, None, lhs, rhs)
}

/// `w_{q,r+s}(n,k) = sum_j (-1)^(n-j) C(n,j) [r|q]_(n-j) w_{q,s}(j,k)` for all `k`.
pub fn check_cheon_identity(t: &Tables, n: usize, s: &Rational) -> Check {
    let one = Rational::one();
    let zero = Rational::zero();
    let q = BiPoly::q();
    let weights: Vec<BiPoly> = (0..=n).map(|j| shift_weight(n, j, &q)).collect();
    for k in 0..=n {
        let lhs = t.w.get(n, k).subst_r(&one, s);
        let rhs: BiPoly = (k..=n).map(|j| &weights[j] * &t.w.get(j, k).subst_r(&zero, s)).sum();
        expect_eq(format!("w_(q,r+s) expansion (s={s})"), n, Some(k), lhs, rhs)?;
    }
    Ok(())
}

/// `w(n,k) = sum_i C(n,i) (-1)^(n-i) q^(i-k) [r|q]_(n-i) s(i,k)`.
pub fn check_cheon_representation(t: &Tables, n: usize) -> Check {
    let q = BiPoly::q();
    let weights: Vec<BiPoly> = (0..=n).map(|i| shift_weight(n, i, &q)).collect();
    for k in 0..=n {
        let rhs: BiPoly = (k..=n)
            .map(|i| &weights[i] * &(&q.pow((i - k) as u32) * t.s.get(i, k)))
            .sum();
        expect_eq("w via Stirling numbers", n, Some(k), t.w.get(n, k).clone(), rhs)?;
    }
    Ok(())
}

/// `c_n(r) = sum_i C(n,i) (-1)^(n-i) [r|1]_(n-i) c_i` at `q = 1`.
pub fn check_classical_shift(t: &Tables, n: usize) -> Check {
    let one = Rational::one();
    let zero = Rational::zero();
    let lhs = c_poly_from(&t.w, n).specialize(Some(&one), None);
    let unit = BiPoly::one();
    let rhs: BiPoly = (0..=n)
        .map(|i| {
            let classical = c_poly_from(&t.w, i).eval(&one, &zero);
            shift_weight(n, i, &unit).scale(&classical)
        })
        .sum();
    expect_eq("classical shift identity", n, None, lhs, rhs)
}

/// Row `n` of `w` at `q = 1, r = r0` against the r-Stirling triangle.
pub fn check_rstirling_reduction(t: &Tables, n: usize, r_stirling: &Triangle, r0: i64) -> Check {
    let q0 = Rational::one();
    let r0q = Rational::from(r0);
    for k in 0..=n {
        let reduced = t.w.get(n, k).specialize(Some(&q0), Some(&r0q));
        expect_eq(format!("w at q=1, r={r0} = s_r"), n, Some(k), reduced, r_stirling.get(n, k).clone())?;
    }
    Ok(())
}

/// Row `n` of `w` at `r = 0` equals `q^(n-k) s(n,k)`.
pub fn check_r_zero_reduction(t: &Tables, n: usize) -> Check {
    let zero = Rational::zero();
    for k in 0..=n {
        let reduced = t.w.get(n, k).specialize(None, Some(&zero));
        let expected = &BiPoly::q().pow((n - k) as u32) * t.s.get(n, k);
        expect_eq("w at r=0 = q^(n-k) s(n,k)", n, Some(k), reduced, expected)?;
    }
    Ok(())
}

/// Classical numbers from the explicit formulas against numeric integrals of `(x)_n` and `(-x)_n`.
pub fn check_classical_numbers(t: &Tables, n: usize) -> Check {
    let one = Rational::one();
    let zero = Rational::zero();
    let first_oracle = (0..n)
        .fold(XPoly::one(), |p, j| p.mul_linear(1, &BiPoly::from(-(j as i64))))
        .integrate01();
    let second_oracle = (0..n)
        .fold(XPoly::one(), |p, j| p.mul_linear(-1, &BiPoly::from(-(j as i64))))
        .integrate01();
    let first = BiPoly::constant(c_poly_from(&t.w, n).eval(&one, &zero));
    expect_eq("classical c_n = int (x)_n", n, None, first, first_oracle)?;
    let second = BiPoly::constant(chat_poly_from(&t.w, n).eval(&one, &zero));
    expect_eq("classical chat_n = int (-x)_n", n, None, second, second_oracle)
}

/// `r = 0` values of both kinds against the Stirling-number formulas.
pub fn check_q_numbers(t: &Tables, n: usize) -> Check {
    let zero = Rational::zero();
    let c0 = c_poly_from(&t.w, n).specialize(None, Some(&zero));
    expect_eq("c_n^q = sum q^(n-k) s(n,k)/(k+1)", n, None, c0, cq_number_from(&t.s, CauchyKind::First, n))?;
    let ch0 = chat_poly_from(&t.w, n).specialize(None, Some(&zero));
    expect_eq(
        "chat_n^q = sum q^(n-k) s(n,k) (-1)^k/(k+1)",
        n,
        None,
        ch0,
        cq_number_from(&t.s, CauchyKind::Second, n),
    )
}

/// `\hat c_n^q(r) = (-1)^n c_n^{-q}(r)`.
pub fn check_q_duality(t: &Tables, n: usize) -> Check {
    let flipped = c_poly_from(&t.w, n)
        .subst_q(&Rational::from(-1), &Rational::zero())
        .scale(&Rational::sign_power(n));
    expect_eq("chat_n(r) = (-1)^n c_n^(-q)(r)", n, None, chat_poly_from(&t.w, n), flipped)
}

/// Fast path: orthogonality and both inversion identities on numeric triangles
/// built directly at `(q0, r0)`, plus the explicit formula against the evaluated
/// integral route.
pub fn check_numeric_point(n_max: usize, q0: &Rational, r0: &Rational) -> Check {
    let q = BiPoly::constant(q0.clone());
    let r = BiPoly::constant(r0.clone());
    let t = Tables {
        w: crate::triangle::whitney1_with(n_max, &q, &r),
        big_w: crate::triangle::whitney2_with(n_max, &q, &r),
        s: stirling1(n_max),
    };
    for n in 0..=n_max {
        check_orthogonality(&t, n)?;
        check_w_inversion(&t, n)?;
        let direct = c_poly_from(&t.w, n);
        let oracle = BiPoly::constant(c_integral_oracle(n).eval(q0, r0));
        expect_eq(format!("c_n at q={q0}, r={r0}"), n, None, direct, oracle)?;
    }
    Ok(())
}

/// Builds the tables once and checks the shift identity.
pub fn verify_shift(n: usize, s: &Rational) -> bool {
    check_shift(&Tables::new(n), n, s).is_ok()
}

pub fn verify_w_inversion(n: usize) -> bool {
    check_w_inversion(&Tables::new(n), n).is_ok()
}

pub fn verify_cheon_identity(n: usize, s: &Rational) -> bool {
    check_cheon_identity(&Tables::new(n), n, s).is_ok()
}

pub fn verify_classical_shift(n: usize) -> bool {
    check_classical_shift(&Tables::new(n), n).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem1Oracle,
    Theorem2Oracle,
    Egf,
    Inversion,
    Orthogonality,
    Shift,
    Cheon,
    Reductions,
    Classical,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 9] = [
        Suite::Theorem1Oracle,
        Suite::Theorem2Oracle,
        Suite::Egf,
        Suite::Inversion,
        Suite::Orthogonality,
        Suite::Shift,
        Suite::Cheon,
        Suite::Reductions,
        Suite::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1Oracle => "theorem1-oracle",
            Suite::Theorem2Oracle => "theorem2-oracle",
            Suite::Egf => "egf",
            Suite::Inversion => "inversion",
            Suite::Orthogonality => "orthogonality",
            Suite::Shift => "shift",
            Suite::Cheon => "cheon",
            Suite::Reductions => "reductions",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::INDIVIDUAL
            .iter()
            .chain(std::iter::once(&Suite::All))
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one suite: how many checks ran and which failed.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<Mismatch>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

// Runs `check` for n = 0..=n_max in parallel; failures come back in n order.
fn fan_out<F>(n_max: usize, check: F) -> (usize, Vec<Mismatch>)
where
    F: Fn(usize) -> Vec<Check> + Sync + Send,
{
    let results: Vec<Vec<Check>> = (0..=n_max).into_par_iter().map(&check).collect();
    let checks = results.iter().map(Vec::len).sum();
    let failures = results.into_iter().flatten().filter_map(Result::err).collect();
    (checks, failures)
}

fn egf_suite(t: &Tables, n_max: usize) -> (usize, Vec<Mismatch>) {
    let c = egf_c(n_max);
    let ch = egf_chat(n_max);
    let columns: Vec<_> = (0..=n_max).into_par_iter().map(|k| egf_w(k, n_max)).collect();
    fan_out(n_max, |n| {
        let mut out = vec![
            expect_eq("c_poly = n! [t^n] egf_c", n, None, c_poly_from(&t.w, n), c.coeff_extract(n).unwrap()),
            expect_eq(
                "chat_poly = n! [t^n] egf_chat",
                n,
                None,
                chat_poly_from(&t.w, n),
                ch.coeff_extract(n).unwrap(),
            ),
        ];
        for (k, column) in columns.iter().enumerate().take(n + 1) {
            out.push(expect_eq(
                "w(n,k) = n! [t^n] egf_w(k)",
                n,
                Some(k),
                t.w.get(n, k).clone(),
                column.coeff_extract(n).unwrap(),
            ));
        }
        out
    })
}

/// Runs `suite` for every `n <= n_max`; `All` expands to every individual suite.
///
/// Panics if `tables` covers fewer than `n_max` rows.
pub fn run_suite(suite: Suite, n_max: usize, shifts: &[Rational], t: &Tables) -> Vec<SuiteReport> {
    assert!(t.n_max() >= n_max, "tables cover n <= {}, need {n_max}", t.n_max());
    if suite == Suite::All {
        return Suite::INDIVIDUAL
            .iter()
            .flat_map(|&s| run_suite(s, n_max, shifts, t))
            .collect();
    }
    let (checks, failures) = match suite {
        Suite::Theorem1Oracle => fan_out(n_max, |n| vec![check_theorem1(t, n)]),
        Suite::Theorem2Oracle => fan_out(n_max, |n| vec![check_theorem2(t, n)]),
        Suite::Egf => egf_suite(t, n_max),
        Suite::Inversion => fan_out(n_max, |n| vec![check_w_inversion(t, n)]),
        Suite::Orthogonality => fan_out(n_max, |n| vec![check_orthogonality(t, n)]),
        Suite::Shift => fan_out(n_max, |n| shifts.iter().map(|s| check_shift(t, n, s)).collect()),
        Suite::Cheon => fan_out(n_max, |n| {
            let mut out: Vec<Check> = shifts.iter().map(|s| check_cheon_identity(t, n, s)).collect();
            out.push(check_cheon_representation(t, n));
            out
        }),
        Suite::Reductions => {
            let r_tables: Vec<(i64, Triangle)> = RSTIRLING_R0
                .iter()
                .map(|&r0| (r0, rstirling1(n_max, r0).expect("nonnegative r0")))
                .collect();
            fan_out(n_max, |n| {
                let mut out: Vec<Check> = r_tables
                    .iter()
                    .map(|(r0, tri)| check_rstirling_reduction(t, n, tri, *r0))
                    .collect();
                out.push(check_r_zero_reduction(t, n));
                out.push(check_classical_numbers(t, n));
                out.push(check_q_numbers(t, n));
                out.push(check_q_duality(t, n));
                out
            })
        }
        Suite::Classical => fan_out(n_max, |n| vec![check_classical_shift(t, n)]),
        Suite::All => unreachable!(),
    };
    vec![SuiteReport { suite, checks, failures }]
}
