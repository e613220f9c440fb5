//! Cauchy polynomials with a `q` parameter, evaluated symbolically in `q` and `r`.
//!
//! The explicit formulas weight a row of the first-kind r-Whitney triangle by
//! `1/(k+1)`. The integral routes expand the defining products in `x` and
//! integrate over `[0, 1]` without touching any triangle.

use std::fmt;
use std::str::FromStr;

use crate::arith::{binomial, Rational};
use crate::poly::{BiPoly, XPoly};
use crate::triangle::{rising_fact, stirling1, whitney1, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CauchyKind {
    First,
    Second,
}

impl FromStr for CauchyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(CauchyKind::First),
            "second" => Ok(CauchyKind::Second),
            other => Err(format!("unknown kind `{other}` (expected first or second)")),
        }
    }
}

impl fmt::Display for CauchyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CauchyKind::First => "first",
            CauchyKind::Second => "second",
        })
    }
}

fn inv_succ(k: usize) -> Rational {
    Rational::new(1, k as i64 + 1)
}

/// `c_n^q(r) = sum_k w(n,k) / (k+1)` from a first-kind triangle with `n_max >= n`.
pub fn c_poly_from(w: &Triangle, n: usize) -> BiPoly {
    w.row(n)
        .iter()
        .enumerate()
        .map(|(k, e)| e.scale(&inv_succ(k)))
        .sum()
}

/// Second-kind polynomial at argument `-r`: `sum_k (-1)^k w(n,k) / (k+1)`.
pub fn chat_at_neg_r_from(w: &Triangle, n: usize) -> BiPoly {
    w.row(n)
        .iter()
        .enumerate()
        .map(|(k, e)| e.scale(&(Rational::sign_power(k) * inv_succ(k))))
        .sum()
}

/// Second-kind polynomial at argument `r`.
pub fn chat_poly_from(w: &Triangle, n: usize) -> BiPoly {
    chat_at_neg_r_from(w, n).subst_r(&Rational::from(-1), &Rational::zero())
}

pub fn c_poly(n: usize) -> BiPoly {
    c_poly_from(&whitney1(n), n)
}

pub fn chat_poly(n: usize) -> BiPoly {
    chat_poly_from(&whitney1(n), n)
}

pub fn cauchy_poly(kind: CauchyKind, n: usize) -> BiPoly {
    match kind {
        CauchyKind::First => c_poly(n),
        CauchyKind::Second => chat_poly(n),
    }
}

fn jq_offset(j: usize) -> BiPoly {
    BiPoly::q().scale(&Rational::from(j as i64))
}

/// `int_0^1 (x - r | q)_n dx`, expanded directly in `x`.
pub fn c_integral_oracle(n: usize) -> BiPoly {
    (0..n)
        .fold(XPoly::one(), |p, j| p.mul_linear(1, &-(BiPoly::r() + jq_offset(j))))
        .integrate01()
}

/// `int_0^1 (-x + r | q)_n dx`, expanded directly in `x`.
pub fn chat_integral_oracle(n: usize) -> BiPoly {
    (0..n)
        .fold(XPoly::one(), |p, j| p.mul_linear(-1, &(BiPoly::r() - jq_offset(j))))
        .integrate01()
}

/// `c_n^q(r)` through Stirling numbers of the first kind:
/// `sum_i sum_k C(n,i) (-1)^(n-i) q^(i-k) [r|q]_(n-i) s(i,k) / (k+1)`.
pub fn c_via_stirling_from(s: &Triangle, n: usize) -> BiPoly {
    let q = BiPoly::q();
    let r = BiPoly::r();
    let mut total = BiPoly::zero();
    for i in 0..=n {
        let outer = Rational::from(binomial(n as u64, i as u64)) * Rational::sign_power(n - i);
        let rising = rising_fact(&r, &q, n - i).scale(&outer);
        let inner: BiPoly = (0..=i)
            .map(|k| {
                let c = s.get(i, k).as_constant().expect("Stirling entries are constants");
                BiPoly::monomial(c * inv_succ(k), (i - k) as u32, 0)
            })
            .sum();
        total += &(&rising * &inner);
    }
    total
}

pub fn c_via_stirling(n: usize) -> BiPoly {
    c_via_stirling_from(&stirling1(n), n)
}

/// `c_n^q` or `\hat c_n^q` (the `r = 0` values) as a polynomial in `q`:
/// `sum_k q^(n-k) s(n,k) (+-1)^k / (k+1)`.
pub fn cq_number_from(s: &Triangle, kind: CauchyKind, n: usize) -> BiPoly {
    (0..=n)
        .map(|k| {
            let sign = match kind {
                CauchyKind::First => Rational::one(),
                CauchyKind::Second => Rational::sign_power(k),
            };
            let c = s.get(n, k).as_constant().expect("Stirling entries are constants");
            BiPoly::monomial(c * sign * inv_succ(k), (n - k) as u32, 0)
        })
        .sum()
}

pub fn cq_number(kind: CauchyKind, n: usize) -> BiPoly {
    cq_number_from(&stirling1(n), kind, n)
}

/// Classical Cauchy number `c_n` or `\hat c_n` (`q = 1`, `r = 0`).
pub fn cauchy_number(kind: CauchyKind, n: usize) -> Rational {
    cauchy_poly(kind, n).eval(&Rational::one(), &Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Builds a polynomial from `(coefficient, q-power, r-power)` entries.
    fn p(terms: &[(i64, i64, u32, u32)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(n, d, dq, dr)| (dq, dr, rat(n, d))))
    }

    // The first few polynomials, transcribed term by term.
    fn listed_first(n: usize) -> BiPoly {
        match n {
            0 => p(&[(1, 1, 0, 0)]),
            1 => p(&[(-1, 1, 0, 1), (1, 2, 0, 0)]),
            2 => p(&[(1, 1, 0, 2), (1, 1, 1, 1), (-1, 1, 0, 1), (-1, 2, 1, 0), (1, 3, 0, 0)]),
            // -r^3 - (3/2)(2q-1) r^2 + (-2q^2+3q-1) r + q^2 - q + 1/4
            3 => p(&[
                (-1, 1, 0, 3),
                (-3, 1, 1, 2),
                (3, 2, 0, 2),
                (-2, 1, 2, 1),
                (3, 1, 1, 1),
                (-1, 1, 0, 1),
                (1, 1, 2, 0),
                (-1, 1, 1, 0),
                (1, 4, 0, 0),
            ]),
            4 => p(&[
                (1, 1, 0, 4),
                (6, 1, 1, 3),
                (-2, 1, 0, 3),
                (11, 1, 2, 2),
                (-9, 1, 1, 2),
                (2, 1, 0, 2),
                (6, 1, 3, 1),
                (-11, 1, 2, 1),
                (6, 1, 1, 1),
                (-1, 1, 0, 1),
                (-3, 1, 3, 0),
                (11, 3, 2, 0),
                (-3, 2, 1, 0),
                (1, 5, 0, 0),
            ]),
            _ => unreachable!(),
        }
    }

    fn listed_second(n: usize) -> BiPoly {
        match n {
            0 => p(&[(1, 1, 0, 0)]),
            1 => p(&[(1, 1, 0, 1), (-1, 2, 0, 0)]),
            2 => p(&[(1, 1, 0, 2), (-1, 1, 1, 1), (-1, 1, 0, 1), (1, 2, 1, 0), (1, 3, 0, 0)]),
            // r^3 - (3/2)(2q+1) r^2 + (2q^2+3q+1) r - q^2 - q - 1/4
            3 => p(&[
                (1, 1, 0, 3),
                (-3, 1, 1, 2),
                (-3, 2, 0, 2),
                (2, 1, 2, 1),
                (3, 1, 1, 1),
                (1, 1, 0, 1),
                (-1, 1, 2, 0),
                (-1, 1, 1, 0),
                (-1, 4, 0, 0),
            ]),
            4 => p(&[
                (1, 1, 0, 4),
                (-6, 1, 1, 3),
                (-2, 1, 0, 3),
                (11, 1, 2, 2),
                (9, 1, 1, 2),
                (2, 1, 0, 2),
                (-6, 1, 3, 1),
                (-11, 1, 2, 1),
                (-6, 1, 1, 1),
                (-1, 1, 0, 1),
                (3, 1, 3, 0),
                (11, 3, 2, 0),
                (3, 2, 1, 0),
                (1, 5, 0, 0),
            ]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn explicit_formula_matches_listing() {
        for n in 0..=4 {
            assert_eq!(c_poly(n), listed_first(n), "c_{n}");
            assert_eq!(chat_poly(n), listed_second(n), "chat_{n}");
        }
    }

    #[test]
    fn integral_oracles_match_listing() {
        for n in 0..=4 {
            assert_eq!(c_integral_oracle(n), listed_first(n));
            assert_eq!(chat_integral_oracle(n), listed_second(n));
        }
    }

    #[test]
    fn stirling_route_matches_listing() {
        for n in 0..=4 {
            assert_eq!(c_via_stirling(n), listed_first(n));
        }
    }

    #[test]
    fn routes_agree_up_to_eight() {
        let w = whitney1(8);
        let s = stirling1(8);
        for n in 0..=8 {
            let direct = c_poly_from(&w, n);
            assert_eq!(direct, c_integral_oracle(n));
            assert_eq!(direct, c_via_stirling_from(&s, n));
            assert_eq!(chat_poly_from(&w, n), chat_integral_oracle(n));
        }
    }

    #[test]
    fn classical_numbers() {
        assert_eq!(cauchy_number(CauchyKind::First, 0), rat(1, 1));
        assert_eq!(cauchy_number(CauchyKind::First, 2), rat(-1, 6));
        assert_eq!(cauchy_number(CauchyKind::Second, 2), rat(5, 6));
        // int_0^1 (x)_4 dx and int_0^1 (-x)_4 dx
        assert_eq!(cauchy_number(CauchyKind::First, 4), rat(-19, 30));
        assert_eq!(cauchy_number(CauchyKind::Second, 4), rat(251, 30));
    }

    #[test]
    fn q_numbers() {
        assert_eq!(cq_number(CauchyKind::First, 2), p(&[(-1, 2, 1, 0), (1, 3, 0, 0)]));
        assert_eq!(
            cq_number(CauchyKind::Second, 3),
            p(&[(-1, 1, 2, 0), (-1, 1, 1, 0), (-1, 4, 0, 0)])
        );
        assert!(cq_number(CauchyKind::First, 0).is_one());
        for n in 0..=8 {
            for kind in [CauchyKind::First, CauchyKind::Second] {
                let at_r0 = cauchy_poly(kind, n).specialize(None, Some(&Rational::zero()));
                assert_eq!(cq_number(kind, n), at_r0);
            }
        }
    }

    #[test]
    fn leading_terms() {
        for n in 0..=10 {
            let c = c_poly(n);
            let ch = chat_poly(n);
            assert_eq!(c.degree_r(), Some(n as u32));
            assert_eq!(ch.degree_r(), Some(n as u32));
            assert_eq!(c.coeff_of_r(n as u32), BiPoly::constant(Rational::sign_power(n)));
            assert!(ch.coeff_of_r(n as u32).is_one());
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("first".parse::<CauchyKind>().unwrap(), CauchyKind::First);
        assert_eq!("second".parse::<CauchyKind>().unwrap(), CauchyKind::Second);
        assert!("third".parse::<CauchyKind>().is_err());
    }
}
