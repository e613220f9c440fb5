//! r-Whitney triangles of both kinds, signed Stirling numbers of the first kind,
//! signed r-Stirling numbers, and generalized rising/falling factorials.
//!
//! The first-kind triangle expands `(x - r | q)_n = prod_{j<n} (x - r - j q)` in
//! powers of `x`; multiplying by the next factor gives
//! `w(n+1, k) = w(n, k-1) - (n q + r) w(n, k)`.
//! The second-kind triangle expands `x^n` in the basis `(x - r | q)_k`; since
//! `x (x - r | q)_k = (x - r | q)_{k+1} + (r + k q)(x - r | q)_k`, it obeys
//! `W(n+1, k) = W(n, k-1) + (k q + r) W(n, k)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{BigInt, Rational};
use crate::error::{Error, Result};
use crate::poly::BiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Whitney1,
    Whitney2,
    Stirling1,
    RStirling1,
}

impl TriangleKind {
    /// Short label used in output: `w`, `W`, `s`, `sr`.
    pub fn label(self) -> &'static str {
        match self {
            TriangleKind::Whitney1 => "w",
            TriangleKind::Whitney2 => "W",
            TriangleKind::Stirling1 => "s",
            TriangleKind::RStirling1 => "sr",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Lower-triangular array of polynomials indexed `(n, k)` with `k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    kind: TriangleKind,
    rows: Vec<Vec<BiPoly>>,
}

impl Triangle {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BiPoly] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BiPoly>] {
        &self.rows
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> &BiPoly {
        if k > n {
            BiPoly::zero_ref()
        } else {
            &self.rows[n][k]
        }
    }

    /// Mutable access to a stored entry, `k <= n`.
    pub fn entry_mut(&mut self, n: usize, k: usize) -> &mut BiPoly {
        &mut self.rows[n][k]
    }

    /// Specializes every entry at the given `q` and/or `r` values.
    pub fn specialize(&self, q0: Option<&Rational>, r0: Option<&Rational>) -> Triangle {
        Triangle {
            kind: self.kind,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|p| p.specialize(q0, r0)).collect())
                .collect(),
        }
    }

    fn from_recurrence(
        kind: TriangleKind,
        n_max: usize,
        step: impl Fn(&[BiPoly], usize, usize) -> BiPoly,
    ) -> Triangle {
        let mut rows: Vec<Vec<BiPoly>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BiPoly::one()]);
        for n in 0..n_max {
            let prev = &rows[n];
            let next: Vec<BiPoly> = (0..=n + 1).map(|k| step(prev, n, k)).collect();
            rows.push(next);
        }
        Triangle { kind, rows }
    }
}

fn entry(row: &[BiPoly], k: isize) -> &BiPoly {
    if k < 0 {
        BiPoly::zero_ref()
    } else {
        row.get(k as usize).unwrap_or(BiPoly::zero_ref())
    }
}

/// First-kind r-Whitney triangle with `q` and `r` given as polynomials; pass
/// [`BiPoly::q`]/[`BiPoly::r`] for the symbolic triangle or constants for a numeric one.
pub fn whitney1_with(n_max: usize, q: &BiPoly, r: &BiPoly) -> Triangle {
    if let (Some(q0), Some(r0)) = (q.as_constant(), r.as_constant()) {
        return numeric(TriangleKind::Whitney1, n_max, &q0, &r0);
    }
    Triangle::from_recurrence(TriangleKind::Whitney1, n_max, |prev, n, k| {
        let factor = r + &q.scale(&Rational::from(n as i64));
        let k = k as isize;
        entry(prev, k - 1) - &(&factor * entry(prev, k))
    })
}

/// Second-kind r-Whitney triangle with `q` and `r` given as polynomials.
pub fn whitney2_with(n_max: usize, q: &BiPoly, r: &BiPoly) -> Triangle {
    if let (Some(q0), Some(r0)) = (q.as_constant(), r.as_constant()) {
        return numeric(TriangleKind::Whitney2, n_max, &q0, &r0);
    }
    Triangle::from_recurrence(TriangleKind::Whitney2, n_max, |prev, _n, k| {
        let factor = r + &q.scale(&Rational::from(k as i64));
        let k = k as isize;
        entry(prev, k - 1) + &(&factor * entry(prev, k))
    })
}

/// Numeric triangles at rational `(q0, r0)`.
///
/// Entry `(n, k)` is homogeneous of degree `n - k` in `q, r` with integer
/// coefficients, so with `q0 = a/D`, `r0 = c/D` the scaled values
/// `D^(n-k) * entry(n, k)` are integers obeying the same recurrence with `a, c`
/// in place of `q0, r0`. Only the final division is rational.
fn numeric(kind: TriangleKind, n_max: usize, q0: &Rational, r0: &Rational) -> Triangle {
    let d = q0.denom().lcm(r0.denom());
    let a = q0.numer() * (&d / q0.denom());
    let c = r0.numer() * (&d / r0.denom());
    let mut scaled: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..n_max {
        let prev = &scaled[n];
        let row_factor = &a * n + &c;
        let next = (0..=n + 1)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                match (kind, prev.get(k)) {
                    (_, None) => left,
                    (TriangleKind::Whitney2, Some(stay)) => left + (&a * k + &c) * stay,
                    (_, Some(stay)) => left - &row_factor * stay,
                }
            })
            .collect();
        scaled.push(next);
    }
    let mut d_pows = vec![BigInt::one()];
    for m in 1..=n_max {
        let next = &d_pows[m - 1] * &d;
        d_pows.push(next);
    }
    let rows = scaled
        .into_iter()
        .enumerate()
        .map(|(n, row)| {
            row.into_iter()
                .enumerate()
                .map(|(k, v)| BiPoly::constant(Rational::new(v, d_pows[n - k].clone())))
                .collect()
        })
        .collect();
    Triangle { kind, rows }
}

/// Symbolic `w_{q,r}(n, k)` for `n <= n_max`.
pub fn whitney1(n_max: usize) -> Triangle {
    whitney1_with(n_max, &BiPoly::q(), &BiPoly::r())
}

/// Symbolic `W_{q,r}(n, k)` for `n <= n_max`.
pub fn whitney2(n_max: usize) -> Triangle {
    whitney2_with(n_max, &BiPoly::q(), &BiPoly::r())
}

/// Signed Stirling numbers of the first kind, `(x)_n = sum_k s(n,k) x^k`.
pub fn stirling1(n_max: usize) -> Triangle {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for n in 0..n_max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { BigInt::from(0) };
                let stay = prev.get(k).cloned().unwrap_or_default();
                left - stay * n
            })
            .collect();
        rows.push(next);
    }
    Triangle {
        kind: TriangleKind::Stirling1,
        rows: rows
            .into_iter()
            .map(|row| row.into_iter().map(|v| BiPoly::constant(v.into())).collect())
            .collect(),
    }
}

/// Signed r-Stirling numbers: entry `(n, k)` is `s_{r0}(n + r0, k + r0)`, the
/// coefficient of `x^k` in `(x - r0)(x - r0 - 1)...(x - r0 - n + 1)`.
pub fn rstirling1(n_max: usize, r0: i64) -> Result<Triangle> {
    if r0 < 0 {
        return Err(Error::NegativeR0(r0));
    }
    let mut t = whitney1_with(n_max, &BiPoly::one(), &BiPoly::from(r0));
    t.kind = TriangleKind::RStirling1;
    Ok(t)
}

/// `[y|m]_k = y (y + m) ... (y + (k-1) m)`.
pub fn rising_fact(y: &BiPoly, m: &BiPoly, k: usize) -> BiPoly {
    (0..k).fold(BiPoly::one(), |acc, j| {
        &acc * &(y + &m.scale(&Rational::from(j as i64)))
    })
}

/// `(y|m)_k = y (y - m) ... (y - (k-1) m)`.
pub fn falling_fact(y: &BiPoly, m: &BiPoly, k: usize) -> BiPoly {
    (0..k).fold(BiPoly::one(), |acc, j| {
        &acc * &(y - &m.scale(&Rational::from(j as i64)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::poly::XPoly;

    fn q() -> BiPoly {
        BiPoly::q()
    }
    fn r() -> BiPoly {
        BiPoly::r()
    }
    fn int(n: i64) -> BiPoly {
        BiPoly::from(n)
    }

    // Expands (x - r | q)_n factor by factor.
    fn falling_product(n: usize) -> XPoly {
        (0..n).fold(XPoly::one(), |p, j| {
            p.mul_linear(1, &-(r() + q().scale(&Rational::from(j as i64))))
        })
    }

    // Solves x^n = sum_k W(n,k) (x - r | q)_k top-down; every basis element is monic.
    fn whitney2_by_coefficient_matching(n: usize) -> Vec<BiPoly> {
        let mut rest = XPoly::x_pow(n);
        let mut out = vec![BiPoly::zero(); n + 1];
        for k in (0..=n).rev() {
            let c = rest.coeff(k).clone();
            rest = &rest - &falling_product(k).scale(&c);
            out[k] = c;
        }
        assert!(rest.is_zero());
        out
    }

    #[test]
    fn whitney1_row2() {
        let t = whitney1(2);
        let expected = vec![r().pow(2) + &q() * &r(), -(r().scale(&Rational::from(2)) + q()), int(1)];
        assert_eq!(t.row(2), expected.as_slice());
        assert_eq!(t.row(2), falling_product(2).coeffs());
    }

    #[test]
    fn whitney1_matches_product_expansion() {
        let t = whitney1(10);
        for n in 0..=10 {
            assert_eq!(t.row(n), falling_product(n).coeffs(), "row {n}");
            assert!(t.get(n, n).is_one());
            assert!(t.get(n, n + 1).is_zero());
        }
    }

    #[test]
    fn whitney2_rows() {
        let t = whitney2(2);
        assert_eq!(t.row(1), &[r(), int(1)]);
        assert_eq!(t.row(2), &[r().pow(2), r().scale(&Rational::from(2)) + q(), int(1)]);
    }

    #[test]
    fn whitney2_matches_coefficient_matching() {
        let t = whitney2(9);
        for n in 0..=9 {
            assert_eq!(t.row(n), whitney2_by_coefficient_matching(n).as_slice(), "row {n}");
            assert!(t.get(n, n).is_one());
        }
    }

    #[test]
    fn stirling1_rows() {
        let t = stirling1(6);
        assert_eq!(t.row(3), &[int(0), int(2), int(-3), int(1)]);
        for n in 0..=6 {
            assert!(t.get(n, n).is_one());
            if n >= 1 {
                assert!(t.get(n, 0).is_zero());
            }
            assert!(t.row(n).iter().all(|p| p.degree_q().unwrap_or(0) == 0 && p.degree_r().unwrap_or(0) == 0));
        }
        assert_eq!(t.row(5), &[int(0), int(24), int(-50), int(35), int(-10), int(1)]);
    }

    #[test]
    fn rstirling1_rows() {
        assert_eq!(rstirling1(8, 0).unwrap().rows(), stirling1(8).rows());
        assert_eq!(rstirling1(1, 1).unwrap().row(1), &[int(-1), int(1)]);
        assert_eq!(rstirling1(2, 2).unwrap().row(2), &[int(6), int(-5), int(1)]);
        assert_eq!(rstirling1(3, -1).unwrap_err(), Error::NegativeR0(-1));
    }

    #[test]
    fn rstirling1_recurrence_cross_check() {
        // s_r(n+1+r, k+r) = s_r(n+r, k-1+r) - (n + r0) s_r(n+r, k+r)
        for r0 in [0i64, 1, 3, 5] {
            let t = rstirling1(12, r0).unwrap();
            for n in 0..12 {
                for k in 0..=n + 1 {
                    let left = if k > 0 { t.get(n, k - 1).clone() } else { BiPoly::zero() };
                    let expected = left - &(&int(n as i64 + r0) * t.get(n, k));
                    assert_eq!(t.get(n + 1, k), &expected);
                }
            }
        }
    }

    #[test]
    fn factorial_examples() {
        assert!(rising_fact(&r(), &q(), 0).is_one());
        assert!(falling_fact(&r(), &q(), 0).is_one());
        assert_eq!(rising_fact(&r(), &q(), 2), r().pow(2) + &q() * &r());
        assert_eq!(falling_fact(&r(), &q(), 2), r().pow(2) - &q() * &r());
        let rr = rising_fact(&r(), &int(1), 3);
        assert_eq!(rr, r().pow(3) + r().pow(2).scale(&Rational::from(3)) + r().scale(&Rational::from(2)));
        for k in 0..6 {
            assert_eq!(falling_fact(&r(), &q(), k), rising_fact(&r(), &-q(), k));
        }
    }

    #[test]
    fn root_property() {
        let t = whitney1(12);
        for n in 0..=12 {
            let p = XPoly::from_coeffs(t.row(n).to_vec());
            for j in 0..n {
                let root = r() + q().scale(&Rational::from(j as i64));
                assert!(p.eval_at(&root).is_zero(), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn sign_pattern_and_homogeneity() {
        let t = whitney1(20);
        for n in 0..=20 {
            for k in 0..=n {
                let e = t.get(n, k);
                let signed = e.scale(&Rational::sign_power(n - k));
                assert!(signed.iter().all(|(_, c)| !c.is_negative()), "({n},{k})");
                assert!(e.is_homogeneous((n - k) as u32));
            }
        }
    }

    #[test]
    fn cheon_representation_small() {
        let w = whitney1(8);
        let s = stirling1(8);
        for n in 0..=8 {
            for k in 0..=n {
                let sum: BiPoly = (k..=n)
                    .map(|i| {
                        let c = Rational::from(binomial(n as u64, i as u64)) * Rational::sign_power(n - i);
                        q().pow((i - k) as u32).scale(&c) * rising_fact(&r(), &q(), n - i) * s.get(i, k)
                    })
                    .sum();
                assert_eq!(&sum, w.get(n, k));
            }
        }
    }

    #[test]
    fn numeric_triangle_matches_specialization() {
        let q0 = Rational::new(3, 7);
        let r0 = Rational::new(-5, 2);
        let symbolic = whitney1(10).specialize(Some(&q0), Some(&r0));
        let numeric = whitney1_with(10, &BiPoly::constant(q0.clone()), &BiPoly::constant(r0.clone()));
        assert_eq!(symbolic.rows(), numeric.rows());
        let symbolic2 = whitney2(10).specialize(Some(&q0), Some(&r0));
        let numeric2 = whitney2_with(10, &BiPoly::constant(q0), &BiPoly::constant(r0));
        assert_eq!(symbolic2.rows(), numeric2.rows());
    }
}
