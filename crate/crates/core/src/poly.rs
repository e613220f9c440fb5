//! Sparse polynomials in the two indeterminates `q` and `r` over [`Rational`],
//! and polynomials in an integration variable `x` with [`BiPoly`] coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::arith::Rational;

/// Exponent pair `(dq, dr)` of a monomial `q^dq * r^dr`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub dq: u32,
    pub dr: u32,
}

impl Monomial {
    pub const fn new(dq: u32, dr: u32) -> Self {
        Monomial { dq, dr }
    }

    pub fn total_degree(self) -> u32 {
        self.dq + self.dr
    }

    /// Display order: descending total degree, then descending `dr`, then descending `dq`.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then(other.dr.cmp(&self.dr))
            .then(other.dq.cmp(&self.dq))
    }
}

/// A polynomial in `q` and `r` with rational coefficients.
///
/// Zero coefficients are never stored, so two `BiPoly` values are equal exactly
/// when they are equal as polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

static ZERO: BiPoly = BiPoly::zero();

impl BiPoly {
    pub const fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub(crate) fn zero_ref() -> &'static BiPoly {
        &ZERO
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn r() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, dq: u32, dr: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(dq, dr), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from `(dq, dr, coefficient)` triples, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (dq, dr, c) in terms {
            p.add_term(Monomial::new(dq, dr), &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial has no `q` or `r` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&Monomial::new(0, 0))
                .cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, dq: u32, dr: u32) -> Rational {
        self.terms
            .get(&Monomial::new(dq, dr))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in storage order (ascending `dq`, then `dr`).
    pub fn iter(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Terms in the canonical display order of [`Monomial::display_cmp`].
    pub fn canonical_terms(&self) -> Vec<(Monomial, &Rational)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    /// Highest power of `r`, `None` for the zero polynomial.
    pub fn degree_r(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.dr).max()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.dq).max()
    }

    /// Coefficient of `r^dr` as a polynomial in `q` alone.
    pub fn coeff_of_r(&self, dr: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.dr == dr)
                .map(|(m, c)| (Monomial::new(m.dq, 0), c.clone()))
                .collect(),
        }
    }

    /// True when every term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `r` by `a*r + b` and expands.
    pub fn subst_r(&self, a: &Rational, b: &Rational) -> BiPoly {
        let shifted = BiPoly::r().scale(a) + BiPoly::constant(b.clone());
        self.subst_with(|m| (m.dr, Monomial::new(m.dq, 0)), &shifted)
    }

    /// Replaces `q` by `a*q + b` and expands.
    pub fn subst_q(&self, a: &Rational, b: &Rational) -> BiPoly {
        let shifted = BiPoly::q().scale(a) + BiPoly::constant(b.clone());
        self.subst_with(|m| (m.dq, Monomial::new(0, m.dr)), &shifted)
    }

    // `split` returns the exponent of the substituted variable and the remaining monomial.
    fn subst_with(&self, split: impl Fn(Monomial) -> (u32, Monomial), lin: &BiPoly) -> BiPoly {
        let max_e = self.terms.keys().map(|m| split(*m).0).max().unwrap_or(0);
        let mut powers = vec![BiPoly::one()];
        for i in 1..=max_e as usize {
            let next = &powers[i - 1] * lin;
            powers.push(next);
        }
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = split(*m);
            for (pm, pc) in &powers[e as usize].terms {
                let prod = pc * c;
                out.add_term(Monomial::new(pm.dq + rest.dq, pm.dr + rest.dr), &prod);
            }
        }
        out
    }

    /// Specializes `q` and/or `r` to rational values.
    pub fn specialize(&self, q0: Option<&Rational>, r0: Option<&Rational>) -> BiPoly {
        let zero = Rational::zero();
        let mut p = self.clone();
        if let Some(q0) = q0 {
            p = p.subst_q(&zero, q0);
        }
        if let Some(r0) = r0 {
            p = p.subst_r(&zero, r0);
        }
        p
    }

    /// Exact value at `(q0, r0)`.
    pub fn eval(&self, q0: &Rational, r0: &Rational) -> Rational {
        let max_q = self.degree_q().unwrap_or(0);
        let max_r = self.degree_r().unwrap_or(0);
        let qp = powers_of(q0, max_q);
        let rp = powers_of(r0, max_r);
        self.terms
            .iter()
            .map(|(m, c)| c * &qp[m.dq as usize] * &rp[m.dr as usize])
            .sum()
    }
}

fn powers_of(x: &Rational, max: u32) -> Vec<Rational> {
    let mut v = vec![Rational::one()];
    for i in 1..=max as usize {
        let next = &v[i - 1] * x;
        v.push(next);
    }
    v
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(Rational::from(c))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::text(self))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::text(self))
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, &-c);
        }
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl Add<&BiPoly> for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: &BiPoly) -> BiPoly {
        self += rhs;
        self
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: BiPoly) -> BiPoly {
        self -= &rhs;
        self
    }
}

impl Sub<&BiPoly> for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: &BiPoly) -> BiPoly {
        self -= rhs;
        self
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = Monomial::new(ma.dq + mb.dq, ma.dr + mb.dr);
                out.add_term(m, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Mul<&BiPoly> for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        &self * rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(mut self) -> BiPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// A polynomial in `x` whose coefficients are [`BiPoly`] values; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct XPoly {
    coeffs: Vec<BiPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::from_coeffs(vec![BiPoly::one()])
    }

    /// `x^n`
    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![BiPoly::zero(); n + 1];
        coeffs[n] = BiPoly::one();
        XPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BiPoly>) -> Self {
        while coeffs.last().is_some_and(BiPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BiPoly {
        self.coeffs.get(i).unwrap_or(BiPoly::zero_ref())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Returns `self * (sign*x + c)` where `sign` is `+1` or `-1`.
    pub fn mul_linear(&self, sign: i32, c: &BiPoly) -> XPoly {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let mut out = vec![BiPoly::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += &(a * c);
            if sign == 1 {
                out[i + 1] += a;
            } else {
                out[i + 1] -= a;
            }
        }
        XPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BiPoly) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact integral over `[0, 1]`: the sum of `coeffs[k] / (k + 1)`.
    pub fn integrate01(&self) -> BiPoly {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.scale(&Rational::new(1, k as i64 + 1)))
            .sum()
    }

    /// Substitutes a polynomial in `q, r` for `x` (Horner's rule).
    pub fn eval_at(&self, x: &BiPoly) -> BiPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(BiPoly::zero(), |acc, a| &(&acc * x) + a)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn q() -> BiPoly {
        BiPoly::q()
    }

    fn r() -> BiPoly {
        BiPoly::r()
    }

    fn c(n: i64, d: i64) -> BiPoly {
        BiPoly::constant(rat(n, d))
    }

    // r^2 + (q-1)r - q/2 + 1/3
    fn c2() -> BiPoly {
        r().pow(2) + &(&q() - &c(1, 1)) * &r() - q().scale(&rat(1, 2)) + c(1, 3)
    }

    #[test]
    fn add_examples() {
        assert!((r() + -r()).is_zero());
        let lhs = r().pow(2) + &q() * &r();
        let sum = lhs.clone() + q();
        assert_eq!(sum.num_terms(), 3);
        assert_eq!(sum.coeff(1, 0), rat(1, 1));
        let p = &(&q() - &c(1, 1)) * &r() + r();
        assert_eq!(p, &q() * &r());
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn mul_examples() {
        let p = &(r() + q()) * &(r() - q());
        assert_eq!(p, r().pow(2) - q().pow(2));
        let a = c2();
        assert_eq!(&a * &BiPoly::one(), a);
        let lin = -r() + c(1, 2);
        assert_eq!(&lin * &c(2, 1), c(1, 1) - r().scale(&rat(2, 1)));
    }

    #[test]
    fn subst_r_examples() {
        let chat2 = r().pow(2) - &(q() + c(1, 1)) * &r() + q().scale(&rat(1, 2)) + c(1, 3);
        let expected = r().pow(2) + &(q() + c(1, 1)) * &r() + q().scale(&rat(1, 2)) + c(1, 3);
        assert_eq!(chat2.subst_r(&rat(-1, 1), &Rational::zero()), expected);
        assert_eq!(chat2.subst_r(&rat(1, 1), &Rational::zero()), chat2);
        assert_eq!(r().subst_r(&rat(1, 1), &rat(3, 5)), r() + c(3, 5));
    }

    #[test]
    fn eval_examples() {
        let c1 = -r() + c(1, 2);
        assert_eq!(c1.eval(&rat(7, 1), &Rational::zero()), rat(1, 2));
        assert_eq!(BiPoly::zero().eval(&rat(3, 4), &rat(-9, 2)), Rational::zero());
        // integral of x(x-1) over [0,1]
        let oracle = XPoly::one()
            .mul_linear(1, &BiPoly::zero())
            .mul_linear(1, &c(-1, 1))
            .integrate01();
        assert_eq!(oracle, c(-1, 6));
        assert_eq!(c2().eval(&rat(1, 1), &Rational::zero()), rat(-1, 6));
    }

    #[test]
    fn mul_linear_examples() {
        let p = XPoly::one().mul_linear(1, &-r());
        assert_eq!(p.coeffs(), &[-r(), BiPoly::one()]);
        let p2 = p.mul_linear(1, &(-r() - q()));
        let expected = vec![
            r().pow(2) + &q() * &r(),
            -(r().scale(&rat(2, 1)) + q()),
            BiPoly::one(),
        ];
        assert_eq!(p2.coeffs(), expected.as_slice());
        let p3 = XPoly::one().mul_linear(-1, &r());
        assert_eq!(p3.coeffs(), &[r(), -BiPoly::one()]);
    }

    #[test]
    fn integrate01_examples() {
        let p = XPoly::from_coeffs(vec![
            r().pow(2) + &q() * &r(),
            -(r().scale(&rat(2, 1)) + q()),
            BiPoly::one(),
        ]);
        assert_eq!(p.integrate01(), c2());
        assert_eq!(XPoly::one().integrate01(), BiPoly::one());
        assert_eq!(XPoly::x_pow(1).integrate01(), c(1, 2));
    }

    #[test]
    fn x_poly_eval_at_root() {
        // (x - r)(x - r - q) vanishes at x = r + q
        let p = XPoly::one().mul_linear(1, &-r()).mul_linear(1, &(-r() - q()));
        assert!(p.eval_at(&(r() + q())).is_zero());
        assert!(p.eval_at(&r()).is_zero());
        assert!(!p.eval_at(&q()).is_zero());
    }

    #[test]
    fn as_constant_and_degrees() {
        assert_eq!(BiPoly::zero().as_constant(), Some(Rational::zero()));
        assert_eq!(c(3, 4).as_constant(), Some(rat(3, 4)));
        assert_eq!(r().as_constant(), None);
        assert_eq!(c2().degree_r(), Some(2));
        assert_eq!(c2().degree_q(), Some(1));
        assert_eq!(c2().coeff_of_r(1), q() - c(1, 1));
    }

    pub(crate) fn bipoly_strategy() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -20i64..20, 1i64..8), 0..6).prop_map(|ts| {
            BiPoly::from_terms(ts.into_iter().map(|(dq, dr, n, d)| (dq, dr, rat(n, d))))
        })
    }

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..9).prop_map(|(n, d)| rat(n, d))
    }

    fn xpoly_strategy() -> impl Strategy<Value = XPoly> {
        prop::collection::vec(bipoly_strategy(), 0..4).prop_map(XPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn canonical_round_trip(p in bipoly_strategy()) {
            prop_assert_eq!(&p + &BiPoly::zero(), p.clone());
            prop_assert_eq!(&p * &BiPoly::one(), p.clone());
            prop_assert!(p.iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn eval_is_a_homomorphism(a in bipoly_strategy(), b in bipoly_strategy(),
                                  q0 in rational_strategy(), r0 in rational_strategy()) {
            prop_assert_eq!((&a * &b).eval(&q0, &r0), a.eval(&q0, &r0) * b.eval(&q0, &r0));
            prop_assert_eq!((&a + &b).eval(&q0, &r0), a.eval(&q0, &r0) + b.eval(&q0, &r0));
        }

        #[test]
        fn negating_r_twice_is_identity(p in bipoly_strategy()) {
            let m1 = rat(-1, 1);
            let z = Rational::zero();
            prop_assert_eq!(p.subst_r(&m1, &z).subst_r(&m1, &z), p.clone());
            prop_assert_eq!(p.subst_q(&m1, &z).subst_q(&m1, &z), p);
        }

        #[test]
        fn subst_r_agrees_with_eval(p in bipoly_strategy(), a in rational_strategy(),
                                    b in rational_strategy(), q0 in rational_strategy(),
                                    r0 in rational_strategy()) {
            let shifted_r = &(&a * &r0) + &b;
            prop_assert_eq!(p.subst_r(&a, &b).eval(&q0, &r0), p.eval(&q0, &shifted_r));
        }

        #[test]
        fn integrate01_is_linear(p in xpoly_strategy(), s in xpoly_strategy(),
                                 a in bipoly_strategy(), b in bipoly_strategy()) {
            let combo = &p.scale(&a) + &s.scale(&b);
            let lhs = combo.integrate01();
            let rhs = &(&a * &p.integrate01()) + &(&b * &s.integrate01());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
