//! Exact arithmetic in integer Laurent polynomial rings `Z[H]`, `H ≅ Z^b`.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero integer
//! coefficients. The rank is fixed per value; mixing ranks is an error.

mod gcd;
mod render;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{q, Q};

pub use gcd::poly_gcd;
pub use render::variable_names;

/// A point of the exponent lattice `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(rank: usize) -> Self {
        ExponentVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn plus(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
pub fn grlex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.0.cmp(&b.0))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zero(rank), c)
    }

    pub fn monomial(exp: ExponentVector, c: impl Into<BigInt>) -> Self {
        let rank = exp.rank();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { rank, terms }
    }

    /// The variable `x_i` (zero-based).
    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(rank, i), 1)
    }

    /// Builds a polynomial from possibly repeated terms, dropping zeros.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.len() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: e.len(),
                });
            }
            p.add_term(ExponentVector(e), c.into());
        }
        Ok(p)
    }

    /// Univariate convenience: coefficients listed from `t^low` upward.
    pub fn univariate(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(1);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(ExponentVector(vec![low + i as i64]), BigInt::from(c));
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, c: BigInt) {
        debug_assert_eq!(exp.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x == 0))
    }

    /// True for `± monomial`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.plus(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.plus(shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponent over the support.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            ExponentVector(acc.0.iter().zip(&e.0).map(|(a, b)| *a.min(b)).collect())
        }))
    }

    pub fn max_exponents(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            ExponentVector(acc.0.iter().zip(&e.0).map(|(a, b)| *a.max(b)).collect())
        }))
    }

    /// Greatest term in graded lexicographic order.
    pub fn grlex_leading(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Greatest term in pure lexicographic order.
    pub(crate) fn lex_leading(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// GCD of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Shifts the support so its componentwise minimum is the origin.
    pub(crate) fn shift_to_origin(&self) -> Self {
        match self.min_exponents() {
            Some(m) => self.shift(&ExponentVector(m.0.iter().map(|x| -x).collect())),
            None => self.clone(),
        }
    }

    /// Flips the sign so the graded-lex leading coefficient is positive.
    pub(crate) fn positive_leading(self) -> Self {
        match self.grlex_leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    /// The unique representative of the orbit `{± x^h · p}`.
    pub fn canonicalize(&self) -> CanonicalForm {
        CanonicalForm(self.shift_to_origin().positive_leading())
    }

    /// Equality up to a unit `± monomial`.
    pub fn doteq(&self, other: &Self) -> Result<bool> {
        self.check_rank(other)?;
        Ok(self.canonicalize() == other.canonicalize())
    }

    /// Greatest common divisor in `Z[H]`, in canonical form.
    pub fn gcd(&self, other: &Self) -> Result<CanonicalForm> {
        self.check_rank(other)?;
        let g = poly_gcd(&self.shift_to_origin(), &other.shift_to_origin());
        Ok(g.canonicalize())
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || self.rank != d.rank {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.rank));
        }
        let (lead_d, lead_c) = d.lex_leading().map(|(e, c)| (e.clone(), c.clone()))?;
        // Newton polytopes add under multiplication, so every quotient
        // exponent lies in this box.
        let lo = self.min_exponents()?.minus(&d.min_exponents()?);
        let hi = self.max_exponents()?.minus(&d.max_exponents()?);
        if lo.0.iter().zip(&hi.0).any(|(a, b)| a > b) {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        while let Some((e, c)) = rem.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe = e.minus(&lead_d);
            if qe.0.iter().zip(lo.0.iter().zip(&hi.0)).any(|(x, (a, b))| x < a || x > b) {
                return None;
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in &d.terms {
                rem.add_term(de.plus(&qe), -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Pushes forward along an integral covector: `x^h ↦ t^{ψ(h)}`.
    pub fn specialize(&self, psi: &Covector) -> Result<Self> {
        if psi.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: psi.rank(),
            });
        }
        let ints = psi.to_i64().ok_or(Error::NonIntegerCovector)?;
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            let d: i64 = e.0.iter().zip(&ints).map(|(a, b)| a * b).sum();
            out.add_term(ExponentVector(vec![d]), c.clone());
        }
        Ok(out)
    }

    /// Substitutes the variables by monomials: `x_i ↦ y^{images[i]}`.
    pub fn substitute(&self, target_rank: usize, images: &[ExponentVector]) -> Self {
        let mut out = Self::zero(target_rank);
        for (e, c) in &self.terms {
            let mut img = ExponentVector::zero(target_rank);
            for (k, &a) in e.0.iter().enumerate() {
                if a != 0 {
                    img = img.plus(&images[k].scaled(a));
                }
            }
            out.add_term(img, c.clone());
        }
        out
    }

    /// Width of the support under `α`: `max |α(h_i) − α(h_j)|`.
    pub fn deg_alpha(&self, alpha: &Covector) -> Result<Q> {
        if alpha.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: alpha.rank(),
            });
        }
        let values: Vec<Q> = self
            .terms
            .keys()
            .map(|e| alpha.evaluate_exponent(e))
            .collect();
        let (Some(lo), Some(hi)) = (values.iter().min(), values.iter().max()) else {
            return Ok(Q::zero());
        };
        Ok(hi - lo)
    }

    /// Top exponent minus bottom exponent of a univariate polynomial.
    pub fn floating_degree(&self) -> Result<i64> {
        if self.rank != 1 {
            return Err(Error::NotUnivariate(self.rank));
        }
        let lo = self.terms.keys().next().map(|e| e.0[0]);
        let hi = self.terms.keys().next_back().map(|e| e.0[0]);
        Ok(match (lo, hi) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        })
    }

    /// Support exponent vectors as rational points.
    pub fn support_points(&self) -> Vec<Vec<Q>> {
        self.terms
            .keys()
            .map(|e| e.0.iter().map(|&x| q(x)).collect())
            .collect()
    }

    /// Exponent vectors in the support.
    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Coefficients grouped by the exponent of variable `v`; the `v`
    /// exponent is zeroed in each coefficient polynomial.
    pub(crate) fn coefficients_in(&self, v: usize) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest.0[v];
            rest.0[v] = 0;
            out.entry(k)
                .or_insert_with(|| LaurentPoly::zero(self.rank))
                .add_term(rest, c.clone());
        }
        out
    }

    pub(crate) fn degree_in(&self, v: usize) -> i64 {
        self.terms.keys().map(|e| e.0[v]).max().unwrap_or(i64::MIN)
    }

    pub(crate) fn involves(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e.0[v] != 0)
    }

    /// Evaluates a univariate polynomial's coefficients as `i64`s, if they fit.
    pub fn to_i64_terms(&self) -> Option<Vec<(Vec<i64>, i64)>> {
        self.terms
            .iter()
            .map(|(e, c)| c.to_i64().map(|c| (e.0.clone(), c)))
            .collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs).expect("rank mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs).expect("rank mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs).expect("rank mismatch in *")
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&variable_names(self.rank)))
    }
}

/// Canonical representative of a unit orbit: support shifted to the origin
/// and positive graded-lex leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm(LaurentPoly);

impl CanonicalForm {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A linear functional on `H` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Covector(pub Vec<Q>);

impl Covector {
    pub fn from_ints(xs: &[i64]) -> Self {
        Covector(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Integer entries with GCD one.
    pub fn is_primitive(&self) -> bool {
        match self.to_i64() {
            Some(v) => v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1,
            None => false,
        }
    }

    /// Validates a primitive integral class and returns its entries.
    pub fn primitive_entries(&self) -> Result<Vec<i64>> {
        let v = self.to_i64().ok_or(Error::NonIntegerCovector)?;
        if v.iter().all(|&x| x == 0) {
            return Err(Error::ZeroCovector);
        }
        if v.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::NotPrimitive(v));
        }
        Ok(v)
    }

    pub fn evaluate_exponent(&self, e: &ExponentVector) -> Q {
        self.0
            .iter()
            .zip(&e.0)
            .fold(Q::zero(), |acc, (a, &x)| acc + a * q(x))
    }
}

/// Determinant of a square matrix of polynomials of common rank, by dynamic
/// programming over column subsets (fraction-free, exact).
pub fn determinant(rank: usize, m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let k = m.len();
    if k == 0 {
        return LaurentPoly::one(rank);
    }
    assert!(k < 64, "determinant size too large");
    let mut layer: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
    layer.insert(0, LaurentPoly::one(rank));
    for row in m {
        let mut next: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
        for (mask, val) in &layer {
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let mut term = val * entry;
                if above % 2 == 1 {
                    term = -term;
                }
                let slot = next
                    .entry(mask | (1 << c))
                    .or_insert_with(|| LaurentPoly::zero(rank));
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
        if layer.is_empty() {
            return LaurentPoly::zero(rank);
        }
    }
    layer
        .into_values()
        .next()
        .unwrap_or_else(|| LaurentPoly::zero(rank))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate(low, c)
    }

    fn xy(terms: &[((i64, i64), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(2, terms.iter().map(|&((a, b), c)| (vec![a, b], c))).unwrap()
    }

    #[test]
    fn add_examples() {
        let x = LaurentPoly::var(1, 0);
        let one = LaurentPoly::one(1);
        assert!((&(&x - &one) + &(&one - &x)).is_zero());
        let p = t(-1, &[3, 0, 2]);
        assert_eq!(&p + &LaurentPoly::zero(1), p);
        let a = xy(&[((1, 0), 1), ((0, 1), 1)]);
        let b = xy(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(&a + &b, xy(&[((1, 0), 2)]));
        assert!(LaurentPoly::one(1).add(&LaurentPoly::one(2)).is_err());
    }

    #[test]
    fn mul_examples() {
        let tm1 = t(0, &[-1, 1]);
        assert_eq!(&tm1 * &tm1, t(0, &[1, -2, 1]));
        assert_eq!(&tm1 * &LaurentPoly::one(1), tm1);
        assert_eq!(tm1.pow(2), t(0, &[1, -2, 1]));
        assert!(tm1.mul(&LaurentPoly::one(3)).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        // -t^3 + t^2 -> t - 1
        assert_eq!(t(2, &[1, -1]).canonicalize().into_poly(), t(0, &[-1, 1]));
        assert!(LaurentPoly::zero(1).canonicalize().is_zero());
        // x^2 y - x y^2 -> x - y
        let p = xy(&[((2, 1), 1), ((1, 2), -1)]);
        assert_eq!(
            p.canonicalize().into_poly(),
            xy(&[((1, 0), 1), ((0, 1), -1)])
        );
    }

    #[test]
    fn doteq_examples() {
        let tm1 = t(0, &[-1, 1]);
        assert!(tm1.doteq(&t(0, &[1, -1])).unwrap());
        assert!(tm1.doteq(&t(1, &[-1, 1])).unwrap());
        assert!(!tm1.doteq(&t(0, &[1, 1])).unwrap());
        assert!(tm1.doteq(&LaurentPoly::one(2)).is_err());
    }

    #[test]
    fn gcd_examples() {
        let a = t(0, &[-1, 0, 1]);
        let b = t(0, &[-1, 0, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap().into_poly(), t(0, &[-1, 1]));
        let a = t(0, &[-2, 2]);
        let b = t(0, &[-4, 0, 4]);
        assert_eq!(a.gcd(&b).unwrap().into_poly(), t(0, &[-2, 2]));
        // gcd((x-1)(y-1), (x-1)^2) = x - 1
        let xm1 = xy(&[((1, 0), 1), ((0, 0), -1)]);
        let ym1 = xy(&[((0, 1), 1), ((0, 0), -1)]);
        let g = (&xm1 * &ym1).gcd(&(&xm1 * &xm1)).unwrap();
        assert_eq!(g.into_poly(), xm1);
        // gcd(p, 0) = canonicalize(p)
        let p = t(3, &[-5, 0, 5]);
        assert_eq!(p.gcd(&LaurentPoly::zero(1)).unwrap(), p.canonicalize());
        assert!(p.gcd(&LaurentPoly::zero(2)).is_err());
    }

    #[test]
    fn exact_division() {
        let a = t(-2, &[1, -3, 3, -1]);
        let d = t(0, &[-1, 1]);
        let quot = a.div_exact(&d).unwrap();
        assert_eq!(&quot * &d, a);
        assert!(t(0, &[1, 0, 1]).div_exact(&d).is_none());
        assert!(t(0, &[1]).div_exact(&t(0, &[-1, 1]).pow(2)).is_none());
        assert!(t(0, &[3, 3]).div_exact(&t(0, &[2])).is_none());
    }

    #[test]
    fn specialize_examples() {
        let g = t(0, &[-1, 1]).pow(2);
        let s = g.specialize(&Covector::from_ints(&[3])).unwrap();
        assert_eq!(s, t(0, &[1, 0, 0, -2, 0, 0, 1]));
        let p = xy(&[((1, 0), 1), ((0, 1), -1)]);
        assert!(p.specialize(&Covector::from_ints(&[1, 1])).unwrap().is_zero());
        let one = LaurentPoly::one(2);
        assert_eq!(
            one.specialize(&Covector::from_ints(&[4, -7])).unwrap(),
            LaurentPoly::one(1)
        );
        let half = Covector(vec![crate::rational::qf(1, 2)]);
        assert_eq!(t(0, &[1, 1]).specialize(&half), Err(Error::NonIntegerCovector));
    }

    #[test]
    fn degree_examples() {
        let g = t(0, &[-1, 1]);
        let a = Covector::from_ints(&[1]);
        assert_eq!(g.pow(2).deg_alpha(&a).unwrap(), q(2));
        assert_eq!(LaurentPoly::zero(1).deg_alpha(&a).unwrap(), q(0));
        assert_eq!(g.pow(4).deg_alpha(&a).unwrap(), q(4));
        assert_eq!(g.pow(2).floating_degree().unwrap(), 2);
        assert_eq!(t(5, &[1]).floating_degree().unwrap(), 0);
        let p = &t(0, &[-1, 0, 0, 1]).pow(2) * &g.pow(2);
        assert_eq!(p.floating_degree().unwrap(), 8);
        assert_eq!(LaurentPoly::one(2).floating_degree(), Err(Error::NotUnivariate(2)));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = t(0, &[1, 1]);
        let b = t(0, &[0, 2]);
        let c = t(0, &[3]);
        let d = t(-1, &[1]);
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(determinant(1, &m), &(&a * &d) - &(&b * &c));
        let z = LaurentPoly::zero(1);
        let one = LaurentPoly::one(1);
        let perm = vec![
            vec![z.clone(), one.clone(), z.clone()],
            vec![z.clone(), z.clone(), one.clone()],
            vec![one.clone(), z.clone(), z.clone()],
        ];
        assert_eq!(determinant(1, &perm), one);
    }
}
