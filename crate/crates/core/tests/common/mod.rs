//! Test-side oracles written against plain integer and rational arithmetic,
//! independent of the library's polynomial, Smith form and rewriting code.

#![allow(dead_code)]

use alexcert::{LaurentPoly, Presentation};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type R = BigRational;

pub fn r(n: i64) -> R {
    R::from_integer(n.into())
}

/// Rank over `Q` by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<R>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rk = 0;
    for c in 0..cols {
        let Some(p) = (rk..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rk, p);
        let pivot = m[rk].clone();
        for row in m.iter_mut().skip(rk + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
        rk += 1;
    }
    rk
}

/// Images of the generators under a homomorphism to `Z` killing every relator.
pub fn checked_values(p: &Presentation, values: &[i64]) -> Vec<i64> {
    for rel in p.relators() {
        let s: i64 = rel.letters().iter().map(|l| l.exp * values[l.gen]).sum();
        assert_eq!(s, 0, "values do not define a homomorphism");
    }
    values.to_vec()
}

/// `b_1` of the `m`-fold cyclic cover from the chain complex over `Q[Z/m]`:
/// `b_1 = g·m − (m − 1) − rank ∂_2`, with `∂_2` assembled from circulant blocks
/// of the Fox Jacobian reduced modulo `t^m − 1`.
pub fn cover_betti(p: &Presentation, values: &[i64], m: usize) -> usize {
    let g = p.num_generators();
    assert_eq!(values.iter().fold(0i64, |a, &v| a.gcd(&v)), 1, "class must be surjective");
    let md = m as i64;
    let rels = p.relators();
    let mut big = vec![vec![R::zero(); g * m]; rels.len() * m];
    for (i, rel) in rels.iter().enumerate() {
        let mut blocks = vec![vec![0i64; m]; g];
        let mut prefix = 0i64;
        for l in rel.letters() {
            for _ in 0..l.exp.abs() {
                if l.exp > 0 {
                    blocks[l.gen][prefix.rem_euclid(md) as usize] += 1;
                    prefix += values[l.gen];
                } else {
                    prefix -= values[l.gen];
                    blocks[l.gen][prefix.rem_euclid(md) as usize] -= 1;
                }
            }
        }
        for (j, a) in blocks.iter().enumerate() {
            for k in 0..m {
                for l in 0..m {
                    big[i * m + (k + l) % m][j * m + l] = r(a[k]);
                }
            }
        }
    }
    g * m - (m - 1) - rank(big)
}

/// Dense univariate Laurent polynomial `Σ c_k t^(low + k)` over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub low: i64,
    pub c: Vec<R>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { low: 0, c: Vec::new() }
    }

    pub fn monomial(e: i64, k: R) -> Self {
        UPoly { low: e, c: vec![k] }.trim()
    }

    pub fn from_ints(low: i64, c: &[i64]) -> Self {
        UPoly {
            low,
            c: c.iter().map(|&x| r(x)).collect(),
        }
        .trim()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        self.c.drain(..lead);
        self.low += lead as i64;
        if self.c.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.c.len() as i64).max(o.low + o.c.len() as i64);
        let mut c = vec![R::zero(); (high - low) as usize];
        for (k, x) in self.c.iter().enumerate() {
            c[(self.low - low) as usize + k] += x;
        }
        for (k, x) in o.c.iter().enumerate() {
            c[(o.low - low) as usize + k] += x;
        }
        UPoly { low, c }.trim()
    }

    pub fn neg(&self) -> Self {
        UPoly {
            low: self.low,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![R::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        UPoly { low: self.low + o.low, c }.trim()
    }

    fn rem(&self, d: &Self) -> Self {
        // Polynomial remainder after shifting both to start at degree 0.
        let mut a = self.c.clone();
        let lead = d.c.last().expect("nonzero divisor").clone();
        while a.len() >= d.c.len() {
            let f = a.last().unwrap() / &lead;
            let off = a.len() - d.c.len();
            for (k, y) in d.c.iter().enumerate() {
                a[off + k] -= &f * y;
            }
            a.pop();
        }
        UPoly { low: 0, c: a }.trim()
    }

    /// Integer content times sign of the leading coefficient, for integral polys.
    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| {
            assert!(x.is_integer());
            g.gcd(x.numer())
        })
    }

    /// Shifted to start at `t^0`, scaled to a primitive integer polynomial
    /// with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let den = self.c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = self.c.iter().map(|x| (x * R::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        UPoly {
            low: 0,
            c: ints.into_iter().map(|x| R::from_integer(x / &g * &sign)).collect(),
        }
    }

    /// Canonical representative up to `±t^k` of an integral polynomial.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let p = self.primitive();
        UPoly {
            low: 0,
            c: p.c.iter().map(|x| x * R::from_integer(self.content())).collect(),
        }
    }

    pub fn degree_span(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn from_lib(p: &LaurentPoly) -> Self {
        assert_eq!(p.rank(), 1);
        let mut out = UPoly::zero();
        for (e, c) in p.terms() {
            out = out.add(&UPoly::monomial(e.0[0], R::from_integer(c.clone())));
        }
        out
    }
}

/// GCD in `Z[t^±1]` of integral polynomials, normalized as [`UPoly::canonical`].
pub fn zgcd(ps: &[UPoly]) -> UPoly {
    let nonzero: Vec<&UPoly> = ps.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return UPoly::zero();
    }
    let content = nonzero.iter().fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
    let mut g = nonzero[0].primitive();
    for p in &nonzero[1..] {
        let mut a = g;
        let mut b = p.primitive();
        while !b.is_zero() {
            let rem = a.primitive().rem(&b);
            a = b;
            b = rem;
        }
        g = a.primitive();
    }
    UPoly {
        low: 0,
        c: g.c.iter().map(|x| x * R::from_integer(content.clone())).collect(),
    }
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<UPoly>]) -> UPoly {
    match m.len() {
        0 => UPoly::from_ints(0, &[1]),
        1 => m[0][0].clone(),
        n => {
            let mut acc = UPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<UPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Fox Jacobian over `Z[t^±1]` for generator values `values`.
pub fn fox_jacobian(p: &Presentation, values: &[i64]) -> Vec<Vec<UPoly>> {
    p.relators()
        .iter()
        .map(|rel| {
            let mut row = vec![UPoly::zero(); p.num_generators()];
            let mut prefix = 0i64;
            for l in rel.letters() {
                for _ in 0..l.exp.abs() {
                    if l.exp > 0 {
                        row[l.gen] = row[l.gen].add(&UPoly::monomial(prefix, r(1)));
                        prefix += values[l.gen];
                    } else {
                        prefix -= values[l.gen];
                        row[l.gen] = row[l.gen].add(&UPoly::monomial(prefix, r(-1)));
                    }
                }
            }
            row
        })
        .collect()
}

/// Order of the Alexander module straight from the specialized Jacobian:
/// GCD of all `(g − 1)`-minors.
pub fn specialized_order(p: &Presentation, values: &[i64]) -> UPoly {
    let jac = fox_jacobian(p, values);
    let g = p.num_generators();
    let k = g - 1;
    let mut minors = Vec::new();
    for rows in subsets(jac.len(), k) {
        for cols in subsets(g, k) {
            let sub: Vec<Vec<UPoly>> = rows.iter().map(|&i| cols.iter().map(|&j| jac[i][j].clone()).collect()).collect();
            minors.push(det(&sub));
        }
    }
    zgcd(&minors)
}
