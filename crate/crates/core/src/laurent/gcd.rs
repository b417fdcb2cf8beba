//! Multivariate GCD over `Z[x_1, …, x_b]` by recursive content / primitive
//! part decomposition and primitive pseudo-remainder sequences.
//!
//! Inputs must have nonnegative exponents; the Laurent wrapper shifts the
//! supports before calling in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, LaurentPoly};

/// GCD of two polynomials with nonnegative exponents. The result has a
/// positive graded-lex leading coefficient.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone().positive_leading();
    }
    if b.is_zero() {
        return a.clone().positive_leading();
    }
    let rank = a.rank();
    if a.is_constant() || b.is_constant() {
        let g = a.integer_content().gcd(&b.integer_content());
        return LaurentPoly::constant(rank, g);
    }
    if b.div_exact(a).is_some() {
        return a.clone().positive_leading();
    }
    if a.div_exact(b).is_some() {
        return b.clone().positive_leading();
    }

    // A variable present in only one argument is eliminated through the content.
    for v in 0..rank {
        match (a.involves(v), b.involves(v)) {
            (true, false) => return poly_gcd(&content_in(a, v), b),
            (false, true) => return poly_gcd(a, &content_in(b, v)),
            _ => {}
        }
    }

    let v = (0..rank)
        .filter(|&v| a.involves(v))
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("non-constant polynomials involve some variable");

    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let content_gcd = poly_gcd(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    let primitive = loop {
        let r = pseudo_remainder(&f, &g, v);
        if r.is_zero() {
            break g;
        }
        if r.degree_in(v) == 0 {
            break LaurentPoly::one(rank);
        }
        let cr = content_in(&r, v);
        f = g;
        g = r.div_exact(&cr).expect("content divides");
    };
    let primitive = primitive.positive_leading();
    (&content_gcd * &primitive).positive_leading()
}

/// GCD of the coefficients of `p` viewed as a polynomial in `x_v`.
pub(crate) fn content_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(p.rank());
    for c in p.coefficients_in(v).into_values() {
        acc = poly_gcd(&acc, &c);
        if acc.is_unit() {
            return LaurentPoly::one(p.rank());
        }
    }
    acc
}

fn leading_coefficient_in(p: &LaurentPoly, v: usize) -> (i64, LaurentPoly) {
    p.coefficients_in(v)
        .into_iter()
        .next_back()
        .expect("nonzero polynomial")
}

/// A scalar multiple `lc(g)^k · f` reduced modulo `g` in `x_v`.
fn pseudo_remainder(f: &LaurentPoly, g: &LaurentPoly, v: usize) -> LaurentPoly {
    let (dg, lg) = leading_coefficient_in(g, v);
    let mut r = f.clone();
    while !r.is_zero() {
        let (dr, lr) = leading_coefficient_in(&r, v);
        if dr < dg {
            break;
        }
        let shift = {
            let mut e = ExponentVector::zero(r.rank());
            e.0[v] = dr - dg;
            e
        };
        r = &(&lg * &r) - &(&lr * &g.shift(&shift));
        // Keep integer growth in check; dividing by a positive integer
        // preserves the remainder up to a unit of Q.
        let c = r.integer_content();
        if c > BigInt::one() {
            r = r.scale_down(&c);
        }
    }
    r
}

impl LaurentPoly {
    fn scale_down(&self, c: &BigInt) -> LaurentPoly {
        debug_assert!(c.is_positive());
        let mut out = LaurentPoly::zero(self.rank());
        for (e, x) in self.terms() {
            let (qt, rm) = x.div_rem(c);
            debug_assert!(rm.is_zero());
            out.add_term(e.clone(), qt);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz(terms: &[([i64; 3], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(3, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn recovers_planted_factor() {
        let f = xyz(&[([1, 0, 0], 1), ([0, 1, 0], -2), ([0, 0, 0], 3)]);
        let a = xyz(&[([0, 0, 2], 1), ([1, 1, 0], 1), ([0, 0, 0], -1)]);
        let b = xyz(&[([2, 0, 1], 1), ([0, 3, 0], 4), ([0, 0, 0], 5)]);
        let g = poly_gcd(&(&f * &a), &(&f * &b));
        assert_eq!(g.canonicalize(), f.canonicalize());
    }

    #[test]
    fn integer_content_is_part_of_gcd() {
        let f = xyz(&[([1, 0, 0], 1), ([0, 0, 0], -1)]);
        let g = poly_gcd(&f.scale(&BigInt::from(6)), &f.scale(&BigInt::from(4)));
        assert_eq!(g, f.scale(&BigInt::from(2)));
    }

    #[test]
    fn coprime_inputs() {
        let a = xyz(&[([1, 0, 0], 1), ([0, 0, 0], -1)]);
        let b = xyz(&[([0, 1, 0], 1), ([0, 0, 0], -1)]);
        assert_eq!(poly_gcd(&a.pow(2), &b.pow(2)), LaurentPoly::one(3));
    }
}
