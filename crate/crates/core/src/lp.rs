//! Exact rational linear programming: two-phase simplex with Bland's rule
//! on problems in standard form `min c·x, A x = b, x ≥ 0`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Optimal value and an optimal basic solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub value: Q,
    pub x: Vec<Q>,
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs of `cost` relative to the current basis.
    fn reduced(&self, cost: &[Q]) -> Vec<Q> {
        let mut red: Vec<Q> = cost.to_vec();
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[bv];
            if cb.is_zero() {
                continue;
            }
            for (j, x) in row[..self.ncols].iter().enumerate() {
                red[j] -= cb * x;
            }
        }
        red
    }

    /// Minimizes `cost` over columns in `allowed`, starting from a feasible basis.
    fn optimize(&mut self, cost: &[Q], allowed: &[bool]) -> Result<()> {
        loop {
            let red = self.reduced(cost);
            // Bland: lowest-index improving column, then lowest-index basic row.
            let Some(c) = (0..self.ncols).find(|&j| allowed[j] && red[j].is_negative()) else {
                return Ok(());
            };
            let rhs = self.ncols;
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, c);
        }
    }
}

/// Solves `min c·x` subject to `A x = b`, `x ≥ 0`.
pub fn minimize(c: &[Q], a: &[Vec<Q>], b: &[Q]) -> Result<Solution> {
    let n = c.len();
    let m = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != m {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.iter().map(Vec::len).find(|&l| l != n).unwrap_or(b.len()),
        });
    }
    // Phase one: artificial columns n..n+m.
    let ncols = n + m;
    let rows: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let flip = bi.is_negative();
            let mut r: Vec<Q> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
            r.extend((0..m).map(|k| Q::from_integer((k == i).into())));
            r.push(if flip { -bi } else { bi.clone() });
            r
        })
        .collect();
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        ncols,
    };
    let mut phase1 = vec![Q::zero(); ncols];
    for x in phase1.iter_mut().skip(n) {
        *x = Q::from_integer(1.into());
    }
    t.optimize(&phase1, &vec![true; ncols])?;
    let infeasibility: Q = t
        .rows
        .iter()
        .zip(&t.basis)
        .filter(|(_, &bv)| bv >= n)
        .map(|(r, _)| r[ncols].clone())
        .sum();
    if !infeasibility.is_zero() {
        return Err(Error::Infeasible);
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Q::zero()));
    let allowed: Vec<bool> = (0..ncols).map(|j| j < n).collect();
    t.optimize(&cost, &allowed)?;
    let mut x = vec![Q::zero(); n];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        if bv < n {
            x[bv] = row[ncols].clone();
        }
    }
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    Ok(Solution { value, x })
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn maximize(c: &[Q], a: &[Vec<Q>], b: &[Q]) -> Result<Solution> {
    let neg: Vec<Q> = c.iter().map(|x| -x).collect();
    let mut s = minimize(&neg, a, b)?;
    s.value = -s.value;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf, qvec};

    #[test]
    fn small_program() {
        // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = vec![qvec(&[1, 2, 1, 0]), qvec(&[3, 1, 0, 1])];
        let s = minimize(&qvec(&[-1, -1, 0, 0]), &a, &qvec(&[4, 6])).unwrap();
        assert_eq!(s.value, qf(-14, 5));
        assert_eq!(&s.x[..2], &[qf(8, 5), qf(6, 5)]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = vec![qvec(&[1, 1])];
        assert_eq!(minimize(&qvec(&[0, 0]), &a, &qvec(&[-1])), Err(Error::Infeasible));
        let a = vec![qvec(&[1, -1])];
        assert_eq!(minimize(&qvec(&[-1, 0]), &a, &qvec(&[1])), Err(Error::Unbounded));
    }

    #[test]
    fn redundant_rows() {
        let a = vec![qvec(&[1, 1]), qvec(&[2, 2])];
        let s = maximize(&qvec(&[1, 0]), &a, &qvec(&[3, 6])).unwrap();
        assert_eq!(s.value, q(3));
    }
}
