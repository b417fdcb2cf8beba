//! Rational linear algebra and hull computation by the double description
//! method applied to the polar of the point set.

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Q, RVec};

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub(crate) fn rref(rows: &[RVec], ncols: usize) -> (Vec<RVec>, Vec<usize>) {
    let mut m: Vec<RVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub(crate) fn rank(rows: &[RVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub(crate) fn nullspace(rows: &[RVec], ncols: usize) -> Vec<RVec> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Scales a nonzero vector to a primitive integer vector (same direction).
pub(crate) fn primitive_direction(v: &[Q]) -> RVec {
    rational::primitive_integer(v)
        .into_iter()
        .map(Q::from_integer)
        .collect()
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

/// Extreme rays of the pointed cone `{x : rows · x ≥ 0}` in `R^dim`
/// (the rows must have full rank `dim`). Each ray comes with the indices of
/// the rows it makes tight.
pub(crate) fn extreme_rays(rows: &[RVec], dim: usize) -> Vec<(RVec, Vec<usize>)> {
    let n = rows.len();
    // A maximal independent set of rows gives a simplicial starting cone.
    let mut chosen: Vec<usize> = Vec::new();
    let mut chosen_rows: Vec<RVec> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        chosen_rows.push(r.clone());
        if rank(&chosen_rows, dim) == chosen_rows.len() {
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        } else {
            chosen_rows.pop();
        }
    }
    assert_eq!(chosen.len(), dim, "constraint rows must have full rank");
    let inverse = invert(&chosen_rows, dim);
    let mut rays: Vec<(RVec, Bits)> = (0..dim)
        .map(|j| {
            let ray: RVec = (0..dim).map(|i| inverse[i][j].clone()).collect();
            let mut z = Bits::new(n);
            for (k, &ci) in chosen.iter().enumerate() {
                if k != j {
                    z.set(ci);
                }
            }
            (primitive_direction(&ray), z)
        })
        .collect();

    for (h, row) in rows.iter().enumerate() {
        if chosen.contains(&h) {
            continue;
        }
        let values: Vec<Q> = rays.iter().map(|(r, _)| rational::dot(row, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut next: Vec<(RVec, Bits)> = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            if !values[i].is_negative() {
                let mut z = z.clone();
                if values[i].is_zero() {
                    z.set(h);
                }
                next.push((r.clone(), z));
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                if (common.count() as usize) + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, (_, z))| k != p && k != q && common.subset_of(z));
                if blocked {
                    continue;
                }
                let ray: RVec = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(a, b)| &values[p] * a - &values[q] * b)
                    .collect();
                let mut z = common;
                z.set(h);
                next.push((primitive_direction(&ray), z));
            }
        }
        rays = next;
    }
    rays.into_iter()
        .map(|(r, z)| {
            let tight = (0..n).filter(|&i| z.get(i)).collect();
            (r, tight)
        })
        .collect()
}

fn invert(m: &[RVec], n: usize) -> Vec<RVec> {
    let aug: Vec<RVec> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let (r, _) = rref(&aug, 2 * n);
    r.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Facets `(normal, rhs)` of the hull of full-dimensional points in `R^k`,
/// each with the indices of the points lying on it.
pub(crate) fn full_dim_facets(points: &[RVec], k: usize) -> Vec<(RVec, Q, Vec<usize>)> {
    let n = points.len();
    let count = Q::from_integer((n as i64).into());
    let mut center = vec![Q::zero(); k];
    for p in points {
        center = rational::add(&center, p);
    }
    let center: RVec = center.into_iter().map(|x| x / &count).collect();
    // Polar cone: s − a·(y_i − c) ≥ 0 and s ≥ 0 over (a, s).
    let mut rows: Vec<RVec> = points
        .iter()
        .map(|p| {
            let mut r: RVec = rational::sub(&center, p);
            r.push(Q::one());
            r
        })
        .collect();
    let mut last = vec![Q::zero(); k + 1];
    last[k] = Q::one();
    rows.push(last);
    extreme_rays(&rows, k + 1)
        .into_iter()
        .map(|(r, tight)| {
            let s = r[k].clone();
            debug_assert!(s.is_positive(), "bounded polar");
            let normal: RVec = r[..k].iter().map(|x| x / &s).collect();
            let rhs = Q::one() + rational::dot(&normal, &center);
            let on: Vec<usize> = tight.into_iter().filter(|&i| i < n).collect();
            (normal, rhs, on)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qvec;

    #[test]
    fn nullspace_of_plane() {
        let ns = nullspace(&[qvec(&[1, 1, 1])], 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(rational::dot(&qvec(&[1, 1, 1]), &v).is_zero());
        }
    }

    #[test]
    fn square_facets() {
        let pts = vec![qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])];
        let f = full_dim_facets(&pts, 2);
        assert_eq!(f.len(), 4);
        for (_, _, on) in &f {
            assert_eq!(on.len(), 2);
        }
    }

    #[test]
    fn cube_rays() {
        let mut pts = Vec::new();
        for mask in 0..8 {
            pts.push(qvec(&[(mask & 1) * 2 - 1, ((mask >> 1) & 1) * 2 - 1, ((mask >> 2) & 1) * 2 - 1]));
        }
        let f = full_dim_facets(&pts, 3);
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|(_, rhs, on)| rhs.is_one() && on.len() == 4));
    }
}
