//! Integer matrices: Smith normal form with column transform, Hermite
//! normal form, rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Result of reducing `A` (n × g) to `U·A·V = diag(d_1, …, d_r, 0, …)`.
#[derive(Debug, Clone)]
pub struct Smith {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<BigInt>,
    /// Unimodular column transform `V` (g × g).
    pub col_transform: IntMatrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Smith normal form of an `n × cols` integer matrix.
pub fn smith(a: &[Vec<BigInt>], cols: usize) -> Smith {
    let mut m: IntMatrix = a.to_vec();
    let n = m.len();
    let mut v = identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..n.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&m, t, t) else {
            break;
        };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut dirty = false;
            // Clear column t below the pivot.
            for i in t + 1..n {
                if m[i][t].is_zero() {
                    continue;
                }
                let qt = m[i][t].div_floor(&m[t][t]);
                row_axpy(&mut m, i, t, &-qt);
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let qt = m[t][j].div_floor(&m[t][t]);
                col_axpy(&mut m, j, t, &-&qt);
                col_axpy(&mut v, j, t, &-qt);
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_abs_in_cross(&m, t);
                m.swap(t, pi);
                swap_cols(&mut m, t, pj);
                swap_cols(&mut v, t, pj);
                continue;
            }
            // Divisibility of the remaining block.
            let bad = (t + 1..n).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &m[t][t]).is_zero()));
            match bad {
                Some(i) => row_axpy(&mut m, t, i, &BigInt::one()),
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        diagonal.push(m[t][t].clone());
    }
    Smith {
        diagonal,
        col_transform: v,
    }
}

fn min_abs_entry(m: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in m.iter().enumerate().skip(r0) {
        for (j, x) in row.iter().enumerate().skip(c0) {
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|b| a < b.2) {
                let unit = a.is_one();
                best = Some((i, j, a));
                if unit {
                    return best.map(|b| (b.0, b.1));
                }
            }
        }
    }
    best.map(|b| (b.0, b.1))
}

/// Smallest nonzero entry in row t or column t (at or after the pivot).
fn min_abs_in_cross(m: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, m[t][t].abs());
    for (i, row) in m.iter().enumerate().skip(t) {
        let x = &row[t];
        if !x.is_zero() && x.abs() < best.2 {
            best = (i, t, x.abs());
        }
    }
    for (j, x) in m[t].iter().enumerate().skip(t) {
        if !x.is_zero() && x.abs() < best.2 {
            best = (t, j, x.abs());
        }
    }
    (best.0, best.1)
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// row[dst] += k · row[src]
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(&src_row) {
        if !s.is_zero() {
            *d += k * s;
        }
    }
}

/// col[dst] += k · col[src]
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let add = k * &row[src];
            row[dst] += add;
        }
    }
}

/// Row-style Hermite normal form: unimodular row operations bring `a` to
/// echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(a: &[Vec<BigInt>], cols: usize) -> IntMatrix {
    let mut m: IntMatrix = a.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        loop {
            // Pivot: smallest nonzero |entry| in column c at or below r.
            let piv = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&i, &j| m[i][c].abs().cmp(&m[j][c].abs()));
            let Some(p) = piv else { break };
            m.swap(r, p);
            let mut clean = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let qt = m[i][c].div_floor(&m[r][c]);
                row_axpy(&mut m, i, r, &-qt);
                if !m[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            for i in 0..r {
                let qt = m[i][c].div_floor(&m[r][c]);
                row_axpy(&mut m, i, r, &-qt);
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

pub fn transpose(a: &[Vec<BigInt>], cols: usize) -> IntMatrix {
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    // Bareiss fraction-free elimination.
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: IntMatrix = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = val / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[Vec<i64>]) -> IntMatrix {
        from_i64(rows)
    }

    fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        a.iter()
            .map(|row| {
                (0..b[0].len())
                    .map(|j| row.iter().zip(b).map(|(x, r)| x * &r[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn smith_of_small_matrices() {
        let s = smith(&bi(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), 3);
        let d: Vec<i64> = s.diagonal.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        let s = smith(&bi(&[vec![2, 0], vec![0, 3]]), 2);
        let d: Vec<i64> = s.diagonal.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 6]);
    }

    #[test]
    fn column_transform_kills_kernel() {
        let a = bi(&[vec![1, 1, -2], vec![0, 3, 3]]);
        let s = smith(&a, 3);
        assert_eq!(s.rank(), 2);
        let av = mat_mul(&a, &s.col_transform);
        for row in &av {
            assert!(row[2].is_zero());
        }
        assert!(determinant(&s.col_transform).abs().is_one());
    }

    #[test]
    fn hermite_form() {
        let h = hermite_rows(&bi(&[vec![0, 2, 3], vec![0, 4, 5]]), 3);
        assert_eq!(h, bi(&[vec![0, 2, 0], vec![0, 0, 1]]));
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(
            determinant(&bi(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]])),
            BigInt::from(18)
        );
        assert_eq!(determinant(&bi(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
    }
}
