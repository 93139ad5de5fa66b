//! Smith and Hermite normal forms over ℤ for small dense matrices.

/// Result of [`smith`]: `u · a · v = diag(divisors)` padded with zeros,
/// with `u`, `v` unimodular and each divisor dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub divisors: Vec<i64>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn add_row(m: &mut [Vec<i64>], dst: usize, src: usize, k: i64) {
    if k == 0 {
        return;
    }
    let (d, s) = if dst < src {
        let (a, b) = m.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = m.split_at_mut(dst);
        (&mut b[0], &a[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        *x += k * y;
    }
}

fn add_col(m: &mut [Vec<i64>], dst: usize, src: usize, k: i64) {
    if k == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[dst] += k * row[src];
    }
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form of an `r × c` integer matrix.
pub fn smith(a: &[Vec<i64>], cols: usize) -> Smith {
    let r = a.len();
    let c = cols;
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut u = identity(r);
    let mut v = identity(c);
    let mut divisors = Vec::new();
    for t in 0..r.min(c) {
        let pivot = (t..r)
            .flat_map(|i| (t..c).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                let q = m[i][t].div_euclid(m[t][t]);
                add_row(&mut m, i, t, -q);
                add_row(&mut u, i, t, -q);
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                let q = m[t][j].div_euclid(m[t][t]);
                add_col(&mut m, j, t, -q);
                add_col(&mut v, j, t, -q);
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                let best = (t..r)
                    .map(|i| (i, t))
                    .chain((t..c).map(|j| (t, j)))
                    .filter(|&(i, j)| m[i][j] != 0)
                    .min_by_key(|&(i, j)| m[i][j].abs())
                    .expect("nonzero pivot");
                if best.0 != t {
                    m.swap(t, best.0);
                    u.swap(t, best.0);
                }
                if best.1 != t {
                    swap_cols(&mut m, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| m[i][j] % m[t][t] != 0));
            match bad {
                Some(i) => {
                    add_row(&mut m, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for x in m[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        divisors.push(m[t][t]);
    }
    Smith { u, v, divisors }
}

/// Row-style Hermite normal form of a full-row-rank integer matrix: rows in
/// echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`.
pub fn hermite_rows(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let r = m.len();
    let mut row = 0;
    for col in 0..cols {
        if row == r {
            break;
        }
        // Euclid on the column entries below `row`.
        loop {
            let nz: Vec<usize> = (row..r).filter(|&i| m[i][col] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][col].abs()).expect("nonempty");
            m.swap(row, p);
            let mut done = true;
            for i in row + 1..r {
                if m[i][col] != 0 {
                    let q = m[i][col].div_euclid(m[row][col]);
                    add_row(&mut m, i, row, -q);
                    if m[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[row][col] == 0 {
            continue;
        }
        if m[row][col] < 0 {
            for x in m[row].iter_mut() {
                *x = -*x;
            }
        }
        let piv = m[row][col];
        for i in 0..row {
            let q = m[i][col].div_euclid(piv);
            add_row(&mut m, i, row, -q);
        }
        row += 1;
    }
    m
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    use crate::rational::{to_i64, QMatrix};
    let inv = QMatrix::from_int_rows(a).inverse().expect("unimodular matrix is invertible");
    (0..inv.rows)
        .map(|i| inv.row(i).iter().map(|x| to_i64(x).expect("unimodular inverse is integral")).collect())
        .collect()
}

#[cfg(test)]
fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>], inner: usize, cols: usize) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &[Vec<i64>], cols: usize) -> Smith {
        let s = smith(a, cols);
        let ua = mat_mul(&s.u, a, a.len(), cols);
        let d = mat_mul(&ua, &s.v, cols, cols);
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j && i < s.divisors.len() { s.divisors[i] } else { 0 };
                assert_eq!(x, want, "entry ({i},{j}) of {d:?}");
            }
        }
        for w in s.divisors.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        unimodular_inverse(&s.u);
        unimodular_inverse(&s.v);
        s
    }

    #[test]
    fn smith_examples() {
        assert_eq!(check(&[vec![2]], 1).divisors, vec![2]);
        let s = check(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        assert_eq!(s.divisors, vec![2, 6, 12]);
        let s = check(&[vec![1, 0], vec![-1, 1], vec![0, -1]], 2);
        assert_eq!(s.divisors, vec![1, 1]);
        let s = check(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(s.divisors, vec![1, 6]);
    }

    #[test]
    fn hermite_is_canonical() {
        let a = vec![vec![1, 1, 1]];
        assert_eq!(hermite_rows(&a, 3), a);
        let b = vec![vec![2, 3, 1], vec![1, 1, 0]];
        let h = hermite_rows(&b, 3);
        assert_eq!(h, vec![vec![1, 0, -1], vec![0, 1, 1]]);
        let b2 = vec![vec![3, 4, 1], vec![-1, -1, 0]];
        assert_eq!(hermite_rows(&b2, 3), h);
    }
}
