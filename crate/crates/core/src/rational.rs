//! Exact rational scalars, their string serialization and small dense
//! linear algebra over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_rationals(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Renders `p/q`, or just `p` for integers.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Converts an integral rational to `i64`.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn floor_i64(q: &Rational) -> i64 {
    q.floor().numer().to_i64().expect("rational out of i64 range")
}

pub fn ceil_i64(q: &Rational) -> i64 {
    q.ceil().numer().to_i64().expect("rational out of i64 range")
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(_, &y)| y != 0)
        .map(|(x, &y)| x * BigInt::from(y))
        .sum()
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        format(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_vec_q {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(format).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Dense matrix over ℚ, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| int(x))).collect();
        QMatrix { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::zeros(n, n);
        for i in 0..n {
            inv.set(i, i, Rational::one());
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let x = a.get(col, j) / &p;
                a.set(col, j, x);
                let y = inv.get(col, j) / &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col) / &p;
                for j in col..n {
                    let x = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, x);
                }
            }
        }
        det
    }
}

/// Coefficients `c` with `Σ c_k basis[k] = target`, or `None` when the target
/// is outside the span. The basis vectors must be linearly independent.
pub fn solve_in_span(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = target.len();
    if k == 0 {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    // Augmented system: n equations, k unknowns.
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=k {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    assert_eq!(pivots.len(), k, "solve_in_span: basis is linearly dependent");
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

pub fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}
