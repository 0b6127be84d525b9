//! Dense matrices over the rationals with exact rank and nullspace.
//!
//! Rank uses fraction-free (Bareiss) elimination. Rows are first scaled to
//! integers; the elimination runs in `i128` with checked arithmetic and
//! restarts over `BigInt` on the first overflow.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let c = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(n, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.set(i, j, BigRational::from_integer(BigInt::from(v)));
                }
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn set_i64(&mut self, r: usize, c: usize, v: i64) {
        self.set(r, c, BigRational::from_integer(BigInt::from(v)));
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigRational) {
        let e = &mut self.data[r * self.cols + c];
        *e += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &BigRational) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Commutator `self * other - other * self`.
    pub fn bracket(&self, other: &ExactMatrix) -> ExactMatrix {
        self.mul(other).add(&other.mul(self).scale(&-BigRational::one()))
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let rows = self.integer_rows();
        if let Some(small) = to_i128_rows(&rows) {
            if let Some(r) = bareiss_rank_i128(small, self.cols) {
                return r;
            }
        }
        bareiss_rank_big(rows, self.cols)
    }

    /// A basis of `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a.get(r, c).recip();
            for k in c..a.cols {
                let v = a.get(r, k) * &inv;
                a.set(r, k, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for k in c..a.cols {
                    let v = a.get(i, k) - &f * a.get(r, k);
                    a.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
            if r == a.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); a.cols];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).fold(BigRational::zero(), |acc, c| acc + self.get(r, c) * &v[c]))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }
}

fn to_i128_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter().map(|r| r.iter().map(|x| x.to_i128()).collect()).collect()
}

fn bareiss_rank_i128(mut a: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let n = a.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(p, r);
        let piv = a[r][c];
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c];
            for k in c + 1..cols {
                let x = piv.checked_mul(row[k])?.checked_sub(lead.checked_mul(prow[k])?)?;
                row[k] = x / prev;
            }
            row[c] = 0;
        }
        prev = piv;
        r += 1;
        if r == n {
            break;
        }
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let piv = &prow[c];
        let unit = prev.is_one();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for k in c + 1..cols {
                let mut x = piv * &row[k];
                if !lead.is_zero() && !prow[k].is_zero() {
                    x -= &lead * &prow[k];
                }
                row[k] = if unit { x } else { x / &prev };
            }
        }
        prev = prow[c].clone();
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_small() {
        let m = ExactMatrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(ExactMatrix::identity(5).rank(), 5);
        assert_eq!(ExactMatrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let mut m = ExactMatrix::zeros(2, 2);
        m.set(0, 0, q(1, 2));
        m.set(0, 1, q(1, 3));
        m.set(1, 0, q(3, 1));
        m.set(1, 1, q(2, 1));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn big_path_agrees_with_small_path() {
        // Hilbert-like integer matrix whose minors overflow i128.
        let n = 24;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i * 7 + j * 13) % 17) as i64 * 1_000_003 + (i * j) as i64).collect())
            .collect();
        let m = ExactMatrix::from_i64_rows(&rows);
        let big = bareiss_rank_big(m.integer_rows(), n);
        assert_eq!(m.rank(), big);
    }

    #[test]
    fn nullspace_dimension() {
        let m = ExactMatrix::from_i64_rows(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 0, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 4 - m.rank());
        for v in &ns {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn products() {
        let a = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]);
        assert!(a.mul(&a).is_zero());
        let b = a.transpose();
        let h = a.bracket(&b);
        assert_eq!(h, ExactMatrix::from_i64_rows(&[vec![1, 0], vec![0, -1]]));
    }
}
