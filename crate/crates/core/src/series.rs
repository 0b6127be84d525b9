//! Truncated integer power series.

use std::ops::{Add, Mul, Sub};

/// Coefficients of `q^0 .. q^len-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series(pub Vec<i64>);

impl Series {
    pub fn zero(len: usize) -> Self {
        Series(vec![0; len])
    }

    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 0 {
            s.0[0] = 1;
        }
        s
    }

    /// `q^k` truncated.
    pub fn monomial(len: usize, k: usize) -> Self {
        let mut s = Self::zero(len);
        if k < len {
            s.0[k] = 1;
        }
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiply by `1 / (1 - q^k)`, `k >= 1`.
    pub fn div_one_minus(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = self.0.clone();
        for i in k..out.len() {
            out[i] += out[i - k];
        }
        Series(out)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        Series(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        Series(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let n = self.len().min(o.len());
        let mut out = vec![0i64; n];
        for (i, &a) in self.0.iter().enumerate().take(n) {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Series(out)
    }
}
