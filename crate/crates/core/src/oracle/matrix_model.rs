//! Classical algebras as explicit matrices.
//!
//! `sl_N` for type A; for B/D the matrices `X` with `XL + LX^T = 0`, where
//! `L` has ones on the skew diagonal; for C the same with
//! `M = [[0, L], [-L, 0]]`. The Chevalley basis of the matching
//! [`RootSystem`] is realized by choosing the simple root vectors as
//! matrices and building the rest with the structure constants, so that
//! the matrix brackets reproduce the abstract ones exactly.

use num_rational::BigRational;
use num_traits::Zero;

use super::exact::ExactMatrix;
use super::roots::{BasisIndex, RootSystem};
use super::{rational, root_system, Element};
use crate::error::{Error, Result};
use crate::lie_type::LieType;

/// Small dense rational matrix, row-major. Chevalley root vectors built
/// from integer simple root vectors may have half-integral entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelMatrix {
    pub n: usize,
    pub data: Vec<BigRational>,
}

impl ModelMatrix {
    pub fn zeros(n: usize) -> Self {
        ModelMatrix { n, data: vec![BigRational::zero(); n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.data[i * n + j] = rational(1);
        m
    }

    fn lin(&self, a: i64, other: &ModelMatrix, b: i64) -> ModelMatrix {
        let (a, b) = (rational(a), rational(b));
        ModelMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(x, y)| &a * x + &b * y).collect() }
    }

    fn mul(&self, other: &ModelMatrix) -> ModelMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, other: &ModelMatrix) -> ModelMatrix {
        self.mul(other).lin(1, &other.mul(self), -1)
    }

    fn transpose(&self) -> ModelMatrix {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.get(i, j).clone();
            }
        }
        t
    }

    fn scaled(&self, c: &BigRational) -> ModelMatrix {
        ModelMatrix { n: self.n, data: self.data.iter().map(|x| c * x).collect() }
    }

    /// `c` with `self = c * other`, if any.
    fn ratio_to(&self, other: &ModelMatrix) -> Option<BigRational> {
        let k = other.data.iter().position(|v| !v.is_zero())?;
        let c = &self.data[k] / &other.data[k];
        let ok = self.data.iter().zip(&other.data).all(|(x, y)| *x == &c * y);
        ok.then_some(c)
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }
}

#[derive(Debug, Clone)]
pub struct MatrixModel {
    lie_type: LieType,
    rank: usize,
    n: usize,
    images: Vec<ModelMatrix>,
}

impl MatrixModel {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        let n = lie_type
            .matrix_size(rank)
            .ok_or_else(|| Error::Unsupported(format!("matrix model for {lie_type}")))?;
        lie_type.check_rank(rank)?;
        let rs = root_system(lie_type, rank)?;
        let simple = simple_root_matrices(lie_type, rank);
        let p = rs.n_positive();
        let mut images: Vec<Option<ModelMatrix>> = vec![None; rs.dim()];
        for (i, e) in simple.into_iter().enumerate() {
            let eh = e.bracket(&e.transpose());
            let k = eh.bracket(&e).ratio_to(&e).expect("simple root vector is an eigenvector");
            // f = c e^T with [[e, f], e] = 2e
            let f = e.transpose().scaled(&(rational(2) / k));
            let a = rs.simple_root_index(i);
            images[rs.cartan_index(i)] = Some(e.bracket(&f));
            images[a] = Some(e);
            images[a + p] = Some(f);
        }
        for xi in 0..p {
            if images[xi].is_some() {
                continue;
            }
            let (a0, b0) = extraspecial(&rs, xi);
            let n0 = rs.n(a0, b0);
            let pos = images[a0].as_ref().unwrap().bracket(images[b0].as_ref().unwrap());
            let pos = pos.scaled(&BigRational::new(1.into(), n0.into()));
            let nn = rs.n(rs.negate(a0), rs.negate(b0));
            let neg = images[a0 + p].as_ref().unwrap().bracket(images[b0 + p].as_ref().unwrap());
            let neg = neg.scaled(&BigRational::new(1.into(), nn.into()));
            images[xi] = Some(pos);
            images[xi + p] = Some(neg);
        }
        Ok(MatrixModel { lie_type, rank, n, images: images.into_iter().map(Option::unwrap).collect() })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn image(&self, b: BasisIndex) -> &ModelMatrix {
        &self.images[b]
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    /// Matrix of an element given in the Chevalley basis.
    pub fn element_matrix(&self, x: &Element) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for (b, c) in x {
            let img = self.image(*b);
            for i in 0..self.n {
                for j in 0..self.n {
                    let v = img.get(i, j);
                    if !v.is_zero() {
                        m.add_to(i, j, &(c * v));
                    }
                }
            }
        }
        m
    }

    /// Coordinates of a matrix with zero diagonal in the root-vector basis.
    /// Fails if the matrix is not in the span.
    pub fn decompose(&self, x: &ExactMatrix) -> Result<Element> {
        let rs = root_system(self.lie_type, self.rank)?;
        let mut out = Vec::new();
        for a in 0..rs.n_roots() {
            let img = self.image(a);
            let k = img.data.iter().position(|v| !v.is_zero()).expect("root vectors are nonzero");
            let (i, j) = (k / self.n, k % self.n);
            let c = x.get(i, j) / img.get(i, j);
            if !c.is_zero() {
                out.push((a, c));
            }
        }
        if self.element_matrix(&out) != *x {
            return Err(Error::InvalidArgument("matrix is not in the span of the root vectors".into()));
        }
        Ok(out)
    }

    /// The invariant form: `L` for B/D, `M` for C, none for A.
    pub fn form(&self) -> Option<ModelMatrix> {
        let n = self.n;
        match self.lie_type {
            LieType::B | LieType::D => {
                let mut l = ModelMatrix::zeros(n);
                for i in 0..n {
                    l.data[i * n + n - 1 - i] = rational(1);
                }
                Some(l)
            }
            LieType::C => {
                let half = n / 2;
                let mut m = ModelMatrix::zeros(n);
                for i in 0..n {
                    m.data[i * n + n - 1 - i] = rational(if i < half { 1 } else { -1 });
                }
                Some(m)
            }
            _ => None,
        }
    }

    /// Exact membership test: trace zero for A, `XJ + JX^T = 0` otherwise.
    pub fn contains(&self, x: &ExactMatrix) -> bool {
        if x.n_rows() != self.n || x.n_cols() != self.n {
            return false;
        }
        match self.form() {
            None => (0..self.n).fold(BigRational::zero(), |acc, i| acc + x.get(i, i)).is_zero(),
            Some(j) => {
                let j = j.to_exact();
                x.mul(&j).add(&j.mul(&x.transpose())).is_zero()
            }
        }
    }

    /// `dim g^X` from matrix brackets alone: nullity of `A -> [A, X]` on
    /// the image basis.
    pub fn centralizer_dim(&self, x: &ExactMatrix) -> usize {
        let n = self.n;
        let d = self.dim();
        let mut m = ExactMatrix::zeros(n * n, d);
        for (col, img) in self.images.iter().enumerate() {
            let br = img.to_exact().bracket(x);
            for i in 0..n {
                for j in 0..n {
                    let v = br.get(i, j);
                    if !v.is_zero() {
                        m.set(i * n + j, col, v.clone());
                    }
                }
            }
        }
        d - m.rank()
    }
}

fn extraspecial(rs: &RootSystem, xi: usize) -> (usize, usize) {
    let target = rs.root(xi);
    for a in 0..xi {
        let rest: Vec<i64> = target.iter().zip(rs.root(a)).map(|(x, y)| x - y).collect();
        if let Some(b) = rs.root_index(&rest) {
            if rs.is_positive(b) && a < b {
                return (a, b);
            }
        }
    }
    unreachable!("non-simple positive roots decompose")
}

/// Simple root vectors in the upper triangular Borel subalgebra.
fn simple_root_matrices(t: LieType, rank: usize) -> Vec<ModelMatrix> {
    let n = t.matrix_size(rank).unwrap();
    let e = |i: usize, j: usize| ModelMatrix::unit(n, i, j);
    // entry (i,j) together with its partner at the adjoint position, 0-based
    let pair = |i: usize, j: usize, sign: i64| e(i, j).lin(1, &e(n - 1 - j, n - 1 - i), sign);
    let mut out = Vec::with_capacity(rank);
    match t {
        LieType::A => {
            for i in 0..rank {
                out.push(e(i, i + 1));
            }
        }
        LieType::B => {
            for i in 0..rank {
                out.push(pair(i, i + 1, -1));
            }
        }
        LieType::C => {
            for i in 0..rank - 1 {
                out.push(pair(i, i + 1, -1));
            }
            out.push(e(rank - 1, rank));
        }
        LieType::D => {
            for i in 0..rank - 1 {
                out.push(pair(i, i + 1, -1));
            }
            out.push(pair(rank - 2, rank, -1));
        }
        _ => unreachable!(),
    }
    out
}
