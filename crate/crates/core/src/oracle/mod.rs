//! Ground truth by exact linear algebra.
//!
//! Everything here is computed from a Chevalley basis (or, for classical
//! types, from explicit matrices) with exact rational arithmetic. The
//! verdict of [`is_nice_oracle`] rests on one fact: the `G_0`-orbit of `x` in
//! `g_1` is open iff `ad(x): g_0 -> g_1` is onto, and on that open orbit
//! `dim g^x` equals its minimum over `g_1`. So a single sample that passes
//! the genericity test decides niceness exactly.

pub mod exact;
pub mod matrix_model;
pub mod roots;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::parabolic::ParabolicSpec;
pub use exact::ExactMatrix;
pub use roots::{BasisIndex, RootSystem};

pub const DEFAULT_SEED: u64 = 0x5eed_2004;
pub const DEFAULT_TRIALS: usize = 5;
/// Coefficients of generic samples are drawn from `[-COEFF_BOUND, COEFF_BOUND]`
/// without zero.
pub const COEFF_BOUND: i64 = 9;

/// Shared, immutable root system for a type. Built once per process.
pub fn root_system(lie_type: LieType, rank: usize) -> Result<Arc<RootSystem>> {
    static CACHE: OnceLock<Mutex<HashMap<(LieType, usize), Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rs) = cache.lock().unwrap().get(&(lie_type, rank)) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(RootSystem::new(lie_type, rank)?);
    cache.lock().unwrap().entry((lie_type, rank)).or_insert(rs.clone());
    Ok(rs)
}

/// Sparse element of `g` in the Chevalley basis.
pub type Element = Vec<(BasisIndex, BigRational)>;

pub fn int_element(terms: &[(BasisIndex, i64)]) -> Element {
    terms.iter().filter(|t| t.1 != 0).map(|&(b, c)| (b, BigRational::from_integer(BigInt::from(c)))).collect()
}

/// `g` with the grading of a parabolic spec, basis split by degree.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    spec: ParabolicSpec,
    rs: Arc<RootSystem>,
    pieces: BTreeMap<i64, Vec<BasisIndex>>,
    slot: HashMap<BasisIndex, (i64, usize)>,
}

impl GradedAlgebra {
    pub fn new(spec: &ParabolicSpec) -> Result<Self> {
        let rs = root_system(spec.lie_type(), spec.rank())?;
        let mut pieces: BTreeMap<i64, Vec<BasisIndex>> = BTreeMap::new();
        for b in 0..rs.dim() {
            pieces.entry(rs.degree(b, spec.coloring())).or_default().push(b);
        }
        let mut slot = HashMap::new();
        for (&j, basis) in &pieces {
            for (k, &b) in basis.iter().enumerate() {
                slot.insert(b, (j, k));
            }
        }
        Ok(GradedAlgebra { spec: spec.clone(), rs, pieces, slot })
    }

    pub fn spec(&self) -> &ParabolicSpec {
        &self.spec
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn piece(&self, j: i64) -> &[BasisIndex] {
        self.pieces.get(&j).map_or(&[], |v| v.as_slice())
    }

    pub fn dim_piece(&self, j: i64) -> usize {
        self.piece(j).len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.pieces.keys().copied()
    }

    pub fn dim(&self) -> usize {
        self.rs.dim()
    }

    pub fn levi_dim(&self) -> usize {
        self.dim_piece(0)
    }

    pub fn degree_of(&self, b: BasisIndex) -> i64 {
        self.slot[&b].0
    }

    fn check_degree_one(&self, x: &Element) -> Result<()> {
        match x.iter().find(|(b, c)| !c.is_zero() && self.degree_of(*b) != 1) {
            Some((b, _)) => Err(Error::InvalidArgument(format!(
                "basis vector {b} has degree {}, not 1",
                self.degree_of(*b)
            ))),
            None => Ok(()),
        }
    }

    /// Matrix of `ad(x): g_j -> g_{j+1}` for `x` in `g_1`; columns index
    /// `g_j`, rows index `g_{j+1}`.
    pub fn ad_map(&self, x: &Element, j: i64) -> Result<ExactMatrix> {
        self.check_degree_one(x)?;
        let src = self.piece(j);
        let dst_len = self.dim_piece(j + 1);
        let mut m = ExactMatrix::zeros(dst_len, src.len());
        for (col, &b) in src.iter().enumerate() {
            for (a, c) in x {
                for (t, v) in self.rs.bracket_basis(*a, b) {
                    let row = self.slot[&t].1;
                    m.add_to(row, col, &(c * BigRational::from_integer(BigInt::from(v))));
                }
            }
        }
        Ok(m)
    }

    /// `rank(ad x: g_j -> g_{j+1})` for every degree `j` of the grading.
    pub fn rank_profile(&self, x: &Element) -> Result<BTreeMap<i64, usize>> {
        self.degrees().map(|j| Ok((j, self.ad_map(x, j)?.rank()))).collect()
    }

    /// Full matrix of `ad(x)` on `g`, for arbitrary `x`.
    pub fn ad_full(&self, x: &Element) -> ExactMatrix {
        let d = self.dim();
        let mut m = ExactMatrix::zeros(d, d);
        for b in 0..d {
            for (a, c) in x {
                for (t, v) in self.rs.bracket_basis(*a, b) {
                    m.add_to(t, b, &(c * BigRational::from_integer(BigInt::from(v))));
                }
            }
        }
        m
    }
}

/// Summary of ranks of `ad(x)` between graded pieces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub ranks: BTreeMap<i64, usize>,
    pub dims: BTreeMap<i64, usize>,
}

impl RankReport {
    pub fn compute(alg: &GradedAlgebra, x: &Element) -> Result<Self> {
        let ranks = alg.rank_profile(x)?;
        let dims = alg.degrees().map(|j| (j, alg.dim_piece(j))).collect();
        Ok(RankReport { ranks, dims })
    }

    fn dim(&self, j: i64) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    fn rank(&self, j: i64) -> usize {
        self.ranks.get(&j).copied().unwrap_or(0)
    }

    /// `g_0 -> g_1` onto: the `G_0`-orbit of `x` is open in `g_1`.
    pub fn is_generic(&self) -> bool {
        self.rank(0) == self.dim(1)
    }

    /// Onto `g_j -> g_{j+1}` for every `j >= 0`.
    pub fn surjective(&self) -> bool {
        self.dims.keys().filter(|&&j| j >= 0).all(|&j| self.rank(j) == self.dim(j + 1))
    }

    /// Onto `g_j -> g_{j+1}` for every `j > 0`.
    pub fn surjective_positive(&self) -> bool {
        self.dims.keys().filter(|&&j| j > 0).all(|&j| self.rank(j) == self.dim(j + 1))
    }

    /// One-to-one `g_{j-1} -> g_j` for every `j <= 0`.
    pub fn injective(&self) -> bool {
        self.dims.keys().filter(|&&j| j < 0).all(|&j| self.rank(j) == self.dim(j))
    }

    pub fn centralizer_dim(&self) -> usize {
        self.dims.keys().map(|&j| self.dim(j) - self.rank(j)).sum()
    }

    /// `dim m^x`.
    pub fn levi_centralizer_dim(&self) -> usize {
        self.dim(0) - self.rank(0)
    }
}

/// Exact `dim g^x` for `x` in `g_1`, computed piece by piece.
pub fn centralizer_dim_graded(alg: &GradedAlgebra, x: &Element) -> Result<usize> {
    Ok(RankReport::compute(alg, x)?.centralizer_dim())
}

/// Exact `dim g^x` for arbitrary `x`, from the full adjoint matrix.
pub fn centralizer_dim_oracle(alg: &GradedAlgebra, x: &Element) -> usize {
    let m = alg.ad_full(x);
    m.n_cols() - m.rank()
}

pub fn injectivity_check(alg: &GradedAlgebra, x: &Element) -> Result<bool> {
    Ok(RankReport::compute(alg, x)?.injective())
}

pub fn surjectivity_check(alg: &GradedAlgebra, x: &Element) -> Result<bool> {
    Ok(RankReport::compute(alg, x)?.surjective())
}

/// A sampled element of `g_1` with every root coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericElement {
    /// `(root coefficient vector, c_alpha)` over the degree-1 roots.
    pub coefficients: Vec<(Vec<i64>, i64)>,
    #[serde(skip)]
    pub element: Element,
}

pub fn sample_element(alg: &GradedAlgebra, rng: &mut ChaCha8Rng) -> GenericElement {
    let rs = alg.root_system();
    let mut coefficients = Vec::new();
    let mut terms = Vec::new();
    for &b in alg.piece(1) {
        let mut c = rng.gen_range(-COEFF_BOUND..COEFF_BOUND);
        if c >= 0 {
            c += 1;
        }
        coefficients.push((rs.root(b), c));
        terms.push((b, c));
    }
    GenericElement { coefficients, element: int_element(&terms) }
}

/// Deterministic per-spec RNG so that sweeps give the same samples no
/// matter how work is scheduled.
pub fn spec_rng(spec: &ParabolicSpec, seed: u64) -> ChaCha8Rng {
    let mut h: u64 = seed ^ 0x9e37_79b9_7f4a_7c15;
    let label = spec.to_string();
    for byte in label.bytes() {
        h = (h ^ u64::from(byte)).wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub nice: bool,
    /// Samples drawn, including non-generic ones.
    pub samples: usize,
    pub centralizer_dim: usize,
    pub levi_dim: usize,
    pub dims: BTreeMap<i64, usize>,
    pub ranks: BTreeMap<i64, usize>,
    pub witness: GenericElement,
}

pub fn is_nice_oracle(spec: &ParabolicSpec, trials: usize, seed: u64) -> Result<OracleVerdict> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let alg = GradedAlgebra::new(spec)?;
    let mut rng = spec_rng(spec, seed);
    for t in 0..trials {
        let x = sample_element(&alg, &mut rng);
        let rep = RankReport::compute(&alg, &x.element)?;
        if !rep.is_generic() {
            continue;
        }
        let dim_m = alg.levi_dim();
        let cdim = rep.centralizer_dim();
        if cdim < dim_m {
            return Err(Error::Indeterminate(format!("{spec}: dim g^x = {cdim} below dim m = {dim_m}")));
        }
        let nice = cdim == dim_m;
        if rep.surjective() != nice || rep.injective() != nice {
            return Err(Error::Indeterminate(format!(
                "{spec}: rank conditions disagree (surjective {}, injective {}, dim g^x {cdim}, dim m {dim_m})",
                rep.surjective(),
                rep.injective()
            )));
        }
        if rep.levi_centralizer_dim() != dim_m - alg.dim_piece(1) {
            return Err(Error::Indeterminate(format!("{spec}: dim m^x inconsistent with genericity")));
        }
        return Ok(OracleVerdict {
            nice,
            samples: t + 1,
            centralizer_dim: cdim,
            levi_dim: dim_m,
            dims: rep.dims,
            ranks: rep.ranks,
            witness: x,
        });
    }
    Err(Error::Indeterminate(format!("{spec}: no generic sample in {trials} trials")))
}

/// Exact ranks of `x, x^2, ...` until the power vanishes (at most `max_j`
/// powers).
pub fn matrix_power_ranks(x: &ExactMatrix, max_j: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = x.clone();
    for _ in 0..max_j {
        let r = p.rank();
        out.push(r);
        if r == 0 {
            break;
        }
        p = p.mul(x);
    }
    out
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn one() -> BigRational {
    BigRational::one()
}
