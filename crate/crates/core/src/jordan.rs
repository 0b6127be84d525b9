//! Jordan form of a generic element of `g_1` and centralizer dimensions,
//! from the block sequence alone.
//!
//! Block indices in the rank formulas are 1-based. For an even count the
//! sequence is `n_1..n_{2r}` with the halves meeting between `r` and `r+1`;
//! for an odd count it is `n_1..n_{2r+1}` with middle `r+1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::parabolic::{levi_dim, BlockSequence};

fn window_min(n: &[usize], from: usize, to: usize) -> usize {
    n[from - 1..to].iter().copied().min().expect("non-empty window")
}

fn round_down_even(v: usize) -> usize {
    v - v % 2
}

/// `rank x^j` for generic `x` in `g_1` of the `gl` parabolic: the sum of
/// minima over windows of `j+1` consecutive blocks.
pub fn generic_ranks_a(blocks: &[usize], j: usize) -> usize {
    let k = blocks.len();
    if j == 0 {
        return blocks.iter().sum();
    }
    if j >= k {
        return 0;
    }
    (1..=k - j).map(|i| window_min(blocks, i, i + j)).sum()
}

/// `rank x^j` in `sp_{2n}`. An even number of blocks behaves as in type A.
pub fn generic_ranks_c(blocks: &[usize], j: usize) -> usize {
    let k = blocks.len();
    if k % 2 == 0 || j == 0 {
        return generic_ranks_a(blocks, j);
    }
    if j >= k {
        return 0;
    }
    let r = k / 2;
    (1..=k - j)
        .map(|i| {
            let s = window_min(blocks, i, i + j);
            if i + j <= r + 1 || i >= r + 1 {
                return s;
            }
            let u = (r + 1 - i).min(i + j - r - 1);
            let v = window_min(blocks, r + 1 - u, r + 1 + u);
            s.min(round_down_even(v))
        })
        .sum()
}

/// `rank x^j` in `so_{2n+1}` or `so_{2n}`. An odd number of blocks behaves
/// as in type A.
pub fn generic_ranks_bd(blocks: &[usize], j: usize) -> usize {
    let k = blocks.len();
    if k % 2 == 1 || j == 0 {
        return generic_ranks_a(blocks, j);
    }
    if j >= k {
        return 0;
    }
    let r = k / 2;
    (1..=k - j)
        .map(|i| {
            let s = window_min(blocks, i, i + j);
            if i + j <= r || i >= r + 1 {
                return s;
            }
            let u = (r + 1 - i).min(i + j - r);
            let v = window_min(blocks, r + 1 - u, r + u);
            s.min(round_down_even(v))
        })
        .sum()
}

pub fn generic_rank(blocks: &BlockSequence, j: usize) -> usize {
    let b = blocks.blocks();
    match blocks.lie_type() {
        LieType::A => generic_ranks_a(b, j),
        LieType::C => generic_ranks_c(b, j),
        _ => generic_ranks_bd(b, j),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanForm {
    /// Jordan block size to number of blocks of that size.
    pub multiplicities: BTreeMap<usize, usize>,
    /// `rank x^j` for `j = 1, 2, ..` down to the first zero.
    pub ranks: Vec<usize>,
}

impl JordanForm {
    pub fn from_ranks(size: usize, ranks: &[usize]) -> Result<Self> {
        // kernel dimensions k_0 = 0, k_1, .., padded with N
        let mut kernel = vec![0i64];
        kernel.extend(ranks.iter().map(|&r| size as i64 - r as i64));
        kernel.push(size as i64);
        let mut multiplicities = BTreeMap::new();
        for j in 1..kernel.len() - 1 {
            let a = 2 * kernel[j] - kernel[j - 1] - kernel[j + 1];
            if a < 0 {
                return Err(Error::Inconsistent(format!("negative count of size-{j} blocks from ranks {ranks:?}")));
            }
            if a > 0 {
                multiplicities.insert(j, a as usize);
            }
        }
        let form = JordanForm { multiplicities, ranks: ranks.to_vec() };
        if form.size() != size {
            return Err(Error::Inconsistent(format!("ranks {ranks:?} do not describe a nilpotent of size {size}")));
        }
        Ok(form)
    }

    pub fn partition(&self) -> Partition {
        Partition::from_multiplicities(&self.multiplicities)
    }

    pub fn size(&self) -> usize {
        self.multiplicities.iter().map(|(j, a)| j * a).sum()
    }
}

/// Jordan form of a generic element of `g_1`.
pub fn jordan_form(blocks: &BlockSequence) -> Result<JordanForm> {
    let mut ranks = Vec::new();
    for j in 1.. {
        let r = generic_rank(blocks, j);
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    JordanForm::from_ranks(blocks.total(), &ranks)
}

fn check_parity(partition: &Partition, lie_type: LieType) -> Result<()> {
    let bad_parity = match lie_type {
        LieType::C => 1,
        LieType::B | LieType::D => 0,
        _ => return Ok(()),
    };
    for (part, mult) in partition.multiplicities() {
        if part % 2 == bad_parity && mult % 2 == 1 {
            return Err(Error::InvalidPartition(format!(
                "{partition} has an odd number of parts equal to {part}, impossible in type {lie_type}"
            )));
        }
    }
    Ok(())
}

/// Dimension of the centralizer of a nilpotent with the given Jordan type.
/// Type A returns the centralizer in `gl_N`.
pub fn centralizer_dim(partition: &Partition, lie_type: LieType) -> Result<usize> {
    if !lie_type.is_classical() {
        return Err(Error::Unsupported(format!("partition centralizers for {lie_type}")));
    }
    check_parity(partition, lie_type)?;
    let squares: usize = partition.dual().parts().iter().map(|m| m * m).sum();
    let odd = partition.parts().iter().filter(|&&p| p % 2 == 1).count();
    Ok(match lie_type {
        LieType::A => squares,
        LieType::C => (squares + odd) / 2,
        _ => (squares - odd) / 2,
    })
}

/// Both sides of the Richardson criterion `dim g^x = dim m`, on the same
/// footing (`sl` for type A).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub partition: Partition,
    pub dual: Partition,
    pub centralizer_dim: usize,
    pub levi_dim: usize,
}

impl DimensionReport {
    pub fn nice(&self) -> bool {
        self.centralizer_dim == self.levi_dim
    }
}

pub fn dimension_report(blocks: &BlockSequence) -> Result<DimensionReport> {
    let partition = jordan_form(blocks)?.partition();
    let t = blocks.lie_type();
    let mut c = centralizer_dim(&partition, t)?;
    if t == LieType::A {
        c -= 1;
    }
    Ok(DimensionReport { dual: partition.dual(), partition, centralizer_dim: c, levi_dim: levi_dim(blocks) })
}

pub fn nice_via_dimension(blocks: &BlockSequence) -> Result<bool> {
    dimension_report(blocks).map(|r| r.nice())
}
