//! Partitions, compositions and the shape predicates used by the
//! classification.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds the partition with `mult[j]` parts equal to `j`.
    pub fn from_multiplicities(mult: &BTreeMap<usize, usize>) -> Self {
        let mut parts = Vec::new();
        for (&size, &count) in mult.iter().rev() {
            if size > 0 {
                parts.extend(std::iter::repeat(size).take(count));
            }
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn dual(&self) -> Partition {
        dual_partition(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// An ordered list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidBlocks(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Weakly increasing up to some index, weakly decreasing after it.
pub fn is_unimodal(seq: &[usize]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

pub fn is_palindromic(seq: &[usize]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

pub fn dual_partition(p: &Partition) -> Partition {
    let first = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=first)
        .map(|k| p.parts.iter().take_while(|&&x| x >= k).count())
        .collect();
    Partition { parts }
}

/// All compositions of `total` accepted by `filter`, in lexicographic order.
pub fn enumerate_compositions<F>(total: usize, filter: F) -> Vec<Composition>
where
    F: Fn(&[usize]) -> bool,
{
    let mut out = Vec::new();
    let mut cur = Vec::new();
    if total > 0 {
        extend_compositions(total, &mut cur, &filter, &mut out);
    }
    out
}

fn extend_compositions<F>(rest: usize, cur: &mut Vec<usize>, filter: &F, out: &mut Vec<Composition>)
where
    F: Fn(&[usize]) -> bool,
{
    if rest == 0 {
        if filter(cur) {
            out.push(Composition { parts: cur.clone() });
        }
        return;
    }
    for first in 1..=rest {
        cur.push(first);
        extend_compositions(rest - first, cur, filter, out);
        cur.pop();
    }
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodal_examples() {
        assert!(is_unimodal(&[1, 2, 3, 1]));
        assert!(!is_unimodal(&[2, 1, 2]));
        assert!(is_unimodal(&[]));
        assert!(is_unimodal(&[5]));
        assert!(is_unimodal(&[2, 2, 3, 3, 1, 1]));
        assert!(!is_unimodal(&[3, 1, 1, 3]));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&[3, 4, 3]));
        assert!(!is_palindromic(&[1, 2, 3, 1]));
        assert!(is_palindromic(&[]));
    }

    #[test]
    fn duals() {
        let p = Partition::new(vec![3, 3, 3, 1, 1]).unwrap();
        assert_eq!(p.dual().parts(), &[5, 3, 3]);
        let p = Partition::new(vec![4, 4, 1, 1]).unwrap();
        assert_eq!(p.dual().parts(), &[4, 2, 2, 2]);
        let p = Partition::new(vec![6]).unwrap();
        assert_eq!(p.dual().parts(), &[1; 6]);
        assert!(Partition::new(vec![]).unwrap().dual().is_empty());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let p = Partition::from_unsorted(vec![1, 0, 3, 2]);
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(Partition::from_multiplicities(&p.multiplicities()), p);
    }

    #[test]
    fn palindromic_unimodal_listing() {
        let f = |s: &[usize]| is_unimodal(s) && is_palindromic(s);
        let two: Vec<_> = enumerate_compositions(2, f).into_iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(two, vec![vec![1, 1], vec![2]]);
        let three: Vec<_> = enumerate_compositions(3, f).into_iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(three, vec![vec![1, 1, 1], vec![3]]);
        assert_eq!(enumerate_compositions(1, f).len(), 1);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
