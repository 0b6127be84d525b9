//! Explicit Richardson elements in `g_1` for nice classical parabolics.
//!
//! Positions are chosen per rectangle `R_{i,i+1}`, the block of rows of
//! block `i` and columns of block `i+1`. Rectangle coordinates `(k, l)` put
//! `(1, 1)` in the lower left corner: `k` counts columns from the left,
//! `l` counts rows from the bottom. Orthogonal and symplectic matrices are
//! completed with the entries forced by the invariant form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::nice_blocks;
use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::oracle::exact::ExactMatrix;
use crate::oracle::rational;
use crate::parabolic::BlockSequence;

/// A chosen position inside a rectangle, with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RectEntry {
    /// Rectangle `R_{i,i+1}`, 1-based.
    pub rect: usize,
    pub k: usize,
    pub l: usize,
    pub value: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub value: i8,
}

/// `X_R` with 1-based entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichardsonMatrix {
    pub lie_type: LieType,
    pub blocks: Vec<usize>,
    pub size: usize,
    pub entries: Vec<Entry>,
    /// The chosen positions `(i, j)`, before completion, as roots
    /// `e_i - e_j` of `gl_N`.
    pub support_roots: Vec<(usize, usize)>,
}

fn push_unique(out: &mut Vec<RectEntry>, e: RectEntry) {
    if !out.iter().any(|o| o.rect == e.rect && o.k == e.k && o.l == e.l) {
        out.push(e);
    }
}

fn diagonal(out: &mut Vec<RectEntry>, rect: usize, count: usize, a_i: usize, a_next: usize) {
    for t in 1..=count.min(a_i).min(a_next) {
        push_unique(out, RectEntry { rect, k: t, l: t, value: 1 });
    }
}

/// `(a_{i+1} - t, a_i - t)` for `t < count`, from the upper right corner.
fn anti_corner(out: &mut Vec<RectEntry>, rect: usize, count: usize, a_i: usize, a_next: usize) {
    for t in 0..count.min(a_i).min(a_next) {
        push_unique(out, RectEntry { rect, k: a_next - t, l: a_i - t, value: 1 });
    }
}

fn recipe_a_rect(out: &mut Vec<RectEntry>, a: &[usize], i: usize) {
    let (ai, an) = (a[i - 1], a[i]);
    let s = ai.min(an);
    if i % 2 == 1 {
        diagonal(out, i, s, ai, an);
    } else {
        anti_corner(out, i, s, ai, an);
    }
}

pub fn choose_s1_a(blocks: &[usize]) -> Result<Vec<RectEntry>> {
    let v = crate::classify::nice_a(blocks);
    if !v.nice {
        return Err(Error::Precondition(format!("{blocks:?} is not nice ({})", v.rule)));
    }
    let mut out = Vec::new();
    for i in 1..blocks.len() {
        recipe_a_rect(&mut out, blocks, i);
    }
    Ok(out)
}

fn require_nice(lie_type: LieType, blocks: &[usize]) -> Result<BlockSequence> {
    let bs = BlockSequence::new(lie_type, blocks.to_vec())?;
    if bs.blocks() != blocks {
        return Err(Error::Precondition(format!("{blocks:?} is not in canonical D form")));
    }
    let v = nice_blocks(&bs);
    if !v.nice {
        return Err(Error::Precondition(format!("{blocks:?} is not nice in type {lie_type} ({})", v.rule)));
    }
    Ok(bs)
}

pub fn choose_s1_c(blocks: &[usize]) -> Result<Vec<RectEntry>> {
    require_nice(LieType::C, blocks)?;
    let k = blocks.len();
    let r = k / 2;
    let mut out = Vec::new();
    if k % 2 == 0 {
        for i in 1..r {
            recipe_a_rect(&mut out, blocks, i);
        }
        let a = blocks[r - 1];
        diagonal(&mut out, r, a, a, a);
    } else {
        for i in 1..=r {
            let (ai, an) = (blocks[i - 1], blocks[i]);
            let (big, small) = (ai.div_ceil(2), ai / 2);
            if i % 2 == 1 {
                diagonal(&mut out, i, big, ai, an);
                anti_corner(&mut out, i, small, ai, an);
            } else {
                diagonal(&mut out, i, small, ai, an);
                anti_corner(&mut out, i, small + 1, ai, an);
            }
        }
    }
    Ok(out)
}

pub fn choose_s1_bd(blocks: &[usize], is_b: bool) -> Result<Vec<RectEntry>> {
    let t = if is_b { LieType::B } else { LieType::D };
    require_nice(t, blocks)?;
    let k = blocks.len();
    let r = k / 2;
    let mut out = Vec::new();
    if k % 2 == 0 {
        for i in 1..r {
            recipe_a_rect(&mut out, blocks, i);
        }
        // central square: 2x2 blocks on {p, p+1}, +1 at (p, p+1); the form
        // supplies -1 at (p+1, p)
        let a = blocks[r - 1];
        for m in 0..a / 2 {
            let p = if r % 2 == 1 { 2 * m + 1 } else { a - 1 - 2 * m };
            push_unique(&mut out, RectEntry { rect: r, k: p, l: p + 1, value: 1 });
        }
    } else {
        for i in 1..=r {
            let (ai, an) = (blocks[i - 1], blocks[i]);
            let big = ai.div_ceil(2);
            let upper = if ai % 2 != an % 2 { big } else { ai / 2 + 1 };
            diagonal(&mut out, i, big, ai, an);
            anti_corner(&mut out, i, upper, ai, an);
        }
    }
    Ok(out)
}

/// Matrix position (1-based) of rectangle coordinates.
pub fn rect_to_matrix(blocks: &[usize], rect: usize, k: usize, l: usize) -> (usize, usize) {
    let row_start: usize = blocks[..rect - 1].iter().sum::<usize>() + 1;
    let col_start = row_start + blocks[rect - 1];
    (row_start + blocks[rect - 1] - l, col_start + k - 1)
}

/// Builds `X_R`, completing B/C/D choices with their adjoint entries.
pub fn build_matrix(blocks: &BlockSequence) -> Result<RichardsonMatrix> {
    let b = blocks.blocks();
    let t = blocks.lie_type();
    let chosen = match t {
        LieType::A => choose_s1_a(b)?,
        LieType::C => choose_s1_c(b)?,
        LieType::B => choose_s1_bd(b, true)?,
        LieType::D => choose_s1_bd(b, false)?,
        _ => unreachable!("block sequences are classical"),
    };
    let n = blocks.total();
    let half = n / 2;
    let mut cells: BTreeMap<(usize, usize), i8> = BTreeMap::new();
    let mut support = Vec::new();
    let put = |cells: &mut BTreeMap<(usize, usize), i8>, pos: (usize, usize), v: i8| -> Result<()> {
        match cells.insert(pos, v) {
            Some(old) if old != v => {
                Err(Error::Inconsistent(format!("conflicting values {old} and {v} at {pos:?} for {blocks}")))
            }
            _ => Ok(()),
        }
    };
    for e in &chosen {
        let (i, j) = rect_to_matrix(b, e.rect, e.k, e.l);
        support.push((i, j));
        put(&mut cells, (i, j), e.value)?;
        let adj = (n + 1 - j, n + 1 - i);
        match t {
            LieType::A => {}
            LieType::C => {
                // X M + M X^T = 0 forces X_adj = -eps_i eps_j X_ij
                let eps = |p: usize| if p <= half { 1 } else { -1 };
                put(&mut cells, adj, -eps(i) * eps(j) * e.value)?;
            }
            _ => {
                if adj != (i, j) {
                    put(&mut cells, adj, -e.value)?;
                }
            }
        }
    }
    support.sort_unstable();
    let entries = cells.into_iter().map(|((row, col), value)| Entry { row, col, value }).collect();
    Ok(RichardsonMatrix { lie_type: t, blocks: b.to_vec(), size: n, entries, support_roots: support })
}

impl RichardsonMatrix {
    pub fn to_exact(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.size, self.size);
        for e in &self.entries {
            m.set(e.row - 1, e.col - 1, rational(i64::from(e.value)));
        }
        m
    }

    /// Whether every entry lies in a rectangle `R_{i,i+1}`.
    pub fn degree_one_support(&self) -> bool {
        let bs = &self.blocks;
        let block_of = |p: usize| {
            let mut acc = 0;
            bs.iter()
                .position(|&a| {
                    acc += a;
                    p <= acc
                })
                .expect("inside the matrix")
        };
        self.entries.iter().all(|e| block_of(e.col) == block_of(e.row) + 1)
    }

    /// `gl_N` root label `a_i + .. + a_{j-1}` of position `(i, j)`.
    pub fn root_label(i: usize, j: usize) -> String {
        (i..j).map(|m| format!("a{m}")).collect::<Vec<_>>().join("+")
    }

    pub fn to_text(&self) -> String {
        let mut grid = vec![vec![0i8; self.size]; self.size];
        for e in &self.entries {
            grid[e.row - 1][e.col - 1] = e.value;
        }
        let mut s = String::new();
        for row in grid {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("row,col,value\n");
        for e in &self.entries {
            let _ = writeln!(s, "{},{},{}", e.row, e.col, e.value);
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// `rank X^j` for `j = 1, 2, ..` down to the first zero.
    pub fn power_ranks(&self) -> Vec<usize> {
        crate::oracle::matrix_power_ranks(&self.to_exact(), self.size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(t: LieType, b: &[usize]) -> RichardsonMatrix {
        build_matrix(&BlockSequence::new(t, b.to_vec()).unwrap()).unwrap()
    }

    fn positions(m: &RichardsonMatrix) -> Vec<(usize, usize, i8)> {
        m.entries.iter().map(|e| (e.row, e.col, e.value)).collect()
    }

    #[test]
    fn type_a_example() {
        let m = build(LieType::A, &[1, 2, 3, 1]);
        assert_eq!(m.support_roots, vec![(1, 2), (2, 6), (3, 5), (6, 7)]);
        let labels: Vec<String> = m.support_roots.iter().map(|&(i, j)| RichardsonMatrix::root_label(i, j)).collect();
        assert_eq!(labels, ["a1", "a2+a3+a4+a5", "a3+a4", "a6"]);
    }

    #[test]
    fn type_c_examples() {
        let m = build(LieType::C, &[3, 4, 3]);
        assert_eq!(positions(&m), vec![(1, 7, 1), (2, 5, 1), (3, 4, 1), (4, 10, 1), (6, 9, -1), (7, 8, -1)]);
        let m = build(LieType::C, &[2, 4, 4, 2]);
        assert_eq!(
            positions(&m),
            vec![(1, 4, 1), (2, 3, 1), (3, 10, 1), (4, 9, 1), (5, 8, 1), (6, 7, 1), (9, 12, -1), (10, 11, -1)]
        );
    }

    #[test]
    fn type_bd_examples() {
        let m = build(LieType::D, &[2, 3, 3, 2]);
        assert_eq!(
            positions(&m),
            vec![(1, 4, 1), (2, 3, 1), (3, 7, 1), (4, 8, -1), (7, 10, -1), (8, 9, -1)]
        );
        let m = build(LieType::B, &[3, 5, 3]);
        assert_eq!(
            positions(&m),
            vec![(1, 8, 1), (2, 5, 1), (2, 7, 1), (3, 4, 1), (4, 11, -1), (5, 10, -1), (7, 10, -1), (8, 9, -1)]
        );
        let m = build(LieType::B, &[4, 3, 4]);
        assert_eq!(
            positions(&m),
            vec![(1, 7, 1), (2, 6, 1), (3, 6, 1), (4, 5, 1), (5, 11, -1), (6, 9, -1), (6, 10, -1), (7, 8, -1)]
        );
        let m = build(LieType::D, &[1, 3, 2, 2, 3, 1]);
        assert_eq!(
            positions(&m),
            vec![
                (1, 2, 1),
                (2, 6, 1),
                (3, 5, 1),
                (5, 7, 1),
                (6, 8, -1),
                (7, 11, -1),
                (8, 10, -1),
                (11, 12, -1)
            ]
        );
    }

    #[test]
    fn refuses_non_nice() {
        assert!(build_matrix(&BlockSequence::new(LieType::A, vec![2, 1, 2]).unwrap()).is_err());
    }
}
