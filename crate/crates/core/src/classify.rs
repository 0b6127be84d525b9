//! Closed-form niceness predicates, even-orbit counts and the generating
//! function identity.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_compositions, is_palindromic, is_unimodal, Composition, Partition};
use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::parabolic::{coloring_to_blocks, BlockSequence, ParabolicSpec};
use crate::series::Series;

/// Which clause decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "A-unimodal")]
    AUnimodal,
    #[serde(rename = "A-non-unimodal")]
    ANonUnimodal,
    #[serde(rename = "B-unimodal")]
    BUnimodal,
    #[serde(rename = "B-dip-clause")]
    BDip,
    #[serde(rename = "B-no-clause")]
    BNone,
    #[serde(rename = "C-even-count")]
    CEvenCount,
    #[serde(rename = "C-odd-twice")]
    COddTwice,
    #[serde(rename = "C-non-unimodal")]
    CNonUnimodal,
    #[serde(rename = "C-odd-repeated")]
    COddRepeated,
    #[serde(rename = "D-case-1")]
    DCase1,
    #[serde(rename = "D-case-2")]
    DCase2,
    #[serde(rename = "D-case-3")]
    DCase3,
    #[serde(rename = "D-case-4")]
    DCase4,
    #[serde(rename = "D-no-clause")]
    DNone,
    #[serde(rename = "exceptional-table")]
    ExceptionalTable,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::AUnimodal => "A-unimodal",
            Rule::ANonUnimodal => "A-non-unimodal",
            Rule::BUnimodal => "B-unimodal",
            Rule::BDip => "B-dip-clause",
            Rule::BNone => "B-no-clause",
            Rule::CEvenCount => "C-even-count",
            Rule::COddTwice => "C-odd-twice",
            Rule::CNonUnimodal => "C-non-unimodal",
            Rule::COddRepeated => "C-odd-repeated",
            Rule::DCase1 => "D-case-1",
            Rule::DCase2 => "D-case-2",
            Rule::DCase3 => "D-case-3",
            Rule::DCase4 => "D-case-4",
            Rule::DNone => "D-no-clause",
            Rule::ExceptionalTable => "exceptional-table",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NicenessVerdict {
    pub nice: bool,
    pub rule: Rule,
}

impl NicenessVerdict {
    fn new(nice: bool, rule: Rule) -> Self {
        NicenessVerdict { nice, rule }
    }
}

/// How to read the multiplicity condition on odd block lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OddReading {
    /// Every odd length that occurs, occurs exactly twice.
    #[default]
    ExactlyTwice,
    /// No odd length occurs more than twice.
    AtMostTwice,
}

impl OddReading {
    pub fn holds(self, blocks: &[usize]) -> bool {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &a in blocks {
            *counts.entry(a).or_default() += 1;
        }
        counts.iter().filter(|(a, _)| *a % 2 == 1).all(|(_, &c)| match self {
            OddReading::ExactlyTwice => c == 2,
            OddReading::AtMostTwice => c <= 2,
        })
    }
}

/// Palindromic sequence of the shape `a_1 <= .. <= a_r > b = .. = b < a_r >= .. >= a_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Dip {
    r: usize,
    a_r: usize,
    a_prev: Option<usize>,
    b: usize,
}

fn dip_shape(blocks: &[usize]) -> Option<Dip> {
    if !is_palindromic(blocks) {
        return None;
    }
    let k = blocks.len();
    let b = blocks[(k - 1) / 2];
    // first index of the central plateau
    let mut lo = (k - 1) / 2;
    while lo > 0 && blocks[lo - 1] == b {
        lo -= 1;
    }
    let r = lo;
    if r == 0 {
        return None;
    }
    let outer = &blocks[..r];
    if outer.windows(2).any(|w| w[0] > w[1]) || outer[r - 1] <= b {
        return None;
    }
    Some(Dip { r, a_r: outer[r - 1], a_prev: r.checked_sub(2).map(|i| outer[i]), b })
}

impl Dip {
    fn clause(&self) -> bool {
        self.b + 1 == self.a_r && self.a_prev.map_or(true, |p| p < self.a_r)
    }
}

pub fn nice_a(blocks: &[usize]) -> NicenessVerdict {
    if is_unimodal(blocks) {
        NicenessVerdict::new(true, Rule::AUnimodal)
    } else {
        NicenessVerdict::new(false, Rule::ANonUnimodal)
    }
}

pub fn nice_b(blocks: &[usize]) -> NicenessVerdict {
    if is_unimodal(blocks) {
        return NicenessVerdict::new(true, Rule::BUnimodal);
    }
    match dip_shape(blocks) {
        Some(d) if d.clause() => NicenessVerdict::new(true, Rule::BDip),
        _ => NicenessVerdict::new(false, Rule::BNone),
    }
}

pub fn nice_c(blocks: &[usize]) -> NicenessVerdict {
    nice_c_with(blocks, OddReading::default())
}

pub fn nice_c_with(blocks: &[usize], reading: OddReading) -> NicenessVerdict {
    if !is_unimodal(blocks) {
        NicenessVerdict::new(false, Rule::CNonUnimodal)
    } else if blocks.len() % 2 == 0 {
        NicenessVerdict::new(true, Rule::CEvenCount)
    } else if reading.holds(blocks) {
        NicenessVerdict::new(true, Rule::COddTwice)
    } else {
        NicenessVerdict::new(false, Rule::COddRepeated)
    }
}

/// Type D predicate. The sequence must be canonical (no central `1, 1`).
pub fn nice_d(blocks: &[usize]) -> Result<NicenessVerdict> {
    nice_d_with(blocks, OddReading::AtMostTwice)
}

pub fn nice_d_with(blocks: &[usize], reading: OddReading) -> Result<NicenessVerdict> {
    let k = blocks.len();
    if k % 2 == 0 && k >= 2 && blocks[k / 2 - 1] == 1 && blocks[k / 2] == 1 {
        return Err(Error::Precondition(format!("{blocks:?} is not in canonical D form")));
    }
    let odd_count = k % 2 == 1;
    let verdict = if is_unimodal(blocks) {
        if odd_count {
            Some(Rule::DCase1)
        } else {
            reading.holds(blocks).then_some(Rule::DCase2)
        }
    } else {
        match dip_shape(blocks) {
            Some(d) if d.clause() && d.a_r % 2 == 1 => {
                if odd_count {
                    Some(Rule::DCase3)
                } else {
                    reading.holds(blocks).then_some(Rule::DCase4)
                }
            }
            _ => None,
        }
    };
    Ok(match verdict {
        Some(rule) => NicenessVerdict::new(true, rule),
        None => NicenessVerdict::new(false, Rule::DNone),
    })
}

/// Dispatches a classical block sequence to its type predicate.
pub fn nice_blocks(blocks: &BlockSequence) -> NicenessVerdict {
    let b = blocks.blocks();
    match blocks.lie_type() {
        LieType::A => nice_a(b),
        LieType::B => nice_b(b),
        LieType::C => nice_c(b),
        LieType::D => nice_d(b).expect("BlockSequence is canonical for D"),
        t => unreachable!("no block sequences for {t}"),
    }
}

/// Nice colorings of the exceptional algebras as bit strings `u_1..u_n`
/// (Bourbaki numbering, `1` = crossed node), each confirmed by the oracle.
pub fn exceptional_table(lie_type: LieType) -> Option<&'static [&'static str]> {
    match lie_type {
        LieType::G2 => Some(G2_NICE),
        LieType::F4 => Some(F4_NICE),
        LieType::E6 => Some(E6_NICE),
        LieType::E7 => Some(E7_NICE),
        LieType::E8 => Some(E8_NICE),
        _ => None,
    }
}

/// The tables as commonly printed in the literature, in the same encoding.
/// G2 there lists the long simple root first, and the F4 list has `1001`
/// where the oracle finds `1000`.
pub fn printed_exceptional_table(lie_type: LieType) -> Option<&'static [&'static str]> {
    match lie_type {
        LieType::G2 => Some(&["11", "10", "00"]),
        LieType::F4 => Some(&["1111", "1101", "1100", "1001", "0101", "0100", "0001", "0000"]),
        LieType::E6 | LieType::E7 | LieType::E8 => exceptional_table(lie_type),
        _ => None,
    }
}

/// Counts stated alongside the printed tables.
pub fn printed_exceptional_count(lie_type: LieType) -> Option<usize> {
    match lie_type {
        LieType::G2 => Some(3),
        LieType::F4 => Some(8),
        LieType::E6 => Some(30),
        LieType::E7 => Some(29),
        LieType::E8 => Some(29),
        _ => None,
    }
}

const G2_NICE: &[&str] = &["11", "01", "00"];

const F4_NICE: &[&str] = &["1111", "1101", "1100", "1000", "0101", "0100", "0001", "0000"];

const E6_NICE: &[&str] = &[
    "111111", "111011", "111010", "110101", "110010", "110001", "110000", "101101", "101001", "101000", "100111",
    "100101", "100100", "100011", "100010", "100001", "100000", "011011", "011001", "010100", "010001", "010000",
    "001001", "001000", "000101", "000100", "000011", "000010", "000001", "000000",
];

const E7_NICE: &[&str] = &[
    "1111111", "1110111", "1110101", "1100101", "1100001", "1011010", "1010010", "1010000", "1001011", "1001010",
    "1001001", "1000100", "1000011", "1000010", "1000001", "1000000", "0110011", "0100000", "0010010", "0010001",
    "0010000", "0001010", "0001001", "0001000", "0000101", "0000100", "0000010", "0000001", "0000000",
];

const E8_NICE: &[&str] = &[
    "11111111", "11101111", "11101011", "10010111", "10010101", "10010011", "10010010", "10001001", "10000111",
    "10000101", "10000100", "10000011", "10000010", "10000001", "10000000", "01000001", "01000000", "00100010",
    "00010011", "00010010", "00010001", "00001001", "00001000", "00000100", "00000011", "00000010", "00000001",
    "00000000",
];

pub fn coloring_bits(coloring: &[u8]) -> String {
    coloring.iter().map(|&u| if u == 1 { '1' } else { '0' }).collect()
}

pub fn nice_exceptional(spec: &ParabolicSpec) -> Result<NicenessVerdict> {
    let table = exceptional_table(spec.lie_type())
        .ok_or_else(|| Error::Unsupported(format!("{} is not exceptional", spec.lie_type())))?;
    let bits = coloring_bits(spec.coloring());
    Ok(NicenessVerdict::new(table.contains(&bits.as_str()), Rule::ExceptionalTable))
}

pub fn is_nice(spec: &ParabolicSpec) -> NicenessVerdict {
    if spec.lie_type().is_classical() {
        nice_blocks(&coloring_to_blocks(spec).expect("classical"))
    } else {
        nice_exceptional(spec).expect("exceptional")
    }
}

/// Whether a nilpotent of `sl_N` with this Jordan type is even.
pub fn even_a(partition: &Partition) -> bool {
    let p = partition.parts();
    p.iter().all(|a| a % 2 == 0) || p.iter().all(|a| a % 2 == 1)
}

/// For a nice type-A parabolic, whether its Richardson orbit is even.
pub fn even_nilpotent_nice_a(blocks: &[usize]) -> Result<bool> {
    if !is_unimodal(blocks) {
        return Err(Error::Precondition(format!("{blocks:?} is not unimodal")));
    }
    Ok(is_palindromic(blocks))
}

/// Compositions parametrizing even nilpotent orbits of the classical
/// algebra whose natural representation has dimension `total`.
/// B and D share the orthogonal filter.
pub fn even_orbit_compositions(lie_type: LieType, total: usize) -> Result<Vec<Composition>> {
    if total == 0 {
        return Ok(Vec::new());
    }
    let base = |p: &[usize]| is_unimodal(p) && is_palindromic(p);
    let all_even = |p: &[usize]| p.iter().all(|a| a % 2 == 0);
    Ok(match lie_type {
        LieType::A => enumerate_compositions(total, base),
        LieType::C => enumerate_compositions(total, |p| base(p) && (p.len() % 2 == 0 || all_even(p))),
        LieType::B | LieType::D => enumerate_compositions(total, |p| base(p) && (p.len() % 2 == 1 || all_even(p))),
        t => return Err(Error::Unsupported(format!("even-orbit enumeration for {t}"))),
    })
}

/// Natural-representation dimension used for the even-orbit count:
/// `n+1`, `2n+1`, `2n`, `2n` for A/B/C/D of rank `n`.
pub fn natural_dimension(lie_type: LieType, rank: usize) -> Result<usize> {
    match lie_type {
        LieType::A => Ok(rank + 1),
        LieType::B => Ok(2 * rank + 1),
        LieType::C | LieType::D => Ok(2 * rank),
        t => Err(Error::Unsupported(format!("even-orbit enumeration for {t}"))),
    }
}

/// Number of even orbits with their compositions. The rank is not held to
/// the simple-type minimum, so `B1` gives `so_3`.
pub fn count_even_orbits(lie_type: LieType, rank: usize) -> Result<(usize, Vec<Composition>)> {
    let list = even_orbit_compositions(lie_type, natural_dimension(lie_type, rank)?)?;
    Ok((list.len(), list))
}

/// Coefficients of degrees `1..=max_degree` of both sides of
///
/// `sum_{j>=1} q^j (1 + q^j) / prod_{i=1..j} (1 - q^{2i})`
///   `= 1/prod_{i>=0} (1 - q^{2i+1}) + 1/prod_{i>=1} (1 - q^{2i}) - 2`.
///
/// The left side is the generating function of unimodal palindromic
/// compositions.
pub fn genfun_coefficients(max_degree: usize) -> (Vec<i64>, Vec<i64>) {
    let len = max_degree + 1;
    let mut lhs = Series::zero(len);
    for j in 1..len {
        let mut term = &Series::monomial(len, j) + &Series::monomial(len, 2 * j);
        for i in 1..=j {
            if 2 * i >= len {
                break;
            }
            term = term.div_one_minus(2 * i);
        }
        lhs = &lhs + &term;
    }
    let mut odd = Series::one(len);
    let mut even = Series::one(len);
    for k in 1..len {
        if k % 2 == 1 {
            odd = odd.div_one_minus(k);
        } else {
            even = even.div_one_minus(k);
        }
    }
    let rhs = &(&odd + &even) - &(&Series::one(len) + &Series::one(len));
    (lhs.0[1..].to_vec(), rhs.0[1..].to_vec())
}
