use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple complex Lie algebra families. Classical families carry their rank
/// separately; the exceptional ones have it fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl LieType {
    pub const ALL: [LieType; 9] = [
        LieType::A,
        LieType::B,
        LieType::C,
        LieType::D,
        LieType::E6,
        LieType::E7,
        LieType::E8,
        LieType::F4,
        LieType::G2,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, LieType::A | LieType::B | LieType::C | LieType::D)
    }

    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            LieType::E6 => Some(6),
            LieType::E7 => Some(7),
            LieType::E8 => Some(8),
            LieType::F4 => Some(4),
            LieType::G2 => Some(2),
            _ => None,
        }
    }

    /// Smallest rank for which the family gives a simple algebra not listed
    /// under another name.
    pub fn min_rank(self) -> usize {
        match self {
            LieType::A => 1,
            LieType::B => 2,
            LieType::C => 3,
            LieType::D => 4,
            t => t.fixed_rank().unwrap(),
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        match self.fixed_rank() {
            Some(r) if r != rank => Err(Error::InvalidSpec(format!("{self} has rank {r}, not {rank}"))),
            _ if rank < self.min_rank() => {
                Err(Error::InvalidSpec(format!("{self} needs rank at least {}", self.min_rank())))
            }
            _ => Ok(()),
        }
    }

    /// Size of the defining matrices for classical types.
    pub fn matrix_size(self, rank: usize) -> Option<usize> {
        match self {
            LieType::A => Some(rank + 1),
            LieType::B => Some(2 * rank + 1),
            LieType::C | LieType::D => Some(2 * rank),
            _ => None,
        }
    }

    pub fn dimension(self, rank: usize) -> usize {
        let n = rank;
        match self {
            LieType::A => (n + 1) * (n + 1) - 1,
            LieType::B | LieType::C => n * (2 * n + 1),
            LieType::D => n * (2 * n - 1),
            LieType::E6 => 78,
            LieType::E7 => 133,
            LieType::E8 => 248,
            LieType::F4 => 52,
            LieType::G2 => 14,
        }
    }

    /// Name with rank, e.g. `C5` or `E7`.
    pub fn label(self, rank: usize) -> String {
        match self.fixed_rank() {
            Some(_) => self.to_string(),
            None => format!("{self}{rank}"),
        }
    }

    /// Parses a label like `A6` or `F4` into type and rank.
    pub fn parse_label(s: &str) -> Result<(LieType, usize)> {
        let err = |msg: String| Error::Parse { pos: 0, msg };
        let s = s.trim();
        if let Ok(t) = s.parse::<LieType>() {
            if let Some(r) = t.fixed_rank() {
                return Ok((t, r));
            }
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(|| err("empty type label".into()))?;
        let t: LieType = head.to_string().parse()?;
        if !t.is_classical() {
            return Err(err(format!("unknown type label {s:?}")));
        }
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse { pos: 1, msg: format!("bad rank in {s:?}") })?;
        t.check_rank(rank)?;
        Ok((t, rank))
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
            LieType::E6 => "E6",
            LieType::E7 => "E7",
            LieType::E8 => "E8",
            LieType::F4 => "F4",
            LieType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LieType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown type {s:?}") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(LieType::parse_label("C5").unwrap(), (LieType::C, 5));
        assert_eq!(LieType::parse_label("e7").unwrap(), (LieType::E7, 7));
        assert_eq!(LieType::parse_label("G2").unwrap(), (LieType::G2, 2));
        assert!(LieType::parse_label("D3").is_err());
        assert!(LieType::parse_label("B1").is_err());
        assert!(LieType::parse_label("X4").is_err());
        assert_eq!(LieType::D.label(5), "D5");
    }
}
