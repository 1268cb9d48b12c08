//! Family-generic view of the classical calculi (beta-sets for A, symbols
//! for B and D) used by the adjacency and induction layers.

use std::fmt;
use std::str::FromStr;

use crate::betasets::{self, BetaClass};
use crate::error::{Error, Result};
use crate::symbols::{self, SymbolClass, SymbolFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classical {
    A,
    B,
    D,
}

impl Classical {
    pub const ALL: [Classical; 3] = [Classical::A, Classical::B, Classical::D];

    /// Length increment between neighbouring representatives.
    pub fn step(self) -> usize {
        match self {
            Classical::A => 1,
            Classical::B | Classical::D => 2,
        }
    }

    pub fn symbol_family(self) -> Option<SymbolFamily> {
        match self {
            Classical::A => None,
            Classical::B => Some(SymbolFamily::B),
            Classical::D => Some(SymbolFamily::D),
        }
    }

    /// Smallest pattern parameter of a straight pair (2 for B/D, 3 for A).
    pub fn min_straight_p(self) -> u32 {
        match self {
            Classical::A => 3,
            Classical::B | Classical::D => 2,
        }
    }

    /// Smallest rank for which this family's calculus describes a group:
    /// `A_{r−1}` needs `r ≥ 2`, `B_r` needs `r ≥ 1`, `D_r` needs `r ≥ 2`.
    pub fn min_rank(self) -> u32 {
        match self {
            Classical::B => 1,
            Classical::A | Classical::D => 2,
        }
    }

    /// Rank of `entries` as a member of this family, if it is one.
    pub fn member_rank(self, entries: &[u32]) -> Option<u32> {
        match self.symbol_family() {
            Some(f) => symbols::symbol_rank(entries, f),
            None => betasets::beta_rank(entries),
        }
    }

    pub fn class_of(self, entries: &[u32]) -> Result<ClassicalClass> {
        match self.symbol_family() {
            Some(f) => symbols::canonicalize(entries, f).map(ClassicalClass::Symbol),
            None => betasets::canonicalize_beta(entries).map(ClassicalClass::Beta),
        }
    }

    pub fn enumerate(self, r: u32) -> Result<Vec<ClassicalClass>> {
        Ok(match self.symbol_family() {
            Some(f) => symbols::enumerate_classes(f, r)?
                .into_iter()
                .map(ClassicalClass::Symbol)
                .collect(),
            None => betasets::enumerate_beta_classes(r)?
                .into_iter()
                .map(ClassicalClass::Beta)
                .collect(),
        })
    }

    pub(crate) fn expand_entries(self, entries: &[u32], len: usize) -> Vec<u32> {
        match self {
            Classical::A => betasets::expand_entries(entries, len),
            _ => symbols::expand_entries(entries, len),
        }
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classical::A => "A",
            Classical::B => "B",
            Classical::D => "D",
        })
    }
}

impl FromStr for Classical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Classical::A),
            "B" => Ok(Classical::B),
            "D" => Ok(Classical::D),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A class of either calculus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassicalClass {
    Symbol(SymbolClass),
    Beta(BetaClass),
}

impl ClassicalClass {
    pub fn family(&self) -> Classical {
        match self {
            ClassicalClass::Symbol(s) => match s.family() {
                SymbolFamily::B => Classical::B,
                SymbolFamily::D => Classical::D,
            },
            ClassicalClass::Beta(_) => Classical::A,
        }
    }

    /// Entries of the reduced representative.
    pub fn entries(&self) -> &[u32] {
        match self {
            ClassicalClass::Symbol(s) => s.entries(),
            ClassicalClass::Beta(b) => b.entries(),
        }
    }

    pub fn rank(&self) -> u32 {
        match self {
            ClassicalClass::Symbol(s) => s.rank(),
            ClassicalClass::Beta(b) => b.rank(),
        }
    }

    pub fn a_value(&self) -> u32 {
        match self {
            ClassicalClass::Symbol(s) => s.a_value(),
            ClassicalClass::Beta(b) => b.a_value(),
        }
    }

    /// Representative of length `len`. Panics if `len` is not admissible.
    pub fn representative(&self, len: usize) -> Vec<u32> {
        let cur = self.entries().len();
        assert!(
            len >= cur && (len - cur) % self.family().step() == 0,
            "inadmissible length {len} for {self}"
        );
        self.family().expand_entries(self.entries(), len)
    }

    /// Type-D class whose every value occurs twice.
    pub fn is_degenerate(&self) -> bool {
        match self {
            ClassicalClass::Symbol(s) => s.is_degenerate().unwrap_or(false),
            ClassicalClass::Beta(_) => false,
        }
    }

    /// Partition form: the partition for type A, the pair of partitions
    /// read off the two interleaved rows for types B and D.
    pub fn partition_text(&self) -> String {
        match self {
            ClassicalClass::Beta(b) => fmt_parts(&b.to_partition()),
            ClassicalClass::Symbol(s) => {
                let e = s.entries();
                // rows: odd positions (1st, 3rd, ...) and even positions
                let rows = |start: usize| -> Vec<u32> {
                    let row: Vec<u32> = e.iter().skip(start).step_by(2).copied().collect();
                    let mut parts: Vec<u32> = row
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| x - i as u32)
                        .filter(|&p| p > 0)
                        .collect();
                    parts.reverse();
                    parts
                };
                // the type-D pair is unordered; print the even-position row first
                let (first, second) = match s.family() {
                    SymbolFamily::B => (rows(0), rows(1)),
                    SymbolFamily::D => (rows(1), rows(0)),
                };
                format!("{};{}", fmt_parts(&first), fmt_parts(&second))
            }
        }
    }
}

fn fmt_parts(p: &[u32]) -> String {
    if p.is_empty() {
        return "-".into();
    }
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ClassicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalClass::Symbol(s) => s.fmt(f),
            ClassicalClass::Beta(b) => b.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_roundtrip() {
        for f in Classical::ALL {
            assert_eq!(f.to_string().parse::<Classical>().unwrap(), f);
        }
        assert!("E".parse::<Classical>().is_err());
    }

    #[test]
    fn partition_text_forms() {
        let b = Classical::B.class_of(&[0, 1, 2]).unwrap();
        // rows (0,2) and (1): lambda = (1), mu = (1)
        assert_eq!(b.partition_text(), "1;1");
        let a = Classical::A.class_of(&[1, 3]).unwrap();
        assert_eq!(a.partition_text(), "2,1");
        let d = Classical::D.class_of(&[0, 1, 1, 2, 2, 3, 3, 4]).unwrap();
        assert_eq!(d.partition_text(), "1,1,1,1;-");
    }

    #[test]
    fn representatives() {
        let c = Classical::D.class_of(&[1, 1]).unwrap();
        assert_eq!(c.representative(4), vec![0, 0, 2, 2]);
        assert!(c.is_degenerate());
        let a = Classical::A.class_of(&[2]).unwrap();
        assert_eq!(a.representative(3), vec![0, 1, 4]);
    }
}
