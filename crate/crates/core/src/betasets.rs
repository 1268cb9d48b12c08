//! Beta-sets for type A.
//!
//! A beta-set is a strictly increasing sequence of nonnegative integers of
//! rank `sum − m(m−1)/2`. Prepending a `0` and shifting the rest by one
//! gives an equivalent beta-set; the reduced representative does not start
//! with `0`. Classes of rank `r` are in bijection with partitions of `r` and
//! label the special representations of `A_{r−1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::symbols::{pair_min_sum, sequences_with_sum, write_tuple};

pub fn beta_rank(entries: &[u32]) -> Option<u32> {
    if entries.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    let m = entries.len() as u64;
    let sum: u64 = entries.iter().map(|&x| x as u64).sum();
    sum.checked_sub(m * m.saturating_sub(1) / 2).map(|r| r as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<u32>,
    rank: u32,
}

impl BetaSet {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let rank = beta_rank(&entries).ok_or_else(|| Error::InvalidBetaSet(entries.clone()))?;
        Ok(BetaSet { entries, rank })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn class(&self) -> BetaClass {
        BetaClass {
            entries: reduce(&self.entries),
        }
    }
}

/// Equivalence class of beta-sets, stored reduced (no leading zero).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaClass {
    entries: Vec<u32>,
}

fn reduce(entries: &[u32]) -> Vec<u32> {
    let k = entries
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x == i as u32)
        .count();
    entries[k..].iter().map(|&x| x - k as u32).collect()
}

pub(crate) fn expand_entries(entries: &[u32], len: usize) -> Vec<u32> {
    let pad = (len - entries.len()) as u32;
    (0..pad).chain(entries.iter().map(|&x| x + pad)).collect()
}

pub fn canonicalize_beta(entries: &[u32]) -> Result<BetaClass> {
    beta_rank(entries).ok_or_else(|| Error::InvalidBetaSet(entries.to_vec()))?;
    Ok(BetaClass {
        entries: reduce(entries),
    })
}

pub fn expand_beta(class: &BetaClass, len: usize) -> Result<BetaSet> {
    class.expand(len)
}

impl BetaClass {
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> u32 {
        beta_rank(&self.entries).expect("class holds a valid beta-set")
    }

    pub fn expand(&self, len: usize) -> Result<BetaSet> {
        if len < self.entries.len() {
            return Err(Error::BadLength {
                requested: len,
                current: self.entries.len(),
                step: 1,
            });
        }
        Ok(BetaSet {
            entries: expand_entries(&self.entries, len),
            rank: self.rank(),
        })
    }

    /// Partition with parts `a_i − (i−1)`, largest first, zeros dropped.
    pub fn to_partition(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &x)| x - i as u32)
            .filter(|&p| p > 0)
            .collect();
        parts.reverse();
        parts
    }

    pub fn from_partition(parts: &[u32]) -> BetaClass {
        let mut p: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable();
        BetaClass {
            entries: p.iter().enumerate().map(|(i, &x)| x + i as u32).collect(),
        }
    }

    /// `Σ_{i<j} min(a_i, a_j)` minus the same sum over the staircase
    /// `0, 1, ..., m−1`.
    pub fn a_value(&self) -> u32 {
        a_value_of(&self.entries)
    }
}

pub(crate) fn a_value_of(entries: &[u32]) -> u32 {
    let stair: Vec<u32> = (0..entries.len() as u32).collect();
    (pair_min_sum(entries) - pair_min_sum(&stair)) as u32
}

pub fn to_partition(class: &BetaClass) -> Vec<u32> {
    class.to_partition()
}

pub fn a_value_beta(class: &BetaClass) -> u32 {
    class.a_value()
}

/// `n(λ) = Σ (i−1) λ_i` for `λ` sorted decreasingly.
pub fn partition_n(parts: &[u32]) -> u32 {
    let mut p = parts.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p.iter().enumerate().map(|(i, &x)| i as u32 * x).sum()
}

/// All classes of rank `r`, found by exhaustive search over lengths `m ≤ r`.
pub fn enumerate_beta_classes(r: u32) -> Result<Vec<BetaClass>> {
    if r < 1 {
        return Err(Error::RankTooSmall {
            family: "A".into(),
            rank: r,
            min: 1,
        });
    }
    let mut out = Vec::new();
    for m in 1..=r as usize {
        let total = r as u64 + (m * (m - 1) / 2) as u64;
        for s in sequences_with_sum(m, total, 1) {
            if s[0] != 0 {
                out.push(BetaClass { entries: s });
            }
        }
    }
    out.sort();
    Ok(out)
}

impl fmt::Display for BetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// Partitions of `n`, largest parts first, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
