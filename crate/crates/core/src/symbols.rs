//! Symbols for types B (`eps = 1`) and D (`eps = 0`).
//!
//! A symbol of length `M` is a weakly increasing sequence of nonnegative
//! integers in which no value occurs three times, with `M ≡ eps (mod 2)`.
//! Its rank is `sum − m(m + eps − 1)` where `M = 2m + eps`. Two symbols are
//! equivalent when one is obtained from the other by prepending `0, 0` and
//! adding one to every old entry; each class has a unique reduced
//! representative that does not start with two zeros.

use std::fmt;

use crate::error::{Error, Result};

/// Which of the two symbol calculi a symbol belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolFamily {
    /// `eps = 1`
    B,
    /// `eps = 0`
    D,
}

impl SymbolFamily {
    pub fn eps(self) -> u32 {
        match self {
            SymbolFamily::B => 1,
            SymbolFamily::D => 0,
        }
    }

    pub fn from_eps(eps: u32) -> Result<Self> {
        match eps {
            1 => Ok(SymbolFamily::B),
            0 => Ok(SymbolFamily::D),
            other => Err(Error::Parse(format!("eps must be 0 or 1, got {other}"))),
        }
    }

    /// Shortest admissible length.
    pub fn min_len(self) -> usize {
        match self {
            SymbolFamily::B => 1,
            SymbolFamily::D => 2,
        }
    }

    /// `m(m + eps − 1)` for `M = 2m + eps`: the entry sum of the rank-0 symbol.
    fn base_sum(self, len: usize) -> Option<u64> {
        let eps = self.eps() as usize;
        if len < self.min_len() || len % 2 != eps {
            return None;
        }
        let m = ((len - eps) / 2) as u64;
        Some(m * (m + eps as u64) - m)
    }
}

/// Rank of `entries` as a symbol of the given family, or `None` when the
/// sequence is not a symbol.
pub fn symbol_rank(entries: &[u32], family: SymbolFamily) -> Option<u32> {
    let base = family.base_sum(entries.len())?;
    if entries.windows(2).any(|w| w[0] > w[1]) || entries.windows(3).any(|w| w[0] == w[2]) {
        return None;
    }
    let sum: u64 = entries.iter().map(|&x| x as u64).sum();
    sum.checked_sub(base).map(|r| r as u32)
}

/// True iff `entries` is a symbol of rank `r` for its length.
pub fn validate_symbol(entries: &[u32], eps: u32, r: u32) -> bool {
    SymbolFamily::from_eps(eps)
        .ok()
        .and_then(|fam| symbol_rank(entries, fam))
        == Some(r)
}

/// `Σ_{i<j} min(s_i, s_j)` for a weakly increasing sequence.
pub(crate) fn pair_min_sum(sorted: &[u32]) -> u64 {
    let n = sorted.len();
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| x as u64 * (n - 1 - i) as u64)
        .sum()
}

/// A concrete symbol (any representative of its class).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    family: SymbolFamily,
    entries: Vec<u32>,
    rank: u32,
}

impl Symbol {
    pub fn new(family: SymbolFamily, entries: Vec<u32>) -> Result<Self> {
        let rank = symbol_rank(&entries, family).ok_or_else(|| Error::InvalidSymbol(entries.clone()))?;
        Ok(Symbol {
            family,
            entries,
            rank,
        })
    }

    pub fn family(&self) -> SymbolFamily {
        self.family
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn class(&self) -> SymbolClass {
        SymbolClass {
            family: self.family,
            entries: reduce(&self.entries, self.family),
        }
    }
}

/// An equivalence class of symbols, stored as its reduced representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolClass {
    family: SymbolFamily,
    entries: Vec<u32>,
}

fn reduce(entries: &[u32], family: SymbolFamily) -> Vec<u32> {
    // strip the longest prefix 0,0,1,1,...,k-1,k-1 that leaves a valid length
    let mut k = 0usize;
    while entries.len() >= family.min_len() + 2 * (k + 1)
        && entries[2 * k] == k as u32
        && entries[2 * k + 1] == k as u32
    {
        k += 1;
    }
    entries[2 * k..].iter().map(|&x| x - k as u32).collect()
}

/// Reduces a symbol to the canonical representative of its class.
pub fn canonicalize(entries: &[u32], family: SymbolFamily) -> Result<SymbolClass> {
    symbol_rank(entries, family).ok_or_else(|| Error::InvalidSymbol(entries.to_vec()))?;
    Ok(SymbolClass {
        family,
        entries: reduce(entries, family),
    })
}

/// Prepends zero pairs (shifting the rest) until the length is `len`.
pub(crate) fn expand_entries(entries: &[u32], len: usize) -> Vec<u32> {
    debug_assert!(len >= entries.len() && (len - entries.len()) % 2 == 0);
    let pairs = ((len - entries.len()) / 2) as u32;
    let mut out = Vec::with_capacity(len);
    for v in 0..pairs {
        out.push(v);
        out.push(v);
    }
    out.extend(entries.iter().map(|&x| x + pairs));
    out
}

impl SymbolClass {
    pub fn family(&self) -> SymbolFamily {
        self.family
    }

    /// Entries of the reduced representative.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> u32 {
        symbol_rank(&self.entries, self.family).expect("class holds a valid symbol")
    }

    /// The representative of length `len`.
    pub fn expand(&self, len: usize) -> Result<Symbol> {
        let cur = self.entries.len();
        if len < cur || (len - cur) % 2 != 0 {
            return Err(Error::BadLength {
                requested: len,
                current: cur,
                step: 2,
            });
        }
        Ok(Symbol {
            family: self.family,
            entries: expand_entries(&self.entries, len),
            rank: self.rank(),
        })
    }

    /// `a = Σ_{i<j} min(a_i, a_j) − Σ_{i<j} min(b_i, b_j)` where `b` is the
    /// rank-0 symbol of the same length. Independent of the representative.
    pub fn a_value(&self) -> u32 {
        a_value_of(&self.entries, self.family)
    }

    /// Every value occurs exactly twice (`a1 = a2 < a3 = a4 < ...`). Only
    /// meaningful for type D, where such a class splits into two
    /// representations.
    pub fn is_degenerate(&self) -> Result<bool> {
        if self.family != SymbolFamily::D {
            return Err(Error::WrongFamily(
                "degeneracy is only defined for eps = 0".into(),
            ));
        }
        Ok(is_degenerate_entries(&self.entries))
    }
}

pub(crate) fn is_degenerate_entries(entries: &[u32]) -> bool {
    entries.len() % 2 == 0 && entries.chunks(2).all(|c| c[0] == c[1])
}

pub(crate) fn a_value_of(entries: &[u32], family: SymbolFamily) -> u32 {
    let len = entries.len();
    let base = expand_entries(
        match family {
            SymbolFamily::B => &[0],
            SymbolFamily::D => &[0, 0],
        },
        len,
    );
    (pair_min_sum(entries) - pair_min_sum(&base)) as u32
}

pub fn a_value(class: &SymbolClass) -> u32 {
    class.a_value()
}

pub fn is_degenerate(class: &SymbolClass) -> Result<bool> {
    class.is_degenerate()
}

pub fn expand(class: &SymbolClass, len: usize) -> Result<Symbol> {
    class.expand(len)
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Parses `"(0,1,1,2,2)"`; parentheses are optional, whitespace ignored.
pub fn parse_entries(text: &str) -> Result<Vec<u32>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad entry {x:?} in {text:?}")))
        })
        .collect()
}

/// Lower bound (attained) on the sum of `left` further entries when the
/// next entry is at least `v` and `v` may still be used `avail` more times.
fn min_fill(v: u32, avail: usize, left: usize, max_mult: usize) -> u64 {
    let mut sum = 0u64;
    let mut need = left;
    let take = need.min(avail);
    sum += v as u64 * take as u64;
    need -= take;
    let mut next = v + 1;
    while need > 0 {
        let take = need.min(max_mult);
        sum += next as u64 * take as u64;
        need -= take;
        next += 1;
    }
    sum
}

/// All weakly increasing sequences of length `len` with entry sum `total`
/// and no value repeated more than `max_mult` times, in lexicographic order.
pub(crate) fn sequences_with_sum(len: usize, total: u64, max_mult: usize) -> Vec<Vec<u32>> {
    fn rec(
        prefix: &mut Vec<u32>,
        remaining: u64,
        len: usize,
        max_mult: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        let left = len - prefix.len();
        if left == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        let mut v = lo;
        loop {
            let used = prefix.iter().rev().take_while(|&&x| x == v).count();
            let avail = max_mult.saturating_sub(used);
            if avail > 0 {
                if min_fill(v, avail, left, max_mult) > remaining {
                    break;
                }
                prefix.push(v);
                rec(prefix, remaining - v as u64, len, max_mult, out);
                prefix.pop();
            } else if min_fill(v + 1, max_mult, left, max_mult) > remaining {
                break;
            }
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(len), total, len, max_mult, &mut out);
    out
}

/// Longest length searched when enumerating reduced classes of rank `r`.
pub fn enumeration_bound(family: SymbolFamily, r: u32) -> usize {
    2 * r as usize + 2 - family.eps() as usize
}

/// All classes of rank `r`, sorted by their reduced representatives.
pub fn enumerate_classes(family: SymbolFamily, r: u32) -> Result<Vec<SymbolClass>> {
    if r < 1 {
        return Err(Error::RankTooSmall {
            family: format!("{family:?}"),
            rank: r,
            min: 1,
        });
    }
    enumerate_up_to(family, r, enumeration_bound(family, r))
}

pub(crate) fn enumerate_up_to(family: SymbolFamily, r: u32, max_len: usize) -> Result<Vec<SymbolClass>> {
    let mut out = Vec::new();
    let mut len = family.min_len();
    while len <= max_len {
        let total = r as u64 + family.base_sum(len).expect("admissible length");
        for s in sequences_with_sum(len, total, 2) {
            if s.len() >= 2 && s[0] == 0 && s[1] == 0 {
                continue;
            }
            out.push(SymbolClass { family, entries: s });
        }
        len += 2;
    }
    out.sort();
    Ok(out)
}

/// Symbol class attached to a pair of partitions `(lambda; mu)` of total
/// size `rank`: both are padded with zeros (lambda one longer for type B),
/// turned into beta-sets with increasing index, merged and reduced.
pub fn pair_partitions_to_symbol(
    lambda: &[u32],
    mu: &[u32],
    family: SymbolFamily,
    rank: u32,
) -> Result<SymbolClass> {
    let (sl, sm): (u32, u32) = (lambda.iter().sum(), mu.iter().sum());
    if sl + sm != rank {
        return Err(Error::SizeMismatch(sl, sm, rank));
    }
    let ell = lambda.len().max(mu.len());
    let beta = |parts: &[u32], len: usize| -> Vec<u32> {
        let mut p: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable();
        let mut padded = vec![0; len - p.len()];
        padded.extend(p);
        padded
            .iter()
            .enumerate()
            .map(|(i, &x)| x + i as u32)
            .collect()
    };
    let mut merged = beta(lambda, ell + family.eps() as usize);
    merged.extend(beta(mu, ell));
    merged.sort_unstable();
    if family == SymbolFamily::D && merged.is_empty() {
        merged = vec![0, 0];
    }
    canonicalize(&merged, family)
}
