//! Adjacent pairs of special representations.
//!
//! Two classes of the same rank are adjacent when, at a common length,
//! their representatives differ by one of two patterns: a *straight* pair
//! `(a, a+p)` / `(a+1, a+p−1)` at two neighbouring positions, or a *wavy*
//! pair where a whole segment differs. Edges are oriented by a-value: `lo`
//! has the larger a-value and is the smaller element of the order.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::classical::{Classical, ClassicalClass};
use crate::coxeter::CoxeterLabel;
use crate::error::{Error, Result};
use crate::exceptional;
use crate::rep::{SpecialRep, SplitCopy};
use crate::symbols::{pair_partitions_to_symbol, SymbolFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Straight(u32),
    Wavy(u32),
    Tabulated,
}

impl EdgeKind {
    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::Straight(_) => "straight",
            EdgeKind::Wavy(_) => "wavy",
            EdgeKind::Tabulated => "tabulated",
        }
    }

    pub fn p(self) -> Option<u32> {
        match self {
            EdgeKind::Straight(p) | EdgeKind::Wavy(p) => Some(p),
            EdgeKind::Tabulated => None,
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p() {
            Some(p) => write!(f, "{}({p})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Larger a-value.
    pub lo: SpecialRep,
    /// Smaller a-value.
    pub hi: SpecialRep,
    pub kind: EdgeKind,
    pub a_diff: u32,
    pub wprime: CoxeterLabel,
    /// Set on table edges whose data are known to violate `a_diff + 1 = h(W')`.
    pub anomaly: Option<String>,
}

impl Edge {
    /// `a_diff + 1` equals the Coxeter number of the label.
    pub fn label_law_holds(&self) -> bool {
        self.a_diff + 1 == self.wprime.coxeter_number()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lo": self.lo.to_string(),
            "hi": self.hi.to_string(),
            "kind": self.kind.name(),
            "p": self.kind.p(),
            "a_diff": self.a_diff,
            "wprime": self.wprime.display_name(),
            "anomaly": self.anomaly,
        })
    }
}

/// Straight pattern: equal except at positions `k, k+1` where `a` shows
/// `(x, x+p)` and `b` shows `(x+1, x+p−1)`.
pub fn match_straight(a: &[u32], b: &[u32], family: Classical) -> Result<Option<u32>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let diffs: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    let &[k, k1] = diffs.as_slice() else {
        return Ok(None);
    };
    if k1 != k + 1 || a[k1] < a[k] {
        return Ok(None);
    }
    let (x, p) = (a[k], a[k1] - a[k]);
    let ok = p >= family.min_straight_p() && b[k] == x + 1 && b[k1] + 1 == x + p;
    Ok(ok.then_some(p))
}

/// The two segments of a wavy pair with parameter `p` starting at `x`.
fn wavy_segments(x: u32, p: u32, family: Classical) -> (Vec<u32>, Vec<u32>) {
    match family {
        Classical::A => {
            let mut first = vec![x];
            first.extend(x + 2..=x + p - 2);
            first.push(x + p);
            (first, (x + 1..=x + p - 1).collect())
        }
        Classical::B | Classical::D => {
            let mut first = vec![x, x + 1];
            for v in x + 2..=x + p - 2 {
                first.extend([v, v]);
            }
            first.extend([x + p - 1, x + p]);
            let second = (x + 1..=x + p - 1).flat_map(|v| [v, v]).collect();
            (first, second)
        }
    }
}

/// Wavy pattern: equal outside one segment, where `a` and `b` show the two
/// wavy segments (length `2p−2` for B/D, `p−1` for A).
pub fn match_wavy(a: &[u32], b: &[u32], family: Classical) -> Result<Option<u32>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let Some(k) = (0..a.len()).find(|&i| a[i] != b[i]) else {
        return Ok(None);
    };
    let l = (0..a.len()).rev().find(|&i| a[i] != b[i]).unwrap();
    let seg = (l - k + 1) as u32;
    let p = match family {
        Classical::A => seg + 1,
        Classical::B | Classical::D => {
            if seg % 2 != 0 {
                return Ok(None);
            }
            (seg + 2) / 2
        }
    };
    if p < family.min_straight_p() + 1 {
        return Ok(None);
    }
    let (first, second) = wavy_segments(a[k], p, family);
    Ok((a[k..=l] == first[..] && b[k..=l] == second[..]).then_some(p))
}

/// Pattern shown by `(a, b)` in this orientation (`a` carries the `a_*` side).
pub fn pattern(a: &[u32], b: &[u32], family: Classical) -> Result<Option<EdgeKind>> {
    if let Some(p) = match_straight(a, b, family)? {
        return Ok(Some(EdgeKind::Straight(p)));
    }
    Ok(match_wavy(a, b, family)?.map(EdgeKind::Wavy))
}

/// Representatives of both classes at their smallest common length.
pub fn common_representatives(x: &ClassicalClass, y: &ClassicalClass) -> (Vec<u32>, Vec<u32>) {
    let len = x.entries().len().max(y.entries().len());
    (x.representative(len), y.representative(len))
}

fn check_same(x: &ClassicalClass, y: &ClassicalClass) -> Result<()> {
    if x.family() != y.family() {
        return Err(Error::WrongFamily(format!(
            "{x} is of type {} but {y} is of type {}",
            x.family(),
            y.family()
        )));
    }
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch {
            what: y.to_string(),
            found: y.rank(),
            expected: x.rank(),
        });
    }
    Ok(())
}

/// Pattern shown by the classes `(x, y)` with `x` on the `a_*` side.
pub fn oriented_pattern(x: &ClassicalClass, y: &ClassicalClass) -> Result<Option<EdgeKind>> {
    check_same(x, y)?;
    let (a, b) = common_representatives(x, y);
    pattern(&a, &b, x.family())
}

/// Adjacency test for two classes of the same family and rank, in either
/// orientation.
pub fn classify_pair(x: &ClassicalClass, y: &ClassicalClass) -> Result<Option<EdgeKind>> {
    check_same(x, y)?;
    if x == y {
        return Ok(None);
    }
    let (a, b) = common_representatives(x, y);
    let fam = x.family();
    match pattern(&a, &b, fam)? {
        Some(k) => Ok(Some(k)),
        None => pattern(&b, &a, fam),
    }
}

/// An adjacent pair of classes, oriented by a-value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassEdge {
    pub lo: ClassicalClass,
    pub hi: ClassicalClass,
    pub kind: EdgeKind,
    pub a_diff: u32,
}

/// All adjacent class pairs of the given family and rank.
pub fn class_edges(family: Classical, r: u32) -> Result<Vec<ClassEdge>> {
    let classes = family.enumerate(r)?;
    let a: Vec<u32> = classes.iter().map(|c| c.a_value()).collect();
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let Some(kind) = classify_pair(&classes[i], &classes[j])? else {
                continue;
            };
            let (lo, hi) = match a[i].cmp(&a[j]) {
                std::cmp::Ordering::Greater => (i, j),
                std::cmp::Ordering::Less => (j, i),
                std::cmp::Ordering::Equal => {
                    return Err(Error::Cycle(format!(
                        "adjacent classes {} and {} share a-value {}",
                        classes[i], classes[j], a[i]
                    )))
                }
            };
            out.push(ClassEdge {
                lo: classes[lo].clone(),
                hi: classes[hi].clone(),
                kind,
                a_diff: a[lo] - a[hi],
            });
        }
    }
    out.sort();
    Ok(out)
}

/// The classical family and calculus rank describing a classical label.
pub fn classical_family(label: CoxeterLabel) -> Option<(Classical, u32)> {
    match label {
        CoxeterLabel::A(n) => Some((Classical::A, n + 1)),
        CoxeterLabel::B(n) => Some((Classical::B, n)),
        CoxeterLabel::D(n) => Some((Classical::D, n)),
        _ => None,
    }
}

/// `W'` label of an adjacent classical pair with the given a-gap.
pub fn classical_wprime(
    label: CoxeterLabel,
    lo: &ClassicalClass,
    hi: &ClassicalClass,
    a_diff: u32,
) -> Result<CoxeterLabel> {
    let h = a_diff + 1;
    let no_label = |detail: &str| Error::NoLabel {
        a_diff,
        detail: format!("{label}: {detail}"),
    };
    match label {
        CoxeterLabel::A(_) => Ok(CoxeterLabel::A(h - 1)),
        CoxeterLabel::B(_) => {
            if h % 2 != 0 {
                return Err(no_label("odd Coxeter number in type B"));
            }
            Ok(CoxeterLabel::B(h / 2))
        }
        CoxeterLabel::D(n) => {
            if h % 2 != 0 {
                return Err(no_label("odd Coxeter number in type D"));
            }
            if let Some(j) = d_series_index(n, h) {
                let ones = |k: u32| vec![1u32; k as usize];
                let p1 = pair_partitions_to_symbol(&ones(n - j), &ones(j), SymbolFamily::D, n)?;
                let p2 = pair_partitions_to_symbol(&ones(n - j - 1), &ones(j + 1), SymbolFamily::D, n)?;
                let (p1, p2) = (ClassicalClass::Symbol(p1), ClassicalClass::Symbol(p2));
                if (lo == &p1 && hi == &p2) || (lo == &p2 && hi == &p1) {
                    return Ok(CoxeterLabel::D((h + 2) / 2));
                }
            }
            Ok(CoxeterLabel::B(h / 2))
        }
        _ => Err(no_label("not a classical type")),
    }
}

/// The `j` with `h = 2n − 2 − 4j` and `0 ≤ j < (n−2)/2`, for `n ≥ 4`.
fn d_series_index(n: u32, h: u32) -> Option<u32> {
    if n < 4 || h > 2 * n - 2 || (2 * n - 2 - h) % 4 != 0 {
        return None;
    }
    let j = (2 * n - 2 - h) / 4;
    (2 * j < n - 2).then_some(j)
}

/// Special representations of an irreducible type, sorted by `(a, text)`.
/// Degenerate type-D classes contribute two tagged copies.
pub fn nodes(label: CoxeterLabel) -> Result<Vec<SpecialRep>> {
    let mut out = match classical_family(label) {
        Some((fam, r)) => {
            let mut v = Vec::new();
            for class in fam.enumerate(r)? {
                v.extend(copies_of(&class));
            }
            v
        }
        None => exceptional::special_reps(label)?
            .into_iter()
            .map(|rep| SpecialRep::Tabulated { group: label, rep })
            .collect(),
    };
    sort_reps(&mut out);
    Ok(out)
}

pub(crate) fn sort_reps(reps: &mut [SpecialRep]) {
    reps.sort_by_cached_key(|r| (r.a_value(), r.to_string()));
}

/// The nodes carrying a class: two tagged copies if it is degenerate.
pub fn copies_of(class: &ClassicalClass) -> Vec<SpecialRep> {
    if class.is_degenerate() {
        [SplitCopy::I, SplitCopy::II]
            .into_iter()
            .map(|c| SpecialRep::Classical {
                class: class.clone(),
                copy: Some(c),
            })
            .collect()
    } else {
        vec![SpecialRep::classical(class.clone())]
    }
}

/// All edges of an irreducible type.
pub fn irreducible_edges(label: CoxeterLabel) -> Result<Vec<Edge>> {
    let Some((fam, r)) = classical_family(label) else {
        return exceptional::edges_table(label);
    };
    let mut out = Vec::new();
    for e in class_edges(fam, r)? {
        let wprime = classical_wprime(label, &e.lo, &e.hi, e.a_diff)?;
        for lo in copies_of(&e.lo) {
            for hi in copies_of(&e.hi) {
                out.push(Edge {
                    lo: lo.clone(),
                    hi,
                    kind: e.kind,
                    a_diff: e.a_diff,
                    wprime,
                    anomaly: None,
                });
            }
        }
    }
    Ok(out)
}

/// Unordered pairs of an edge list as `(min, max)` text pairs, for set
/// comparisons in tests and suites.
pub fn pair_set(edges: &[Edge]) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|e| {
            let (x, y) = (e.lo.to_string(), e.hi.to_string());
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect()
}
