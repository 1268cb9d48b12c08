//! Tabulated data for E6, E7, E8, F4, G2, H3, H4 and generated data for the
//! dihedral types I2(n).
//!
//! The tables live in `data/` as tab-separated text: `reps.tsv` (special
//! representations with the duality map), `edges.tsv` (one record per
//! adjacent pair) and `anomalies.tsv` (every place where the stored data
//! deviate from, or disagree with, the printed source). `SHA256SUMS` pins
//! their contents.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use once_cell::sync::Lazy;
use sha2::{Digest, Sha256};

use crate::adjacency::{Edge, EdgeKind};
use crate::coxeter::CoxeterLabel;
use crate::error::{Error, Result};
use crate::rep::{SpecialRep, TabulatedRep};
use crate::report::Report;

const REPS: &str = include_str!("../data/reps.tsv");
const EDGES: &str = include_str!("../data/edges.tsv");
const ANOMALIES: &str = include_str!("../data/anomalies.tsv");
const SUMS: &str = include_str!("../data/SHA256SUMS");

pub const TABULATED: [CoxeterLabel; 7] = [
    CoxeterLabel::E6,
    CoxeterLabel::E7,
    CoxeterLabel::E8,
    CoxeterLabel::F4,
    CoxeterLabel::G2,
    CoxeterLabel::H3,
    CoxeterLabel::H4,
];

/// Dimension of the odd special representations, per type.
pub fn odd_dimension(label: CoxeterLabel) -> Option<u32> {
    match label {
        CoxeterLabel::E7 => Some(512),
        CoxeterLabel::E8 => Some(4096),
        CoxeterLabel::H3 => Some(4),
        CoxeterLabel::H4 => Some(16),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnomalyKind {
    /// An endpoint was changed; the edge file holds the adopted value.
    Correction,
    /// A printed label disagrees with the a-gap; stored as printed.
    LabelConflict,
    /// An unlabelled edge with a-gap other than 1; stored as printed.
    MissingLabel,
}

impl AnomalyKind {
    fn parse(s: &str) -> Result<Self> {
        match s {
            "correction" => Ok(AnomalyKind::Correction),
            "label-conflict" => Ok(AnomalyKind::LabelConflict),
            "missing-label" => Ok(AnomalyKind::MissingLabel),
            other => Err(Error::Table(format!("unknown anomaly kind {other:?}"))),
        }
    }
}

impl fmt::Display for AnomalyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnomalyKind::Correction => "correction",
            AnomalyKind::LabelConflict => "label-conflict",
            AnomalyKind::MissingLabel => "missing-label",
        })
    }
}

#[derive(Debug, Clone)]
pub struct TableAnomaly {
    pub group: CoxeterLabel,
    pub lo: TabulatedRep,
    pub hi: TabulatedRep,
    pub kind: AnomalyKind,
    pub source: String,
    pub printed: String,
    pub adopted: Option<String>,
    pub justification: String,
}

impl fmt::Display for TableAnomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}---{} [{}] {}: printed {}",
            self.group, self.lo, self.hi, self.source, self.kind, self.printed
        )?;
        if let Some(a) = &self.adopted {
            write!(f, ", adopted {a}")?;
        }
        write!(f, " ({})", self.justification)
    }
}

#[derive(Debug, Clone)]
pub struct TableEdge {
    pub lo: TabulatedRep,
    pub hi: TabulatedRep,
    /// `None` when the label was omitted in print.
    pub printed_label: Option<CoxeterLabel>,
    pub source: String,
}

#[derive(Debug, Clone)]
pub struct TypeTable {
    pub label: CoxeterLabel,
    /// Sorted by a-value.
    pub reps: Vec<TabulatedRep>,
    pub duals: HashMap<TabulatedRep, TabulatedRep>,
    pub edges: Vec<TableEdge>,
}

impl TypeTable {
    fn lookup(&self, r: &TabulatedRep) -> Option<TabulatedRep> {
        self.reps.iter().find(|x| *x == r).copied()
    }
}

#[derive(Debug)]
pub struct Tables {
    pub types: BTreeMap<CoxeterLabel, TypeTable>,
    pub anomalies: Vec<TableAnomaly>,
    /// Duplicate edge records dropped while loading.
    pub duplicates: usize,
}

fn records(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').collect())
}

fn parse_triple(s: &str) -> Result<TabulatedRep> {
    let bad = || Error::Table(format!("bad representation field {s:?}"));
    let inner = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
    let v: Vec<u32> = inner
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match v.as_slice() {
        &[dim, a, prime @ (0 | 1)] => Ok(TabulatedRep::new(dim, a, prime == 1)),
        _ => Err(bad()),
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Verifies the embedded data files against `SHA256SUMS`.
pub fn verify_checksums() -> Result<()> {
    let files = [("reps.tsv", REPS), ("edges.tsv", EDGES), ("anomalies.tsv", ANOMALIES)];
    let mut seen = 0;
    for line in SUMS.lines().filter(|l| !l.trim().is_empty()) {
        let (sum, name) = line
            .split_once("  ")
            .ok_or_else(|| Error::Table(format!("bad checksum line {line:?}")))?;
        let (_, body) = files
            .iter()
            .find(|(n, _)| *n == name.trim())
            .ok_or_else(|| Error::Table(format!("checksum for unknown file {name:?}")))?;
        let got = hex(&Sha256::digest(body.as_bytes()));
        if got != sum {
            return Err(Error::Table(format!("checksum mismatch for {name}: {got}")));
        }
        seen += 1;
    }
    if seen != files.len() {
        return Err(Error::Table("missing checksum entries".into()));
    }
    Ok(())
}

fn load() -> Result<Tables> {
    verify_checksums()?;
    let mut types: BTreeMap<CoxeterLabel, TypeTable> = BTreeMap::new();
    for f in records(REPS) {
        let [ty, x, y, kind] = f.as_slice() else {
            return Err(Error::Table(format!("bad rep record {f:?}")));
        };
        let label: CoxeterLabel = ty.parse()?;
        let odd = match *kind {
            "odd" => true,
            "ordinary" => false,
            other => return Err(Error::Table(format!("bad rep kind {other:?}"))),
        };
        let (mut x, mut y) = (parse_triple(x)?, parse_triple(y)?);
        x.odd = odd;
        y.odd = odd;
        let t = types.entry(label).or_insert_with(|| TypeTable {
            label,
            reps: Vec::new(),
            duals: HashMap::new(),
            edges: Vec::new(),
        });
        for (u, v) in [(x, y), (y, x)] {
            if let Some(old) = t.duals.insert(u, v) {
                if old != v {
                    return Err(Error::Table(format!("{label}: {u} has two duals")));
                }
            } else {
                t.reps.push(u);
            }
        }
    }
    let mut duplicates = 0;
    for f in records(EDGES) {
        let [ty, lo, hi, w, src] = f.as_slice() else {
            return Err(Error::Table(format!("bad edge record {f:?}")));
        };
        let label: CoxeterLabel = ty.parse()?;
        let t = types
            .get_mut(&label)
            .ok_or_else(|| Error::Table(format!("edge for unlisted type {label}")))?;
        let rep = |s: &str| -> Result<TabulatedRep> {
            let r = parse_triple(s)?;
            t.lookup(&r)
                .ok_or_else(|| Error::Table(format!("{label}: {r} is not a listed representation")))
        };
        let (lo, hi) = (rep(lo)?, rep(hi)?);
        let printed_label = match *w {
            "-" => None,
            l => Some(l.parse::<CoxeterLabel>()?),
        };
        if let Some(old) = t.edges.iter().find(|e| e.lo == lo && e.hi == hi) {
            if old.printed_label != printed_label {
                return Err(Error::Table(format!("{label}: conflicting labels on {lo}---{hi}")));
            }
            duplicates += 1;
            continue;
        }
        t.edges.push(TableEdge {
            lo,
            hi,
            printed_label,
            source: src.to_string(),
        });
    }
    let mut anomalies = Vec::new();
    for f in records(ANOMALIES) {
        let [ty, lo, hi, kind, src, printed, adopted, why] = f.as_slice() else {
            return Err(Error::Table(format!("bad anomaly record {f:?}")));
        };
        anomalies.push(TableAnomaly {
            group: ty.parse()?,
            lo: parse_triple(lo)?,
            hi: parse_triple(hi)?,
            kind: AnomalyKind::parse(kind)?,
            source: src.to_string(),
            printed: printed.to_string(),
            adopted: (*adopted != "-").then(|| adopted.to_string()),
            justification: why.to_string(),
        });
    }
    for t in types.values_mut() {
        t.reps.sort();
    }
    Ok(Tables {
        types,
        anomalies,
        duplicates,
    })
}

static TABLES: Lazy<Tables> = Lazy::new(|| match load() {
    Ok(t) => t,
    Err(e) => panic!("embedded tables are corrupt: {e}"),
});

pub fn tables() -> &'static Tables {
    &TABLES
}

fn dihedral_reps(n: u32) -> [TabulatedRep; 3] {
    [
        TabulatedRep::new(1, 0, false),
        TabulatedRep::new(2, 1, false),
        TabulatedRep::new(1, n, false),
    ]
}

fn unknown(label: CoxeterLabel) -> Error {
    Error::UnknownRep(format!("{label} has no tabulated data"))
}

/// Special representations of a tabulated or dihedral type, by a-value.
pub fn special_reps(label: CoxeterLabel) -> Result<Vec<TabulatedRep>> {
    if let CoxeterLabel::I2(n) = label {
        return Ok(dihedral_reps(n).to_vec());
    }
    tables()
        .types
        .get(&label)
        .map(|t| t.reps.clone())
        .ok_or_else(|| unknown(label))
}

/// The listed representation equal to `rep` (with its odd flag filled in).
pub fn lookup(label: CoxeterLabel, rep: &TabulatedRep) -> Option<TabulatedRep> {
    match label {
        CoxeterLabel::I2(n) => dihedral_reps(n).into_iter().find(|x| x == rep),
        _ => tables().types.get(&label)?.lookup(rep),
    }
}

pub fn dual_tabulated(label: CoxeterLabel, rep: &TabulatedRep) -> Option<TabulatedRep> {
    match label {
        CoxeterLabel::I2(n) => {
            let [one, two, sgn] = dihedral_reps(n);
            if rep == &one {
                Some(sgn)
            } else if rep == &sgn {
                Some(one)
            } else if rep == &two {
                Some(two)
            } else {
                None
            }
        }
        _ => tables().types.get(&label)?.duals.get(rep).copied(),
    }
}

/// Anomalies recorded for one type.
pub fn table_anomalies(label: CoxeterLabel) -> Vec<&'static TableAnomaly> {
    tables().anomalies.iter().filter(|a| a.group == label).collect()
}

fn flag_for(label: CoxeterLabel, lo: &TabulatedRep, hi: &TabulatedRep) -> Option<String> {
    table_anomalies(label)
        .into_iter()
        .find(|a| a.kind != AnomalyKind::Correction && &a.lo == lo && &a.hi == hi)
        .map(|a| format!("{}: {}", a.kind, a.justification))
}

/// Edges of a tabulated or dihedral type. Omitted labels become `A1`.
pub fn edges_table(label: CoxeterLabel) -> Result<Vec<Edge>> {
    let node = |rep: TabulatedRep| SpecialRep::Tabulated { group: label, rep };
    if let CoxeterLabel::I2(n) = label {
        let [one, two, sgn] = dihedral_reps(n);
        return Ok(vec![
            Edge {
                lo: node(two),
                hi: node(one),
                kind: EdgeKind::Tabulated,
                a_diff: 1,
                wprime: CoxeterLabel::A(1),
                anomaly: None,
            },
            Edge {
                lo: node(sgn),
                hi: node(two),
                kind: EdgeKind::Tabulated,
                a_diff: n - 1,
                wprime: label,
                anomaly: None,
            },
        ]);
    }
    let t = tables().types.get(&label).ok_or_else(|| unknown(label))?;
    Ok(t.edges
        .iter()
        .map(|e| Edge {
            lo: node(e.lo),
            hi: node(e.hi),
            kind: EdgeKind::Tabulated,
            a_diff: e.lo.a - e.hi.a,
            wprime: e.printed_label.unwrap_or(CoxeterLabel::A(1)),
            anomaly: flag_for(label, &e.lo, &e.hi),
        })
        .collect())
}

/// The other half of a printed line: `L7` pairs with `R7`.
fn mirror_line(source: &str) -> Option<String> {
    let (sec, line) = source.split_once(':')?;
    let (side, num) = line.split_at(1);
    let other = match side {
        "L" => "R",
        "R" => "L",
        _ => return None,
    };
    Some(format!("{sec}:{other}{num}"))
}

/// Consistency checks over one tabulated type.
pub fn validate_type(label: CoxeterLabel) -> Report {
    let mut rep = Report::new(&format!("tables-{label}"));
    let Some(t) = tables().types.get(&label) else {
        rep.fail(format!("{label}: no table"));
        return rep;
    };
    let anomalies = table_anomalies(label);
    let dual = |x: &TabulatedRep| t.duals[x];

    // duality: an involution preserving dimension, odd reps exactly as expected
    for x in &t.reps {
        let y = dual(x);
        rep.check(dual(&y) == *x, || format!("{label}: dual of dual of {x} is {}", dual(&y)));
        rep.check(y.dim == x.dim, || format!("{label}: {x} and its dual {y} differ in dimension"));
        let want_odd = odd_dimension(label) == Some(x.dim);
        rep.check(x.odd == want_odd, || format!("{label}: odd flag of {x} is {}", x.odd));
    }
    let a0: Vec<_> = t.reps.iter().filter(|x| x.a == 0).collect();
    rep.check(a0.len() == 1, || format!("{label}: {} representations with a = 0", a0.len()));

    // every listed rep is on some edge
    let on_edge: HashSet<TabulatedRep> = t.edges.iter().flat_map(|e| [e.lo, e.hi]).collect();
    for x in &t.reps {
        rep.check(on_edge.contains(x), || format!("{label}: {x} is isolated"));
    }

    let by_pair: HashMap<(TabulatedRep, TabulatedRep), &TableEdge> =
        t.edges.iter().map(|e| ((e.lo, e.hi), e)).collect();
    for e in &t.edges {
        let d = e.lo.a - e.hi.a;
        rep.check(e.lo.a > e.hi.a, || format!("{label}: edge {}---{} not oriented", e.lo, e.hi));
        let (dl, dh) = (dual(&e.hi), dual(&e.lo));
        // the dual edge exists, and sits on the mirror line
        match by_pair.get(&(dl, dh)) {
            None => rep.fail(format!("{label}: dual of {}---{} ({dl}---{dh}) missing", e.lo, e.hi)),
            Some(m) => {
                rep.check(Some(m.source.clone()) == mirror_line(&e.source), || {
                    format!(
                        "{label}: dual of {}---{} [{}] is on line {}",
                        e.lo, e.hi, e.source, m.source
                    )
                });
            }
        }
        // a-gap 1 on at least one side of duality
        let dd = dl.a.saturating_sub(dh.a);
        rep.check(d == 1 || dd == 1, || {
            format!("{label}: {}---{} has gap {d} and dual gap {dd}", e.lo, e.hi)
        });
        let flagged = |k: AnomalyKind| {
            anomalies
                .iter()
                .any(|a| a.kind == k && a.lo == e.lo && a.hi == e.hi)
        };
        match e.printed_label {
            Some(w) => {
                let law = d + 1 == w.coxeter_number();
                if !law {
                    let msg = format!(
                        "{label}: {}---{} [{}] labelled {} but a-gap is {d}",
                        e.lo,
                        e.hi,
                        e.source,
                        w.display_name()
                    );
                    if flagged(AnomalyKind::LabelConflict) {
                        rep.anomaly(msg);
                    } else {
                        rep.fail(msg);
                    }
                } else {
                    rep.check(!flagged(AnomalyKind::LabelConflict), || {
                        format!("{label}: {}---{} flagged but consistent", e.lo, e.hi)
                    });
                }
            }
            None => {
                if d != 1 {
                    let msg = format!(
                        "{label}: unlabelled {}---{} [{}] has a-gap {d}",
                        e.lo, e.hi, e.source
                    );
                    if flagged(AnomalyKind::MissingLabel) {
                        rep.note(msg);
                    } else {
                        rep.fail(msg);
                    }
                }
                rep.checked += 1;
            }
        }
    }

    // each anomaly record refers to a stored edge; corrections replaced a
    // value that is not a special representation
    for a in &anomalies {
        rep.check(by_pair.contains_key(&(a.lo, a.hi)), || {
            format!("{label}: anomaly record for missing edge {}---{}", a.lo, a.hi)
        });
        if a.kind == AnomalyKind::Correction {
            let printed = TabulatedRep::parse(&a.printed);
            let adopted = a.adopted.as_deref().map(TabulatedRep::parse);
            match (printed, adopted) {
                (Ok(p), Some(Ok(q))) => {
                    rep.check(t.lookup(&p).is_none(), || {
                        format!("{label}: corrected value {p} is itself listed")
                    });
                    rep.check(q == a.lo || q == a.hi, || {
                        format!("{label}: adopted value {q} is not an endpoint")
                    });
                    rep.note(format!("correction {}: {p} -> {q}", a.source));
                }
                _ => rep.fail(format!("{label}: unparsable correction {a}")),
            }
        }
    }
    rep
}

/// Validates every tabulated type; one combined report.
pub fn validate_tables() -> Report {
    let mut rep = Report::new("tables");
    match verify_checksums() {
        Ok(()) => rep.check(true, String::new),
        Err(e) => rep.check(false, || e.to_string()),
    };
    for label in TABULATED {
        rep.absorb(validate_type(label));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(d: u32, a: u32) -> TabulatedRep {
        TabulatedRep::new(d, a, false)
    }

    #[test]
    fn counts() {
        let count = |l| (special_reps(l).unwrap().len(), edges_table(l).unwrap().len());
        assert_eq!(count(CoxeterLabel::E8), (46, 58));
        assert_eq!(count(CoxeterLabel::E6), (17, 18));
        assert_eq!(count(CoxeterLabel::F4), (11, 12));
        assert_eq!(count(CoxeterLabel::G2), (3, 2));
        assert_eq!(count(CoxeterLabel::H3), (7, 6));
        assert_eq!(count(CoxeterLabel::H4), (13, 12));
        assert_eq!(special_reps(CoxeterLabel::E7).unwrap().len(), 35);
        assert_eq!(tables().duplicates, 0);
    }

    #[test]
    fn odd_duals() {
        let d = |l, x| dual_tabulated(l, &x).unwrap();
        assert_eq!(d(CoxeterLabel::E7, r(512, 11)), r(512, 11));
        assert_eq!(d(CoxeterLabel::E8, r(4096, 11)), r(4096, 26));
        assert_eq!(d(CoxeterLabel::H3, r(4, 3)), r(4, 3));
        assert_eq!(d(CoxeterLabel::H4, r(16, 3)), r(16, 18));
        assert!(lookup(CoxeterLabel::E7, &r(512, 11)).unwrap().odd);
        assert_eq!(d(CoxeterLabel::E8, r(1, 0)), r(1, 120));
    }

    #[test]
    fn dihedral() {
        let e = edges_table(CoxeterLabel::I2(9)).unwrap();
        assert_eq!(e[0].wprime, CoxeterLabel::A(1));
        assert_eq!((e[1].a_diff, e[1].wprime), (8, CoxeterLabel::I2(9)));
        assert_eq!(dual_tabulated(CoxeterLabel::I2(9), &r(1, 0)), Some(r(1, 9)));
        assert!(special_reps(CoxeterLabel::B(3)).is_err());
    }

    #[test]
    fn tables_validate() {
        let rep = validate_tables();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.anomalies.len(), 1, "{rep}");
        assert!(rep.anomalies[0].contains("567_46---1400_37"));
    }
}
