//! Named verification suites, shared by the CLI and the test battery.

use std::collections::BTreeSet;

use crate::adjacency::{self, EdgeKind};
use crate::classical::{Classical, ClassicalClass};
use crate::coxeter::{parse_type, CompositeType, CoxeterLabel};
use crate::duality::{dual, dual_class};
use crate::error::{Error, Result};
use crate::exceptional::{self, TABULATED};
use crate::graph::{self, AdjacencyGraph};
use crate::induction::{self, CheckSets};
use crate::report::Report;

pub const SUITES: [&str; 9] = [
    "involution",
    "bijection",
    "adiff",
    "thm03",
    "thm54",
    "lemma56",
    "dominance",
    "tables",
    "lowrank-iso",
];

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Restrict classical checks to one family.
    pub family: Option<Classical>,
    /// Override the default largest rank.
    pub max_rank: Option<u32>,
}

impl SuiteOptions {
    fn families(&self) -> Vec<Classical> {
        match self.family {
            Some(f) => vec![f],
            None => Classical::ALL.to_vec(),
        }
    }

    fn ranks(&self, fam: Classical, default: u32) -> std::ops::RangeInclusive<u32> {
        fam.min_rank()..=self.max_rank.unwrap_or(default)
    }
}

/// Default largest rank of the equality check per family.
pub fn thm54_default_rank(fam: Classical) -> u32 {
    match fam {
        Classical::A => 10,
        Classical::B | Classical::D => 9,
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Report> {
    let mut rep = match name {
        "involution" => involution(opts),
        "bijection" => bijection(opts),
        "adiff" => adiff(opts),
        "thm03" => thm03(opts)?,
        "thm54" => thm54(opts),
        "lemma56" => lemma56(opts),
        "dominance" => dominance(opts)?,
        "tables" => exceptional::validate_tables(),
        "lowrank-iso" => lowrank_iso()?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    rep.suite = name.to_string();
    Ok(rep)
}

pub fn run_all(opts: &SuiteOptions) -> Result<Vec<Report>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

fn classes(fam: Classical, r: u32, rep: &mut Report) -> Vec<ClassicalClass> {
    fam.enumerate(r).unwrap_or_else(|e| {
        rep.fail(format!("{fam} r={r}: {e}"));
        Vec::new()
    })
}

fn involution(opts: &SuiteOptions) -> Report {
    let mut rep = Report::new("involution");
    for fam in opts.families() {
        let top = match fam {
            Classical::A => 14,
            _ => 12,
        };
        for r in opts.ranks(fam, top) {
            for c in classes(fam, r, &mut rep) {
                let d = dual_class(&c);
                rep.check(dual_class(&d) == c && d.rank() == r && d.is_degenerate() == c.is_degenerate(), || {
                    format!("{fam} r={r}: {c} -> {d} -> {}", dual_class(&d))
                });
            }
        }
    }
    rep
}

/// Straight pairs with large parameter correspond to wavy pairs of duals
/// and the smallest straight pairs are stable under duality.
fn bijection(opts: &SuiteOptions) -> Report {
    let mut rep = Report::new("bijection");
    for fam in opts.families() {
        for r in opts.ranks(fam, 9) {
            let cs = classes(fam, r, &mut rep);
            let duals: Vec<ClassicalClass> = cs.iter().map(dual_class).collect();
            for (i, x) in cs.iter().enumerate() {
                for (j, y) in cs.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let Ok(Some(kind)) = adjacency::oriented_pattern(x, y) else {
                        continue;
                    };
                    let (dy, dx) = (&duals[j], &duals[i]);
                    let image = adjacency::oriented_pattern(dy, dx).ok().flatten();
                    let want = match kind {
                        EdgeKind::Straight(p) if p == fam.min_straight_p() => kind,
                        EdgeKind::Straight(p) => EdgeKind::Wavy(p),
                        EdgeKind::Wavy(p) => EdgeKind::Straight(p),
                        EdgeKind::Tabulated => unreachable!(),
                    };
                    rep.check(image == Some(want), || {
                        format!("{fam} r={r}: ({x},{y}) is {kind} but ({dy},{dx}) is {image:?}")
                    });
                }
            }
        }
    }
    rep
}

fn adiff(opts: &SuiteOptions) -> Report {
    let mut rep = Report::new("adiff");
    for fam in opts.families() {
        for r in opts.ranks(fam, 9) {
            let edges = match adjacency::class_edges(fam, r) {
                Ok(e) => e,
                Err(e) => {
                    rep.fail(format!("{fam} r={r}: {e}"));
                    continue;
                }
            };
            for e in edges {
                let want = match (e.kind, fam) {
                    (EdgeKind::Straight(_), _) => 1,
                    (EdgeKind::Wavy(p), Classical::A) => p - 2,
                    (EdgeKind::Wavy(p), _) => 2 * p - 3,
                    (EdgeKind::Tabulated, _) => unreachable!(),
                };
                rep.check(e.a_diff == want, || {
                    format!("{fam} r={r}: {} --- {} is {} with a-gap {}", e.lo, e.hi, e.kind, e.a_diff)
                });
            }
        }
    }
    rep
}

/// Graph-level checks: the a-gap is one on at least one side of duality,
/// the label law, duality is an order-reversing automorphism, the edges are
/// the covering pairs of their closure, and each irreducible graph has one
/// maximal element, of a-value 0.
pub fn check_graph(g: &AdjacencyGraph, rep: &mut Report) {
    let ty = &g.ty;
    let pairs: BTreeSet<(usize, usize)> = g.edge_pairs().into_iter().collect();
    for e in &g.edges {
        let (dl, dh) = (dual(&e.hi), dual(&e.lo));
        let dual_gap = dl.a_value() as i64 - dh.a_value() as i64;
        rep.check(e.a_diff == 1 || dual_gap == 1, || {
            format!("{ty}: {} --- {} has a-gap {} and dual gap {dual_gap}", e.lo, e.hi, e.a_diff)
        });
        if !e.label_law_holds() {
            let msg = format!(
                "{ty}: {} --- {} has a-gap {} but W' = {} (h = {})",
                e.lo,
                e.hi,
                e.a_diff,
                e.wprime.display_name(),
                e.wprime.coxeter_number()
            );
            match &e.anomaly {
                Some(a) if a.starts_with("label-conflict") => rep.anomaly(msg),
                Some(_) => rep.note(msg),
                None => rep.fail(msg),
            }
        }
        rep.checked += 1;
        let image = (g.index_of(&dl), g.index_of(&dh));
        rep.check(matches!(image, (Some(x), Some(y)) if pairs.contains(&(x, y))), || {
            format!("{ty}: dual of {} --- {} is not an edge", e.lo, e.hi)
        });
    }
    match graph::poset_closure(g) {
        Ok(p) => {
            rep.check(graph::covers_match_edges(g, &p), || {
                format!("{ty}: edges are not the covering pairs of their closure")
            });
            let idx: Vec<Option<usize>> = g.nodes.iter().map(|n| g.index_of(&dual(n))).collect();
            let mut reversing = true;
            for (x, dx) in idx.iter().enumerate() {
                for (y, dy) in idx.iter().enumerate() {
                    if let (Some(dx), Some(dy)) = (dx, dy) {
                        reversing &= p.le(x, y) == p.le(*dy, *dx);
                    } else {
                        reversing = false;
                    }
                }
            }
            rep.check(reversing, || format!("{ty}: duality does not reverse the order"));
            if ty.is_irreducible() {
                let max = p.maximal();
                rep.check(max.len() == 1 && g.a_values[max[0]] == 0, || {
                    format!("{ty}: maximal elements {max:?}")
                });
            }
        }
        Err(e) => rep.fail(format!("{ty}: {e}")),
    }
}

fn label_for(fam: Classical, r: u32) -> CoxeterLabel {
    match fam {
        Classical::A => CoxeterLabel::A(r - 1),
        Classical::B => CoxeterLabel::B(r),
        Classical::D => CoxeterLabel::D(r),
    }
}

/// Every graph covered by the battery: classical families at the equality
/// ranks, all tabulated types and a range of dihedral types.
pub fn battery_types(opts: &SuiteOptions) -> Vec<CompositeType> {
    let mut out = Vec::new();
    for fam in opts.families() {
        for r in opts.ranks(fam, thm54_default_rank(fam)) {
            out.push(CompositeType::irreducible(label_for(fam, r)));
        }
    }
    if opts.family.is_none() {
        out.extend(TABULATED.iter().map(|&l| CompositeType::irreducible(l)));
        for n in [5, 7, 8, 9, 10, 12] {
            out.push(CompositeType::irreducible(CoxeterLabel::I2(n)));
        }
        for t in ["A1xA1", "B2xG2", "D4xA2"] {
            out.push(parse_type(t).expect("literal type"));
        }
    }
    out
}

fn thm03(opts: &SuiteOptions) -> Result<Report> {
    let mut rep = Report::new("thm03");
    for ty in battery_types(opts) {
        let g = graph::build_graph(&ty)?;
        check_graph(&g, &mut rep);
    }
    Ok(rep)
}

fn thm54(opts: &SuiteOptions) -> Report {
    let mut rep = Report::new("thm54");
    for fam in opts.families() {
        let top = opts.max_rank.unwrap_or(thm54_default_rank(fam));
        rep.absorb(induction::verify_thm54_family(fam, top));
    }
    rep
}

/// Ranks at which the trichotomy needs a sporadic pair.
pub fn documented_sporadic_ranks(fam: Classical) -> Vec<u32> {
    match fam {
        Classical::A => vec![2],
        Classical::B => vec![1, 3],
        Classical::D => vec![2],
    }
}

fn lemma56(opts: &SuiteOptions) -> Report {
    let mut rep = Report::new("lemma56");
    for fam in opts.families() {
        let mut sets = CheckSets::new(fam);
        let mut found = Vec::new();
        let top = opts.max_rank.unwrap_or(9);
        for r in fam.min_rank()..=top {
            let t = induction::lemma_trichotomy(&mut sets, r);
            if !t.sporadic.is_empty() {
                found.push(r);
            }
            rep.absorb(t.report);
        }
        let want: Vec<u32> = documented_sporadic_ranks(fam).into_iter().filter(|&r| r <= top).collect();
        rep.check(found == want, || format!("{fam}: sporadic pairs at ranks {found:?}, expected {want:?}"));
    }
    rep
}

fn dominance(opts: &SuiteOptions) -> Result<Report> {
    let mut rep = Report::new("dominance");
    for r in 2..=opts.max_rank.unwrap_or(10) {
        let oracle: BTreeSet<_> = graph::dominance_oracle(r)?.into_iter().collect();
        let edges: BTreeSet<_> = adjacency::class_edges(Classical::A, r)?
            .into_iter()
            .map(|e| (e.lo, e.hi))
            .collect();
        rep.check(oracle == edges, || {
            let extra: Vec<String> = edges.difference(&oracle).map(|(x, y)| format!("{x}->{y}")).collect();
            let missing: Vec<String> = oracle.difference(&edges).map(|(x, y)| format!("{x}->{y}")).collect();
            format!("r={r}: extra {extra:?}, missing {missing:?}")
        });
    }
    Ok(rep)
}

fn lowrank_iso() -> Result<Report> {
    let mut rep = Report::new("lowrank-iso");
    for (x, y, want) in [("D2", "A1xA1", true), ("D3", "A3", true), ("B2", "A2", false)] {
        let gx = graph::build_graph(&parse_type(x)?)?;
        let gy = graph::build_graph(&parse_type(y)?)?;
        let iso = graph::isomorphic_as_graded_graphs(&gx, &gy);
        rep.check(iso == want, || format!("{x} vs {y}: isomorphic = {iso}"));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs() {
        let opts = SuiteOptions {
            family: None,
            max_rank: Some(5),
        };
        for s in SUITES {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0, "{s}");
        }
        assert!(matches!(run_suite("nope", &opts), Err(Error::UnknownSuite(_))));
    }
}
