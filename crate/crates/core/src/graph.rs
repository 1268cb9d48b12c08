//! The adjacency graph of a Coxeter type, the order it generates, and
//! independent cross-checks (dominance order, graded isomorphism).

use std::collections::HashMap;
use std::fmt::Write as _;

use petgraph::graph::UnGraph;
use serde_json::{json, Value};

use crate::adjacency::{self, Edge};
use crate::betasets::{partitions, BetaClass};
use crate::classical::ClassicalClass;
use crate::coxeter::{CompositeType, CoxeterLabel};
use crate::duality::dual;
use crate::error::{Error, Result};
use crate::rep::SpecialRep;

#[derive(Debug, Clone)]
pub struct AdjacencyGraph {
    pub ty: CompositeType,
    /// Sorted by `(a, text)`.
    pub nodes: Vec<SpecialRep>,
    pub a_values: Vec<u32>,
    /// Sorted by the positions of `(lo, hi)` in `nodes`.
    pub edges: Vec<Edge>,
    index: HashMap<SpecialRep, usize>,
}

impl AdjacencyGraph {
    fn new(ty: CompositeType, mut nodes: Vec<SpecialRep>, mut edges: Vec<Edge>) -> Self {
        adjacency::sort_reps(&mut nodes);
        let index: HashMap<SpecialRep, usize> =
            nodes.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        edges.sort_by_key(|e| (index[&e.lo], index[&e.hi]));
        let a_values = nodes.iter().map(|n| n.a_value()).collect();
        AdjacencyGraph {
            ty,
            nodes,
            a_values,
            edges,
            index,
        }
    }

    pub fn index_of(&self, rep: &SpecialRep) -> Option<usize> {
        self.index.get(rep).copied()
    }

    /// `(lo, hi)` node positions of every edge.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|e| (self.index[&e.lo], self.index[&e.hi]))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| {
                json!({
                    "id": i,
                    "rep": n.to_string(),
                    "a": self.a_values[i],
                    "dual": dual(n).to_string(),
                    "degenerate": n.is_degenerate(),
                    "odd": n.is_odd(),
                })
            })
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|e| e.to_json()).collect();
        json!({ "type": self.ty.to_string(), "nodes": nodes, "edges": edges })
    }

    /// Graphviz source. Nodes of equal a-value share a rank; edges point
    /// from the smaller a-value down to the larger.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let esc = |t: &str| t.replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(s, "digraph \"{}\" {{", self.ty).unwrap();
        writeln!(s, "  node [shape=plaintext];").unwrap();
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(s, "  n{i} [label=\"{}\"];", esc(&n.to_string())).unwrap();
        }
        let mut i = 0;
        while i < self.nodes.len() {
            let a = self.a_values[i];
            let group: Vec<String> = (i..self.nodes.len())
                .take_while(|&j| self.a_values[j] == a)
                .map(|j| format!("n{j};"))
                .collect();
            writeln!(s, "  {{ rank=same; {} }}", group.join(" ")).unwrap();
            i += group.len();
        }
        for (e, (lo, hi)) in self.edges.iter().zip(self.edge_pairs()) {
            let mut label = e.wprime.display_name();
            if let Some(p) = e.kind.p() {
                write!(label, ",{p}").unwrap();
            }
            writeln!(s, "  n{hi} -> n{lo} [label=\"{}\"];", esc(&label)).unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "type {}: {} nodes, {} edges", self.ty, self.nodes.len(), self.edges.len()).unwrap();
        for e in &self.edges {
            write!(s, "{} --- {}  {}  a_diff={}  W'={}", e.lo, e.hi, e.kind, e.a_diff, e.wprime.display_name()).unwrap();
            if let Some(a) = &e.anomaly {
                write!(s, "  anomaly: {a}").unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// Graph of an irreducible type.
pub fn irreducible_graph(label: CoxeterLabel) -> Result<AdjacencyGraph> {
    Ok(AdjacencyGraph::new(
        CompositeType::irreducible(label),
        adjacency::nodes(label)?,
        adjacency::irreducible_edges(label)?,
    ))
}

/// Graph of any type. In a product, two nodes are adjacent when they agree
/// in all factors but one and are adjacent there.
pub fn build_graph(ty: &CompositeType) -> Result<AdjacencyGraph> {
    if ty.is_irreducible() {
        return irreducible_graph(ty.factors()[0]);
    }
    let factors: Vec<AdjacencyGraph> = ty
        .factors()
        .iter()
        .map(|&l| irreducible_graph(l))
        .collect::<Result<_>>()?;
    // all tuples of factor nodes
    let mut tuples: Vec<Vec<SpecialRep>> = vec![Vec::new()];
    for f in &factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                f.nodes.iter().map(move |n| {
                    let mut t = t.clone();
                    t.push(n.clone());
                    t
                })
            })
            .collect();
    }
    let mut edges = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for t in &tuples {
            // each edge of factor i once per choice of the other coordinates
            if t[i] != f.nodes[0] {
                continue;
            }
            for e in &f.edges {
                let mut lo = t.clone();
                let mut hi = t.clone();
                lo[i] = e.lo.clone();
                hi[i] = e.hi.clone();
                edges.push(Edge {
                    lo: SpecialRep::Product(lo),
                    hi: SpecialRep::Product(hi),
                    ..e.clone()
                });
            }
        }
    }
    let nodes = tuples.into_iter().map(SpecialRep::Product).collect();
    Ok(AdjacencyGraph::new(ty.clone(), nodes, edges))
}

/// Reachability over the graph's nodes: `le(x, y)` iff `x ≤ y`, i.e. `y`
/// is reached from `x` by walking edges from `lo` to `hi`.
#[derive(Debug, Clone)]
pub struct PosetClosure {
    n: usize,
    words: usize,
    up: Vec<Vec<u64>>,
}

impl PosetClosure {
    fn bit(&self, x: usize, y: usize) -> bool {
        self.up[x][y / 64] >> (y % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.bit(x, y)
    }

    /// Maximal elements (nothing strictly above).
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| y == x || !self.le(x, y)))
            .collect()
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            let mut strict = self.up[x].clone();
            strict[x / 64] &= !(1u64 << (x % 64));
            // everything strictly above some strict upper bound of x
            let mut implied = vec![0u64; self.words];
            for z in (0..self.n).filter(|&z| strict[z / 64] >> (z % 64) & 1 == 1) {
                for (k, (w, u)) in implied.iter_mut().zip(&self.up[z]).enumerate() {
                    let own = if k == z / 64 { 1u64 << (z % 64) } else { 0 };
                    *w |= u & !own;
                }
            }
            for y in 0..self.n {
                let (w, b) = (y / 64, y % 64);
                if (strict[w] & !implied[w]) >> b & 1 == 1 {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Transitive closure of the edge orientation.
pub fn poset_closure(g: &AdjacencyGraph) -> Result<PosetClosure> {
    let n = g.nodes.len();
    let words = n.div_ceil(64).max(1);
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, (lo, hi)) in g.edges.iter().zip(g.edge_pairs()) {
        if g.a_values[lo] <= g.a_values[hi] {
            return Err(Error::Cycle(format!("edge {} --- {} is not a-decreasing", e.lo, e.hi)));
        }
        out_edges[lo].push(hi);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| g.a_values[i]);
    let mut up = vec![vec![0u64; words]; n];
    for &x in &order {
        let mut row = vec![0u64; words];
        row[x / 64] |= 1 << (x % 64);
        for &y in &out_edges[x] {
            for (w, u) in row.iter_mut().zip(&up[y]) {
                *w |= u;
            }
        }
        up[x] = row;
    }
    Ok(PosetClosure { n, words, up })
}

/// True when the covering pairs of the closure are exactly the edges.
pub fn covers_match_edges(g: &AdjacencyGraph, p: &PosetClosure) -> bool {
    let mut covers = p.covering_pairs();
    let mut edges = g.edge_pairs();
    covers.sort_unstable();
    edges.sort_unstable();
    covers == edges
}

fn dominates(x: &[u32], y: &[u32]) -> bool {
    let (mut sx, mut sy) = (0u32, 0u32);
    for i in 0..x.len().max(y.len()) {
        sx += x.get(i).copied().unwrap_or(0);
        sy += y.get(i).copied().unwrap_or(0);
        if sx < sy {
            return false;
        }
    }
    true
}

/// Covering pairs of the dominance order on partitions of `r`, as
/// `(lo, hi)` with `hi` the dominating partition.
pub fn dominance_oracle(r: u32) -> Result<Vec<(ClassicalClass, ClassicalClass)>> {
    if r < 2 {
        return Err(Error::RankTooSmall {
            family: "A".into(),
            rank: r,
            min: 2,
        });
    }
    let parts = partitions(r);
    let n = parts.len();
    let strictly = |i: usize, j: usize| i != j && dominates(&parts[j], &parts[i]);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if strictly(i, j) && !(0..n).any(|k| strictly(i, k) && strictly(k, j)) {
                out.push((
                    ClassicalClass::Beta(BetaClass::from_partition(&parts[i])),
                    ClassicalClass::Beta(BetaClass::from_partition(&parts[j])),
                ));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn to_petgraph(g: &AdjacencyGraph) -> UnGraph<u32, ()> {
    let mut pg = UnGraph::new_undirected();
    let ids: Vec<_> = g.a_values.iter().map(|&a| pg.add_node(a)).collect();
    for (lo, hi) in g.edge_pairs() {
        pg.add_edge(ids[lo], ids[hi], ());
    }
    pg
}

/// An a-preserving bijection of nodes carrying edges onto edges exists.
pub fn isomorphic_as_graded_graphs(g1: &AdjacencyGraph, g2: &AdjacencyGraph) -> bool {
    let (p1, p2) = (to_petgraph(g1), to_petgraph(g2));
    petgraph::algo::is_isomorphic_matching(&p1, &p2, |a, b| a == b, |_, _| true)
}
