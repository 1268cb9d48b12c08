//! Python bindings: the `specrep` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use specrep_core::adjacency::{self, Edge};
use specrep_core::classical::Classical;
use specrep_core::cli::parse_rep;
use specrep_core::coxeter::{parse_type, CompositeType};
use specrep_core::duality;
use specrep_core::graph::{self, AdjacencyGraph};
use specrep_core::suites::{self, SuiteOptions};
use specrep_core::SpecialRep;

fn err(e: specrep_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ty(text: &str) -> PyResult<CompositeType> {
    parse_type(text).map_err(err)
}

/// A special representation of a fixed Coxeter type.
#[pyclass(name = "SpecialRep", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRep {
    ty: CompositeType,
    rep: SpecialRep,
}

#[pymethods]
impl PyRep {
    #[new]
    fn new(type_name: &str, text: &str) -> PyResult<Self> {
        let ty = ty(type_name)?;
        let rep = parse_rep(&ty, text).map_err(err)?;
        Ok(PyRep { ty, rep })
    }

    #[getter]
    fn a_value(&self) -> u32 {
        self.rep.a_value()
    }

    #[getter]
    fn coxeter_type(&self) -> String {
        self.ty.to_string()
    }

    fn dual(&self) -> PyRep {
        PyRep {
            ty: self.ty.clone(),
            rep: duality::dual(&self.rep),
        }
    }

    fn is_degenerate(&self) -> bool {
        self.rep.is_degenerate()
    }

    fn is_odd(&self) -> bool {
        self.rep.is_odd()
    }

    fn partition(&self) -> Option<String> {
        self.rep.partition_text()
    }

    fn __str__(&self) -> String {
        self.rep.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SpecialRep({:?}, {:?})", self.ty.to_string(), self.rep.to_string())
    }

    fn __eq__(&self, other: &PyRep) -> bool {
        self.ty == other.ty && self.rep == other.rep
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        (&self.ty, &self.rep).hash(&mut h);
        h.finish()
    }
}

/// One oriented edge: `lo` has the larger a-value.
#[pyclass(name = "Edge", frozen)]
struct PyEdge {
    ty: CompositeType,
    edge: Edge,
}

#[pymethods]
impl PyEdge {
    #[getter]
    fn lo(&self) -> PyRep {
        PyRep {
            ty: self.ty.clone(),
            rep: self.edge.lo.clone(),
        }
    }

    #[getter]
    fn hi(&self) -> PyRep {
        PyRep {
            ty: self.ty.clone(),
            rep: self.edge.hi.clone(),
        }
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.edge.kind.name()
    }

    #[getter]
    fn p(&self) -> Option<u32> {
        self.edge.kind.p()
    }

    #[getter]
    fn a_diff(&self) -> u32 {
        self.edge.a_diff
    }

    #[getter]
    fn wprime(&self) -> String {
        self.edge.wprime.display_name()
    }

    #[getter]
    fn anomaly(&self) -> Option<String> {
        self.edge.anomaly.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Edge({} --- {}, {}, a_diff={}, W'={})",
            self.edge.lo,
            self.edge.hi,
            self.edge.kind,
            self.edge.a_diff,
            self.edge.wprime.display_name()
        )
    }
}

/// The adjacency graph of a Coxeter type.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    graph: AdjacencyGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(type_name: &str) -> PyResult<Self> {
        let graph = graph::build_graph(&ty(type_name)?).map_err(err)?;
        Ok(PyGraph { graph })
    }

    #[getter]
    fn nodes(&self) -> Vec<PyRep> {
        self.graph
            .nodes
            .iter()
            .map(|n| PyRep {
                ty: self.graph.ty.clone(),
                rep: n.clone(),
            })
            .collect()
    }

    #[getter]
    fn edges(&self) -> Vec<PyEdge> {
        self.graph
            .edges
            .iter()
            .map(|e| PyEdge {
                ty: self.graph.ty.clone(),
                edge: e.clone(),
            })
            .collect()
    }

    fn to_dot(&self) -> String {
        self.graph.to_dot()
    }

    fn to_json(&self) -> String {
        self.graph.to_json().to_string()
    }

    /// `(x, y)` pairs of node positions with `x ≤ y` in the generated order.
    fn order_relation(&self) -> PyResult<Vec<(usize, usize)>> {
        let p = graph::poset_closure(&self.graph).map_err(err)?;
        let n = self.graph.nodes.len();
        Ok((0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| p.le(x, y))
            .collect())
    }

    fn is_isomorphic_to(&self, other: &PyGraph) -> bool {
        graph::isomorphic_as_graded_graphs(&self.graph, &other.graph)
    }

    fn __len__(&self) -> usize {
        self.graph.nodes.len()
    }
}

/// Canonical spelling of a type string.
#[pyfunction]
fn canonical_type(text: &str) -> PyResult<String> {
    Ok(ty(text)?.to_string())
}

/// Special representations of a type, sorted by a-value.
#[pyfunction]
fn special_reps(type_name: &str) -> PyResult<Vec<PyRep>> {
    Ok(PyGraph::new(type_name)?.nodes())
}

/// Staircase complement of a representative (`family` is "A", "B" or "D").
#[pyfunction]
fn shriek(entries: Vec<u32>, t: u32, family: &str) -> PyResult<Vec<u32>> {
    let fam: Classical = family.parse().map_err(err)?;
    duality::shriek(&entries, t, fam).map_err(err)
}

/// Pattern shown by two classes of the same family and rank, e.g.
/// `"straight(3)"`, or `None` when they are not adjacent.
#[pyfunction]
fn classify_pair(family: &str, x: Vec<u32>, y: Vec<u32>) -> PyResult<Option<String>> {
    let fam: Classical = family.parse().map_err(err)?;
    let (cx, cy) = (fam.class_of(&x).map_err(err)?, fam.class_of(&y).map_err(err)?);
    Ok(adjacency::classify_pair(&cx, &cy).map_err(err)?.map(|k| k.to_string()))
}

/// Runs a verification suite; returns `(passed, summary_line)`.
#[pyfunction]
#[pyo3(signature = (suite, family=None, max_rank=None))]
fn verify(suite: &str, family: Option<&str>, max_rank: Option<u32>) -> PyResult<(bool, String)> {
    let family = family.map(str::parse::<Classical>).transpose().map_err(err)?;
    let r = suites::run_suite(suite, &SuiteOptions { family, max_rank }).map_err(err)?;
    Ok((r.passed(), r.summary_line(false)))
}

#[pymodule]
fn specrep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRep>()?;
    m.add_class::<PyEdge>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(canonical_type, m)?)?;
    m.add_function(wrap_pyfunction!(special_reps, m)?)?;
    m.add_function(wrap_pyfunction!(shriek, m)?)?;
    m.add_function(wrap_pyfunction!(classify_pair, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
