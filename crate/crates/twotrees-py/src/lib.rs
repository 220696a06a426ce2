//! Python bindings: degree sequences, small graphs, 2-tree enumeration,
//! universal hosts, and the constructive verification entry points.
//!
//! Graphs and sequences cross the boundary as thin wrapper classes; all
//! fallible library calls surface as `ValueError` carrying the library's
//! error message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use twotrees::degseq::DegreeSequence;
use twotrees::graph::SimpleGraph;
use twotrees::potential::{CaseLabel, CheckMode, VerifyMode};

fn err(e: twotrees::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A non-increasing degree sequence.
#[pyclass(name = "Sequence", skip_from_py_object)]
#[derive(Clone)]
struct PySequence {
    inner: DegreeSequence,
}

#[pymethods]
impl PySequence {
    /// Builds from a list of degrees or a text form like "6,2^6".
    #[new]
    fn new(spec: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = spec.extract::<String>() {
            DegreeSequence::parse(&text).map_err(err)?
        } else {
            let terms: Vec<u32> = spec.extract()?;
            DegreeSequence::new(terms).map_err(err)?
        };
        Ok(Self { inner })
    }

    fn terms(&self) -> Vec<u32> {
        self.inner.terms().to_vec()
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn sigma(&self) -> u64 {
        self.inner.sigma()
    }

    fn is_graphic(&self) -> bool {
        self.inner.is_graphic()
    }

    /// The first 1-based t whose Erdős–Gallai inequality fails, or None.
    fn violation_t(&self) -> Option<usize> {
        self.inner.erdos_gallai_violation()
    }

    fn layoff(&self, k: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.layoff(k).map_err(err)?,
        })
    }

    /// The deterministic realization: vertex i carries degree d_{i+1}.
    fn realize(&self) -> PyResult<PyGraph> {
        Ok(PyGraph {
            inner: self.inner.realize().map_err(err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequence(\"{}\")", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// An undirected simple graph on vertices 0..n.
#[pyclass(name = "Graph", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: SimpleGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: SimpleGraph::from_edges(n, &edges).map_err(err)?,
        })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    /// Sorted (non-increasing) degree sequence.
    fn degree_sequence(&self) -> Vec<u32> {
        self.inner.degree_sequence().terms().to_vec()
    }

    /// The subgraph induced by the given vertices, relabeled 0..len.
    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        let n = self.inner.n();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(PyValueError::new_err(format!(
                "vertex {v} out of range for n = {n}"
            )));
        }
        Ok(Self {
            inner: self.inner.induced(&vertices),
        })
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_json(&self) -> String {
        self.inner.to_adjacency_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: SimpleGraph::from_adjacency_json(text).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// True when `pattern` occurs as a (not necessarily induced) subgraph.
#[pyfunction]
fn subgraph_contains(host: &PyGraph, pattern: &PyGraph) -> bool {
    twotrees::graph::subgraph_contains(&host.inner, &pattern.inner)
}

/// An injective vertex map carrying pattern edges onto host edges, or None.
#[pyfunction]
fn subgraph_embedding(host: &PyGraph, pattern: &PyGraph) -> Option<Vec<usize>> {
    twotrees::graph::subgraph_embedding(&host.inner, &pattern.inner).map(|e| e.map)
}

#[pyfunction]
fn is_isomorphic(a: &PyGraph, b: &PyGraph) -> bool {
    twotrees::graph::is_isomorphic(&a.inner, &b.inner)
}

#[pyfunction]
fn is_two_tree(g: &PyGraph) -> bool {
    twotrees::twotree::is_two_tree(&g.inner)
}

/// All 2-trees on k vertices (3 ≤ k ≤ 10), in canonical-key order.
#[pyfunction]
fn enumerate_two_trees(k: usize) -> PyResult<Vec<PyGraph>> {
    Ok(twotrees::twotree::enumerate_two_trees(k)
        .map_err(err)?
        .iter()
        .map(|g| PyGraph { inner: g.clone() })
        .collect())
}

/// The 2-tree K2 ∨ (k−2 isolated vertices): every ear on one edge.
#[pyfunction]
fn make_t(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: twotrees::twotree::make_t(k).map_err(err)?,
    })
}

/// The path-like 2-tree, degree sequence (4^{k−4}, 3, 3, 2, 2) for k ≥ 6.
#[pyfunction]
fn make_f(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: twotrees::twotree::make_f(k).map_err(err)?,
    })
}

/// The universal host graph for k-vertex 2-trees.
#[pyfunction]
fn universal_host(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: twotrees::hosts::universal_host_graph(k).map_err(err)?,
    })
}

/// The 7-vertex auxiliary graph containing every 7-vertex 2-tree except
/// the doubly-dominated one.
#[pyfunction]
fn make_m() -> PyGraph {
    PyGraph {
        inner: twotrees::hosts::make_m().graph,
    }
}

/// Checks that every 2-tree on k vertices embeds into the host for k;
/// returns the list of missing catalog indices (empty means pass).
#[pyfunction]
fn verify_universal(k: usize) -> PyResult<Vec<usize>> {
    Ok(twotrees::hosts::verify_universal(k).map_err(err)?.missing)
}

/// Host self-similarity: deleting {v1, v2, x1} from the host for k yields
/// the host for k−3 (M when k = 10).
#[pyfunction]
fn host_recursion_check(k: usize) -> PyResult<bool> {
    twotrees::hosts::host_recursion_check(k).map_err(err)
}

/// Degree-sum thresholds and the vertex floor N(k), as a dict.
#[pyfunction]
fn thresholds(py: Python<'_>, k: u32, n: u64) -> PyResult<Py<PyDict>> {
    let t = twotrees::degseq::thresholds(k, n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("k", t.k)?;
    d.set_item("n", t.n)?;
    d.set_item("residue", t.residue)?;
    d.set_item("bound_a", t.bound_a)?;
    d.set_item("bound_b", t.bound_b)?;
    d.set_item("effective", t.effective)?;
    d.set_item("n_min", t.n_min)?;
    Ok(d.into())
}

/// Head-shape case label "a".."g" for the sequence at order k.
#[pyfunction]
fn classify_case(seq: &PySequence, k: usize) -> PyResult<String> {
    let c = twotrees::potential::classify_case(&seq.inner, k).map_err(err)?;
    Ok(c.label.as_char().to_string())
}

/// Runs the reduction chain and reconstruction; returns the realization
/// and the embedding of the universal host into its first k vertices.
#[pyfunction]
fn chain_pipeline(seq: &PySequence, k: usize) -> PyResult<(PyGraph, Vec<usize>)> {
    let (g, _trace, emb) = twotrees::potential::chain_pipeline(&seq.inner, k).map_err(err)?;
    Ok((PyGraph { inner: g }, emb.map))
}

/// Builds a realization whose top-k slots carry every 2-tree on k vertices.
#[pyfunction]
fn construct_realization(seq: &PySequence, k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: twotrees::potential::construct_realization_all_two_trees(&seq.inner, k)
            .map_err(err)?,
    })
}

/// mode "strong": one realization contains every k-vertex 2-tree;
/// mode "weak": each 2-tree is contained in some realization.
#[pyfunction]
fn potential_check(seq: &PySequence, k: usize, mode: &str) -> PyResult<bool> {
    let m = match mode {
        "strong" => CheckMode::Strong,
        "weak" => CheckMode::Weak,
        other => {
            return Err(PyValueError::new_err(format!(
                "mode must be \"strong\" or \"weak\", got \"{other}\""
            )))
        }
    };
    twotrees::potential::potential_check(&seq.inner, k, m).map_err(err)
}

/// Theorem-level verification; returns the JSON-lines report (one entry
/// per checked sequence followed by no summary). mode "exhaustive" checks
/// every graphic sequence above the threshold (n ≤ 12); mode "sampled"
/// draws `samples` seeded hypothesis-satisfying sequences.
#[pyfunction]
#[pyo3(signature = (k, n, mode, samples = 200, seed = 0))]
fn verify_theorem(k: usize, n: usize, mode: &str, samples: usize, seed: u64) -> PyResult<String> {
    let m = match mode {
        "exhaustive" => VerifyMode::Exhaustive,
        "sampled" => VerifyMode::Sampled,
        other => {
            return Err(PyValueError::new_err(format!(
                "mode must be \"exhaustive\" or \"sampled\", got \"{other}\""
            )))
        }
    };
    let report = twotrees::potential::verify_theorem(k, n, m, samples, seed).map_err(err)?;
    if !report.ok() {
        return Err(PyValueError::new_err(format!(
            "falsification: {} of {} checks failed\n{}",
            report.checked - report.passed,
            report.checked,
            report.to_json_lines()
        )));
    }
    Ok(report.to_json_lines())
}

/// The just-below-threshold sequence (n−1, (k−2)^{n−1}) as (text, sigma,
/// adjusted); `adjusted` marks the parity fix on the last term.
#[pyfunction]
fn extremal_example(k: usize, n: usize) -> PyResult<(String, u64, bool)> {
    let e = twotrees::potential::extremal_example(k, n).map_err(err)?;
    Ok((e.seq.to_string(), e.sigma, e.adjusted))
}

/// All case labels, for iteration from Python.
#[pyfunction]
fn case_labels() -> Vec<String> {
    [
        CaseLabel::A,
        CaseLabel::B,
        CaseLabel::C,
        CaseLabel::D,
        CaseLabel::E,
        CaseLabel::F,
        CaseLabel::G,
    ]
    .iter()
    .map(|c| c.as_char().to_string())
    .collect()
}

#[pymodule]
fn twotrees_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySequence>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(subgraph_contains, m)?)?;
    m.add_function(wrap_pyfunction!(subgraph_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(is_two_tree, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_two_trees, m)?)?;
    m.add_function(wrap_pyfunction!(make_t, m)?)?;
    m.add_function(wrap_pyfunction!(make_f, m)?)?;
    m.add_function(wrap_pyfunction!(universal_host, m)?)?;
    m.add_function(wrap_pyfunction!(make_m, m)?)?;
    m.add_function(wrap_pyfunction!(verify_universal, m)?)?;
    m.add_function(wrap_pyfunction!(host_recursion_check, m)?)?;
    m.add_function(wrap_pyfunction!(thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(classify_case, m)?)?;
    m.add_function(wrap_pyfunction!(chain_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(construct_realization, m)?)?;
    m.add_function(wrap_pyfunction!(potential_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_example, m)?)?;
    m.add_function(wrap_pyfunction!(case_labels, m)?)?;
    Ok(())
}
