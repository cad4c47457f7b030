//! Python bindings: `Graph` and `Embedding` classes plus the solvers,
//! validator, renderer, and text formats, in a module named `bookemb_py`.
//!
//! Spine orders cross the boundary as plain lists of vertex ids; page
//! assignments as `((u, v), page)` tuples with 1-based pages.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bookemb::doc::EmbeddingDoc;
use bookemb::{gen, kernel, oracle, parse};
use bookemb::{BookEmbedding, Graph, LinearOrder, PageAssignment};

/// A crossing: two edges, each written with its spine-left endpoint first.
type CrossingPair = ((usize, usize), (usize, usize));

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_order(n: usize, perm: Vec<usize>) -> PyResult<LinearOrder> {
    let order = LinearOrder::new(perm).map_err(value_err)?;
    if order.len() != n {
        return Err(value_err(format!(
            "order has {} entries for a graph on {} vertices",
            order.len(),
            n
        )));
    }
    Ok(order)
}

/// An undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: Graph::new(n, edges).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph { inner: gen::complete(n) }
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> Self {
        PyGraph { inner: gen::complete_bipartite(a, b) }
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph { inner: gen::path(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        PyGraph { inner: gen::cycle(n) }
    }

    #[staticmethod]
    fn random(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(value_err(format!("edge probability {p} is not in [0, 1]")));
        }
        Ok(PyGraph { inner: gen::random_graph(n, p, seed) })
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// A spine order plus a page assignment.
#[pyclass(name = "Embedding", frozen)]
#[derive(Clone)]
struct PyEmbedding {
    inner: BookEmbedding,
}

impl PyEmbedding {
    fn wrap(order: LinearOrder, assignment: PageAssignment) -> Self {
        PyEmbedding { inner: BookEmbedding::new(order, assignment) }
    }
}

#[pymethods]
impl PyEmbedding {
    #[new]
    fn new(order: Vec<usize>, pages: Vec<((usize, usize), usize)>, k: usize) -> PyResult<Self> {
        let order = LinearOrder::new(order).map_err(value_err)?;
        Ok(PyEmbedding::wrap(order, PageAssignment::new(k, pages)))
    }

    #[getter]
    fn order(&self) -> Vec<usize> {
        self.inner.order.perm().to_vec()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.assignment.k()
    }

    /// `((u, v), page)` tuples in sorted edge order, pages 1-based.
    fn pages(&self) -> Vec<((usize, usize), usize)> {
        self.inner.assignment.iter().collect()
    }

    fn page(&self, u: usize, v: usize) -> Option<usize> {
        self.inner.assignment.page(u, v)
    }

    fn pages_used(&self) -> usize {
        self.inner.assignment.pages_used()
    }

    fn __repr__(&self) -> String {
        format!(
            "Embedding(n={}, k={}, edges={})",
            self.inner.order.len(),
            self.inner.assignment.k(),
            self.inner.assignment.len()
        )
    }
}

fn run_fixed_order(
    g: &Graph,
    order: &LinearOrder,
    k: usize,
    algo: &str,
) -> PyResult<Option<PageAssignment>> {
    let algo = match algo {
        "auto" => {
            let tau = bookemb::cover::minimum_vertex_cover(g).len();
            let kappa = bookemb::guard_profile(g, order).pathwidth();
            if tau <= kappa { "vc" } else { "pw" }
        }
        other => other,
    };
    match algo {
        "vc" => Ok(bookemb::fixed_order_vc::solve_fixed_order_vc(g, order, k)),
        "pw" => Ok(bookemb::fixed_order_pw::solve_fixed_order_pw(g, order, k)),
        "oracle" => Ok(oracle::fobt_oracle(g, order, k)),
        other => Err(value_err(format!("unknown algorithm {other:?}; use vc, pw, oracle, or auto"))),
    }
}

/// Embed with at most `k` pages under the given spine order, or `None`.
#[pyfunction]
#[pyo3(signature = (g, order, k, algo = "auto"))]
fn solve_fixed_order(
    g: &PyGraph,
    order: Vec<usize>,
    k: usize,
    algo: &str,
) -> PyResult<Option<PyEmbedding>> {
    let order = to_order(g.inner.n(), order)?;
    let asg = run_fixed_order(&g.inner, &order, k, algo)?;
    Ok(asg.map(|a| PyEmbedding::wrap(order, a)))
}

/// Fewest pages under the given spine order, with a witness embedding.
#[pyfunction]
#[pyo3(signature = (g, order, algo = "auto"))]
fn min_pages_fixed_order(
    g: &PyGraph,
    order: Vec<usize>,
    algo: &str,
) -> PyResult<(usize, PyEmbedding)> {
    let order = to_order(g.inner.n(), order)?;
    for k in 0..=g.inner.m() {
        if let Some(a) = run_fixed_order(&g.inner, &order, k, algo)? {
            return Ok((k, PyEmbedding::wrap(order, a)));
        }
    }
    unreachable!("every graph embeds with one page per edge")
}

/// Embed with at most `k` pages under a spine order of the solver's choice.
#[pyfunction]
fn solve_book_thickness(g: &PyGraph, k: usize) -> Option<PyEmbedding> {
    kernel::solve_bt(&g.inner, k).map(|emb| PyEmbedding { inner: emb })
}

/// Book thickness with a witness embedding.
#[pyfunction]
fn min_pages_book_thickness(g: &PyGraph) -> (usize, PyEmbedding) {
    let (k, emb) = kernel::min_pages_bt(&g.inner);
    (k, PyEmbedding { inner: emb })
}

/// Same-page crossing pairs, endpoint pairs in spine order; empty means the
/// embedding is valid. Raises on structural problems (missing edges, bad
/// pages).
#[pyfunction]
fn validate(g: &PyGraph, emb: &PyEmbedding) -> PyResult<Vec<CrossingPair>> {
    let report = oracle::validate(&g.inner, &emb.inner).map_err(value_err)?;
    Ok(report.violations)
}

/// Arc diagram of the embedding as an SVG string.
#[pyfunction]
fn render_svg(g: &PyGraph, emb: &PyEmbedding) -> PyResult<String> {
    // structural validity only; an embedding with crossings still renders
    oracle::validate(&g.inner, &emb.inner).map_err(value_err)?;
    Ok(bookemb::render::render_svg(&g.inner, &emb.inner))
}

/// Smallest vertex cover size (the parameter the cover solver branches on).
#[pyfunction]
fn vertex_cover_number(g: &PyGraph) -> usize {
    bookemb::cover::minimum_vertex_cover(&g.inner).len()
}

/// Largest guard set of the pair (the parameter the width solver tracks).
#[pyfunction]
fn pathwidth(g: &PyGraph, order: Vec<usize>) -> PyResult<usize> {
    let order = to_order(g.inner.n(), order)?;
    Ok(bookemb::guard_profile(&g.inner, &order).pathwidth())
}

/// Parse the line-oriented graph text format; returns the graph and the
/// order list if an `order` line is present.
#[pyfunction]
fn parse_graph(text: &str) -> PyResult<(PyGraph, Option<Vec<usize>>)> {
    let (g, order) = parse::parse_graph(text).map_err(value_err)?;
    Ok((PyGraph { inner: g }, order.map(|o| o.perm().to_vec())))
}

/// Write a graph (and optional order) in the text format.
#[pyfunction]
#[pyo3(signature = (g, order = None))]
fn format_graph(g: &PyGraph, order: Option<Vec<usize>>) -> PyResult<String> {
    let order = order.map(|o| to_order(g.inner.n(), o)).transpose()?;
    Ok(parse::format_graph(&g.inner, order.as_ref()))
}

/// Serialize an embedding of `g` as an embedding document (JSON).
#[pyfunction]
fn to_json(g: &PyGraph, emb: &PyEmbedding) -> String {
    EmbeddingDoc::from_embedding(&g.inner, &emb.inner).to_json()
}

/// Parse an embedding document; returns the implied graph and the embedding.
#[pyfunction]
fn from_json(text: &str) -> PyResult<(PyGraph, PyEmbedding)> {
    let doc = EmbeddingDoc::from_json(text).map_err(value_err)?;
    let (g, emb) = doc.into_parts().map_err(value_err)?;
    Ok((PyGraph { inner: g }, PyEmbedding { inner: emb }))
}

#[pymodule]
fn bookemb_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyEmbedding>()?;
    m.add_function(wrap_pyfunction!(solve_fixed_order, m)?)?;
    m.add_function(wrap_pyfunction!(min_pages_fixed_order, m)?)?;
    m.add_function(wrap_pyfunction!(solve_book_thickness, m)?)?;
    m.add_function(wrap_pyfunction!(min_pages_book_thickness, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_cover_number, m)?)?;
    m.add_function(wrap_pyfunction!(pathwidth, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(format_graph, m)?)?;
    m.add_function(wrap_pyfunction!(to_json, m)?)?;
    m.add_function(wrap_pyfunction!(from_json, m)?)?;
    Ok(())
}
