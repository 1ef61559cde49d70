//! Python bindings: Euler systems, circuit partitions, and the matrices and
//! checks built from them.

use fourreg::counting::{count_euler_brute, count_euler_det, partition_census, DEFAULT_VERTEX_CAP};
use fourreg::cycles::verify_main_theorem;
use fourreg::interlace::{modified_interlacement, signed_interlacement, standard_form};
use fourreg::report::Report;
use fourreg::touch::touch_graph;
use fourreg::transforms::{kappa, transposition, KappaMove, Side};
use fourreg::{
    label_transitions, parse_euler_on, parse_graph, parse_transitions, CircuitPartition, IntMatrix,
    SignedEulerSystem, TransitionLabel, VertexId,
};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: fourreg::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.rows().map(<[BigInt]>::to_vec).collect()
}

/// A signed Euler system together with its graph.
#[pyclass(name = "EulerSystem", module = "fourreg_py", frozen)]
struct PyEulerSystem {
    inner: SignedEulerSystem,
    name: String,
}

impl PyEulerSystem {
    fn vertex(&self, name: &str) -> PyResult<VertexId> {
        self.inner.graph().vertex_id(name).map_err(value_error)
    }

    fn derived(&self, inner: SignedEulerSystem) -> Self {
        Self {
            inner,
            name: self.name.clone(),
        }
    }
}

#[pymethods]
impl PyEulerSystem {
    /// Parses `dow` or `edge` lines. `name` is what transition files refer
    /// to with `@ name`.
    #[new]
    #[pyo3(signature = (text, name = "C"))]
    fn new(text: &str, name: &str) -> PyResult<Self> {
        let parsed = parse_graph(text).map_err(value_error)?;
        Ok(Self {
            inner: parsed.euler_system(),
            name: name.to_string(),
        })
    }

    /// Another Euler system of the same graph, from `dow` lines.
    fn realize(&self, text: &str) -> PyResult<Self> {
        let c = parse_euler_on(self.inner.graph(), text).map_err(value_error)?;
        Ok(self.derived(c))
    }

    #[getter]
    fn name(&self) -> &str {
        &self.name
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.graph().names().to_vec()
    }

    fn to_dow_text(&self) -> String {
        self.inner.to_dow_text()
    }

    fn interlaced(&self, v: &str, w: &str) -> PyResult<bool> {
        Ok(self.inner.interlaced(self.vertex(v)?, self.vertex(w)?))
    }

    fn flip_sign(&self, v: &str) -> PyResult<Self> {
        Ok(self.derived(self.inner.flip_sign(self.vertex(v)?)))
    }

    /// `C * v`, reversing the first (`"first"`) or second fundamental circuit.
    #[pyo3(signature = (v, side = "first"))]
    fn kappa(&self, v: &str, side: &str) -> PyResult<Self> {
        let side = match side {
            "first" => Side::First,
            "second" => Side::Second,
            other => return Err(PyValueError::new_err(format!("unknown side `{other}`"))),
        };
        let m = KappaMove {
            vertex: self.vertex(v)?,
            side,
        };
        Ok(self.derived(kappa(&self.inner, m)))
    }

    fn transposition(&self, v: &str, w: &str) -> PyResult<Self> {
        let t =
            transposition(&self.inner, self.vertex(v)?, self.vertex(w)?).map_err(value_error)?;
        Ok(self.derived(t))
    }

    fn signed_interlacement(&self) -> Vec<Vec<BigInt>> {
        int_rows(&signed_interlacement(&self.inner))
    }

    /// Euler systems with the same edge directions, as `det(I + I_R(C))`.
    fn count_euler(&self) -> BigInt {
        count_euler_det(&self.inner)
    }

    /// The same count by enumerating all orientation-consistent partitions.
    #[pyo3(signature = (cap = DEFAULT_VERTEX_CAP))]
    fn count_euler_brute(&self, py: Python<'_>, cap: usize) -> PyResult<u64> {
        py.detach(|| count_euler_brute(&self.inner, cap))
            .map_err(value_error)
    }

    /// Number of partitions by circuit count.
    #[pyo3(signature = (cap = DEFAULT_VERTEX_CAP))]
    fn census(&self, py: Python<'_>, cap: usize) -> PyResult<Vec<(usize, u64)>> {
        let c = py
            .detach(|| partition_census(&self.inner, cap))
            .map_err(value_error)?;
        Ok(c.by_size.into_iter().collect())
    }

    /// The partition with the given label (`"phi"`, `"chi"`, `"psi"`) at
    /// each vertex, in vertex order.
    fn partition(&self, labels: Vec<String>) -> PyResult<PyPartition> {
        let labels = labels
            .iter()
            .map(|s| s.parse::<TransitionLabel>().map_err(PyValueError::new_err))
            .collect::<PyResult<Vec<_>>>()?;
        let p = CircuitPartition::from_labels(&self.inner, &labels).map_err(value_error)?;
        Ok(PyPartition { inner: p })
    }

    /// A partition from transition-file text.
    fn parse_partition(&self, text: &str) -> PyResult<PyPartition> {
        let p = parse_transitions(text, self.inner.graph(), Some((&self.name, &self.inner)))
            .map_err(value_error)?;
        Ok(PyPartition { inner: p })
    }

    /// The partition into this system's circuits.
    fn as_partition(&self) -> PyPartition {
        PyPartition {
            inner: CircuitPartition::from_euler_system(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!("EulerSystem({:?})", self.inner.to_dow_text().trim_end())
    }
}

/// A circuit partition of an Euler system's graph.
#[pyclass(name = "Partition", module = "fourreg_py", frozen)]
struct PyPartition {
    inner: CircuitPartition,
}

#[pymethods]
impl PyPartition {
    /// Circuits as vertex-name sequences.
    fn circuits(&self) -> Vec<Vec<String>> {
        let g = self.inner.graph();
        (0..self.inner.len())
            .map(|i| {
                self.inner
                    .circuit_vertices(i)
                    .into_iter()
                    .map(|v| g.name(v).to_string())
                    .collect()
            })
            .collect()
    }

    fn is_euler_system(&self) -> bool {
        self.inner.is_euler_system()
    }

    fn labels(&self, c: &PyEulerSystem) -> PyResult<Vec<String>> {
        Ok(label_transitions(&c.inner, &self.inner)
            .map_err(value_error)?
            .into_iter()
            .map(|l| l.as_str().to_string())
            .collect())
    }

    fn to_transition_text(&self) -> String {
        self.inner.to_transition_text()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// `M0(C, P)` as nested lists of ints.
#[pyfunction]
fn standard_form_matrix(c: &PyEulerSystem, p: &PyPartition) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(int_rows(
        &standard_form(&c.inner, &p.inner).map_err(value_error)?,
    ))
}

/// `M(C, P)` over GF(2) as nested lists of 0 and 1.
#[pyfunction]
fn gf2_matrix(c: &PyEulerSystem, p: &PyPartition) -> PyResult<Vec<Vec<u8>>> {
    let m = modified_interlacement(&c.inner, &p.inner).map_err(value_error)?;
    Ok((0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| u8::from(m.get(i, j))).collect())
        .collect())
}

/// Touch-graph edges as `(vertex, tail, head)` with circuits numbered from 0.
#[pyfunction]
fn touch_edges(c: &PyEulerSystem, p: &PyPartition) -> PyResult<Vec<(String, usize, usize)>> {
    let tg = touch_graph(&p.inner, &c.inner).map_err(value_error)?;
    let g = c.inner.graph();
    Ok(tg
        .edges()
        .iter()
        .map(|e| (g.name(e.vertex).to_string(), e.tail, e.head))
        .collect())
}

fn report_pairs(r: &Report) -> Vec<(String, bool)> {
    r.checks
        .iter()
        .map(|c| (c.name.clone(), c.passed))
        .collect()
}

/// The cycle-space checks for `(C, P)` as `(check, passed)` pairs.
#[pyfunction]
fn verify_main(c: &PyEulerSystem, p: &PyPartition) -> PyResult<Vec<(String, bool)>> {
    Ok(report_pairs(
        &verify_main_theorem(&c.inner, &p.inner).map_err(value_error)?,
    ))
}

#[pymodule]
fn fourreg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEulerSystem>()?;
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(standard_form_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(gf2_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(touch_edges, m)?)?;
    m.add_function(wrap_pyfunction!(verify_main, m)?)?;
    Ok(())
}
