//! Python bindings: the diagram type plus the main pipeline entry points.
//! Reports that aggregate many fields cross the boundary as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use knotscope::analyze::{analyze_diagram, verify_main_theorem};
use knotscope::corpus::{bundled_corpus_path, corpus_run, load_corpus, ALL_CHECKS};
use knotscope::seifert::{murasugi_decompose, murasugi_desum, SeifertData};

fn err(e: knotscope::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A validated oriented knot or link diagram.
#[pyclass(frozen)]
struct Diagram {
    inner: knotscope::Diagram,
}

#[pymethods]
impl Diagram {
    #[new]
    fn new(pd: &str) -> PyResult<Self> {
        Ok(Diagram { inner: knotscope::Diagram::parse(pd).map_err(err)? })
    }

    #[getter]
    fn crossings(&self) -> usize {
        self.inner.crossing_count()
    }

    #[getter]
    fn components(&self) -> usize {
        self.inner.mu()
    }

    #[getter]
    fn faces(&self) -> usize {
        self.inner.face_count()
    }

    #[getter]
    fn alternating(&self) -> bool {
        self.inner.is_alternating()
    }

    #[getter]
    fn reduced(&self) -> bool {
        self.inner.is_reduced()
    }

    #[getter]
    fn writhe(&self) -> i64 {
        self.inner.writhe()
    }

    fn mirror(&self) -> Diagram {
        Diagram { inner: self.inner.mirror() }
    }

    fn pd(&self) -> String {
        self.inner.pd_code().to_bracket_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram({} crossings, {} components, pd={})",
            self.inner.crossing_count(),
            self.inner.mu(),
            self.inner.pd_code().to_bracket_string()
        )
    }
}

/// Normalized Alexander polynomial coefficients a_{-g}..a_g.
#[pyfunction]
fn alexander(d: &Diagram) -> PyResult<Vec<i64>> {
    Ok(knotscope::alexander::alexander_polynomial(&d.inner).map_err(err)?.coeffs().to_vec())
}

#[pyfunction]
fn genus(d: &Diagram) -> PyResult<i64> {
    Ok(knotscope::alexander::alexander_polynomial(&d.inner).map_err(err)?.genus())
}

#[pyfunction]
fn signature(d: &Diagram) -> PyResult<i64> {
    knotscope::invariants::signature(&d.inner).map_err(err)
}

#[pyfunction]
fn tau(d: &Diagram) -> PyResult<i64> {
    knotscope::invariants::tau(&d.inner).map_err(err)
}

#[pyfunction]
fn is_fibered(d: &Diagram) -> PyResult<bool> {
    Ok(knotscope::alexander::alexander_polynomial(&d.inner).map_err(err)?.is_fibered())
}

#[pyfunction]
fn is_sqp_fibered(d: &Diagram) -> PyResult<bool> {
    knotscope::invariants::is_sqp_fibered(&d.inner).map_err(err)
}

/// (circle count, nested circle ids, special flag).
#[pyfunction]
fn seifert_summary(d: &Diagram) -> PyResult<(usize, Vec<usize>, bool)> {
    let s = SeifertData::new(&d.inner).map_err(err)?;
    Ok((s.circle_count(), s.nested_circles(), s.is_special()))
}

/// Murasugi pieces as diagrams.
#[pyfunction]
fn decompose(d: &Diagram) -> PyResult<Vec<Diagram>> {
    Ok(murasugi_decompose(&d.inner)
        .map_err(err)?
        .into_iter()
        .map(|inner| Diagram { inner })
        .collect())
}

/// The two pieces obtained by splitting along one nested circle.
#[pyfunction]
fn desum(d: &Diagram, circle: usize) -> PyResult<(Diagram, Diagram)> {
    let (a, b) = murasugi_desum(&d.inner, circle).map_err(err)?;
    Ok((Diagram { inner: a }, Diagram { inner: b }))
}

/// Torus summands of a fibered special diagram as (k, sign) pairs.
#[pyfunction]
fn torus_summands(d: &Diagram) -> PyResult<Vec<(usize, String)>> {
    Ok(knotscope::graphs::torus_sum_decomposition(&d.inner)
        .map_err(err)?
        .into_iter()
        .map(|t| (t.k, t.sign.symbol().to_string()))
        .collect())
}

/// The full analysis report as a JSON string.
#[pyfunction]
#[pyo3(signature = (d, name = "input"))]
fn analyze_json(d: &Diagram, name: &str) -> PyResult<String> {
    let report = analyze_diagram(name, &d.inner).map_err(err)?;
    Ok(report.to_json().to_string())
}

/// The torus-knot characterization verdict as a JSON string.
#[pyfunction]
#[pyo3(signature = (d, name = "input"))]
fn theorem_json(d: &Diagram, name: &str) -> PyResult<String> {
    let report = verify_main_theorem(name, &d.inner).map_err(err)?;
    Ok(report.to_json().to_string())
}

/// Path of the bundled corpus CSV.
#[pyfunction]
fn corpus_path() -> String {
    bundled_corpus_path().display().to_string()
}

/// Runs all batch checks over a corpus file; returns (summary text, failures).
#[pyfunction]
#[pyo3(signature = (path, jobs = 0))]
fn run_corpus(path: &str, jobs: usize) -> PyResult<(String, usize)> {
    let load = load_corpus(std::path::Path::new(path), false).map_err(err)?;
    let summary = corpus_run(&load.records, &ALL_CHECKS, jobs);
    Ok((summary.render(), summary.failure_count()))
}

#[pymodule]
fn knotscope_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Diagram>()?;
    m.add_function(wrap_pyfunction!(alexander, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(signature, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(is_fibered, m)?)?;
    m.add_function(wrap_pyfunction!(is_sqp_fibered, m)?)?;
    m.add_function(wrap_pyfunction!(seifert_summary, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(desum, m)?)?;
    m.add_function(wrap_pyfunction!(torus_summands, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_json, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_path, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    Ok(())
}
