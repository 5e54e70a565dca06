//! Python bindings: `import nlrep`.

use std::sync::OnceLock;

use nlrep::detection::{verify_even_theorem, verify_odd_theorem};
use nlrep::partitions::classify;
use nlrep::tableaux::enumerate_lr_tableaux;
use nlrep::{Error, Family, GroupSpec, LrCache, SkewShape};
use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};

fn cache() -> &'static LrCache {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    CACHE.get_or_init(LrCache::new)
}

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::Overflow => PyOverflowError::new_err(err.to_string()),
        Error::Invariant(_) => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

/// An integer partition. Accepts the shorthand `"4^2,3,1^2"` or a sequence
/// of parts.
#[pyclass(frozen, eq, hash, ord, skip_from_py_object, module = "nlrep")]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(nlrep::Partition);

#[pymethods]
impl Partition {
    #[new]
    fn py_new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        extract_partition(value).map(Partition)
    }

    #[getter]
    fn parts<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        PyTuple::new(py, self.0.parts())
    }

    #[getter]
    fn size(&self) -> u32 {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.length()
    }

    fn conjugate(&self) -> Partition {
        Partition(self.0.conjugate())
    }

    fn contains(&self, other: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(extract_partition(other)?.is_contained_in(&self.0))
    }

    /// Family letters `a`..`d` this partition belongs to.
    fn families(&self) -> Vec<String> {
        classify(&self.0).iter().map(|f| f.letter().to_string()).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0.render())
    }
}

fn extract_partition(value: &Bound<'_, PyAny>) -> PyResult<nlrep::Partition> {
    if let Ok(p) = value.cast::<Partition>() {
        return Ok(p.get().0.clone());
    }
    if let Ok(s) = value.extract::<String>() {
        return nlrep::Partition::parse(&s).map_err(to_py_err);
    }
    let parts: Vec<u32> = value
        .extract()
        .map_err(|_| PyValueError::new_err("expected a Partition, a string or a sequence of non-negative ints"))?;
    nlrep::Partition::new(parts).map_err(to_py_err)
}

fn parts_tuple<'py>(py: Python<'py>, p: &nlrep::Partition) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, p.parts())
}

/// `c^nu_{lambda mu}`.
#[pyfunction]
fn lr_coefficient(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>) -> PyResult<u64> {
    let (l, m, n) = (extract_partition(lam)?, extract_partition(mu)?, extract_partition(nu)?);
    lam.py()
        .detach(|| cache().get(&l, &m, &n))
        .map(|c| c.value())
        .map_err(to_py_err)
}

/// `N^nu_{lambda mu}`.
#[pyfunction]
fn nl_coefficient(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>) -> PyResult<u64> {
    let (l, m, n) = (extract_partition(lam)?, extract_partition(mu)?, extract_partition(nu)?);
    lam.py()
        .detach(|| nlrep::nl_coefficient(&l, &m, &n, cache()))
        .map(|c| c.value())
        .map_err(to_py_err)
}

/// LR tableaux of shape `outer/inner` and the given content, each as a list
/// of rows holding the skew entries.
#[pyfunction]
fn lr_tableaux(outer: &Bound<'_, PyAny>, inner: &Bound<'_, PyAny>, content: &Bound<'_, PyAny>) -> PyResult<Vec<Vec<Vec<u32>>>> {
    let shape = SkewShape::new(extract_partition(outer)?, extract_partition(inner)?).map_err(to_py_err)?;
    let content = extract_partition(content)?;
    Ok(enumerate_lr_tableaux(&shape, &content)
        .into_iter()
        .map(|t| t.rows().to_vec())
        .collect())
}

/// Tensor product decomposition for family `"B"`, `"C"` or `"D"` at rank `n`.
/// Returns `{"terms": {parts: mult}, "inadmissible": {...}, "stable": bool}`.
#[pyfunction]
fn tensor_decompose<'py>(
    lam: &Bound<'py, PyAny>,
    mu: &Bound<'py, PyAny>,
    family: &str,
    rank: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let py = lam.py();
    let family: Family = family.parse().map_err(to_py_err)?;
    let group = GroupSpec::new(family, rank).map_err(to_py_err)?;
    let (l, m) = (extract_partition(lam)?, extract_partition(mu)?);
    let result = py.detach(|| nlrep::tensor_decompose(&l, &m, group, cache())).map_err(to_py_err)?;
    let as_dict = |terms: &[(nlrep::Partition, nlrep::Coefficient)]| -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (nu, c) in terms {
            d.set_item(parts_tuple(py, nu)?, c.value())?;
        }
        Ok(d)
    };
    let out = PyDict::new(py);
    out.set_item("group", group.to_string())?;
    out.set_item("terms", as_dict(&result.terms)?)?;
    out.set_item("inadmissible", as_dict(&result.inadmissible)?)?;
    out.set_item("stable", result.stable)?;
    Ok(out)
}

/// Detection verdict for `lam`: `N`, `detected`, `families` and, when a
/// family applies, the witness `(alpha, beta, gamma)`.
#[pyfunction]
fn detects<'py>(lam: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    let py = lam.py();
    let l = extract_partition(lam)?;
    let v = py.detach(|| nlrep::detects(&l, cache())).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("lambda", parts_tuple(py, &v.lambda)?)?;
    out.set_item("N", v.n_lambda_lambda_lambda.value())?;
    out.set_item("detected", v.detected)?;
    let families: Vec<String> = v.matched_families.iter().map(|f| f.letter().to_string()).collect();
    out.set_item("families", families)?;
    match &v.witness {
        Some(w) => {
            let triple = PyTuple::new(py, [parts_tuple(py, &w.alpha)?, parts_tuple(py, &w.beta)?, parts_tuple(py, &w.gamma)?])?;
            out.set_item("witness", triple)?;
            out.set_item("path", w.path())?;
            let words = PyList::empty(py);
            for cert in &w.certificates {
                words.append(cert.tableau.word().0.clone())?;
            }
            out.set_item("words", words)?;
        }
        None => out.set_item("witness", py.None())?,
    }
    Ok(out)
}

/// Odd-size sweep; returns `{"total", "failures", "counterexamples"}`.
#[pyfunction]
#[pyo3(signature = (max_size=11, jobs=None))]
fn verify_odd(py: Python<'_>, max_size: u32, jobs: Option<usize>) -> PyResult<Bound<'_, PyDict>> {
    let report = py.detach(|| verify_odd_theorem(max_size, cache(), jobs)).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("total", report.total_checked())?;
    out.set_item("failures", report.counterexamples.len())?;
    let bad: Vec<Vec<u32>> = report.counterexamples.iter().map(|p| p.parts().to_vec()).collect();
    out.set_item("counterexamples", bad)?;
    Ok(out)
}

/// Even-size sweep; returns `{"classified", "family_tally", "unclassified", "failures"}`.
#[pyfunction]
#[pyo3(signature = (max_size=10, jobs=None))]
fn verify_even(py: Python<'_>, max_size: u32, jobs: Option<usize>) -> PyResult<Bound<'_, PyDict>> {
    let report = py.detach(|| verify_even_theorem(max_size, cache(), jobs)).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("classified", report.classified)?;
    let tally = PyDict::new(py);
    for (k, v) in &report.family_tally {
        tally.set_item(k.to_string(), v)?;
    }
    out.set_item("family_tally", tally)?;
    out.set_item("unclassified", report.unclassified.len())?;
    out.set_item("failures", report.failures.len())?;
    Ok(out)
}

#[pymodule]
#[pyo3(name = "nlrep")]
fn nlrep_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(nl_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(lr_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(detects, m)?)?;
    m.add_function(wrap_pyfunction!(verify_odd, m)?)?;
    m.add_function(wrap_pyfunction!(verify_even, m)?)?;
    Ok(())
}
