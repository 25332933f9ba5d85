//! Python module `polyhelly`: polyominoes, enumeration and Helly numbers.
//!
//! Certificates cross the boundary as JSON strings in the same layout the
//! command-line tool writes.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::polyhelly as engine_lib;
use engine_lib::engine::check_certificate;
use engine_lib::{enumerate, structures, CertificateFile};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Polyomino", module = "polyhelly", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPolyomino {
    inner: engine_lib::Polyomino,
}

#[pymethods]
impl PyPolyomino {
    /// Build from `(x, y)` pairs; the shape is translated to the origin.
    #[new]
    fn new(cells: Vec<(i32, i32)>) -> PyResult<Self> {
        engine_lib::Polyomino::new(cells).map(|inner| PyPolyomino { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn rectangle(width: i32, height: i32) -> PyResult<Self> {
        engine_lib::Polyomino::rectangle(width, height).map(|inner| PyPolyomino { inner }).map_err(value_err)
    }

    fn cells(&self) -> Vec<(i32, i32)> {
        self.inner.cells().iter().map(|c| (c.x, c.y)).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn width(&self) -> i32 {
        self.inner.width()
    }

    #[getter]
    fn height(&self) -> i32 {
        self.inner.height()
    }

    fn canonical(&self) -> Self {
        PyPolyomino { inner: self.inner.canonical() }
    }

    fn is_rectangle(&self) -> bool {
        self.inner.is_rectangle()
    }

    fn is_convex_lattice(&self) -> bool {
        self.inner.is_convex_lattice()
    }

    fn render(&self) -> String {
        self.inner.render_ascii()
    }

    fn __repr__(&self) -> String {
        format!("Polyomino({:?})", self.cells())
    }
}

/// Returns `(helly_number, certificate_json, shortcut)`.
#[pyfunction]
fn helly_number(py: Python<'_>, p: &PyPolyomino) -> PyResult<(usize, String, &'static str)> {
    let inner = p.inner.clone();
    let r = py.detach(move || engine_lib::helly_number(&inner)).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok((r.helly_number, r.certificate.to_json(), r.shortcut.tag()))
}

/// Free polyominoes with exactly `n` cells.
#[pyfunction]
fn enumerate_free(n: usize) -> PyResult<Vec<PyPolyomino>> {
    Ok(enumerate::enumerate_free(n).map_err(value_err)?.map(|inner| PyPolyomino { inner }).collect())
}

/// `(n, free_count)` for every size up to `max_n`.
#[pyfunction]
fn count_by_size(max_n: usize) -> PyResult<Vec<(usize, usize)>> {
    enumerate::count_by_size(max_n).map_err(value_err)
}

#[pyfunction]
fn make_fq(q: usize) -> PyResult<PyPolyomino> {
    structures::make_fq(q).map(|inner| PyPolyomino { inner }).map_err(value_err)
}

/// Witness family for `F_q` as certificate JSON.
#[pyfunction]
fn fq_witness(q: usize) -> PyResult<String> {
    structures::fq_witness(q).map(|c| c.to_json()).map_err(value_err)
}

/// `None` when the certificate holds, otherwise the reason it fails.
/// Malformed JSON raises `ValueError`.
#[pyfunction]
fn verify_certificate(json: &str) -> PyResult<Option<String>> {
    let file = CertificateFile::parse(json).map_err(value_err)?;
    let cert = match file.into_certificate() {
        Ok(c) => c,
        Err(reason) => return Ok(Some(reason)),
    };
    Ok(check_certificate(&cert).err().map(|v| v.to_string()))
}

#[pymodule]
#[pyo3(name = "polyhelly")]
fn polyhelly_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolyomino>()?;
    m.add_function(wrap_pyfunction!(helly_number, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_free, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_size, m)?)?;
    m.add_function(wrap_pyfunction!(make_fq, m)?)?;
    m.add_function(wrap_pyfunction!(fq_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    Ok(())
}
