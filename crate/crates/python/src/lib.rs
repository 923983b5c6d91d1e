//! Python bindings. Every wrapper holds an immutable library value; results
//! that are plain records (classification reports, families) cross over as
//! dicts built from their JSON encoding.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use sgdouble::doubles;
use sgdouble::duplication;
use sgdouble::ideal;
use sgdouble::{ClassifyMethod, DoubleCertificate, DuplicationSpec, NumericalSemigroup, RelativeIdeal};

create_exception!(sgdouble, SgdoubleError, PyValueError, "Domain error raised by sgdouble.");

fn err(e: sgdouble::Error) -> PyErr {
    SgdoubleError::new_err(format!("{}: {e}", e.kind()))
}

fn to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn method(name: &str) -> PyResult<ClassifyMethod> {
    match name {
        "definition" => Ok(ClassifyMethod::Definition),
        "biconditional" => Ok(ClassifyMethod::Biconditional),
        "pairing" => Ok(ClassifyMethod::Pairing),
        "all" => Ok(ClassifyMethod::All),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

#[pyclass(name = "NumericalSemigroup", module = "sgdouble", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySemigroup(NumericalSemigroup);

#[pymethods]
impl PySemigroup {
    #[new]
    fn new(small: Vec<i64>, conductor: i64) -> PyResult<Self> {
        NumericalSemigroup::from_small_elements(&small, conductor).map(Self).map_err(err)
    }

    #[classmethod]
    fn from_generators(_cls: &Bound<'_, PyType>, gens: Vec<i64>) -> PyResult<Self> {
        NumericalSemigroup::from_generators(&gens).map(Self).map_err(err)
    }

    #[classmethod]
    fn naturals(_cls: &Bound<'_, PyType>) -> Self {
        Self(NumericalSemigroup::naturals())
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Self).map_err(|e| SgdoubleError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[getter]
    fn small_elements(&self) -> Vec<i64> {
        self.0.small_elements().to_vec()
    }

    #[getter]
    fn conductor(&self) -> i64 {
        self.0.conductor()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    #[getter]
    fn multiplicity(&self) -> i64 {
        self.0.multiplicity()
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    fn __contains__(&self, x: i64) -> bool {
        self.0.contains(x)
    }

    fn gaps(&self) -> Vec<i64> {
        self.0.gaps()
    }

    fn second_type_gaps(&self) -> Vec<i64> {
        self.0.second_type_gaps()
    }

    fn minimal_generators(&self) -> Vec<i64> {
        self.0.minimal_generators()
    }

    fn pseudo_frobenius(&self) -> Vec<i64> {
        self.0.pseudo_frobenius()
    }

    fn type_number(&self) -> usize {
        self.0.type_number()
    }

    #[pyo3(signature = (method_name = "all"))]
    fn is_almost_symmetric(&self, method_name: &str) -> PyResult<bool> {
        Ok(self.0.is_almost_symmetric(method(method_name)?))
    }

    /// Classification report as a dict.
    #[pyo3(signature = (method_name = "all"))]
    fn classify(&self, py: Python<'_>, method_name: &str) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.classify(method(method_name)?))
    }

    fn __repr__(&self) -> String {
        format!("NumericalSemigroup({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "RelativeIdeal", module = "sgdouble", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyIdeal(RelativeIdeal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(ambient: &PySemigroup, elements: Vec<i64>, conductor: i64) -> PyResult<Self> {
        RelativeIdeal::new(&ambient.0, &elements, conductor).map(Self).map_err(err)
    }

    #[getter]
    fn ambient(&self) -> PySemigroup {
        PySemigroup(self.0.ambient().clone())
    }

    #[getter]
    fn elements(&self) -> Vec<i64> {
        self.0.elements_below().to_vec()
    }

    #[getter]
    fn conductor(&self) -> i64 {
        self.0.conductor()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    #[getter]
    fn min(&self) -> i64 {
        self.0.min()
    }

    fn __contains__(&self, x: i64) -> bool {
        self.0.contains(x)
    }

    fn is_subset(&self, other: &PyIdeal) -> bool {
        self.0.is_subset(&other.0)
    }

    fn translate(&self, by: i64) -> Self {
        Self(self.0.translate(by))
    }

    fn __add__(&self, other: &PyIdeal) -> PyResult<Self> {
        self.0.sum(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &PyIdeal) -> PyResult<Self> {
        self.0.difference(&other.0).map(Self).map_err(err)
    }

    fn tilde(&self) -> Self {
        Self(self.0.tilde())
    }

    fn jager_dual(&self) -> Self {
        Self(self.0.jager_dual())
    }

    fn is_canonical(&self) -> bool {
        self.0.is_canonical()
    }

    fn to_semigroup(&self) -> Option<PySemigroup> {
        self.0.to_semigroup().map(PySemigroup)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!("RelativeIdeal({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "DuplicationSpec", module = "sgdouble", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySpec(DuplicationSpec);

#[pymethods]
impl PySpec {
    #[new]
    fn new(ideal: &PyIdeal, b: i64) -> PyResult<Self> {
        DuplicationSpec::new(ideal.0.clone(), b).map(Self).map_err(err)
    }

    #[getter]
    fn base(&self) -> PySemigroup {
        PySemigroup(self.0.base().clone())
    }

    #[getter]
    fn ideal(&self) -> PyIdeal {
        PyIdeal(self.0.ideal().clone())
    }

    #[getter]
    fn b(&self) -> i64 {
        self.0.b()
    }

    fn duplicate(&self) -> PySemigroup {
        PySemigroup(self.0.duplicate())
    }

    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    fn canonical_ideal(&self) -> PyIdeal {
        PyIdeal(self.0.canonical_ideal())
    }

    fn normalized(&self) -> Self {
        Self(self.0.normalized())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!("DuplicationSpec(E={}, b={})", self.0.ideal(), self.0.b())
    }
}

#[pyclass(name = "DoubleCertificate", module = "sgdouble", frozen)]
struct PyCertificate(DoubleCertificate);

#[pymethods]
impl PyCertificate {
    #[getter]
    fn double(&self) -> PySemigroup {
        PySemigroup(self.0.double.clone())
    }

    #[getter]
    fn spec(&self) -> PySpec {
        PySpec(self.0.spec.clone())
    }

    #[getter]
    fn symmetry_class(&self) -> &'static str {
        self.0.report.symmetry_class.as_str()
    }

    #[getter]
    fn type_number(&self) -> usize {
        self.0.report.type_number
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "DoubleCertificate(T={}, class={}, type={})",
            self.0.double, self.0.report.symmetry_class, self.0.report.type_number
        )
    }
}

fn certificates(family: sgdouble::DoubleFamily) -> Vec<PyCertificate> {
    family.members.into_iter().map(PyCertificate).collect()
}

#[pyfunction]
fn half(t: &PySemigroup) -> PySemigroup {
    PySemigroup(duplication::half(&t.0))
}

#[pyfunction]
fn decompose(t: &PySemigroup, b: i64) -> PyResult<PySpec> {
    duplication::decompose(&t.0, b).map(PySpec).map_err(err)
}

#[pyfunction]
fn maximal_ideal(s: &PySemigroup) -> PyIdeal {
    PyIdeal(ideal::maximal_ideal(&s.0))
}

#[pyfunction]
fn canonical_ideal(s: &PySemigroup) -> PyIdeal {
    PyIdeal(ideal::canonical_ideal(&s.0))
}

#[pyfunction]
fn ideals_containing_zero(s: &PySemigroup, frobenius: i64) -> Vec<PyIdeal> {
    ideal::ideals_containing_zero(&s.0, frobenius).into_iter().map(PyIdeal).collect()
}

#[pyfunction]
fn enumerate_even_doubles(py: Python<'_>, s: &PySemigroup) -> Vec<PyCertificate> {
    py.detach(|| certificates(doubles::enumerate_even_doubles(&s.0)))
}

#[pyfunction]
fn enumerate_odd_doubles(py: Python<'_>, s: &PySemigroup, max_frobenius: i64) -> PyResult<Vec<PyCertificate>> {
    py.detach(|| doubles::enumerate_odd_doubles(&s.0, max_frobenius))
        .map(certificates)
        .map_err(err)
}

#[pyfunction]
fn enumerate_symmetric_doubles(py: Python<'_>, s: &PySemigroup, max_frobenius: i64) -> PyResult<Vec<PyCertificate>> {
    py.detach(|| doubles::enumerate_symmetric_doubles(&s.0, max_frobenius))
        .map(certificates)
        .map_err(err)
}

#[pyfunction]
fn witness_even_double(s: &PySemigroup) -> PyResult<PySpec> {
    doubles::witness_even_double(&s.0).map(PySpec).map_err(err)
}

#[pyfunction]
fn symmetric_double_check(spec: &PySpec) -> bool {
    doubles::symmetric_double_check(&spec.0)
}

#[pyfunction]
fn odd_double_check(spec: &PySpec) -> bool {
    doubles::odd_double_check(&spec.0)
}

#[pyfunction]
fn even_double_check(spec: &PySpec) -> PyResult<bool> {
    doubles::even_double_check(&spec.0).map_err(err)
}

#[pymodule]
#[pyo3(name = "sgdouble")]
fn sgdouble_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SgdoubleError", m.py().get_type::<SgdoubleError>())?;
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PySpec>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(half, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(ideals_containing_zero, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_even_doubles, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_odd_doubles, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_symmetric_doubles, m)?)?;
    m.add_function(wrap_pyfunction!(witness_even_double, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_double_check, m)?)?;
    m.add_function(wrap_pyfunction!(odd_double_check, m)?)?;
    m.add_function(wrap_pyfunction!(even_double_check, m)?)?;
    Ok(())
}
