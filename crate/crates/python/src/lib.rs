//! Python bindings: colored link models, torus points, Laurent polynomials,
//! signatures, potentials and obstructions.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use clasp::invariants::{self, MergedColoring, SignatureResult, SignatureSource};
use clasp::laurent::{normalize_unit, LaurentPoly};
use clasp::model::{self, ColoredLinkModel};
use clasp::numeric::{Coord, TorusPoint, DEFAULT_TOLERANCE};
use clasp::{conway, obstructions, verify};

create_exception!(pyclasp, ClaspError, PyValueError);

fn err(e: clasp::Error) -> PyErr {
    ClaspError::new_err(e.to_string())
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for clasp::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

#[pyclass(name = "LaurentPoly", module = "pyclasp", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLaurentPoly {
    inner: LaurentPoly,
}

#[pymethods]
impl PyLaurentPoly {
    #[new]
    #[pyo3(signature = (text, nvars=None))]
    fn new(text: &str, nvars: Option<usize>) -> PyResult<Self> {
        let inner = match nvars {
            Some(n) => LaurentPoly::parse(text, n),
            None => text.parse(),
        }
        .py()?;
        Ok(Self { inner })
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn normalize_unit(&self) -> Self {
        Self { inner: normalize_unit(&self.inner) }
    }

    fn bar(&self) -> Self {
        Self { inner: self.inner.bar() }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Value at the point as a complex number.
    fn evaluate(&self, omega: &PyTorusPoint) -> PyResult<(f64, f64)> {
        let z = clasp::numeric::eval_at(&self.inner, &omega.inner).py()?.to_complex();
        Ok((z.re, z.im))
    }

    fn __add__(&self, other: &Self) -> Self {
        Self { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self { inner: &self.inner - &other.inner }
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self { inner: &self.inner * &other.inner }
    }

    fn __neg__(&self) -> Self {
        Self { inner: -self.inner.clone() }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.inner)
    }
}

#[pyclass(name = "TorusPoint", module = "pyclasp", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyTorusPoint {
    inner: TorusPoint,
}

#[pymethods]
impl PyTorusPoint {
    /// Parses `k/q` or `~radians` coordinates separated by commas.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(Self { inner: TorusPoint::parse(spec).py()? })
    }

    #[getter]
    fn mu(&self) -> usize {
        self.inner.mu()
    }

    #[getter]
    fn is_exact(&self) -> bool {
        self.inner.is_exact()
    }

    /// Membership flags: `(in_t_star, in_t_q, in_t_p, conductor)`.
    fn classify(&self) -> (bool, bool, bool, Option<u64>) {
        let c = self.inner.classify();
        (c.in_t_star, c.in_t_q, c.in_t_p, c.conductor)
    }

    fn half_point(&self) -> Self {
        Self { inner: self.inner.half_point() }
    }

    fn conjugate(&self) -> Self {
        Self { inner: self.inner.conjugate() }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TorusPoint('{}')", self.inner)
    }
}

#[pyclass(name = "SignatureResult", module = "pyclasp", get_all, frozen)]
struct PySignatureResult {
    sigma: i64,
    eta: usize,
    raw_nullity: usize,
    point: String,
    exact: bool,
}

impl From<SignatureResult> for PySignatureResult {
    fn from(r: SignatureResult) -> Self {
        Self { sigma: r.sigma, eta: r.eta, raw_nullity: r.raw_nullity, point: r.point.to_string(), exact: r.exact }
    }
}

#[pymethods]
impl PySignatureResult {
    fn __repr__(&self) -> String {
        format!("SignatureResult(sigma={}, eta={}, raw_nullity={}, point='{}', exact={})", self.sigma, self.eta, self.raw_nullity, self.point, self.exact)
    }
}

#[pyclass(name = "Model", module = "pyclasp", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyModel {
    inner: ColoredLinkModel,
}

fn point(spec: &str) -> PyResult<TorusPoint> {
    TorusPoint::parse(spec).py()
}

#[pymethods]
impl PyModel {
    #[staticmethod]
    fn bundled(name: &str) -> PyResult<Self> {
        Ok(Self { inner: model::bundled(name).py()? })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(Self { inner: model::load(path).py()? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self { inner: model::load_str(text).py()? })
    }

    fn to_json(&self) -> String {
        model::to_json(&self.inner)
    }

    fn save(&self, path: &str) -> PyResult<()> {
        model::save(&self.inner, path).py()
    }

    #[getter]
    fn mu(&self) -> usize {
        self.inner.mu
    }

    #[getter]
    fn nu(&self) -> usize {
        self.inner.nu
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    /// Seifert matrix for a sign string such as `"+-"`.
    fn seifert(&self, signs: &str) -> PyResult<Vec<Vec<i64>>> {
        Ok(self.inner.seifert.by_signs(signs).py()?.clone())
    }

    /// Violated invariants, empty for a valid model.
    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(ToString::to_string).collect()
    }

    #[pyo3(signature = (omega, tolerance=DEFAULT_TOLERANCE))]
    fn signature(&self, omega: &str, tolerance: f64) -> PyResult<PySignatureResult> {
        Ok(self.inner.signature_with_tolerance(&point(omega)?, tolerance).py()?.into())
    }

    fn alexander_matrix(&self) -> String {
        invariants::alexander_matrix(&self.inner).to_string()
    }

    fn delta0(&self) -> PyResult<PyLaurentPoly> {
        Ok(PyLaurentPoly { inner: invariants::delta0(&self.inner).py()? })
    }

    fn presentation_matrix(&self) -> PyResult<String> {
        Ok(invariants::presentation_matrix(&self.inner).py()?.to_string())
    }

    /// The Conway potential as `(numerator, denominator)`.
    fn potential(&self) -> PyResult<(PyLaurentPoly, PyLaurentPoly)> {
        let f = conway::potential(&self.inner).py()?;
        Ok((PyLaurentPoly { inner: f.numerator().clone() }, PyLaurentPoly { inner: f.denominator() }))
    }

    fn grid_csv(&self, q: u64) -> PyResult<String> {
        Ok(invariants::grid_scan(&self.inner, q).py()?.to_csv())
    }

    fn diagonal(&self, omega: &str) -> PyResult<(i64, usize)> {
        let p = point(omega)?;
        let c: Coord = *p.coords().first().ok_or_else(|| ClaspError::new_err("empty point"))?;
        invariants::diagonal_specialize(&self.inner, c).py()
    }

    fn merge_colors(&self, omega: &str) -> PyResult<PySignatureResult> {
        Ok(invariants::merge_colors(&self.inner, &point(omega)?).py()?.into())
    }

    fn mod4_check(&self, omega: &str) -> PyResult<bool> {
        conway::mod4_check(&self.inner, &point(omega)?).py()
    }

    fn nullity_potential_equivalence(&self, omega: &str) -> PyResult<bool> {
        conway::nullity_potential_equivalence(&self.inner, &point(omega)?).py()
    }

    fn mirror(&self) -> Self {
        Self { inner: model::mirror(&self.inner) }
    }

    fn reverse_color(&self, color: usize) -> PyResult<Self> {
        Ok(Self { inner: model::reverse_color(&self.inner, color).py()? })
    }

    fn connected_sum(&self, other: &Self, color: usize, other_color: usize) -> PyResult<Self> {
        Ok(Self { inner: model::connected_sum(&self.inner, &other.inner, color, other_color).py()? })
    }

    fn disjoint_sum(&self, other: &Self) -> PyResult<Self> {
        Ok(Self { inner: model::disjoint_sum(&self.inner, &other.inner).py()? })
    }

    /// Witnesses as `(point, sigma, eta, violated)` tuples; `merge_all`
    /// gives every component the same color first.
    #[pyo3(signature = (max_q, merge_all=false))]
    fn slice_obstruction(&self, max_q: u64, merge_all: bool) -> PyResult<Vec<(String, i64, usize, String)>> {
        let w = if merge_all {
            obstructions::slice_obstruction(&MergedColoring::merge_all(self.inner.clone()).py()?, max_q)
        } else {
            obstructions::slice_obstruction(&self.inner, max_q)
        }
        .py()?;
        Ok(w.into_iter().map(|w| (w.point, w.sigma, w.eta, w.violated.to_string())).collect())
    }

    fn slice_genus_lower_bound(&self, points: Vec<String>) -> PyResult<u64> {
        let pts = points.iter().map(|s| point(s)).collect::<PyResult<Vec<_>>>()?;
        obstructions::slice_genus_lower_bound(&self.inner, &pts).py()
    }

    /// Property suite results as `(name, passed, checked, failures)`.
    #[pyo3(signature = (q=8))]
    fn verify(&self, q: u64) -> PyResult<Vec<(String, bool, usize, usize)>> {
        let out = verify::verify_model(&self.inner, q).py()?;
        Ok(out.into_iter().map(|o| (o.name.clone(), o.passed(), o.checked, o.failures)).collect())
    }

    fn __repr__(&self) -> String {
        format!("Model(mu={}, nu={}, size={})", self.inner.mu, self.inner.nu, self.inner.size())
    }
}

#[pyfunction]
fn bundled_names() -> Vec<&'static str> {
    model::bundled_names()
}

/// The Casson–Gordon invariant as a `fractions.Fraction`.
#[pyfunction]
fn casson_gordon(py: Python<'_>, framed_linking: Vec<Vec<i64>>, q: u64, n: Vec<i64>, sigma: i64) -> PyResult<Py<PyAny>> {
    let data = obstructions::SurgeryData::new(framed_linking, q, n).py()?;
    let value = obstructions::casson_gordon(&data, sigma).py()?;
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    Ok(fraction.call1((value.numer().to_string().parse::<i128>()?, value.denom().to_string().parse::<i128>()?))?.unbind())
}

#[pyfunction]
fn murasugi_tristram_ok(sigma: i64, eta: i64, mu: i64, beta1: u64, c: u64) -> bool {
    obstructions::murasugi_tristram_ok(sigma, eta, mu, obstructions::SurfaceBudget { beta1, c, genus: 0 })
}

#[pyfunction]
fn concordance_domain(omega: &str) -> PyResult<bool> {
    Ok(obstructions::concordance_domain(&point(omega)?))
}

#[pyfunction]
fn levine_tristram_recursion_demo(omega: &str) -> PyResult<i64> {
    let p = point(omega)?;
    conway::levine_tristram_recursion_demo(p.coords()[0]).py()
}

#[pymodule]
fn pyclasp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ClaspError", m.py().get_type::<ClaspError>())?;
    m.add_class::<PyModel>()?;
    m.add_class::<PyTorusPoint>()?;
    m.add_class::<PyLaurentPoly>()?;
    m.add_class::<PySignatureResult>()?;
    m.add_function(wrap_pyfunction!(bundled_names, m)?)?;
    m.add_function(wrap_pyfunction!(casson_gordon, m)?)?;
    m.add_function(wrap_pyfunction!(murasugi_tristram_ok, m)?)?;
    m.add_function(wrap_pyfunction!(concordance_domain, m)?)?;
    m.add_function(wrap_pyfunction!(levine_tristram_recursion_demo, m)?)?;
    Ok(())
}
