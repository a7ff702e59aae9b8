//! Python bindings. Field elements are plain ints, polynomials are coefficient
//! lists (lowest degree first), and bivariate polynomials are lists of such
//! lists indexed by Y-degree.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rsre::bench::{self, BenchConfig, Rate};
use rsre::decoders::{self, DecodeOutcome};
use rsre::interpolation::{self, Engine, InterpolationProblem};
use rsre::{example, reencoding, BiPoly, Field, FieldElement, Mode, Poly};

fn err(e: rsre::Error) -> PyErr {
    match e {
        rsre::Error::CellFailure { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn elem(f: &Field, v: u32) -> PyResult<FieldElement> {
    f.element(v).map_err(err)
}

fn word(f: &Field, vs: &[u32]) -> PyResult<Vec<FieldElement>> {
    vs.iter().map(|&v| elem(f, v)).collect()
}

fn ints(w: &[FieldElement]) -> Vec<u32> {
    w.iter().map(|v| v.value() as u32).collect()
}

fn poly(f: &Field, cs: &[u32]) -> PyResult<Poly> {
    Ok(Poly::from_coeffs(word(f, cs)?))
}

fn poly_ints(p: &Poly) -> Vec<u32> {
    ints(p.coeffs())
}

fn bipoly_ints(q: &BiPoly) -> Vec<Vec<u32>> {
    q.columns().iter().map(poly_ints).collect()
}

fn points(f: &Field, pts: &[(u32, u32)]) -> PyResult<Vec<(FieldElement, FieldElement)>> {
    pts.iter().map(|&(x, y)| Ok((elem(f, x)?, elem(f, y)?))).collect()
}

fn point_ints(pts: &[(FieldElement, FieldElement)]) -> Vec<(u32, u32)> {
    pts.iter().map(|&(x, y)| (x.value() as u32, y.value() as u32)).collect()
}

/// GF(2^m) with its default primitive modulus, or a given one.
#[pyclass(name = "Field", frozen)]
struct PyField {
    inner: Arc<Field>,
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (m, modulus=None))]
    fn new(m: u32, modulus: Option<u32>) -> PyResult<Self> {
        let f = match modulus {
            Some(p) => Field::with_modulus(m, p),
            None => Field::new(m),
        }
        .map_err(err)?;
        Ok(PyField { inner: Arc::new(f) })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn modulus(&self) -> u32 {
        self.inner.modulus()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn alpha_pow(&self, e: i64) -> u32 {
        self.inner.alpha_pow(e).value() as u32
    }

    fn log(&self, a: u32) -> PyResult<Option<u32>> {
        Ok(self.inner.log(elem(&self.inner, a)?))
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        let f = &self.inner;
        Ok(f.add(elem(f, a)?, elem(f, b)?).value() as u32)
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        let f = &self.inner;
        Ok(f.mul(elem(f, a)?, elem(f, b)?).value() as u32)
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        let f = &self.inner;
        Ok(f.inv(elem(f, a)?).map_err(err)?.value() as u32)
    }

    fn div(&self, a: u32, b: u32) -> PyResult<u32> {
        let f = &self.inner;
        Ok(f.div(elem(f, a)?, elem(f, b)?).map_err(err)?.value() as u32)
    }

    fn pow(&self, a: u32, e: i64) -> PyResult<u32> {
        let f = &self.inner;
        Ok(f.pow(elem(f, a)?, e).map_err(err)?.value() as u32)
    }

    /// `0`, `1`, `a`, `a2`, ... for the element's power of the generator.
    fn power_name(&self, a: u32) -> PyResult<String> {
        Ok(self.inner.power_name(elem(&self.inner, a)?))
    }

    fn parse(&self, name: &str) -> PyResult<u32> {
        Ok(self.inner.parse_power_name(name).map_err(err)?.value() as u32)
    }

    /// Lagrange interpolation through `[(x, y), ...]`.
    fn interpolate(&self, pts: Vec<(u32, u32)>) -> PyResult<Vec<u32>> {
        let f = &self.inner;
        Ok(poly_ints(&rsre::lagrange(&points(f, &pts)?, f).map_err(err)?))
    }

    fn eval(&self, p: Vec<u32>, x: u32) -> PyResult<u32> {
        let f = &self.inner;
        Ok(poly(f, &p)?.eval(elem(f, x)?, f).value() as u32)
    }

    fn __repr__(&self) -> String {
        format!("Field(m={}, modulus={:#x})", self.inner.degree(), self.inner.modulus())
    }
}

fn parse_engine(s: &str) -> PyResult<Engine> {
    s.parse().map_err(err)
}

fn parse_mode(s: &str) -> PyResult<Mode> {
    s.parse().map_err(err)
}

fn outcome_dict<'py>(py: Python<'py>, o: &DecodeOutcome) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("message", o.message.as_ref().map(poly_ints))?;
    d.set_item("failure", o.failure.map(|r| r.to_string()))?;
    d.set_item("errors_corrected", o.errors_corrected)?;
    d.set_item("engine", o.engine.name())?;
    d.set_item("mode", o.mode.name())?;
    d.set_item("constraints", o.constraints)?;
    Ok(d)
}

/// A Reed-Solomon code; `RSCode(m, n, k)` uses support `α^0, …, α^(n-1)`.
#[pyclass(name = "RSCode", frozen)]
struct PyRSCode {
    inner: decoders::RSCode,
}

#[pymethods]
impl PyRSCode {
    #[new]
    #[pyo3(signature = (m, n, k, support=None))]
    fn new(m: u32, n: usize, k: usize, support: Option<Vec<u32>>) -> PyResult<Self> {
        let f = Arc::new(Field::new(m).map_err(err)?);
        let inner = match support {
            Some(s) => {
                if s.len() != n {
                    return Err(PyValueError::new_err("support length differs from n"));
                }
                let s = word(&f, &s)?;
                decoders::RSCode::new(f, s, k)
            }
            None => decoders::RSCode::primitive(f, n, k),
        }
        .map_err(err)?;
        Ok(PyRSCode { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn t(&self) -> usize {
        self.inner.t()
    }

    #[getter]
    fn support(&self) -> Vec<u32> {
        ints(self.inner.support())
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField {
            inner: self.inner.field_arc().clone(),
        }
    }

    fn encode(&self, message: Vec<u32>) -> PyResult<Vec<u32>> {
        let p = poly(self.inner.field(), &message)?;
        Ok(ints(&decoders::rs_encode(&self.inner, &p).map_err(err)?))
    }

    #[pyo3(signature = (y, engine="koetter", mode="revisited"))]
    fn wb_decode<'py>(&self, py: Python<'py>, y: Vec<u32>, engine: &str, mode: &str) -> PyResult<Bound<'py, PyDict>> {
        let y = word(self.inner.field(), &y)?;
        let out = decoders::wb_decode(&self.inner, &y, parse_engine(engine)?, parse_mode(mode)?).map_err(err)?;
        outcome_dict(py, &out)
    }

    fn sudan_decode(&self, y: Vec<u32>, radius: usize) -> PyResult<Vec<Vec<u32>>> {
        let y = word(self.inner.field(), &y)?;
        let list = decoders::sudan_decode(&self.inner, &y, radius).map_err(err)?;
        Ok(list.iter().map(poly_ints).collect())
    }

    #[pyo3(signature = (y, radius, engine="koetter"))]
    fn gs_decode(&self, y: Vec<u32>, radius: usize, engine: &str) -> PyResult<Vec<Vec<u32>>> {
        let y = word(self.inner.field(), &y)?;
        let list = decoders::gs_decode_with(&self.inner, &y, radius, parse_engine(engine)?).map_err(err)?;
        Ok(list.iter().map(poly_ints).collect())
    }

    /// `(multiplicity, list_size)` chosen for the given radius.
    fn gs_params(&self, radius: usize) -> PyResult<(usize, usize)> {
        let p = decoders::gs_params(&self.inner, radius).map_err(err)?;
        Ok((p.multiplicity, p.list_size))
    }

    fn inject_errors(&self, word_: Vec<u32>, e: usize, seed: u64) -> PyResult<Vec<u32>> {
        let f = self.inner.field();
        let w = word(f, &word_)?;
        Ok(ints(&bench::inject_errors(&w, e, seed, f).map_err(err)?))
    }

    /// Every re-encoding intermediate for `y`, zeroing `positions` (the first
    /// `k` by default).
    #[pyo3(signature = (y, positions=None))]
    fn reencode<'py>(&self, py: Python<'py>, y: Vec<u32>, positions: Option<Vec<usize>>) -> PyResult<Bound<'py, PyDict>> {
        let f = self.inner.field();
        let y = word(f, &y)?;
        let ctx = reencoding::make_context(self.inner.support(), &y, self.inner.k(), positions.as_deref(), f)
            .map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("lk", poly_ints(&ctx.lk))?;
        d.set_item("zk", poly_ints(&ctx.zk))?;
        d.set_item("residuals", ints(&ctx.residuals))?;
        d.set_item("ln", poly_ints(&ctx.ln))?;
        d.set_item("lnk", poly_ints(&ctx.lnk))?;
        d.set_item("reduced_points", point_ints(&ctx.reduced_points(f)))?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "RSCode(n={}, k={}, m={})",
            self.inner.n(),
            self.inner.k(),
            self.inner.field().degree()
        )
    }
}

/// Solves `Q^{[a,b]}(x_i, y_i) = 0` for `a + b < s` with `deg Q_j ≤ bounds[j]`.
#[pyfunction]
#[pyo3(signature = (field, pts, multiplicity, bounds, engine="koetter"))]
fn interpolate(
    field: &PyField,
    pts: Vec<(u32, u32)>,
    multiplicity: usize,
    bounds: Vec<i64>,
    engine: &str,
) -> PyResult<Vec<Vec<u32>>> {
    let f = &field.inner;
    let prob = InterpolationProblem::new(points(f, &pts)?, multiplicity, bounds).map_err(err)?;
    let sol = parse_engine(engine)?.solve(&prob, f).map_err(err)?;
    Ok(bipoly_ints(&sol.q))
}

/// Whether `q` (columns by Y-degree) meets every constraint and cap.
#[pyfunction]
fn verify_solution(field: &PyField, pts: Vec<(u32, u32)>, multiplicity: usize, bounds: Vec<i64>, q: Vec<Vec<u32>>) -> PyResult<bool> {
    let f = &field.inner;
    let prob = InterpolationProblem::new(points(f, &pts)?, multiplicity, bounds).map_err(err)?;
    let cols = q.iter().map(|c| poly(f, c)).collect::<PyResult<Vec<_>>>()?;
    Ok(interpolation::verify_solution(&prob, &BiPoly::from_columns(cols), f))
}

/// The worked-example trace, one `name = value` line per intermediate.
#[pyfunction]
fn example_trace() -> PyResult<String> {
    example::print_example().map_err(err)
}

/// Exhaustive RS[7,2] decoding check over every engine and mode.
#[pyfunction]
fn verify_exhaustive<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let r = py
        .detach(|| example::verify_exhaustive(&Engine::ALL, &Mode::ALL))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("messages", r.messages)?;
    d.set_item("patterns", r.patterns)?;
    d.set_item("decodes", r.decodes)?;
    d.set_item("failures", r.failures)?;
    Ok(d)
}

/// Runs the decode benchmark and returns its CSV.
#[pyfunction]
#[pyo3(signature = (m, rates=None, engines=None, modes=None, iters=100, seed=0))]
fn bench_run(
    py: Python<'_>,
    m: Vec<u32>,
    rates: Option<Vec<String>>,
    engines: Option<Vec<String>>,
    modes: Option<Vec<String>>,
    iters: usize,
    seed: u64,
) -> PyResult<String> {
    let mut config = BenchConfig {
        m,
        iters,
        seed,
        ..BenchConfig::default()
    };
    if let Some(r) = rates {
        config.rates = r.iter().map(|s| s.parse::<Rate>()).collect::<Result<_, _>>().map_err(err)?;
    }
    if let Some(e) = engines {
        config.engines = e.iter().map(|s| parse_engine(s)).collect::<PyResult<_>>()?;
    }
    if let Some(md) = modes {
        config.modes = md.iter().map(|s| parse_mode(s)).collect::<PyResult<_>>()?;
    }
    let rows = py.detach(|| bench::run(&config)).map_err(err)?;
    Ok(bench::to_csv(&rows))
}

/// Field additions and multiplications performed so far on this thread.
#[pyfunction]
fn field_ops() -> u64 {
    rsre::field_ops()
}

#[pyfunction]
fn reset_field_ops() {
    rsre::reset_field_ops()
}

#[pymodule]
fn pyrsre(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyRSCode>()?;
    m.add_function(wrap_pyfunction!(interpolate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_solution, m)?)?;
    m.add_function(wrap_pyfunction!(example_trace, m)?)?;
    m.add_function(wrap_pyfunction!(verify_exhaustive, m)?)?;
    m.add_function(wrap_pyfunction!(bench_run, m)?)?;
    m.add_function(wrap_pyfunction!(field_ops, m)?)?;
    m.add_function(wrap_pyfunction!(reset_field_ops, m)?)?;
    Ok(())
}
