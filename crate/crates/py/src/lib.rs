//! Python bindings, importable as `chordfan`.
//!
//! Points are passed as `(x, y)` tuples. Library errors surface as `ValueError`.

use chordfan::svg::{render_svg, RenderOptions};
use chordfan::{AreaEstimate, Circle, ChordFan, SweptRegion, Vec2};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: chordfan::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vec2((x, y): (f64, f64)) -> PyResult<Vec2> {
    Vec2::try_new(x, y).map_err(err)
}

fn tuple(v: Vec2) -> (f64, f64) {
    (v.x, v.y)
}

#[pyclass(frozen, from_py_object, name = "Circle", module = "chordfan")]
#[derive(Clone, Copy)]
struct PyCircle(Circle);

#[pymethods]
impl PyCircle {
    #[new]
    #[pyo3(signature = (center = (0.0, 0.0), radius = 1.0))]
    fn new(center: (f64, f64), radius: f64) -> PyResult<Self> {
        Ok(PyCircle(Circle::new(vec2(center)?, radius).map_err(err)?))
    }

    #[getter]
    fn center(&self) -> (f64, f64) {
        tuple(self.0.center())
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.0.radius()
    }

    fn __repr__(&self) -> String {
        let c = self.0.center();
        format!("Circle(center=({}, {}), radius={})", c.x, c.y, self.0.radius())
    }
}

#[pyclass(frozen, name = "Chord", module = "chordfan")]
struct PyChord {
    #[pyo3(get)]
    a: (f64, f64),
    #[pyo3(get)]
    b: (f64, f64),
    #[pyo3(get)]
    dist_a: f64,
    #[pyo3(get)]
    dist_b: f64,
    #[pyo3(get)]
    midpoint: (f64, f64),
}

#[pymethods]
impl PyChord {
    fn __repr__(&self) -> String {
        format!(
            "Chord(a={:?}, b={:?}, dist_a={}, dist_b={})",
            self.a, self.b, self.dist_a, self.dist_b
        )
    }
}

#[pyclass(frozen, from_py_object, name = "ChordFan", module = "chordfan")]
#[derive(Clone, Copy)]
struct PyChordFan(ChordFan);

#[pymethods]
impl PyChordFan {
    #[new]
    #[pyo3(signature = (p, n, phase = 0.0, circle = None))]
    fn new(p: (f64, f64), n: usize, phase: f64, circle: Option<PyCircle>) -> PyResult<Self> {
        let circle = circle.map_or(Circle::unit(), |c| c.0);
        Ok(PyChordFan(ChordFan::new(circle, vec2(p)?, n, phase).map_err(err)?))
    }

    /// Fan whose first chord passes through the center.
    #[staticmethod]
    #[pyo3(signature = (p, n, circle = None))]
    fn diameter(p: (f64, f64), n: usize, circle: Option<PyCircle>) -> PyResult<Self> {
        let circle = circle.map_or(Circle::unit(), |c| c.0);
        Ok(PyChordFan(chordfan::diameter_fan(circle, vec2(p)?, n).map_err(err)?))
    }

    #[getter]
    fn p(&self) -> (f64, f64) {
        tuple(self.0.p())
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn phase(&self) -> f64 {
        self.0.phase()
    }

    #[getter]
    fn circle(&self) -> PyCircle {
        PyCircle(*self.0.circle())
    }

    fn chords(&self) -> Vec<PyChord> {
        self.0
            .chords()
            .into_iter()
            .map(|c| PyChord {
                a: tuple(c.a),
                b: tuple(c.b),
                dist_a: c.dist_a,
                dist_b: c.dist_b,
                midpoint: tuple(c.midpoint),
            })
            .collect()
    }

    fn sum_squared_distances(&self) -> f64 {
        self.0.sum_squared_distances()
    }

    fn sum_squared_closed_form(&self) -> f64 {
        self.0.sum_squared_closed_form()
    }

    fn sweep_rate(&self) -> f64 {
        chordfan::sweep_rate(&self.0)
    }

    fn midpoint_identity_residual(&self) -> f64 {
        self.0.midpoint_identity_residual()
    }

    fn diameter_pairing_residual(&self) -> PyResult<f64> {
        self.0.diameter_pairing_residual().map_err(err)
    }

    fn expansion_identity_residual(&self) -> PyResult<f64> {
        self.0.expansion_identity_residual().map_err(err)
    }

    fn swept_measure_multiplicity(&self, theta: f64) -> PyResult<f64> {
        chordfan::swept_measure_multiplicity(&self.0, theta).map_err(err)
    }

    fn sweep_additivity_residual(&self, theta1: f64, theta2: f64) -> PyResult<f64> {
        chordfan::sweep_additivity_residual(&self.0, theta1, theta2).map_err(err)
    }

    fn __repr__(&self) -> String {
        let p = self.0.p();
        format!("ChordFan(p=({}, {}), n={}, phase={})", p.x, p.y, self.0.n(), self.0.phase())
    }
}

#[pyclass(frozen, name = "AreaEstimate", module = "chordfan")]
struct PyAreaEstimate {
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    std_error: f64,
    #[pyo3(get)]
    samples: u64,
    #[pyo3(get)]
    method: &'static str,
}

impl From<AreaEstimate> for PyAreaEstimate {
    fn from(e: AreaEstimate) -> Self {
        PyAreaEstimate {
            value: e.value,
            std_error: e.std_error,
            samples: e.samples,
            method: e.method.as_str(),
        }
    }
}

#[pymethods]
impl PyAreaEstimate {
    fn __repr__(&self) -> String {
        format!(
            "AreaEstimate(method='{}', value={}, std_error={}, samples={})",
            self.method, self.value, self.std_error, self.samples
        )
    }
}

#[pyclass(frozen, name = "SweptRegion", module = "chordfan")]
struct PySweptRegion(SweptRegion);

#[pymethods]
impl PySweptRegion {
    #[new]
    fn new(fan: PyChordFan, theta: f64) -> PyResult<Self> {
        Ok(PySweptRegion(SweptRegion::new(fan.0, theta).map_err(err)?))
    }

    #[getter]
    fn fan(&self) -> PyChordFan {
        PyChordFan(*self.0.fan())
    }

    #[getter]
    fn theta(&self) -> f64 {
        self.0.theta()
    }

    fn contains(&self, x: (f64, f64)) -> bool {
        self.0.contains(Vec2::new(x.0, x.1))
    }

    fn area_exact(&self) -> f64 {
        self.0.area_exact()
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn area_quadrature(&self, tol: f64) -> PyResult<PyAreaEstimate> {
        Ok(self.0.area_quadrature(tol).map_err(err)?.into())
    }

    #[pyo3(signature = (samples = 1_000_000, seed = 0))]
    fn area_monte_carlo(&self, py: Python<'_>, samples: u64, seed: u64) -> PyResult<PyAreaEstimate> {
        let region = self.0;
        let estimate = py.detach(move || region.area_monte_carlo(samples, seed));
        Ok(estimate.map_err(err)?.into())
    }

    #[pyo3(signature = (segments_per_arc = 1024))]
    fn area_polygon(&self, segments_per_arc: usize) -> PyResult<PyAreaEstimate> {
        Ok(self.0.area_polygon(segments_per_arc).map_err(err)?.into())
    }

    #[pyo3(signature = (labels = false))]
    fn render_svg(&self, labels: bool) -> String {
        render_svg(&self.0, RenderOptions { labels })
    }
}

#[pyfunction]
#[pyo3(signature = (p, direction, circle = None))]
fn line_circle_roots(p: (f64, f64), direction: (f64, f64), circle: Option<PyCircle>) -> PyResult<(f64, f64)> {
    let circle = circle.map_or(Circle::unit(), |c| c.0);
    chordfan::line_circle_roots(&circle, vec2(p)?, vec2(direction)?).map_err(err)
}

#[pyfunction]
fn roots_of_unity_cos_sum(n: usize) -> f64 {
    chordfan::roots_of_unity_cos_sum(n)
}

#[pyfunction]
fn doubled_cos_squared_sum(n: usize) -> f64 {
    chordfan::doubled_cos_squared_sum(n)
}

/// Runs the verification suite and returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (trials, seed = 0, n_min = 2, n_max = 12))]
fn run_suite(py: Python<'_>, trials: usize, seed: u64, n_min: usize, n_max: usize) -> PyResult<String> {
    py.detach(move || chordfan::run_suite(trials, seed, n_min..=n_max))
        .map(|r| r.to_json())
        .map_err(err)
}

#[pymodule]
#[pyo3(name = "chordfan")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCircle>()?;
    m.add_class::<PyChord>()?;
    m.add_class::<PyChordFan>()?;
    m.add_class::<PySweptRegion>()?;
    m.add_class::<PyAreaEstimate>()?;
    m.add_function(wrap_pyfunction!(line_circle_roots, m)?)?;
    m.add_function(wrap_pyfunction!(roots_of_unity_cos_sum, m)?)?;
    m.add_function(wrap_pyfunction!(doubled_cos_squared_sum, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("GENERATOR", chordfan::sweep::GENERATOR_NAME)?;
    Ok(())
}
