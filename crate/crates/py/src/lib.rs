//! Python bindings: `import belyi_py`.

use belyi::beleqns::{self, BuildOptions};
use belyi::bounds::{khadjavi_bound, khadjavi_log10, BoundValue, Height};
use belyi::census::{verify_fermat4 as fermat4_certificate, worker_count, PassportEntry};
use belyi::passports::{self, RamificationType};
use belyi::polysolve::{is_empty_variety, Limits, MonomialOrder, PolynomialSystem, Verdict};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: belyi::Error) -> PyErr {
    match e {
        belyi::Error::ResourceLimit { .. }
        | belyi::Error::Precondition(_)
        | belyi::Error::ChartFailure(_)
        | belyi::Error::PrecisionFailure(_)
        | belyi::Error::Io(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn lambda(text: &str) -> PyResult<RamificationType> {
    text.parse().map_err(err)
}

/// Runs the command line and returns `(exit code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let argv = std::iter::once("belyi".to_string()).chain(args);
    let out = belyi::cli::dispatch(argv);
    (out.code, out.stdout, out.stderr)
}

#[pyfunction]
fn rh_genus(ty: &str) -> PyResult<Option<usize>> {
    Ok(passports::rh_genus(&lambda(ty)?))
}

#[pyfunction]
fn types_with_genus(d: usize, g: usize) -> PyResult<Vec<String>> {
    let types = passports::types_with_genus(d, g).map_err(err)?;
    Ok(types.iter().map(|t| t.to_string()).collect())
}

/// One dict per class: cycles, monodromy order and tag, automorphisms.
#[pyfunction]
#[pyo3(signature = (ty, workers=None))]
fn census<'py>(py: Python<'py>, ty: &str, workers: Option<usize>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let l = lambda(ty)?;
    let entry = py
        .detach(|| PassportEntry::build_with_workers(&l, workers.unwrap_or_else(worker_count).max(1)))
        .map_err(err)?;
    let mut out = Vec::new();
    for c in &entry.classes {
        let d = PyDict::new(py);
        d.set_item(
            "cycles",
            (c.triple.sigma0().to_string(), c.triple.sigma1().to_string(), c.triple.sigma_inf().to_string()),
        )?;
        d.set_item("order", c.monodromy_order.clone())?;
        d.set_item("tag", c.monodromy_tag.to_string())?;
        d.set_item("automorphisms", c.automorphism_count.clone())?;
        out.push(d);
    }
    Ok(out)
}

/// The exact bound for integral height `h`, or `None` when only its
/// logarithm is available.
#[pyfunction]
fn khadjavi(n: usize, h: u64) -> PyResult<Option<BigInt>> {
    match khadjavi_bound(n, &Height::Exact(BigInt::from(h))).map_err(err)? {
        BoundValue::Exact(v) => Ok(Some(v)),
        BoundValue::Log10(_) => Ok(None),
    }
}

#[pyfunction]
fn khadjavi_log10_approx(n: usize, h: u64) -> PyResult<f64> {
    if n == 0 || h == 0 {
        return Err(PyValueError::new_err("N and H must be positive"));
    }
    Ok(khadjavi_log10(n, &Height::Exact(BigInt::from(h))).to_f64())
}

#[pyfunction]
fn verify_fermat4(py: Python<'_>) -> PyResult<Option<usize>> {
    let cert = py.detach(fermat4_certificate).map_err(err)?;
    Ok(cert.belyi_degree)
}

/// `(variables, equations)`.
type Counts = (usize, usize);

/// Text of the general-case system with its core and full counts.
#[pyfunction]
#[pyo3(signature = (curve, degree, ty, chart_guards=false))]
fn general_system(
    curve: &str,
    degree: usize,
    ty: &str,
    chart_guards: bool,
) -> PyResult<(String, Counts, Counts)> {
    let l = lambda(ty)?;
    let (c, rr) = beleqns::fixture(curve, degree).map_err(err)?;
    let case = beleqns::general_case(&c, &rr, &l)
        .map_err(err)?
        .ok_or_else(|| PyValueError::new_err("no general case for this type on this curve"))?;
    let built = beleqns::build_system(&c, &rr, &l, &case, BuildOptions { chart_guards }).map_err(err)?;
    Ok((built.system.to_text(), built.core_counts(), built.counts()))
}

/// `"empty"`, `"nonempty"` or `"unknown"` for a system in text form.
#[pyfunction]
#[pyo3(signature = (text, order="grevlex", max_steps=None))]
fn solve(py: Python<'_>, text: &str, order: &str, max_steps: Option<usize>) -> PyResult<&'static str> {
    let sys = PolynomialSystem::parse(text).map_err(err)?;
    let order: MonomialOrder = order.parse().map_err(err)?;
    let mut limits = Limits::default();
    if let Some(s) = max_steps {
        limits.max_steps = s;
    }
    let (verdict, _) = py.detach(|| is_empty_variety(&sys.equations, order, limits)).map_err(err)?;
    Ok(match verdict {
        Verdict::Empty => "empty",
        Verdict::Nonempty => "nonempty",
        Verdict::Unknown(_) => "unknown",
    })
}

#[pymodule]
fn belyi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(rh_genus, m)?)?;
    m.add_function(wrap_pyfunction!(types_with_genus, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(khadjavi, m)?)?;
    m.add_function(wrap_pyfunction!(khadjavi_log10_approx, m)?)?;
    m.add_function(wrap_pyfunction!(verify_fermat4, m)?)?;
    m.add_function(wrap_pyfunction!(general_system, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    Ok(())
}
