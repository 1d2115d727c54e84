//! Python bindings. Values cross the boundary as strings: paths over N/E, compositions and
//! partitions as "3,1", scalars in the q,t grammar and everything else as JSON.

use compshuffle::charfn::{chi as chi_fn, chi_zero, dalpha_bruteforce};
use compshuffle::dyck::DyckPath;
use compshuffle::json::to_json;
use compshuffle::shapes::{Composition, Partition};
use compshuffle::shuffle::{d_alpha_operator, n_alpha, n_involution, nabla_c, verify_shuffle as verify};
use compshuffle::symfn::{macdonald_h, nabla as nabla_fn, Basis, SymFunc};
use compshuffle::{dpa::VElem, QtScalar};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn path(text: &str) -> PyResult<DyckPath> {
    text.parse().map_err(value_err)
}

fn schur_json(f: &SymFunc) -> String {
    to_json(&f.to_basis(Basis::S))
}

/// Canonical string form of a scalar.
#[pyfunction]
fn qt(text: &str) -> PyResult<String> {
    Ok(text.parse::<QtScalar>().map_err(value_err)?.to_string())
}

/// `chi(pi)` as Schur-basis JSON; `weight` is "one" or "zero".
#[pyfunction]
#[pyo3(signature = (p, weight = "one"))]
fn chi(p: &str, weight: &str) -> PyResult<String> {
    let pi = path(p)?;
    match weight {
        "one" => Ok(schur_json(&chi_fn(&pi))),
        "zero" => Ok(schur_json(&chi_zero(&pi))),
        w => Err(value_err(format!("unknown weight {}", w))),
    }
}

/// Image of the zeta map and the permutation sigma.
#[pyfunction]
fn zeta(p: &str) -> PyResult<(String, Vec<usize>)> {
    let (img, sigma) = path(p)?.zeta();
    Ok((img.to_string(), sigma))
}

#[pyfunction]
fn stats(p: &str) -> PyResult<String> {
    Ok(to_json(&path(p)?.stats()))
}

#[pyfunction]
fn macdonald(mu: &str) -> PyResult<String> {
    let mu: Partition = mu.parse().map_err(value_err)?;
    Ok(schur_json(&macdonald_h(&mu)))
}

/// `nabla` of a JSON symmetric function.
#[pyfunction]
fn nabla(f: &str) -> PyResult<String> {
    let f: SymFunc = serde_json::from_str(f).map_err(value_err)?;
    Ok(schur_json(&nabla_fn(&f)))
}

#[pyfunction]
fn nalpha(alpha: &str) -> PyResult<String> {
    let a: Composition = alpha.parse().map_err(value_err)?;
    Ok(to_json(&n_alpha(a.parts()).map_err(value_err)?))
}

/// `D_alpha` by "op", "brute" or "nabla".
#[pyfunction]
#[pyo3(signature = (alpha, method = "op"))]
fn dalpha(alpha: &str, method: &str) -> PyResult<String> {
    let a: Composition = alpha.parse().map_err(value_err)?;
    let f = match method {
        "op" => d_alpha_operator(a.parts()).map_err(value_err)?,
        "brute" => dalpha_bruteforce(&a),
        "nabla" => nabla_c(a.parts()),
        m => return Err(value_err(format!("unknown method {}", m))),
    };
    Ok(schur_json(&f))
}

/// The involution N on a JSON element of V_k.
#[pyfunction]
fn ninv(v: &str) -> PyResult<String> {
    let v: VElem = serde_json::from_str(v).map_err(value_err)?;
    Ok(to_json(&n_involution(&v).map_err(value_err)?))
}

/// Full report of the three-way comparison at size `n`, as JSON.
#[pyfunction]
fn verify_shuffle(py: Python<'_>, n: usize) -> PyResult<String> {
    let rep = py.detach(|| verify(n)).map_err(value_err)?;
    Ok(to_json(&rep))
}

#[pymodule]
fn pycompshuffle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(qt, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(macdonald, m)?)?;
    m.add_function(wrap_pyfunction!(nabla, m)?)?;
    m.add_function(wrap_pyfunction!(nalpha, m)?)?;
    m.add_function(wrap_pyfunction!(dalpha, m)?)?;
    m.add_function(wrap_pyfunction!(ninv, m)?)?;
    m.add_function(wrap_pyfunction!(verify_shuffle, m)?)?;
    Ok(())
}
