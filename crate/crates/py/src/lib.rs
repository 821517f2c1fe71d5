//! Python bindings: `import bordism`.
//!
//! Polynomials and subspaces are exposed as immutable classes; everything
//! else is a module-level function mirroring `bordism_core`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bordism_core as core;
use bordism_core::{BitVector, FixedPointData};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An element of the representation algebra over GF(2).
#[pyclass(name = "Poly", module = "bordism", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPoly {
    inner: core::Poly,
}

impl From<core::Poly> for PyPoly {
    fn from(inner: core::Poly) -> Self {
        PyPoly { inner }
    }
}

fn data(p: &PyPoly) -> PyResult<FixedPointData> {
    FixedPointData::new(p.inner.clone()).map_err(err)
}

#[pymethods]
impl PyPoly {
    #[staticmethod]
    fn parse(text: &str, k: u32) -> PyResult<Self> {
        core::repalg::parse(text, k).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str::<core::Poly>(text)
            .map(Into::into)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn zero(k: u32) -> PyResult<Self> {
        core::Poly::zero(k).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn one(k: u32) -> PyResult<Self> {
        core::Poly::one(k).map(Into::into).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serialisable")
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.inner.rank()
    }

    #[getter]
    fn degree(&self) -> u64 {
        self.inner.degree()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Terms in canonical order, as monomial text.
    fn terms(&self) -> Vec<String> {
        self.inner.terms().map(ToString::to_string).collect()
    }

    /// Whether the monomial given as text (e.g. `"[10]*[01]^2"`) is a term.
    fn contains(&self, monomial: &str) -> PyResult<bool> {
        let p = core::repalg::parse(monomial, self.inner.rank()).map_err(err)?;
        match p.terms().collect::<Vec<_>>().as_slice() {
            [m] => Ok(self.inner.contains(m)),
            _ => Err(PyValueError::new_err("expected a single monomial")),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Poly.parse({:?}, {})",
            self.inner.to_string(),
            self.inner.rank()
        )
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<Self> {
        self.inner.add(&other.inner).map(Into::into).map_err(err)
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<Self> {
        self.inner.mul(&other.inner).map(Into::into).map_err(err)
    }

    fn __pow__(&self, exp: u32, _modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        self.inner.pow(exp).map(Into::into).map_err(err)
    }
}

/// A subspace of (Z_2)^k in reduced echelon form.
#[pyclass(
    name = "Subspace",
    module = "bordism",
    frozen,
    eq,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PySubspace {
    inner: core::Subspace,
}

#[pymethods]
impl PySubspace {
    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis_strings()
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.inner.dim()
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.inner.rank()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "span({:?}, {})",
            self.inner.basis_strings(),
            self.inner.rank()
        )
    }
}

impl From<core::Subspace> for PySubspace {
    fn from(inner: core::Subspace) -> Self {
        PySubspace { inner }
    }
}

#[pyfunction]
fn span(vectors: Vec<String>, k: u32) -> PyResult<PySubspace> {
    let vs = vectors
        .iter()
        .map(|s| s.parse::<BitVector>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    core::span(&vs, k).map(Into::into).map_err(err)
}

#[pyfunction]
fn annihilator(v: &PySubspace) -> PySubspace {
    core::annihilator(&v.inner).into()
}

#[pyfunction]
fn complement(v: &PySubspace) -> PySubspace {
    core::complement(&v.inner).into()
}

#[pyfunction]
fn enumerate_subspaces(k: u32, d: u32) -> PyResult<Vec<PySubspace>> {
    core::enumerate_subspaces(k, d)
        .map(|v| v.into_iter().map(Into::into).collect())
        .map_err(err)
}

#[pyfunction]
fn gaussian_binomial(k: u32, d: u32) -> PyResult<BigUint> {
    core::gaussian_binomial(k, d).map_err(err)
}

#[pyfunction]
fn spanning_check(p: &PyPoly) -> PyResult<bool> {
    Ok(core::spanning_check(&data(p)?))
}

#[pyfunction]
fn decompose_by_kernel(p: &PyPoly) -> PyResult<Vec<(PySubspace, PyPoly)>> {
    Ok(core::decompose_by_kernel(&data(p)?)
        .into_iter()
        .map(|(k, v)| (k.into(), v.into()))
        .collect())
}

#[pyfunction]
fn psi_embed(p: &PyPoly, kernel: &PySubspace) -> PyResult<PyPoly> {
    core::psi_embed(&data(p)?, &kernel.inner)
        .map(|d| d.into_poly().into())
        .map_err(err)
}

#[pyfunction]
fn rp_standard(k: u32) -> PyResult<PyPoly> {
    core::rp_standard(k)
        .map(|d| d.into_poly().into())
        .map_err(err)
}

/// `{"lambda": [...], "lambda_prime": [...], "rho1k": str}` as bit strings.
#[pyfunction]
fn lambda_family(k: u32) -> PyResult<BTreeMap<&'static str, Vec<String>>> {
    let f = core::lambda_family(k).map_err(err)?;
    let bits = |fs: &[core::Functional]| fs.iter().map(ToString::to_string).collect();
    Ok(BTreeMap::from([
        ("lambda", bits(f.lambda())),
        ("lambda_prime", bits(f.lambda_prime())),
        ("rho1k", vec![f.rho1k().to_string()]),
    ]))
}

#[pyfunction]
fn sigma(k: u32) -> PyResult<(PyPoly, PyPoly)> {
    let (a, b) = core::sigma(k).map_err(err)?;
    Ok((a.into(), b.into()))
}

#[pyfunction]
fn f_poly(k: u32, m: u32) -> PyResult<PyPoly> {
    core::f_poly(k, m)
        .map(|d| d.into_poly().into())
        .map_err(err)
}

#[pyfunction]
fn enumerate_fixed_points(k: u32, m: u32) -> PyResult<Vec<(String, String)>> {
    Ok(core::enumerate_fixed_points(k, m)
        .map_err(err)?
        .into_iter()
        .map(|p| (p.label, p.monomial.to_string()))
        .collect())
}

#[pyfunction]
fn witness_monomial(k: u32, m: u32) -> PyResult<String> {
    core::witness_monomial(k, m)
        .map(|w| w.to_string())
        .map_err(err)
}

/// `(found, monomial or None, reason)`.
#[pyfunction]
fn find_witness(p: &PyPoly) -> PyResult<(bool, Option<String>, String)> {
    let r = core::find_witness(&data(p)?).map_err(err)?;
    Ok((r.found, r.monomial.map(|m| m.to_string()), r.reason))
}

/// `(decomposable, products or None)`.
#[pyfunction]
fn brute_force_decomposable(
    target: &PyPoly,
    generators: Vec<PyPoly>,
) -> PyResult<(bool, Option<Vec<Vec<usize>>>)> {
    let gens: Vec<core::Poly> = generators.into_iter().map(|g| g.inner).collect();
    let cert = core::brute_force_decomposable(&target.inner, &gens).map_err(err)?;
    Ok((cert.is_some(), cert.map(|c| c.products)))
}

#[pyfunction]
fn verify_remark_identity(k: u32, m: u32) -> PyResult<bool> {
    core::verify_remark_identity(k, m).map_err(err)
}

#[pyfunction]
fn dim_zn_zn(n: u32) -> PyResult<BigInt> {
    core::dim_zn_zn(n).map_err(err)
}

type Breakdown = Vec<(u32, BigUint, BigUint)>;

/// `(value, [(l, N_l, component_dim), ...])`.
#[pyfunction]
fn compose_dim(
    n: u32,
    k: u32,
    component_dims: BTreeMap<u32, BigUint>,
) -> PyResult<(BigUint, Breakdown)> {
    let r = core::compose_dim(n, k, &component_dims).map_err(err)?;
    let rows = r
        .breakdown
        .into_iter()
        .map(|b| (b.l, b.count, b.component_dim))
        .collect();
    Ok((r.value, rows))
}

#[pyfunction]
fn gk_bounds(k: u32) -> (BigUint, BigUint) {
    core::gk_bounds(k)
}

#[pyfunction]
fn fk_generator_degrees(k: u32) -> PyResult<Vec<u64>> {
    if k == 0 || k > 24 {
        return Err(PyValueError::new_err("k must be between 1 and 24"));
    }
    Ok(core::fk_generator_degrees(k))
}

#[pymodule]
fn bordism(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PySubspace>()?;
    m.add_function(wrap_pyfunction!(span, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator, m)?)?;
    m.add_function(wrap_pyfunction!(complement, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_subspaces, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_check, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_by_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(psi_embed, m)?)?;
    m.add_function(wrap_pyfunction!(rp_standard, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_family, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(f_poly, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(witness_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(find_witness, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_decomposable, m)?)?;
    m.add_function(wrap_pyfunction!(verify_remark_identity, m)?)?;
    m.add_function(wrap_pyfunction!(dim_zn_zn, m)?)?;
    m.add_function(wrap_pyfunction!(compose_dim, m)?)?;
    m.add_function(wrap_pyfunction!(gk_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(fk_generator_degrees, m)?)?;
    Ok(())
}
