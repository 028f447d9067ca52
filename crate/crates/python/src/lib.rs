//! Python bindings: `import kpcontent`.

use std::collections::HashMap;

use kp_content::factorizations::{count, CountMethod, FactorizationSpec, DEFAULT_BRUTE_FORCE_BOUND};
use kp_content::hurwitz::{self, CoverProfile};
use kp_content::kp::{kp_residual, log_tau};
use kp_content::perm::Permutation as CorePermutation;
use kp_content::plucker::{content_family, plucker_check_all};
use kp_content::triangulations::f_table;
use kp_content::{acceptance, Error, GradedSeries, Partition as CorePartition, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {}", e.kind(), e))
}

fn partition(parts: Vec<usize>) -> PyResult<CorePartition> {
    CorePartition::from_unsorted(parts).map_err(err)
}

fn method(name: &str, bound: usize) -> PyResult<CountMethod> {
    match name {
        "brute" => Ok(CountMethod::BruteForce { bound }),
        "characters" => Ok(CountMethod::Characters),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

fn profile(alpha: Vec<usize>, beta: Vec<usize>, genus: usize) -> PyResult<CoverProfile> {
    CoverProfile::new(partition(alpha)?, partition(beta)?, genus).map_err(err)
}

/// A partition, stored with its parts in decreasing order.
#[pyclass(module = "kpcontent", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Partition(CorePartition);

#[pymethods]
impl Partition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        partition(parts).map(Partition)
    }

    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse().map(Partition).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn aut_size(&self) -> BigInt {
        self.0.aut_size()
    }

    fn contents(&self) -> Vec<i64> {
        self.0.contents()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// Permutation of {1, ..., d}.
#[pyclass(module = "kpcontent", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct Permutation(CorePermutation);

#[pymethods]
impl Permutation {
    /// Images of 1..d, one-based.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        if images.contains(&0) {
            return Err(PyValueError::new_err("images are one-based"));
        }
        CorePermutation::from_images(images.into_iter().map(|i| i - 1).collect())
            .map(Permutation)
            .map_err(err)
    }

    #[staticmethod]
    fn from_cycles(s: &str, degree: usize) -> PyResult<Self> {
        CorePermutation::from_cycles(s, degree).map(Permutation).map_err(err)
    }

    fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.compose(&other.0))
    }

    fn inverse(&self) -> Permutation {
        Permutation(self.0.inverse())
    }

    fn cycle_type(&self) -> Partition {
        Partition(self.0.cycle_type())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Truncated power series in p_1, p_2, ... with rational coefficients.
#[pyclass(module = "kpcontent", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Series(GradedSeries);

#[pymethods]
impl Series {
    #[staticmethod]
    fn parse(s: &str, cap: usize) -> PyResult<Self> {
        GradedSeries::parse(s, cap).map(Series).map_err(err)
    }

    #[getter]
    fn cap(&self) -> usize {
        self.0.cap()
    }

    fn coefficient(&self, parts: Vec<usize>) -> PyResult<BigRational> {
        Ok(self.0.coefficient(&partition(parts)?))
    }

    /// Pairs (parts, coefficient) in graded order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyTuple>, BigRational)>> {
        self.0
            .terms()
            .map(|(l, c)| Ok((PyTuple::new(py, l.parts())?, c.clone())))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn log(&self) -> PyResult<Series> {
        self.0.log().map(Series).map_err(err)
    }

    fn exp(&self) -> PyResult<Series> {
        self.0.exp().map(Series).map_err(err)
    }

    fn kp_residual(&self, eq: usize) -> PyResult<Series> {
        kp_residual(&self.0, eq).map(Series).map_err(err)
    }

    fn __add__(&self, other: &Series) -> Series {
        Series(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Series) -> Series {
        Series(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Series) -> Series {
        Series(&self.0 * &other.0)
    }

    fn __eq__(&self, other: &Series) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_exact_string()
    }
}

fn content_values(y: &Bound<'_, PyAny>, cap: usize) -> PyResult<HashMap<i64, Rational>> {
    let c = cap as i64;
    (-c..=c).map(|j| Ok((j, y.call1((j,))?.extract()?))).collect()
}

fn family_from(y: &Bound<'_, PyAny>, q: Vec<BigRational>, cap: usize) -> PyResult<kp_content::plucker::PluckerFamily> {
    let ys = content_values(y, cap)?;
    let q_at = |i: usize| q.get(i - 1).cloned().unwrap_or_default();
    Ok(content_family(|j| ys[&j].clone(), q_at, cap))
}

#[pyfunction]
#[pyo3(signature = (alpha, beta, a, transitive=true, method="brute", bound=DEFAULT_BRUTE_FORCE_BOUND))]
fn count_factorizations(alpha: Vec<usize>, beta: Vec<usize>, a: Vec<usize>, transitive: bool, method: &str, bound: usize) -> PyResult<BigInt> {
    let spec = FactorizationSpec::new(partition(alpha)?, partition(beta)?, a).map_err(err)?;
    count(&spec, transitive, self::method(method, bound)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (alpha, beta, genus, method="brute", bound=DEFAULT_BRUTE_FORCE_BOUND))]
fn double_hurwitz(alpha: Vec<usize>, beta: Vec<usize>, genus: usize, method: &str, bound: usize) -> PyResult<BigRational> {
    hurwitz::double_hurwitz(&profile(alpha, beta, genus)?, self::method(method, bound)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (alpha, beta, genus, m, method="brute", bound=DEFAULT_BRUTE_FORCE_BOUND))]
fn m_hypermap(alpha: Vec<usize>, beta: Vec<usize>, genus: usize, m: usize, method: &str, bound: usize) -> PyResult<BigRational> {
    hurwitz::m_hypermap(&profile(alpha, beta, genus)?, m, self::method(method, bound)?).map_err(err)
}

/// Coefficients of the m-hypermap number as a polynomial in m, constant term first.
#[pyfunction]
#[pyo3(signature = (alpha, beta, genus, method="brute", bound=DEFAULT_BRUTE_FORCE_BOUND))]
fn polynomial_in_m(alpha: Vec<usize>, beta: Vec<usize>, genus: usize, method: &str, bound: usize) -> PyResult<Vec<BigRational>> {
    let poly = hurwitz::polynomial_in_m(&profile(alpha, beta, genus)?, self::method(method, bound)?).map_err(err)?;
    Ok(poly.coefficients().to_vec())
}

#[pyfunction]
#[pyo3(signature = (alpha, beta, genus, method="brute", bound=DEFAULT_BRUTE_FORCE_BOUND))]
fn hypermap_count(alpha: Vec<usize>, beta: Vec<usize>, genus: usize, method: &str, bound: usize) -> PyResult<BigRational> {
    hurwitz::hypermap_count(&partition(alpha)?, &partition(beta)?, genus, self::method(method, bound)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (alpha, edges, faces, method="brute", bound=DEFAULT_BRUTE_FORCE_BOUND))]
fn map_count(alpha: Vec<usize>, edges: usize, faces: usize, method: &str, bound: usize) -> PyResult<BigRational> {
    hurwitz::map_count(&partition(alpha)?, edges, faces, self::method(method, bound)?).map_err(err)
}

/// F(n, g) for n <= n_max, keyed by (n, g).
#[pyfunction]
fn triangulations(py: Python<'_>, n_max: usize) -> PyResult<HashMap<(i64, i64), BigInt>> {
    let table = py.detach(|| f_table(n_max));
    table.entries().map(|(n, g)| Ok(((n, g), table.count(n, g).map_err(err)?))).collect()
}

/// log tau for the content-product family with content weight y(j) and power sums q.
#[pyfunction]
fn content_log_tau(y: &Bound<'_, PyAny>, q: Vec<BigRational>, cap: usize) -> PyResult<Series> {
    let fam = family_from(y, q, cap)?;
    log_tau(&fam, cap).map(Series).map_err(err)
}

/// Violated Plücker relations as (alpha, beta, value).
#[pyfunction]
fn plucker_violations(y: &Bound<'_, PyAny>, q: Vec<BigRational>, size_cap: usize) -> PyResult<Vec<(String, String, BigRational)>> {
    let fam = family_from(y, q, 2 * size_cap + 1)?;
    let found = plucker_check_all(&fam, size_cap).map_err(err)?;
    Ok(found.into_iter().map(|v| (v.alpha.to_string(), v.beta.to_string(), v.value)).collect())
}

/// (number, title, passed, summary) for each acceptance check.
#[pyfunction]
fn verify_all(py: Python<'_>) -> Vec<(usize, String, bool, String)> {
    py.detach(acceptance::run_all)
        .into_iter()
        .map(|r| (r.number, r.title.to_string(), r.passed(), r.summary.clone()))
        .collect()
}

#[pymodule]
fn kpcontent(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<Permutation>()?;
    m.add_class::<Series>()?;
    m.add_function(wrap_pyfunction!(count_factorizations, m)?)?;
    m.add_function(wrap_pyfunction!(double_hurwitz, m)?)?;
    m.add_function(wrap_pyfunction!(m_hypermap, m)?)?;
    m.add_function(wrap_pyfunction!(polynomial_in_m, m)?)?;
    m.add_function(wrap_pyfunction!(hypermap_count, m)?)?;
    m.add_function(wrap_pyfunction!(map_count, m)?)?;
    m.add_function(wrap_pyfunction!(triangulations, m)?)?;
    m.add_function(wrap_pyfunction!(content_log_tau, m)?)?;
    m.add_function(wrap_pyfunction!(plucker_violations, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
