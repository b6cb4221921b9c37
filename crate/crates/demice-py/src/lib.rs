//! Python bindings for the `demice` crate.

use demice::crystal;
use demice::keys;
use demice::lattice;
use demice::laurent;
use demice::{binf, suite, weyl};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: demice::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Permutation", module = "demice_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Permutation(weyl::Permutation);

#[pymethods]
impl Permutation {
    /// One-line notation, 1-based.
    #[new]
    fn new(one_line: Vec<usize>) -> PyResult<Self> {
        weyl::Permutation::new(one_line).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_word(r: usize, word: Vec<usize>) -> PyResult<Self> {
        weyl::Permutation::from_word(r, &word).map(Self).map_err(err)
    }

    /// Accepts `s1*s2`, `[3,1,2]` or `e`.
    #[staticmethod]
    fn parse(s: &str, r: usize) -> PyResult<Self> {
        weyl::Permutation::parse(s, r).map(Self).map_err(err)
    }

    #[staticmethod]
    fn longest(r: usize) -> Self {
        Self(weyl::Permutation::longest(r))
    }

    #[getter]
    fn one_line(&self) -> Vec<usize> {
        self.0.images().to_vec()
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.0.reduced_word()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn bruhat_leq(&self, other: &Self) -> PyResult<bool> {
        weyl::bruhat_leq(&self.0, &other.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Permutation({})", weyl::word_string(&self.0))
    }
}

#[pyclass(name = "Tableau", module = "demice_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Tableau(crystal::Tableau);

#[pymethods]
impl Tableau {
    /// Rows of a semistandard tableau with entries in `1..=rank`.
    #[new]
    fn new(rank: usize, rows: Vec<Vec<usize>>) -> PyResult<Self> {
        crystal::Tableau::new(rank, rows).map(Self).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows().to_vec()
    }

    fn weight(&self) -> Vec<usize> {
        self.0.weight()
    }

    fn f(&self, i: usize) -> PyResult<Option<Self>> {
        Ok(self.0.f(i).map_err(err)?.map(Self))
    }

    fn e(&self, i: usize) -> PyResult<Option<Self>> {
        Ok(self.0.e(i).map_err(err)?.map(Self))
    }

    fn lusztig(&self) -> PyResult<Self> {
        crystal::lusztig_involution(&self.0).map(Self).map_err(err)
    }

    /// Gelfand-Tsetlin pattern rows, top row first.
    fn gtp(&self) -> Vec<Vec<i64>> {
        crystal::gtp_from_tableau(&self.0).rows
    }

    fn __repr__(&self) -> String {
        format!("Tableau({})", self.0)
    }
}

#[pyclass(name = "LaurentPolynomial", module = "demice_py", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct LaurentPolynomial(laurent::LaurentPolynomial);

#[pymethods]
impl LaurentPolynomial {
    #[staticmethod]
    fn parse(s: &str, rank: usize) -> PyResult<Self> {
        laurent::LaurentPolynomial::parse(s, rank).map(Self).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    /// `(exponents, coefficient)` pairs in ascending exponent order.
    fn terms(&self) -> Vec<(Vec<i64>, num_bigint::BigInt)> {
        self.0.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(err)
    }

    fn demazure(&self, i: usize) -> PyResult<Self> {
        laurent::demazure(i, &self.0).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPolynomial({:?})", self.0.to_string())
    }
}

fn pad(lambda: Vec<usize>, r: Option<usize>) -> PyResult<(Vec<usize>, usize)> {
    let r = r.unwrap_or(lambda.len());
    Ok((crystal::pad_partition(&lambda, r).map_err(err)?, r))
}

#[pyfunction]
#[pyo3(signature = (lam, r=None))]
fn schur(lam: Vec<usize>, r: Option<usize>) -> PyResult<LaurentPolynomial> {
    let (lam, r) = pad(lam, r)?;
    laurent::schur(&lam, r).map(LaurentPolynomial).map_err(err)
}

/// `∂_w z^λ`, or the atom operator when `atom` is true.
#[pyfunction]
#[pyo3(signature = (lam, w, atom=false))]
fn demazure(lam: Vec<usize>, w: &Permutation, atom: bool) -> PyResult<LaurentPolynomial> {
    let (lam, _) = pad(lam, Some(w.0.degree()))?;
    let z = laurent::LaurentPolynomial::monomial(lam.iter().map(|&x| x as i64).collect());
    laurent::demazure_w(&w.0, &z, atom).map(LaurentPolynomial).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (lam, r=None, n=None))]
fn partition_function(lam: Vec<usize>, r: Option<usize>, n: Option<usize>) -> PyResult<LaurentPolynomial> {
    let (lam, r) = pad(lam, r)?;
    lattice::uncolored_partition_function(&lam, r, n).map(LaurentPolynomial).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (lam, w, n=None))]
fn colored_partition_function(lam: Vec<usize>, w: &Permutation, n: Option<usize>) -> PyResult<LaurentPolynomial> {
    let (lam, _) = pad(lam, Some(w.0.degree()))?;
    lattice::colored_partition_function(&lam, &w.0, n).map(LaurentPolynomial).map_err(err)
}

/// Returns `(passed, cases)`.
#[pyfunction]
#[pyo3(signature = (colored=true))]
fn ybe_check(py: Python<'_>, colored: bool) -> (bool, usize) {
    let rep = py.detach(|| lattice::ybe_check(colored));
    (rep.ok(), rep.cases)
}

#[pyfunction]
fn omega(t: &Tableau) -> PyResult<Permutation> {
    crystal::omega(&t.0).map(Permutation).map_err(err)
}

#[pyfunction]
fn algorithm1(t: &Tableau) -> Permutation {
    Permutation(keys::algorithm1(&t.0))
}

#[pyfunction]
fn algorithm2(t: &Tableau) -> Permutation {
    Permutation(keys::algorithm2(&t.0))
}

#[pyfunction]
fn right_key(t: &Tableau) -> PyResult<Tableau> {
    keys::right_key(&t.0).map(Tableau).map_err(err)
}

#[pyfunction]
fn left_key(t: &Tableau) -> PyResult<Tableau> {
    keys::left_key(&t.0).map(Tableau).map_err(err)
}

#[pyfunction]
fn string_f(t: &Tableau, word: Vec<usize>) -> PyResult<Vec<i64>> {
    Ok(crystal::string_f(&t.0, &word).map_err(err)?.entries)
}

#[pyfunction]
fn enumerate_tableaux(lam: Vec<usize>, r: usize) -> PyResult<Vec<Tableau>> {
    Ok(crystal::enumerate_tableaux(&lam, r).map_err(err)?.into_iter().map(Tableau).collect())
}

#[pyfunction]
fn omega_dagger(r: usize, coords: Vec<i64>) -> PyResult<Permutation> {
    let p = binf::ConePoint::new(r, coords).map_err(err)?;
    p.omega_dagger().map(Permutation).map_err(err)
}

/// JSON report of a named battery.
#[pyfunction]
fn run_suite(py: Python<'_>, name: &str) -> PyResult<String> {
    let rep = py.detach(|| suite::run(name)).map_err(err)?;
    serde_json::to_string(&rep).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn demice_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Permutation>()?;
    m.add_class::<Tableau>()?;
    m.add_class::<LaurentPolynomial>()?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(demazure, m)?)?;
    m.add_function(wrap_pyfunction!(partition_function, m)?)?;
    m.add_function(wrap_pyfunction!(colored_partition_function, m)?)?;
    m.add_function(wrap_pyfunction!(ybe_check, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(algorithm1, m)?)?;
    m.add_function(wrap_pyfunction!(algorithm2, m)?)?;
    m.add_function(wrap_pyfunction!(right_key, m)?)?;
    m.add_function(wrap_pyfunction!(left_key, m)?)?;
    m.add_function(wrap_pyfunction!(string_f, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(omega_dagger, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
