//! Python bindings. Vectors cross the boundary as lists of ints and
//! indices are 0-based.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wetpaper::analysis::{self, McSolver};
use wetpaper::codes::{Code, GolayVariant, ParityCheckMatrix, Syndrome};
use wetpaper::wpc::{self, CoverObject, EmbedSolution};
use wetpaper::zzw::{ColumnBlock, ZzwParams, ZzwScheme};
use wetpaper::{Error, Field};

create_exception!(wetpaper, WetPaperError, PyException);
create_exception!(wetpaper, RankDeficientError, WetPaperError);
create_exception!(wetpaper, BoundExceededError, WetPaperError);
create_exception!(wetpaper, InfeasibleError, WetPaperError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::RankDeficient { .. } => RankDeficientError::new_err(msg),
        Error::BoundExceeded { .. } => BoundExceededError::new_err(msg),
        Error::Infeasible(_)
        | Error::NoFeasiblePlan
        | Error::DecodeFailure
        | Error::EmbeddingFailure => InfeasibleError::new_err(msg),
        Error::Parse(_) => WetPaperError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

trait IntoPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for wetpaper::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

#[pyclass(name = "Field", module = "wetpaper", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyField(Field);

#[pymethods]
impl PyField {
    #[new]
    fn new(q: u32) -> PyResult<Self> {
        Ok(Self(Field::new(q).py_err()?))
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        self.check(&[a, b])?;
        Ok(self.0.add(a, b))
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        self.check(&[a, b])?;
        Ok(self.0.sub(a, b))
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        self.check(&[a, b])?;
        Ok(self.0.mul(a, b))
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        self.check(&[a])?;
        self.0.inv(a).py_err()
    }

    fn pow(&self, a: u32, e: u64) -> PyResult<u32> {
        self.check(&[a])?;
        Ok(self.0.pow(a, e))
    }

    fn __repr__(&self) -> String {
        format!("Field({})", self.0.q())
    }
}

impl PyField {
    fn check(&self, vals: &[u32]) -> PyResult<()> {
        match vals.iter().find(|&&v| !self.0.contains(v)) {
            Some(v) => Err(PyValueError::new_err(format!("{v} is not in GF({})", self.0.q()))),
            None => Ok(()),
        }
    }
}

#[pyclass(name = "Code", module = "wetpaper", frozen)]
struct PyCode(Code);

#[pymethods]
impl PyCode {
    #[staticmethod]
    fn hamming(q: u32, p: usize) -> PyResult<Self> {
        Ok(Self(Code::hamming(Field::new(q).py_err()?, p).py_err()?))
    }

    #[staticmethod]
    fn golay23() -> Self {
        Self(Code::golay(GolayVariant::Binary))
    }

    #[staticmethod]
    fn golay11() -> Self {
        Self(Code::golay(GolayVariant::Ternary))
    }

    #[staticmethod]
    fn reed_solomon(q: u32, n: usize, dim: usize) -> PyResult<Self> {
        Ok(Self(Code::reed_solomon(Field::new(q).py_err()?, n, dim).py_err()?))
    }

    #[staticmethod]
    #[pyo3(signature = (q, rows, cols, seed=0))]
    fn random(q: u32, rows: usize, cols: usize, seed: u64) -> PyResult<Self> {
        Ok(Self(Code::random(Field::new(q).py_err()?, rows, cols, seed).py_err()?))
    }

    /// Parses the `q n k` header plus rows text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Self(Code::from_parity_check(ParityCheckMatrix::from_text(text).py_err()?)))
    }

    fn to_text(&self) -> String {
        self.0.parity_check().to_text()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.field().q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn redundancy(&self) -> usize {
        self.0.redundancy()
    }

    #[getter]
    fn covering_radius(&self) -> Option<usize> {
        self.0.spec().rho
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField(self.0.field().clone())
    }

    fn parity_check(&self) -> Vec<Vec<u32>> {
        self.0.parity_check().matrix().to_rows()
    }

    fn syndrome(&self, x: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(self.0.syndrome(&x).py_err()?.into_symbols())
    }

    fn coset_leader(&self, s: Vec<u32>) -> PyResult<Vec<u32>> {
        self.0.coset_decode(&Syndrome::new(s)).py_err()
    }

    fn average_leader_weight(&self) -> Option<f64> {
        self.0.average_leader_weight()
    }

    fn min_r(&self, wet: usize) -> PyResult<usize> {
        wpc::min_r(&self.0, wet).py_err()
    }

    fn fig1(&self) -> PyResult<Vec<(usize, usize, usize)>> {
        Ok(analysis::fig1_table(&self.0)
            .py_err()?
            .into_iter()
            .map(|r| (r.wet, r.min_r, r.remaining))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Code(q={}, n={}, k={})", self.0.field().q(), self.0.n(), self.0.k())
    }
}

type Solution = (Vec<u32>, usize, Vec<u32>);

fn unpack(sol: EmbedSolution) -> Solution {
    (sol.y, sol.changes, sol.random_tail)
}

/// Returns `(y, changes, tail)`.
#[pyfunction]
#[pyo3(signature = (code, x, m, max_changes=None))]
fn embed_plain(code: &PyCode, x: Vec<u32>, m: Vec<u32>, max_changes: Option<usize>) -> PyResult<Solution> {
    let cover = CoverObject::dry(x);
    let sol = match max_changes {
        Some(t) => wpc::solve_bounded(&code.0, &cover, &m, t),
        None => wpc::solve_plain(&code.0, &cover, &m),
    };
    sol.map(unpack).py_err()
}

#[pyfunction]
fn embed_wet(code: &PyCode, x: Vec<u32>, wet: Vec<usize>, m: Vec<u32>) -> PyResult<Solution> {
    let cover = CoverObject::new(x, wet).py_err()?;
    wpc::solve_wet_unbounded(code.0.parity_check().matrix(), &cover, &m)
        .map(unpack)
        .py_err()
}

#[pyfunction]
fn embed_randomized(code: &PyCode, x: Vec<u32>, wet: Vec<usize>, m: Vec<u32>, r: usize) -> PyResult<Solution> {
    let cover = CoverObject::new(x, wet).py_err()?;
    wpc::solve_randomized(&code.0, &cover, &m, r).map(unpack).py_err()
}

/// The first `n − k − r` syndrome symbols of `y`.
#[pyfunction]
#[pyo3(signature = (code, y, r=0))]
fn extract(code: &PyCode, y: Vec<u32>, r: usize) -> PyResult<Vec<u32>> {
    if r > code.0.redundancy() {
        return Err(PyValueError::new_err("r exceeds n - k"));
    }
    let mut s = code.0.syndrome(&y).py_err()?.into_symbols();
    s.truncate(code.0.redundancy() - r);
    Ok(s)
}

#[pyfunction]
fn entropy_q(q: u32, x: f64) -> f64 {
    analysis::entropy_q(q, x)
}

#[pyfunction]
fn inv_entropy_q(q: u32, y: f64) -> f64 {
    analysis::inv_entropy_q(q, y)
}

#[pyfunction]
fn sphere_covering_bound(q: u32, alpha: f64) -> PyResult<f64> {
    analysis::sphere_covering_bound(q, alpha).py_err()
}

#[pyfunction]
fn efficiency_loss(r: usize, n: usize, k: usize) -> PyResult<f64> {
    analysis::efficiency_loss(r, n, k).py_err()
}

#[pyfunction]
fn asymptotic_loss(q: u32, lam: f64, p: usize) -> PyResult<f64> {
    analysis::asymptotic_loss(q, lam, p).py_err()
}

#[pyfunction]
#[pyo3(signature = (code, r=0))]
fn bound_report<'py>(py: Python<'py>, code: &PyCode, r: usize) -> PyResult<Bound<'py, PyDict>> {
    let rep = analysis::bound_report(&code.0, r).py_err()?;
    let d = PyDict::new(py);
    d.set_item("alpha", rep.alpha)?;
    d.set_item("e_bound", rep.e_bound)?;
    d.set_item("e_actual", rep.e_actual)?;
    d.set_item("loss", rep.loss)?;
    Ok(d)
}

/// Returns `(successes, block_rate, message_rate)`. `solver` is
/// `"randomized"`, `"wet"` or `"fresh-matrix"`.
#[pyfunction]
#[pyo3(signature = (code, wet, trials, seed, r=0, solver="randomized", blocks=1))]
fn simulate(
    code: &PyCode,
    wet: usize,
    trials: usize,
    seed: u64,
    r: usize,
    solver: &str,
    blocks: u32,
) -> PyResult<(usize, f64, f64)> {
    let mc = match solver {
        "randomized" => McSolver::Randomized { code: &code.0, r },
        "wet" => McSolver::WetUnbounded { code: &code.0 },
        "fresh-matrix" => McSolver::RandomMatrix {
            field: code.0.field().clone(),
            rows: code.0.redundancy(),
            cols: code.0.n(),
        },
        other => return Err(PyValueError::new_err(format!("unknown solver {other:?}"))),
    };
    let est = analysis::failure_rate_mc(&mc, wet, blocks, trials, seed).py_err()?;
    Ok((est.successes, est.block_rate, est.message_rate))
}

#[pyclass(name = "Zzw", module = "wetpaper", frozen)]
struct PyZzw(ZzwScheme);

#[pymethods]
impl PyZzw {
    #[new]
    fn new(r_max: usize, o: usize) -> PyResult<Self> {
        let params = ZzwParams::new(r_max, o).py_err()?;
        Ok(Self(ZzwScheme::new(params).py_err()?))
    }

    /// Number of columns.
    #[getter]
    fn n(&self) -> usize {
        self.0.params().n
    }

    #[getter]
    fn column_len(&self) -> usize {
        self.0.params().column_len
    }

    #[getter]
    fn p(&self) -> usize {
        self.0.params().p
    }

    #[getter]
    fn u(&self) -> usize {
        self.0.params().u
    }

    /// Returns `(r, f, capacity_bits)`.
    fn plan(&self, columns: Vec<Vec<u8>>, wet: Vec<Vec<usize>>) -> PyResult<(usize, usize, usize)> {
        let blocks = blocks(columns, wet)?;
        let plan = self.0.plan(&blocks).py_err()?;
        Ok((plan.r, plan.f, plan.capacity_bits(self.0.params())))
    }

    /// Embeds payload bits; returns the stego columns.
    fn embed(&self, columns: Vec<Vec<u8>>, wet: Vec<Vec<usize>>, payload: Vec<u8>) -> PyResult<Vec<Vec<u32>>> {
        let blocks = blocks(columns, wet)?;
        let plan = self.0.plan(&blocks).py_err()?;
        Ok(self.0.embed(&blocks, &payload, &plan).py_err()?.into_iter().map(bits_out).collect())
    }

    fn mark_failure(&self, columns: Vec<Vec<u8>>, wet: Vec<Vec<usize>>) -> PyResult<Vec<Vec<u32>>> {
        Ok(self.0.mark_failure(&blocks(columns, wet)?).py_err()?.into_iter().map(bits_out).collect())
    }

    /// Returns `(r, f, bits)`; an embedded payload is a prefix of `bits`.
    fn extract(&self, columns: Vec<Vec<u8>>) -> PyResult<(usize, usize, Vec<u32>)> {
        let ex = self.0.extract(&columns).py_err()?;
        Ok((ex.r, ex.f, bits_out(ex.payload)))
    }
}

// `Vec<u8>` would surface as `bytes`.
fn bits_out(bits: Vec<u8>) -> Vec<u32> {
    bits.into_iter().map(u32::from).collect()
}

fn blocks(columns: Vec<Vec<u8>>, wet: Vec<Vec<usize>>) -> PyResult<Vec<ColumnBlock>> {
    if columns.len() != wet.len() {
        return Err(PyValueError::new_err("one wet set per column is required"));
    }
    columns
        .into_iter()
        .zip(wet)
        .map(|(c, w)| ColumnBlock::new(c, w).py_err())
        .collect()
}

#[pymodule(name = "wetpaper")]
fn wetpaper_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("WetPaperError", py.get_type::<WetPaperError>())?;
    m.add("RankDeficientError", py.get_type::<RankDeficientError>())?;
    m.add("BoundExceededError", py.get_type::<BoundExceededError>())?;
    m.add("InfeasibleError", py.get_type::<InfeasibleError>())?;
    m.add_class::<PyField>()?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyZzw>()?;
    m.add_function(wrap_pyfunction!(embed_plain, m)?)?;
    m.add_function(wrap_pyfunction!(embed_wet, m)?)?;
    m.add_function(wrap_pyfunction!(embed_randomized, m)?)?;
    m.add_function(wrap_pyfunction!(extract, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_q, m)?)?;
    m.add_function(wrap_pyfunction!(inv_entropy_q, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_covering_bound, m)?)?;
    m.add_function(wrap_pyfunction!(efficiency_loss, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_loss, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    Ok(())
}
