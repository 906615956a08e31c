//! Python bindings. The module is importable as `factorlab`.

use factorlab::abelian::{FiniteAbelianGroup, GSequence};
use factorlab::codec::{encode_ratio, encode_shape};
use factorlab::factor::{length_set as engine_length_set, MatrixMonoid};
use factorlab::padic::{unit_recovery as recover, DvrContext, DvrMatrix, FullMatrixRing, MatrixOrder, OrderArithmetic};
use factorlab::tblock::{elasticity_upper_bound as bound, ElasticityBoundInput};
use factorlab::tiled::{isomorphic, shape_violations, witness_pair as pair, TiledOrder, TiledShape};
use factorlab::zerosum::{block_atoms, block_elasticity, block_length_set, davenport};
use factorlab::Error;
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) | Error::Schema { .. } => PyValueError::new_err(e.to_string()),
        Error::Precision(_) => PyArithmeticError::new_err(e.to_string()),
        Error::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for factorlab::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// A finite abelian group `Z_{n_1} ⊕ … ⊕ Z_{n_r}`.
#[pyclass(name = "Group", module = "factorlab", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGroup {
    inner: FiniteAbelianGroup,
}

#[pymethods]
impl PyGroup {
    #[new]
    fn new(orders: Vec<i64>) -> PyResult<Self> {
        Ok(PyGroup { inner: FiniteAbelianGroup::new(&orders).py()? })
    }

    #[getter]
    fn cyclic_orders(&self) -> Vec<u64> {
        self.inner.cyclic_orders().to_vec()
    }

    fn cardinality(&self) -> u64 {
        self.inner.cardinality()
    }

    fn davenport(&self) -> PyResult<u32> {
        davenport(&self.inner).py()
    }

    /// Minimal zero-sum sequences, each a list of coordinate lists.
    fn atoms(&self) -> PyResult<Vec<Vec<Vec<u64>>>> {
        let set = block_atoms(&self.inner).py()?;
        Ok(set.atoms.iter().map(|a| a.elements().map(|g| g.coords().to_vec()).collect()).collect())
    }

    fn length_set(&self, sequence: Vec<Vec<i64>>) -> PyResult<Vec<u32>> {
        let s = self.sequence(&sequence)?;
        Ok(block_length_set(&self.inner, &s).py()?.into_iter().collect())
    }

    /// `(brute_force, formula)` as `"num/den"` strings.
    fn elasticity(&self) -> PyResult<(String, String)> {
        let e = block_elasticity(&self.inner).py()?;
        Ok((encode_ratio(&e.brute_force), encode_ratio(&e.formula)))
    }

    fn __repr__(&self) -> String {
        format!("Group({:?})", self.inner.cyclic_orders())
    }
}

impl PyGroup {
    fn sequence(&self, elems: &[Vec<i64>]) -> PyResult<GSequence> {
        let mut s = GSequence::new();
        for e in elems {
            s.push(self.inner.element(e).py()?, 1);
        }
        Ok(s)
    }
}

/// A tiled order shape: block sizes and an exponent matrix.
#[pyclass(name = "Shape", module = "factorlab", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyShape {
    inner: TiledShape,
}

#[pymethods]
impl PyShape {
    #[new]
    fn new(partition: Vec<usize>, exponents: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyShape { inner: TiledShape::new(partition, exponents).py()? })
    }

    /// Human-readable descriptions of every violated order condition.
    #[staticmethod]
    fn violations(partition: Vec<usize>, exponents: Vec<Vec<i64>>) -> PyResult<Vec<String>> {
        Ok(shape_violations(&partition, &exponents).py()?.iter().map(|v| v.to_string()).collect())
    }

    #[getter]
    fn partition(&self) -> Vec<usize> {
        self.inner.partition().to_vec()
    }

    #[getter]
    fn exponents(&self) -> Vec<Vec<i64>> {
        self.inner.exponents().to_vec()
    }

    fn is_standard_form(&self) -> bool {
        self.inner.is_standard_form()
    }

    fn is_hereditary(&self) -> PyResult<bool> {
        self.inner.is_hereditary().py()
    }

    /// `(standard_form, record_json)`.
    fn reduce(&self) -> (PyShape, String) {
        let (s, rec) = self.inner.standard_form_reduce();
        (PyShape { inner: s }, serde_json::to_string(&rec).expect("serializable"))
    }

    /// A block permutation witnessing isomorphism, or `None`.
    fn isomorphic(&self, other: &PyShape) -> PyResult<Option<Vec<usize>>> {
        isomorphic(&self.inner, &other.inner).py()
    }

    fn to_json(&self) -> String {
        encode_shape(&self.inner).to_string()
    }

    fn __eq__(&self, other: &PyShape) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Shape({:?}, {:?})", self.inner.partition(), self.inner.exponents())
    }
}

/// A square matrix over `Z_p / p^N`.
#[pyclass(name = "Matrix", module = "factorlab", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMatrix {
    inner: DvrMatrix,
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(p: u64, precision: u32, entries: Vec<Vec<i64>>) -> PyResult<Self> {
        let ctx = DvrContext::new(p, precision).py()?;
        Ok(PyMatrix { inner: DvrMatrix::new(ctx, &entries).py()? })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.context().p()
    }

    #[getter]
    fn precision(&self) -> u32 {
        self.inner.context().precision()
    }

    /// Entries as centered representatives.
    #[getter]
    fn entries(&self) -> Vec<Vec<i64>> {
        self.inner.centered_rows()
    }

    /// `w(det)`, or `None` when the determinant vanishes at this precision.
    fn det_valuation(&self) -> Option<u32> {
        let v = self.inner.det_valuation();
        (!v.at_precision).then_some(v.value)
    }

    fn is_unit(&self) -> bool {
        self.inner.is_unit_matrix()
    }

    fn __mul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        if self.inner.context() != other.inner.context() || self.inner.size() != other.inner.size() {
            return Err(PyValueError::new_err("matrices differ in size or precision"));
        }
        Ok(PyMatrix { inner: self.inner.mul(&other.inner) })
    }

    fn __eq__(&self, other: &PyMatrix) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Matrix(p={}, precision={}, entries={:?})", self.p(), self.precision(), self.entries())
    }
}

/// The 2×2 witness atoms `(α_k, α'_k)` for exponent `t`.
#[pyfunction]
fn witness_pair(p: u64, precision: u32, t: u32, k: u32) -> PyResult<(PyMatrix, PyMatrix)> {
    let ctx = DvrContext::new(p, precision).py()?;
    let (a, b) = pair(ctx, 2, 1, t, k).py()?;
    Ok((PyMatrix { inner: a }, PyMatrix { inner: b }))
}

/// `(lengths, capped)` for a matrix in a tiled order, or in the full matrix
/// ring when `shape` is omitted.
#[pyfunction]
#[pyo3(signature = (matrix, shape = None, cap = 100_000))]
fn length_set(matrix: &PyMatrix, shape: Option<&PyShape>, cap: usize) -> PyResult<(Vec<u32>, bool)> {
    fn run<O: MatrixOrder>(order: O, a: &DvrMatrix, cap: usize) -> factorlab::Result<(Vec<u32>, bool)> {
        let m = MatrixMonoid::new(OrderArithmetic::new(order, a.context())?);
        m.admit(a)?;
        let l = engine_length_set(&m, a, cap)?;
        Ok((l.lengths.into_iter().collect(), l.capped))
    }
    let a = &matrix.inner;
    match shape {
        Some(s) => run(TiledOrder::new(s.inner.clone()).py()?, a, cap).py(),
        None => run(FullMatrixRing { size: a.size() }, a, cap).py(),
    }
}

/// The unit `γ` with `C = γ·B`, given `B ≡ C mod p^t` and `t > w(det B)`.
#[pyfunction]
fn unit_recovery(b: &PyMatrix, c: &PyMatrix, t: u32) -> PyResult<PyMatrix> {
    Ok(PyMatrix { inner: recover(&b.inner, &c.inner, t).py()? })
}

/// The elasticity bound as a `"num/den"` string.
#[pyfunction]
#[pyo3(signature = (n, ram_count, index_valuation, davenport, hereditary))]
fn elasticity_upper_bound(
    n: u64,
    ram_count: u64,
    index_valuation: u64,
    davenport: u64,
    hereditary: bool,
) -> PyResult<String> {
    let input = ElasticityBoundInput { n, ram_count, index_valuation, davenport };
    Ok(encode_ratio(&bound(&input, hereditary).py()?))
}

#[pymodule]
#[pyo3(name = "factorlab")]
fn factorlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyShape>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(witness_pair, m)?)?;
    m.add_function(wrap_pyfunction!(length_set, m)?)?;
    m.add_function(wrap_pyfunction!(unit_recovery, m)?)?;
    m.add_function(wrap_pyfunction!(elasticity_upper_bound, m)?)?;
    Ok(())
}
