//! Python bindings: algebras, group actions and the homology pipelines.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use thl_core::algebra::{self, AlgebraMap, FiniteGroupAction};
use thl_core::crossed;
use thl_core::fixtures::{self, FIXTURE_NAMES};
use thl_core::linalg::{parse_rational, Rational, SparseMatrix, SparseVec};
use thl_core::sequences;
use thl_core::twisted;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Rational> {
    parse_rational(s).map_err(err)
}

#[pyclass(name = "Algebra", frozen, skip_from_py_object, module = "thl")]
#[derive(Clone)]
struct PyAlgebra {
    inner: algebra::Algebra,
}

#[pymethods]
impl PyAlgebra {
    /// `mult[i][j]` holds the coordinates of `e_i e_j` as `"p/q"` strings.
    #[new]
    fn new(basis: Vec<String>, unit: usize, mult: Vec<Vec<Vec<String>>>) -> PyResult<Self> {
        let mut table = Vec::with_capacity(mult.len());
        for row in &mult {
            let mut out = Vec::with_capacity(row.len());
            for entry in row {
                let pairs = entry.iter().enumerate().map(|(k, c)| Ok((k, rational(c)?)));
                out.push(SparseVec::from_pairs(pairs.collect::<PyResult<Vec<_>>>()?));
            }
            table.push(out);
        }
        let a = algebra::Algebra::new(basis, SparseVec::unit(unit), table).map_err(err)?;
        Ok(PyAlgebra { inner: a })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.inner.basis_names().to_vec()
    }

    fn is_commutative(&self) -> bool {
        self.inner.is_commutative()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, basis={:?})", self.inner.dim(), self.inner.basis_names())
    }
}

#[pyclass(name = "GroupAction", frozen, skip_from_py_object, module = "thl")]
#[derive(Clone)]
struct PyGroup {
    inner: FiniteGroupAction,
}

#[pymethods]
impl PyGroup {
    /// `table[x][y]` names `xy`; `action[x][i][j]` is the coefficient of `e_i` in `x(e_j)`.
    #[new]
    fn new(elements: Vec<String>, table: Vec<Vec<String>>, action: BTreeMap<String, Vec<Vec<String>>>) -> PyResult<Self> {
        let index = |n: &str| {
            elements.iter().position(|e| e == n).ok_or_else(|| err(format!("unknown element `{n}`")))
        };
        let table = table
            .iter()
            .map(|row| row.iter().map(|n| index(n)).collect::<PyResult<Vec<_>>>())
            .collect::<PyResult<Vec<_>>>()?;
        let mut maps = Vec::with_capacity(elements.len());
        for name in &elements {
            let rows = action.get(name).ok_or_else(|| err(format!("no automorphism for `{name}`")))?;
            let d = rows.len();
            let mut triplets = Vec::new();
            for (i, row) in rows.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    triplets.push((i, j, rational(c)?));
                }
            }
            maps.push(AlgebraMap::new(SparseMatrix::from_triplets(d, d, triplets)));
        }
        let g = FiniteGroupAction::new(elements, table, maps).map_err(err)?;
        Ok(PyGroup { inner: g })
    }

    #[staticmethod]
    fn trivial(dim: usize) -> Self {
        PyGroup { inner: FiniteGroupAction::trivial(dim) }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn element_names(&self) -> Vec<String> {
        self.inner.element_names().to_vec()
    }

    /// Conjugacy classes as lists of element names.
    fn conjugacy_classes(&self) -> Vec<Vec<String>> {
        let names = self.inner.element_names();
        algebra::conjugacy_data(&self.inner)
            .classes
            .iter()
            .map(|c| c.iter().map(|&x| names[x].clone()).collect())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("GroupAction(order={}, elements={:?})", self.inner.order(), self.inner.element_names())
    }
}

impl PyGroup {
    fn element(&self, name: &str) -> PyResult<usize> {
        self.inner.element_index(name).map_err(err)
    }
}

#[pyclass(name = "ExactnessNode", frozen, get_all, module = "thl")]
struct PyNode {
    label: String,
    image_dim: usize,
    kernel_dim: usize,
    composite_zero: bool,
    exact: bool,
}

fn nodes(r: &sequences::ExactnessReport) -> Vec<PyNode> {
    r.nodes
        .iter()
        .map(|n| PyNode {
            label: n.label.clone(),
            image_dim: n.image_dim,
            kernel_dim: n.kernel_dim,
            composite_zero: n.composite_zero,
            exact: n.exact(),
        })
        .collect()
}

#[pyclass(name = "TheoremDegree", frozen, get_all, module = "thl")]
struct PyTheoremDegree {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    rank: usize,
    injective: bool,
    summand: bool,
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    FIXTURE_NAMES.to_vec()
}

/// `(algebra, group, default_degree, default_twist)` of a built-in fixture.
#[pyfunction]
fn fixture(name: &str) -> PyResult<(PyAlgebra, PyGroup, usize, String)> {
    let f = fixtures::fixture(name).ok_or_else(|| err(format!("unknown fixture `{name}`")))?;
    Ok((PyAlgebra { inner: f.algebra }, PyGroup { inner: f.group }, f.default_degree, f.default_twist.to_string()))
}

#[pyfunction]
fn crossed_product(a: &PyAlgebra, g: &PyGroup) -> PyResult<PyAlgebra> {
    Ok(PyAlgebra { inner: algebra::crossed_product(&a.inner, &g.inner).map_err(err)? })
}

#[pyfunction]
fn twisted_hochschild(a: &PyAlgebra, g: &PyGroup, twist: &str, max_degree: usize) -> PyResult<Vec<usize>> {
    let x = g.element(twist)?;
    Ok(twisted::twisted_hochschild(&a.inner, g.inner.action(x), max_degree).map_err(err)?.dims)
}

#[pyfunction]
fn twisted_cyclic(a: &PyAlgebra, g: &PyGroup, twist: &str, max_degree: usize) -> PyResult<Vec<usize>> {
    let x = g.element(twist)?;
    twisted::twisted_cyclic_dims(&a.inner, g.inner.action(x), max_degree).map_err(err)
}

/// Cyclic homology of an algebra with no twist.
#[pyfunction]
fn cyclic(a: &PyAlgebra, max_degree: usize) -> PyResult<Vec<usize>> {
    twisted::twisted_cyclic_dims(&a.inner, &AlgebraMap::identity(a.inner.dim()), max_degree).map_err(err)
}

#[pyfunction]
fn proposition_dims(a: &PyAlgebra, g: &PyGroup, max_degree: usize) -> PyResult<Vec<usize>> {
    crossed::proposition_dims(&a.inner, &g.inner, max_degree).map_err(err)
}

#[pyfunction]
fn coinvariant_dims(a: &PyAlgebra, g: &PyGroup, max_degree: usize) -> PyResult<Vec<usize>> {
    crossed::coinvariant_dims(&a.inner, &g.inner, max_degree).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (a, g, max_degree, coinvariants = true))]
fn lambda_dims(a: &PyAlgebra, g: &PyGroup, max_degree: usize, coinvariants: bool) -> PyResult<Vec<usize>> {
    Ok(crossed::connes_lambda_complex(&a.inner, &g.inner, max_degree, coinvariants).map_err(err)?.dims)
}

/// Stalk homology per conjugacy class representative.
#[pyfunction]
fn stalk_dims(a: &PyAlgebra, g: &PyGroup, max_degree: usize) -> PyResult<BTreeMap<String, Vec<usize>>> {
    let names = g.inner.element_names();
    Ok(crossed::conjugacy_decomposition(&a.inner, &g.inner, max_degree)
        .map_err(err)?
        .into_iter()
        .map(|s| (names[s.representative].clone(), s.homology.dims))
        .collect())
}

#[pyfunction]
fn g_hochschild(a: &PyAlgebra, g: &PyGroup, max_degree: usize) -> PyResult<Vec<usize>> {
    Ok(sequences::g_hochschild(&a.inner, &g.inner, max_degree).map_err(err)?.dims)
}

#[pyfunction]
fn derham(a: &PyAlgebra, g: &PyGroup, max_degree: usize) -> PyResult<Vec<usize>> {
    Ok(sequences::derham_homology(&a.inner, &g.inner, max_degree).map_err(err)?.dims)
}

/// `(name, p, q, passed)` for every operator identity with `p + q ≤ max_total`.
#[pyfunction]
fn verify_identities(a: &PyAlgebra, g: &PyGroup, max_total: usize) -> PyResult<Vec<(String, usize, usize, bool)>> {
    Ok(crossed::verify_identities(&a.inner, &g.inner, max_total)
        .map_err(err)?
        .into_iter()
        .map(|c| (c.name.to_string(), c.p, c.q, c.passed()))
        .collect())
}

#[pyfunction]
fn theorem_map(a: &PyAlgebra, g: &PyGroup, twist: &str, max_degree: usize) -> PyResult<Vec<PyTheoremDegree>> {
    let x = g.element(twist)?;
    Ok(crossed::theorem_map_f(&a.inner, &g.inner, x, max_degree)
        .map_err(err)?
        .degrees
        .into_iter()
        .map(|d| PyTheoremDegree {
            degree: d.degree,
            source_dim: d.source_dim,
            target_dim: d.target_dim,
            rank: d.rank,
            injective: d.injective,
            summand: d.summand,
        })
        .collect())
}

/// `(hh_dims, hc_dims, nodes)`.
#[pyfunction]
fn sbi(a: &PyAlgebra, g: &PyGroup, max_degree: usize) -> PyResult<(Vec<usize>, Vec<usize>, Vec<PyNode>)> {
    let s = sequences::sbi_sequence(&a.inner, &g.inner, max_degree).map_err(err)?;
    Ok((s.hh_dims.clone(), s.hc_dims.clone(), nodes(&s.report)))
}

/// `(hdr_dims, hc_bar_dims, hh_bar_dims, nodes)`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn karoubi(
    a: &PyAlgebra,
    g: &PyGroup,
    max_degree: usize,
) -> PyResult<(Vec<usize>, Vec<usize>, Vec<usize>, Vec<PyNode>)> {
    let k = sequences::karoubi_sequence(&a.inner, &g.inner, max_degree).map_err(err)?;
    Ok((k.hdr_dims.clone(), k.hc_bar_dims.clone(), k.hh_bar_dims.clone(), nodes(&k.report)))
}

#[pymodule]
fn thl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyNode>()?;
    m.add_class::<PyTheoremDegree>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(crossed_product, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_hochschild, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(proposition_dims, m)?)?;
    m.add_function(wrap_pyfunction!(coinvariant_dims, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_dims, m)?)?;
    m.add_function(wrap_pyfunction!(stalk_dims, m)?)?;
    m.add_function(wrap_pyfunction!(g_hochschild, m)?)?;
    m.add_function(wrap_pyfunction!(derham, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_map, m)?)?;
    m.add_function(wrap_pyfunction!(sbi, m)?)?;
    m.add_function(wrap_pyfunction!(karoubi, m)?)?;
    Ok(())
}
