//! Python bindings: permutations, groups, indicator scans, censuses and
//! claim checks.

use std::collections::BTreeMap;

use fsind::catalog::reports_json;
use fsind::cosets::double_coset_records;
use fsind::indicators::vanishing_witness;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(
    fsind_py,
    FsindError,
    PyValueError,
    "Error raised by the indicator library."
);
create_exception!(
    fsind_py,
    BoundExceededError,
    FsindError,
    "A configured size bound was exceeded."
);

fn err(e: fsind::Error) -> PyErr {
    match e {
        fsind::Error::BoundExceeded { .. } => BoundExceededError::new_err(e.to_string()),
        _ => FsindError::new_err(e.to_string()),
    }
}

fn limits(enumeration_bound: Option<usize>, index_bound: Option<usize>, seed: Option<u64>) -> fsind::Limits {
    let d = fsind::Limits::default();
    fsind::Limits {
        enumeration: enumeration_bound.unwrap_or(d.enumeration),
        index: index_bound.unwrap_or(d.index),
        seed: seed.unwrap_or(d.seed),
    }
}

/// A permutation in cycle notation, points 1..=degree.
#[pyclass(name = "Permutation", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(fsind::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    #[pyo3(signature = (cycles, degree=None))]
    fn new(cycles: &str, degree: Option<usize>) -> PyResult<Self> {
        let p = match degree {
            Some(d) => fsind::Permutation::parse_with_degree(cycles, d),
            None => fsind::Permutation::parse(cycles),
        };
        p.map(PyPermutation).map_err(err)
    }

    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        fsind::Permutation::from_images(&images).map(PyPermutation).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn sign(&self) -> i32 {
        self.0.sign()
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.0.cycle_type()
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    /// `self ▷ x = self · x · self⁻¹`.
    fn conjugate(&self, x: &PyPermutation) -> PyResult<Self> {
        self.0.conjugate(&x.0).map(PyPermutation).map_err(err)
    }

    fn __pow__(&self, k: i64, _modulo: Option<i64>) -> Self {
        PyPermutation(self.0.pow(k))
    }

    /// Right-to-left composition: `(a * b)(x) = a(b(x))`.
    fn __mul__(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyPermutation).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}', degree={})", self.0, self.0.degree())
    }
}

/// A permutation group with a stabilizer chain.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    group: fsind::PermGroup,
    spec: String,
}

#[pymethods]
impl PyGroup {
    /// Builds a group from a spec such as `sym:6`, `tilde-sym:7@8` or
    /// `gens:(1,2)(3,4);(1,3)(2,4)@4`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let parsed: fsind::GroupSpec = spec.parse().map_err(err)?;
        Ok(PyGroup {
            group: parsed.build().map_err(err)?,
            spec: parsed.to_string(),
        })
    }

    #[staticmethod]
    fn from_generators(degree: usize, generators: Vec<PyRef<'_, PyPermutation>>) -> PyResult<Self> {
        let gens: Vec<fsind::Permutation> = generators.iter().map(|p| p.0.clone()).collect();
        let group = fsind::PermGroup::new(degree, gens).map_err(err)?;
        let text: Vec<String> = group.generators().iter().map(ToString::to_string).collect();
        let spec = format!("gens:{}@{degree}", text.join(";"));
        Ok(PyGroup { group, spec })
    }

    #[getter]
    fn spec(&self) -> &str {
        &self.spec
    }

    #[getter]
    fn degree(&self) -> usize {
        self.group.degree()
    }

    fn order(&self) -> u128 {
        self.group.order()
    }

    fn generators(&self) -> Vec<PyPermutation> {
        self.group.generators().iter().cloned().map(PyPermutation).collect()
    }

    fn __contains__(&self, p: &PyPermutation) -> bool {
        self.group.contains(&p.0)
    }

    fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    /// Character values, one list of strings per irreducible, columns in
    /// class order; `class_reps()` gives the matching representatives.
    #[pyo3(signature = (seed=None))]
    fn character_table(&self, seed: Option<u64>) -> PyResult<Vec<Vec<String>>> {
        let t = fsind::character_table(&self.group, &limits(None, None, seed)).map_err(err)?;
        Ok(t.rows()
            .iter()
            .map(|chi| chi.values().iter().map(ToString::to_string).collect())
            .collect())
    }

    fn class_reps(&self) -> PyResult<Vec<PyPermutation>> {
        let cd = fsind::ClassData::new(&self.group, &fsind::Limits::default()).map_err(err)?;
        Ok(cd.reps().iter().cloned().map(PyPermutation).collect())
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.spec)
    }
}

/// Indicators of every simple of `C(G, H)`.
#[pyclass(name = "IndicatorReport", frozen)]
struct PyIndicatorReport(fsind::IndicatorReport);

#[pymethods]
impl PyIndicatorReport {
    #[getter]
    fn m(&self) -> i64 {
        self.0.m
    }

    /// Number of simples per indicator value.
    #[getter]
    fn summary(&self) -> BTreeMap<i64, usize> {
        self.0.summary.clone()
    }

    /// `(representative, |S(g)|, χ(1), ν)` per simple.
    fn entries(&self) -> Vec<(String, u64, i64, i64)> {
        self.0
            .entries
            .iter()
            .map(|e| (e.rep.clone(), e.stab_order, e.chi_degree, e.nu))
            .collect()
    }

    fn min(&self) -> Option<i64> {
        self.0.min()
    }

    fn all_in(&self, allowed: Vec<i64>) -> bool {
        self.0.all_in(&allowed)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn __len__(&self) -> usize {
        self.0.entries.len()
    }
}

/// Runs scans and claim checks, sharing character tables between calls.
#[pyclass(name = "Scanner", frozen)]
struct PyScanner(fsind::Scanner);

#[pymethods]
impl PyScanner {
    #[new]
    #[pyo3(signature = (enumeration_bound=None, index_bound=None, seed=None))]
    fn new(enumeration_bound: Option<usize>, index_bound: Option<usize>, seed: Option<u64>) -> Self {
        PyScanner(fsind::Scanner::new(limits(enumeration_bound, index_bound, seed)))
    }

    #[pyo3(signature = (g, h, m=2))]
    fn scan(&self, py: Python<'_>, g: &PyGroup, h: &PyGroup, m: i64) -> PyResult<PyIndicatorReport> {
        let report = py.detach(|| self.0.scan(&g.group, &h.group, m)).map_err(err)?;
        Ok(PyIndicatorReport(report.with_category(g.spec.clone(), h.spec.clone())))
    }

    /// `ν_m(g, χ)` for every irreducible `χ` of `S(g)`, in table order.
    #[pyo3(signature = (g, h, m=2))]
    fn indicators_at(&self, g: &PyPermutation, h: &PyGroup, m: i64) -> PyResult<Vec<i64>> {
        let lim = self.0.limits();
        fsind::SimpleObject::all_over(&g.0, &h.group, self.0.cache(), lim)
            .map_err(err)?
            .iter()
            .map(|o| o.nu(m, lim).map_err(err))
            .collect()
    }

    /// Whether some `x ∈ H` has `(gx)^m ∈ H`.
    fn vanishing_witness(&self, g: &PyPermutation, h: &PyGroup, m: i64) -> PyResult<bool> {
        vanishing_witness(&g.0, &h.group, m, self.0.limits()).map_err(err)
    }

    /// `(representative, size, |S(g)|)` per double coset.
    fn double_cosets(&self, g: &PyGroup, h: &PyGroup) -> PyResult<Vec<(String, u128, u128)>> {
        let dc = fsind::double_cosets(&g.group, &h.group, self.0.limits()).map_err(err)?;
        Ok(double_coset_records(&dc)
            .into_iter()
            .map(|r| (r.representative, r.size, r.stabilizer_order))
            .collect())
    }

    /// `(total, null)` double-coset counts for `S_l ⊂ S_n`.
    fn census(&self, l: usize, n: usize) -> PyResult<(usize, usize)> {
        let c = fsind::census_sl(l, n, self.0.limits()).map_err(err)?;
        Ok((c.total, c.null))
    }

    /// Checks one claim; returns its report as JSON.
    #[pyo3(signature = (claim, **params))]
    fn verify(&self, py: Python<'_>, claim: &str, params: Option<BTreeMap<String, usize>>) -> PyResult<String> {
        let params = params.unwrap_or_default();
        let report = py.detach(|| fsind::verify(claim, &params, &self.0)).map_err(err)?;
        Ok(reports_json(&[report]))
    }

    /// Checks every claim of a profile; returns the reports as a JSON array.
    #[pyo3(signature = (profile="quick"))]
    fn verify_all(&self, py: Python<'_>, profile: &str) -> PyResult<String> {
        let reports = py.detach(|| fsind::run_all(profile, &self.0)).map_err(err)?;
        Ok(reports_json(&reports))
    }
}

/// Parses a group spec and returns its order.
#[pyfunction]
fn group_order(spec: &str) -> PyResult<u128> {
    Ok(fsind::parse_group(spec).map_err(err)?.order())
}

#[pymodule]
fn fsind_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyIndicatorReport>()?;
    m.add_class::<PyScanner>()?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add("FsindError", m.py().get_type::<FsindError>())?;
    m.add("BoundExceededError", m.py().get_type::<BoundExceededError>())?;
    Ok(())
}
