//! Python bindings: magmas, structure bialgebras, checkers, Yang-Baxter
//! operators and the 2-dimensional classification. Reports cross the
//! boundary as plain dicts/lists/strings (scalars in the same text forms
//! the JSON files use).

// the pyo3 0.22 macros expand to PyErr conversions clippy flags
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use sdbialg::bialg::StructureBialgebra;
use sdbialg::classify;
use sdbialg::construct;
use sdbialg::error::Error;
use sdbialg::group;
use sdbialg::io;
use sdbialg::linalg::Mat;
use sdbialg::magma::FiniteMagma;
use sdbialg::scalar::{parse_rational, Ring, Scalar};
use sdbialg::ybe;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, v: &Value) -> PyResult<PyObject> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_py(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py(py)
            } else {
                n.as_f64().unwrap().into_py(py)
            }
        }
        Value::String(s) => s.into_py(py),
        Value::Array(items) => {
            let list = PyList::empty_bound(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new_bound(py);
            for (k, val) in map {
                dict.set_item(k, json_to_py(py, val)?)?;
            }
            dict.into_py(py)
        }
    })
}

fn parse_ring(spec: Option<&str>) -> PyResult<Ring> {
    match spec {
        None => Ok(Ring::rational()),
        Some(s) => io::ring_from_str(s).map_err(err),
    }
}

fn parse_vec(ring: Ring, items: Vec<String>) -> PyResult<Vec<Scalar>> {
    items
        .iter()
        .map(|s| io::scalar_from_json(ring, &Value::String(s.clone())).map_err(err))
        .collect()
}

fn scalars_to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Finite Cayley-table magma (shelf / rack / quandle carrier).
#[pyclass(name = "Magma")]
#[derive(Clone)]
struct PyMagma {
    inner: FiniteMagma,
}

#[pymethods]
impl PyMagma {
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        let n = table.len();
        Ok(PyMagma {
            inner: FiniteMagma::new(n, table).map_err(err)?,
        })
    }

    #[staticmethod]
    fn trivial(n: usize) -> PyMagma {
        PyMagma {
            inner: FiniteMagma::trivial(n),
        }
    }

    #[staticmethod]
    fn dihedral(n: usize) -> PyMagma {
        PyMagma {
            inner: FiniteMagma::dihedral(n),
        }
    }

    /// Conjugation quandle of a catalog group (z2..z6, s3, d4, q8).
    #[staticmethod]
    fn conjugation(group_name: &str) -> PyResult<PyMagma> {
        Ok(PyMagma {
            inner: FiniteMagma::conjugation(&group::by_name(group_name).map_err(err)?),
        })
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table().to_vec()
    }

    fn op(&self, x: usize, y: usize) -> usize {
        self.inner.op(x, y)
    }

    /// Axiom report: {"q1", "q2", "q3", "witness", "class"}.
    fn check(&self, py: Python<'_>) -> PyResult<PyObject> {
        let v = serde_json::to_value(self.inner.check_axioms())
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_to_py(py, &v)
    }

    fn left_divide(&self) -> PyResult<PyMagma> {
        Ok(PyMagma {
            inner: self.inner.left_divide().map_err(err)?,
        })
    }

    fn unit(&self) -> Option<usize> {
        self.inner.unit_check()
    }

    fn __repr__(&self) -> String {
        format!(
            "Magma(size={}, table={:?})",
            self.inner.size(),
            self.inner.table()
        )
    }
}

/// All labeled racks on {0..n-1}; exhaustive, intended for n <= 5.
#[pyfunction]
fn enumerate_racks(n: usize) -> Vec<PyMagma> {
    sdbialg::magma::enumerate_racks(n)
        .into_iter()
        .map(|inner| PyMagma { inner })
        .collect()
}

/// Structure-constant bialgebra over Q, GF(p) or Q(sqrt d).
#[pyclass(name = "Bialgebra")]
#[derive(Clone)]
struct PyBialgebra {
    inner: StructureBialgebra,
}

#[pymethods]
impl PyBialgebra {
    /// Parses the JSON file format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyBialgebra {
            inner: io::bialgebra_from_json(&v).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (magma, ring=None))]
    fn rack_algebra(magma: &PyMagma, ring: Option<&str>) -> PyResult<Self> {
        Ok(PyBialgebra {
            inner: construct::rack_algebra(&magma.inner, parse_ring(ring)?).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (magma, ring=None))]
    fn augmented_rack_bialgebra(magma: &PyMagma, ring: Option<&str>) -> PyResult<Self> {
        Ok(PyBialgebra {
            inner: construct::augmented_rack_bialgebra(&magma.inner, parse_ring(ring)?)
                .map_err(err)?,
        })
    }

    /// Linear rack of the 2-dim solvable Lie algebra; returns (star, barstar).
    #[staticmethod]
    #[pyo3(signature = (ring=None))]
    fn leibniz_solvable2(ring: Option<&str>) -> PyResult<(Self, Self)> {
        let l = construct::LeibnizData::solvable2(parse_ring(ring)?);
        let (star, bar) = construct::leibniz_rack(&l);
        Ok((PyBialgebra { inner: star }, PyBialgebra { inner: bar }))
    }

    #[staticmethod]
    #[pyo3(signature = (group_name, ring=None))]
    fn group_adjoint(group_name: &str, ring: Option<&str>) -> PyResult<Self> {
        Ok(PyBialgebra {
            inner: construct::group_hopf_adjoint(
                &group::by_name(group_name).map_err(err)?,
                parse_ring(ring)?,
            ),
        })
    }

    #[staticmethod]
    #[pyo3(signature = (which, ring=None))]
    fn novikov(which: &str, ring: Option<&str>) -> PyResult<Self> {
        let kind = match which {
            "a1" | "A1" => construct::NovikovKind::A1,
            "a2" | "A2" => construct::NovikovKind::A2,
            other => return Err(PyValueError::new_err(format!("unknown table {other:?}"))),
        };
        Ok(PyBialgebra {
            inner: construct::novikov_example(kind, parse_ring(ring)?),
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn ring(&self) -> String {
        self.inner.ring().to_string()
    }

    fn counit(&self) -> Option<Vec<String>> {
        self.inner
            .find_counit()
            .map(|c| scalars_to_strings(&c.vector))
    }

    /// One axiom report as a dict; axiom is one of coassoc, counit, compat,
    /// sd, sd-plain, cube-zero, novikov, gen-idempotent, gen-jordan,
    /// cocommutative.
    fn check(&self, py: Python<'_>, axiom: &str) -> PyResult<PyObject> {
        let report = match axiom {
            "coassoc" => self.inner.check_coassoc(),
            "counit" => self.inner.check_counit(),
            "compat" => self.inner.check_compat(),
            "sd" | "sd-bialgebra" => self.inner.check_sd_bialgebra(),
            "sd-plain" => self.inner.check_sd_plain(),
            "cube-zero" => self.inner.check_cube_zero(),
            "novikov" => self.inner.check_novikov(),
            "gen-idempotent" => self.inner.check_gen_idempotent(),
            "gen-jordan" => self.inner.check_gen_jordan(),
            "cocommutative" => self.inner.check_cocommutative(),
            other => return Err(PyValueError::new_err(format!("unknown axiom {other:?}"))),
        };
        json_to_py(py, &io::report_to_json(&report))
    }

    /// The standard four-checker suite as a list of dicts.
    fn check_all(&self, py: Python<'_>) -> PyResult<PyObject> {
        let reports = [
            self.inner.check_coassoc(),
            self.inner.check_counit(),
            self.inner.check_compat(),
            self.inner.check_sd_bialgebra(),
        ];
        let v = Value::Array(reports.iter().map(io::report_to_json).collect());
        json_to_py(py, &v)
    }

    /// Linear shelf/rack/quandle ladder; barstar enables the inverse axiom.
    #[pyo3(signature = (barstar=None))]
    fn linear_rack_class(&self, barstar: Option<&PyBialgebra>) -> PyResult<Option<String>> {
        let rep = self
            .inner
            .check_linear_rack(barstar.map(|b| &b.inner))
            .map_err(err)?;
        Ok(rep.class.map(|c| {
            match c {
                sdbialg::bialg::LinearClass::Shelf => "shelf",
                sdbialg::bialg::LinearClass::Rack => "rack",
                sdbialg::bialg::LinearClass::Quandle => "quandle",
            }
            .to_string()
        }))
    }

    /// Product of two coefficient vectors (scalars as strings).
    fn mul(&self, u: Vec<String>, v: Vec<String>) -> PyResult<Vec<String>> {
        let ring = self.inner.ring();
        let uu = parse_vec(ring, u)?;
        let vv = parse_vec(ring, v)?;
        if uu.len() != self.inner.dim() || vv.len() != self.inner.dim() {
            return Err(PyValueError::new_err("vector length must equal dim"));
        }
        Ok(scalars_to_strings(&self.inner.mul(&uu, &vv)))
    }

    fn dualize(&self, direction: &str) -> PyResult<PyBialgebra> {
        let inner = match direction {
            "mult-to-comult" => self.inner.dualize_mult_to_comult(),
            "comult-to-mult" => self.inner.dualize_comult_to_mult(),
            other => {
                return Err(PyValueError::new_err(format!(
                    "direction must be mult-to-comult or comult-to-mult, got {other:?}"
                )))
            }
        };
        Ok(PyBialgebra { inner })
    }

    /// Change of basis; rows of the invertible matrix as scalar strings.
    fn change_basis(&self, rows: Vec<Vec<String>>) -> PyResult<PyBialgebra> {
        let ring = self.inner.ring();
        let rows = rows
            .into_iter()
            .map(|r| parse_vec(ring, r))
            .collect::<PyResult<Vec<_>>>()?;
        let p = Mat::from_rows(ring, rows).map_err(err)?;
        Ok(PyBialgebra {
            inner: self.inner.change_basis(&p).map_err(err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&io::bialgebra_to_json(&self.inner))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Bialgebra(dim={}, ring={})",
            self.inner.dim(),
            self.inner.ring()
        )
    }
}

/// Yang-Baxter verdicts for a cocommutative linear rack:
/// {"braid": bool, "invertible": bool | None}.
#[pyfunction]
#[pyo3(signature = (algebra, barstar=None))]
fn ybe_report(
    py: Python<'_>,
    algebra: &PyBialgebra,
    barstar: Option<&PyBialgebra>,
) -> PyResult<PyObject> {
    let r = ybe::build_r(&algebra.inner).map_err(err)?;
    let braid = ybe::check_braid(&r).pass;
    let invertible = match barstar {
        None => None,
        Some(bs) => {
            let rinv = ybe::build_r_inverse(&algebra.inner, &bs.inner).map_err(err)?;
            Some(ybe::check_inverse(&r, &rinv).pass)
        }
    };
    let dict = PyDict::new_bound(py);
    dict.set_item("braid", braid)?;
    dict.set_item("invertible", invertible)?;
    Ok(dict.into_py(py))
}

/// Group-like classification: {"solutions": [...], "canonical": [...]}
/// with tables as coefficient-string lists (a1,a2,b1,b2,c1,c2,d1,d2).
#[pyfunction]
fn classify_type1(py: Python<'_>) -> PyResult<PyObject> {
    let res = classify::enumerate_type1();
    let tables = |ts: &[classify::MultTable2]| -> Value {
        Value::Array(
            ts.iter()
                .map(|t| {
                    Value::Array(
                        t.coeffs()
                            .iter()
                            .map(|s| Value::String(s.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    let v = serde_json::json!({
        "solutions": tables(&res.solutions),
        "canonical": tables(&res.canonical),
    });
    json_to_py(py, &v)
}

/// Type-2 classification: solution components {"base": [...],
/// "directions": [[...]]}; a nonempty direction list is a parametric family.
#[pyfunction]
fn classify_type2(py: Python<'_>) -> PyResult<PyObject> {
    let res = classify::enumerate_type2().map_err(err)?;
    let comps: Vec<Value> = res
        .components
        .iter()
        .map(|c| {
            serde_json::json!({
                "base": c.base.coeffs().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "directions": c
                    .directions
                    .iter()
                    .map(|d| d.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json_to_py(py, &Value::Array(comps))
}

/// Type-3 verification for a rational parameter, e.g. "4" or "1/2".
#[pyfunction]
fn classify_type3(py: Python<'_>, a: &str) -> PyResult<PyObject> {
    let a = parse_rational(a).map_err(err)?;
    let res = classify::verify_type3(&a).map_err(err)?;
    let entries: Vec<Value> = res
        .entries
        .iter()
        .map(|e| {
            serde_json::json!({
                "name": e.name,
                "table": e.table.coeffs().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "reports": e.reports.iter().map(io::report_to_json).collect::<Vec<_>>(),
                "systems_pass": e.systems_pass,
            })
        })
        .collect();
    let v = serde_json::json!({
        "ring": res.ring.to_string(),
        "a": res.a.to_string(),
        "sqrt_a": res.sqrt_a.to_string(),
        "entries": entries,
    });
    json_to_py(py, &v)
}

/// Solves x a = b in the trivial-quandle algebra k[T_n]; scalars as strings.
#[pyfunction]
#[pyo3(signature = (n, a, b, ring=None))]
fn solve_trivial(
    n: usize,
    a: Vec<String>,
    b: Vec<String>,
    ring: Option<&str>,
) -> PyResult<Option<Vec<String>>> {
    let ring = parse_ring(ring)?;
    let t = FiniteMagma::trivial(n);
    let a = parse_vec(ring, a)?;
    let b = parse_vec(ring, b)?;
    Ok(construct::solve_right_mult(&t, ring, &a, &b)
        .map_err(err)?
        .map(|x| scalars_to_strings(&x)))
}

#[pymodule]
fn sdbialg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMagma>()?;
    m.add_class::<PyBialgebra>()?;
    m.add_function(wrap_pyfunction!(enumerate_racks, m)?)?;
    m.add_function(wrap_pyfunction!(ybe_report, m)?)?;
    m.add_function(wrap_pyfunction!(classify_type1, m)?)?;
    m.add_function(wrap_pyfunction!(classify_type2, m)?)?;
    m.add_function(wrap_pyfunction!(classify_type3, m)?)?;
    m.add_function(wrap_pyfunction!(solve_trivial, m)?)?;
    Ok(())
}
