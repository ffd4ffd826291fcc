//! Python bindings: `import hochschild`.

use std::sync::Arc;

use hochschild_core::checks::run_all;
use hochschild_core::gerstenhaber::{bracket_class, cup_class, find_bracket_witness, find_cup_witness};
use hochschild_core::quiver::{validate as validate_quiver, validate_gentle, validate_string};
use hochschild_core::{
    emit_quiver, hh_dim_formula, parse_quiver, CochainComplex, Field, GerstenhaberError, HypothesisError, QuiverFile,
    StringAlgebra,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    hochschild,
    HypothesisViolation,
    PyValueError,
    "The quiver violates a hypothesis of the computation."
);

fn format_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn hypothesis_err(e: HypothesisError) -> PyErr {
    HypothesisViolation::new_err(e.to_string())
}

fn gerstenhaber_err(e: GerstenhaberError) -> PyErr {
    match e {
        GerstenhaberError::Complex(c) => PyValueError::new_err(c.to_string()),
        other => HypothesisViolation::new_err(other.to_string()),
    }
}

fn field(p: u64) -> PyResult<Field> {
    Field::from_characteristic(p).map_err(format_err)
}

/// A quadratic string algebra over a prime field or the rationals.
#[pyclass(module = "hochschild", frozen)]
pub struct Algebra {
    cx: CochainComplex,
}

impl Algebra {
    fn alg(&self) -> &StringAlgebra {
        self.cx.algebra()
    }
}

#[pymethods]
impl Algebra {
    /// Parses the quiver file format; `char` overrides the file's `char:` line.
    #[staticmethod]
    #[pyo3(signature = (text, char=None))]
    fn parse(text: &str, char: Option<u64>) -> PyResult<Algebra> {
        let file = parse_quiver(text).map_err(format_err)?;
        let f = match char {
            Some(p) => field(p)?,
            None => file.field(),
        };
        let alg = StringAlgebra::new(file.quiver).map_err(hypothesis_err)?;
        Ok(Algebra { cx: CochainComplex::new(Arc::new(alg), f) })
    }

    /// The same algebra over the field of characteristic `p`.
    fn with_characteristic(&self, p: u64) -> PyResult<Algebra> {
        Ok(Algebra { cx: CochainComplex::new(self.cx.algebra_arc(), field(p)?) })
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.cx.field().characteristic()
    }

    #[getter]
    fn is_gentle(&self) -> bool {
        self.alg().is_gentle()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.alg().quiver().vertex_count()
    }

    #[getter]
    fn arrow_count(&self) -> usize {
        self.alg().quiver().arrow_count()
    }

    fn to_text(&self) -> String {
        emit_quiver(&QuiverFile { quiver: self.alg().quiver().clone(), characteristic: Some(self.cx.field()) })
    }

    /// `dim HHⁿ` from the cochain complex.
    fn hh_dim(&self, py: Python<'_>, n: usize) -> usize {
        py.detach(|| self.cx.hh_dim(n))
    }

    /// `dim HHⁿ` from the closed form.
    fn formula_dim(&self, n: usize) -> usize {
        hh_dim_formula(self.alg(), n, self.cx.field()).dim
    }

    /// Dimensions of `HH⁰ … HH^max_degree`; `method` is "oracle" or "formula".
    #[pyo3(signature = (max_degree, method="oracle"))]
    fn dims(&self, py: Python<'_>, max_degree: usize, method: &str) -> PyResult<Vec<usize>> {
        match method {
            "oracle" => Ok(py.detach(|| (0..=max_degree).map(|n| self.cx.hh_dim(n)).collect())),
            "formula" => Ok((0..=max_degree).map(|n| self.formula_dim(n)).collect()),
            other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        }
    }

    /// The closed form for degree `n` as a dict with its named summands.
    fn formula_report<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
        let r = hh_dim_formula(self.alg(), n, self.cx.field());
        let d = PyDict::new(py);
        d.set_item("degree", r.degree)?;
        d.set_item("dim", r.dim)?;
        d.set_item("case", r.char_case.as_str())?;
        let summands: Vec<(&str, usize, i8)> = r.summands.iter().map(|s| (s.name, s.value, s.sign)).collect();
        d.set_item("summands", summands)?;
        Ok(d)
    }

    /// Canonical representatives of a basis of `HHⁿ`, as strings.
    fn cohomology_basis(&self, n: usize) -> Vec<String> {
        let q = self.alg().quiver();
        self.cx.cohomology_basis_cochains(n).iter().map(|c| c.display(q)).collect()
    }

    /// `(i, j, coordinates)` for the cup product of basis classes of `HHⁿ` and `HHᵐ`.
    fn cup_table(&self, n: usize, m: usize) -> PyResult<Vec<(usize, usize, Vec<String>)>> {
        self.table(n, m, false)
    }

    /// `(i, j, coordinates)` for the bracket of basis classes of `HHⁿ` and `HHᵐ`.
    fn bracket_table(&self, n: usize, m: usize) -> PyResult<Vec<(usize, usize, Vec<String>)>> {
        if n + m == 0 {
            return Err(PyValueError::new_err("bracket of degree-0 classes has degree -1"));
        }
        self.table(n, m, true)
    }

    /// A verified witness dict, or `None` when there is no gentle pair.
    #[pyo3(signature = (max_degree, kind="cup"))]
    fn witness<'py>(&self, py: Python<'py>, max_degree: usize, kind: &str) -> PyResult<Option<Bound<'py, PyDict>>> {
        let found = match kind {
            "cup" => find_cup_witness(&self.cx, max_degree),
            "bracket" => find_bracket_witness(&self.cx, max_degree),
            other => return Err(PyValueError::new_err(format!("unknown kind {other:?}"))),
        }
        .map_err(gerstenhaber_err)?;
        let Some(w) = found else { return Ok(None) };
        let q = self.alg().quiver();
        let d = PyDict::new(py);
        d.set_item("kind", w.kind.as_str())?;
        d.set_item("omega", w.omega.display(q))?;
        d.set_item("n", w.n)?;
        d.set_item("k", w.k)?;
        d.set_item("s1", w.s1)?;
        d.set_item("s2", w.s2)?;
        d.set_item("product_degree", w.product_degree())?;
        d.set_item("product", w.product.display(q))?;
        d.set_item("expected", w.expected.display(q))?;
        d.set_item("coefficient", w.coefficient.to_string())?;
        d.set_item("inputs_are_cocycles", w.inputs_are_cocycles)?;
        d.set_item("identity_holds", w.identity_holds)?;
        d.set_item("class_nonzero", w.class_nonzero)?;
        d.set_item("verified", w.verified())?;
        Ok(Some(d))
    }

    /// Every invariant suite: a list of `(name, passed, detail)`.
    #[pyo3(signature = (max_degree, seed=0))]
    fn selftest(&self, py: Python<'_>, max_degree: usize, seed: u64) -> Vec<(String, bool, String)> {
        py.detach(|| run_all(&self.cx, max_degree, seed).into_iter().map(|o| (o.name, o.passed, o.detail)).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(vertices={}, arrows={}, relations={}, char={})",
            self.vertex_count(),
            self.arrow_count(),
            self.alg().quiver().relations().len(),
            self.characteristic()
        )
    }
}

impl Algebra {
    fn table(&self, n: usize, m: usize, bracket: bool) -> PyResult<Vec<(usize, usize, Vec<String>)>> {
        let left = self.cx.cohomology_basis_cochains(n);
        let right = self.cx.cohomology_basis_cochains(m);
        let mut out = Vec::new();
        for (i, f) in left.iter().enumerate() {
            for (j, g) in right.iter().enumerate() {
                let rep = if bracket { bracket_class(&self.cx, f, g) } else { cup_class(&self.cx, f, g) };
                let rep = rep.map_err(format_err)?;
                let coords = self.cx.class_coordinates(&rep).map_err(format_err)?;
                out.push((i, j, coords.iter().map(|x| x.to_string()).collect()));
            }
        }
        Ok(out)
    }
}

/// Parses a quiver file into an [`Algebra`].
#[pyfunction]
#[pyo3(signature = (text, char=None))]
fn parse(text: &str, char: Option<u64>) -> PyResult<Algebra> {
    Algebra::parse(text, char)
}

/// Validation report for a quiver file that need not be a string algebra.
#[pyfunction]
fn validate<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let q = parse_quiver(text).map_err(format_err)?.quiver;
    let report = validate_quiver(&q);
    let string = validate_string(&q).is_ok();
    let d = PyDict::new(py);
    d.set_item("valid", report.is_ok())?;
    d.set_item("string", string)?;
    d.set_item("gentle", string && validate_gentle(&q).is_ok())?;
    let violations: Vec<String> = report.violations.iter().map(|v| format!("{v:?}")).collect();
    d.set_item("violations", violations)?;
    Ok(d)
}

#[pymodule]
fn hochschild(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add("HypothesisViolation", m.py().get_type::<HypothesisViolation>())?;
    Ok(())
}
