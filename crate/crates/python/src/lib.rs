//! Python bindings.
//!
//! Rationals cross the boundary as `fractions.Fraction` on the way out and
//! as anything whose `str()` is `p` or `p/q` on the way in (`int`,
//! `Fraction`, or a string).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use dialgebra::catalog::{self, ClassId, ClassSpec};
use dialgebra::report::{self, Format, TableOptions};
use dialgebra::weights::{canonicalize_triple, CanonicalWeightClass, Family, SignReading};
use dialgebra::{Algebra, BasisChange, Error, QMatrix, QVector, Rational, WeightTriple};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_string().parse().map_err(err)
}

fn opt_rational(obj: Option<&Bound<'_, PyAny>>) -> PyResult<Option<Rational>> {
    obj.map(to_rational).transpose()
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn vector_out<'py>(py: Python<'py>, v: &QVector) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.iter().map(|x| fraction(py, x)).collect()
}

fn vector_in(xs: &[Bound<'_, PyAny>]) -> PyResult<QVector> {
    Ok(QVector(xs.iter().map(to_rational).collect::<PyResult<_>>()?))
}

type PyMatrix<'py> = Vec<Vec<Bound<'py, PyAny>>>;

fn matrix_out<'py>(py: Python<'py>, m: &QMatrix) -> PyResult<PyMatrix<'py>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| fraction(py, x)).collect())
        .collect()
}

fn matrix_in(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<QMatrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(to_rational).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    QMatrix::from_rows(rows).map_err(err)
}

fn triple(rho: &Bound<'_, PyAny>, tau: &Bound<'_, PyAny>, sigma: &Bound<'_, PyAny>) -> PyResult<WeightTriple> {
    Ok(WeightTriple::new(
        to_rational(rho)?,
        to_rational(tau)?,
        to_rational(sigma)?,
    ))
}

fn reading(literal: bool) -> SignReading {
    if literal {
        SignReading::Literal
    } else {
        SignReading::Displayed
    }
}

/// A finite-dimensional algebra with products ⊣ (left) and ⊢ (right).
#[pyclass(name = "Algebra", module = "pydialgebra", frozen)]
struct PyAlgebra {
    inner: Algebra,
}

type Violations<'py> = Vec<(String, (usize, usize, usize), Vec<Bound<'py, PyAny>>)>;

fn violations<'py>(py: Python<'py>, report: &dialgebra::AxiomReport) -> PyResult<Violations<'py>> {
    report
        .violations
        .iter()
        .map(|v| {
            let (p, q, r) = v.triple;
            Ok((
                v.axiom.label().to_string(),
                (p + 1, q + 1, r + 1),
                vector_out(py, &v.residual)?,
            ))
        })
        .collect()
}

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    fn zero(dim: usize) -> PyResult<Self> {
        if dim == 0 {
            return Err(PyValueError::new_err("dimension must be at least 1"));
        }
        Ok(PyAlgebra {
            inner: Algebra::zero(dim),
        })
    }

    /// Parse the JSON structure-constant format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: dialgebra::io::parse_algebra(text).map_err(err)?,
        })
    }

    /// Catalog class "L1".."L6"; missing parameters take their defaults.
    #[staticmethod]
    #[pyo3(signature = (class_id, a=None, b=None, c=None))]
    fn from_class(
        class_id: &str,
        a: Option<&Bound<'_, PyAny>>,
        b: Option<&Bound<'_, PyAny>>,
        c: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Self> {
        let id: ClassId = class_id.parse().map_err(err)?;
        let spec = ClassSpec::with_params(id, opt_rational(a)?, opt_rational(b)?, opt_rational(c)?);
        Ok(PyAlgebra {
            inner: catalog::instantiate(&spec).map_err(err)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn to_json(&self) -> String {
        dialgebra::io::algebra_to_json(&self.inner)
    }

    fn product_left<'py>(
        &self,
        py: Python<'py>,
        x: Vec<Bound<'py, PyAny>>,
        y: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let z = self.inner.product_left(&vector_in(&x)?, &vector_in(&y)?).map_err(err)?;
        vector_out(py, &z)
    }

    fn product_right<'py>(
        &self,
        py: Python<'py>,
        x: Vec<Bound<'py, PyAny>>,
        y: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let z = self
            .inner
            .product_right(&vector_in(&x)?, &vector_in(&y)?)
            .map_err(err)?;
        vector_out(py, &z)
    }

    /// Violations as `(axiom, (p, q, r), residual)` with 1-based indices.
    fn check_left_symmetric<'py>(&self, py: Python<'py>) -> PyResult<Violations<'py>> {
        violations(py, &self.inner.check_left_symmetric())
    }

    fn check_diassociative<'py>(&self, py: Python<'py>) -> PyResult<Violations<'py>> {
        violations(py, &self.inner.check_diassociative())
    }

    fn is_left_symmetric(&self) -> bool {
        self.inner.check_left_symmetric().satisfied()
    }

    /// Canonical basis of Der_(rho, tau, sigma) as a list of row-major matrices.
    fn derivation_space<'py>(
        &self,
        py: Python<'py>,
        rho: &Bound<'py, PyAny>,
        tau: &Bound<'py, PyAny>,
        sigma: &Bound<'py, PyAny>,
    ) -> PyResult<Vec<PyMatrix<'py>>> {
        let space = dialgebra::derivation_space(&self.inner, &triple(rho, tau, sigma)?);
        space.basis.iter().map(|m| matrix_out(py, m)).collect()
    }

    /// Derivation space of a family tag ("111", ..., "01d").
    #[pyo3(signature = (family, delta=None, literal=false))]
    fn family_space<'py>(
        &self,
        py: Python<'py>,
        family: &str,
        delta: Option<&Bound<'py, PyAny>>,
        literal: bool,
    ) -> PyResult<Vec<PyMatrix<'py>>> {
        let family: Family = family.parse().map_err(err)?;
        let class = CanonicalWeightClass::from_family(family, opt_rational(delta)?).map_err(err)?;
        let t = class.solver_triple(reading(literal)).map_err(err)?;
        let space = dialgebra::derivation_space(&self.inner, &t);
        space.basis.iter().map(|m| matrix_out(py, m)).collect()
    }

    fn is_derivation(
        &self,
        rho: &Bound<'_, PyAny>,
        tau: &Bound<'_, PyAny>,
        sigma: &Bound<'_, PyAny>,
        matrix: Vec<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<bool> {
        dialgebra::is_derivation(&self.inner, &triple(rho, tau, sigma)?, &matrix_in(matrix)?).map_err(err)
    }

    /// The same algebra in the basis whose j-th vector is column j of `matrix`.
    fn change_basis(&self, matrix: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<PyAlgebra> {
        let p = BasisChange::new(matrix_in(matrix)?).map_err(err)?;
        Ok(PyAlgebra {
            inner: self.inner.change_basis(&p).map_err(err)?,
        })
    }

    /// Dimensions of the lower central series of Der(S).
    fn derivation_lie_series(&self) -> PyResult<Vec<usize>> {
        Ok(dialgebra::der_lie_structure(&self.inner)
            .map_err(err)?
            .lower_central_series())
    }

    fn is_characteristically_nilpotent(&self) -> PyResult<bool> {
        dialgebra::is_characteristically_nilpotent(&self.inner).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// `(family_tag, delta)` for a raw triple; delta is None except for "01d".
#[pyfunction]
fn canonicalize<'py>(
    py: Python<'py>,
    rho: &Bound<'py, PyAny>,
    tau: &Bound<'py, PyAny>,
    sigma: &Bound<'py, PyAny>,
) -> PyResult<(String, Option<Bound<'py, PyAny>>)> {
    let class = canonicalize_triple(&triple(rho, tau, sigma)?);
    let delta = class.delta().map(|d| fraction(py, d)).transpose()?;
    Ok((class.family().tag().to_string(), delta))
}

#[pyfunction]
fn is_morphism(src: &PyAlgebra, dst: &PyAlgebra, matrix: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<bool> {
    dialgebra::is_morphism(&src.inner, &dst.inner, &matrix_in(matrix)?).map_err(err)
}

#[pyfunction]
fn expected_dimension(class_id: &str, family: &str) -> PyResult<Option<usize>> {
    let id: ClassId = class_id.parse().map_err(err)?;
    let family: Family = family.parse().map_err(err)?;
    Ok(catalog::expected_dimension(id, family))
}

/// The full table report rendered as "md", "csv" or "json".
#[pyfunction]
#[pyo3(signature = (format="md", class_id=None, delta=None, literal=false))]
fn table(format: &str, class_id: Option<&str>, delta: Option<&Bound<'_, PyAny>>, literal: bool) -> PyResult<String> {
    let format: Format = format.parse().map_err(err)?;
    let mut opts = TableOptions {
        reading: reading(literal),
        ..Default::default()
    };
    if let Some(id) = class_id {
        opts.classes = vec![id.parse().map_err(err)?];
    }
    if let Some(d) = opt_rational(delta)? {
        opts.delta = d;
    }
    let rep = report::build_table(&opts).map_err(err)?;
    Ok(report::render(&rep, format))
}

#[pymodule]
fn pydialgebra(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    m.add_function(wrap_pyfunction!(is_morphism, m)?)?;
    m.add_function(wrap_pyfunction!(expected_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
