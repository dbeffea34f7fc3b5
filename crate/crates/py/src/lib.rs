//! Python module `pydtm`: parse, print and transform lambda terms, and run
//! the law suites.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use dtm::cli::{run_suites, Suite};
use dtm::dtm::derived_dec;
use dtm::lambda::{gen_term, AnyTerm, LambdaDtm, Mode};
use dtm::ln::{fv_term, lc_term, open_term, subst_term};
use dtm::report::LawReport;
use dtm::{Atom, Error, LnTerm, SampleConfig, Value};

create_exception!(pydtm, ParseError, PyValueError);

fn mode_arg(mode: &str) -> PyResult<Mode> {
    match mode {
        "ln" => Ok(Mode::LocallyNameless),
        "named" => Ok(Mode::Named),
        other => Err(PyValueError::new_err(format!("unknown mode {other:?}; expected 'ln' or 'named'"))),
    }
}

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Parse(p) => ParseError::new_err(p.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A lambda term in either named or locally nameless syntax.
#[pyclass(frozen, module = "pydtm")]
struct Term {
    inner: AnyTerm,
}

impl Term {
    fn ln(&self) -> PyResult<&LnTerm> {
        match &self.inner {
            AnyTerm::Ln(t) => Ok(t),
            AnyTerm::Named(_) => Err(PyValueError::new_err("expected a locally nameless term")),
        }
    }
}

fn wrap(t: LnTerm) -> Term {
    Term { inner: AnyTerm::Ln(t) }
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Nat(n) => n.into_pyobject(py)?.into_any(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::List(items) => {
            let items = items.iter().map(|x| value_to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Atom(a) | Value::Fvar(a) => a.as_str().into_pyobject(py)?.into_any(),
        other => other.to_string().into_pyobject(py)?.into_any(),
    })
}

#[pymethods]
impl Term {
    #[staticmethod]
    #[pyo3(signature = (text, mode = "ln"))]
    fn parse(text: &str, mode: &str) -> PyResult<Term> {
        let inner = AnyTerm::parse(text, mode_arg(mode)?).map_err(to_py_err)?;
        Ok(Term { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (text, mode = "ln"))]
    fn from_json(text: &str, mode: &str) -> PyResult<Term> {
        let json: serde_json::Value = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let inner = AnyTerm::from_json(&json, mode_arg(mode)?).map_err(to_py_err)?;
        Ok(Term { inner })
    }

    /// A pseudo-random term of depth at most `depth`.
    #[staticmethod]
    #[pyo3(signature = (seed, depth = 8, mode = "ln"))]
    fn generate(seed: u64, depth: usize, mode: &str) -> PyResult<Term> {
        Ok(Term { inner: gen_term(seed, depth.max(1), mode_arg(mode)?) })
    }

    #[getter]
    fn mode(&self) -> String {
        self.inner.mode().to_string()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    /// `(context, leaf)` for every variable occurrence, left to right.
    fn decorations<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
        let dtm = LambdaDtm::new(self.inner.mode());
        let decorated = derived_dec(&dtm, &self.inner.to_value());
        let tree = decorated.as_term().expect("decoration yields a term");
        tree.leaves()
            .into_iter()
            .map(|p| {
                let (w, a) = p.as_pair().expect("decorated leaf");
                Ok((value_to_py(py, w)?, value_to_py(py, a)?))
            })
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Term.parse({:?}, mode={:?})", self.inner.to_string(), self.inner.mode().to_string())
    }

    fn __eq__(&self, other: &Term) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.to_string().hash(&mut h);
        self.inner.mode().hash(&mut h);
        h.finish()
    }
}

/// `t[x ↦ u]`.
#[pyfunction]
fn subst(x: &str, u: &Term, t: &Term) -> PyResult<Term> {
    Ok(wrap(subst_term(&Atom::new(x), u.ln()?, t.ln()?)))
}

/// Replaces the indices bound by the removed outermost binder of `t` with `u`.
#[pyfunction]
fn open(u: &Term, t: &Term) -> PyResult<Term> {
    Ok(wrap(open_term(u.ln()?, t.ln()?)))
}

#[pyfunction]
fn lc(t: &Term) -> PyResult<bool> {
    Ok(lc_term(t.ln()?))
}

#[pyfunction]
fn fv(t: &Term) -> PyResult<Vec<String>> {
    Ok(fv_term(t.ln()?).iter().map(Atom::to_string).collect())
}

fn report_dict<'py>(py: Python<'py>, r: &LawReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("suite", &r.suite)?;
    d.set_item("passed", r.passed())?;
    let laws = PyList::empty(py);
    for l in &r.laws {
        let ld = PyDict::new(py);
        ld.set_item("name", &l.name)?;
        ld.set_item("samples", l.samples)?;
        ld.set_item("failures", l.failures)?;
        match &l.counterexample {
            Some(c) => ld.set_item("counterexample", (&c.inputs, &c.lhs, &c.rhs))?,
            None => ld.set_item("counterexample", py.None())?,
        }
        laws.append(ld)?;
    }
    d.set_item("laws", laws)?;
    Ok(d)
}

/// Runs law suites over the lambda instance and returns one dict per suite.
#[pyfunction]
#[pyo3(signature = (suite = "all", mode = "ln", seed = 42, samples = 1000, depth = 8))]
fn check_laws<'py>(
    py: Python<'py>,
    suite: &str,
    mode: &str,
    seed: u64,
    samples: usize,
    depth: usize,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let suite = match suite {
        "kleisli" => Suite::Kleisli,
        "categorical" => Suite::Categorical,
        "roundtrip" => Suite::Roundtrip,
        "subst" => Suite::Subst,
        "applicative" => Suite::Applicative,
        "all" => Suite::All,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    if samples == 0 || depth == 0 {
        return Err(PyValueError::new_err("samples and depth must be positive"));
    }
    let mode = mode_arg(mode)?;
    let cfg = SampleConfig { seed, samples, depth };
    let reports = py.detach(|| run_suites(suite, mode, &cfg));
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pymodule]
fn pydtm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Term>()?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add_function(wrap_pyfunction!(subst, m)?)?;
    m.add_function(wrap_pyfunction!(open, m)?)?;
    m.add_function(wrap_pyfunction!(lc, m)?)?;
    m.add_function(wrap_pyfunction!(fv, m)?)?;
    m.add_function(wrap_pyfunction!(check_laws, m)?)?;
    Ok(())
}
