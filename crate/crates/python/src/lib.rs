//! Python bindings: machines, decision procedures and rational operations.
//!
//! Words are passed as strings in the text format's conventions: `-` or the
//! empty string is the empty word, and a string containing whitespace is
//! split into multi-character letters.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use spliffer_core::decision::{self, EquivalenceVerdict, FunctionalityVerdict};
use spliffer_core::{format, rational, Generator, Letter, Tape, Transition, UTriple, Word};

fn value_error(e: spliffer_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(text: &str) -> PyResult<Word> {
    Word::parse(text).map_err(value_error)
}

type Witness = (String, (String, String), (String, String));

fn pair((l, r): (Word, Word)) -> (String, String) {
    (l.to_string(), r.to_string())
}

/// A finite automaton labelled by generators of the shuffling monoid.
#[pyclass(module = "spliffer", frozen)]
struct Spliffer {
    inner: spliffer_core::Spliffer,
}

#[pymethods]
impl Spliffer {
    /// Builds a validated machine. Transitions are `(src, letter, "L" | "R", dst)`.
    #[new]
    #[pyo3(signature = (alphabet, states, transitions, initial, finals))]
    fn new(
        alphabet: Vec<String>,
        states: usize,
        transitions: Vec<(usize, String, String, usize)>,
        initial: Vec<usize>,
        finals: Vec<usize>,
    ) -> PyResult<Self> {
        let alphabet = alphabet.iter().map(|a| Letter::new(a)).collect::<Result<Vec<_>, _>>().map_err(value_error)?;
        let mut edges = Vec::with_capacity(transitions.len());
        for (src, letter, tape, dst) in transitions {
            let tape = match tape.as_str() {
                "L" => Tape::Left,
                "R" => Tape::Right,
                other => return Err(PyValueError::new_err(format!("tape must be L or R, found `{other}`"))),
            };
            let letter = Letter::new(&letter).map_err(value_error)?;
            edges.push(Transition::new(src, Generator { tape, letter }, dst));
        }
        let inner = spliffer_core::Spliffer::new(alphabet, states, edges, initial, finals).map_err(value_error)?;
        Ok(Spliffer { inner })
    }

    /// Parses the text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        format::parse(text).map(|inner| Spliffer { inner }).map_err(value_error)
    }

    /// Canonical text rendering.
    fn serialize(&self) -> String {
        format::serialize(&self.inner)
    }

    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.inner.alphabet().iter().map(|a| a.to_string()).collect()
    }

    #[getter]
    fn state_count(&self) -> usize {
        self.inner.state_count()
    }

    #[getter]
    fn transitions(&self) -> Vec<(usize, String, String, usize)> {
        self.inner
            .transitions()
            .iter()
            .map(|t| (t.src.0, t.letter.to_string(), t.tape.symbol().to_string(), t.dst.0))
            .collect()
    }

    #[getter]
    fn initial(&self) -> Vec<usize> {
        self.inner.initial().iter().map(|q| q.0).collect()
    }

    #[getter]
    fn finals(&self) -> Vec<usize> {
        self.inner.finals().iter().map(|q| q.0).collect()
    }

    /// Whether `(left, right, shuffled)` labels a successful run.
    fn accepts(&self, left: &str, right: &str, shuffled: &str) -> PyResult<bool> {
        let t = UTriple::new(word(left)?, word(right)?, word(shuffled)?).map_err(value_error)?;
        Ok(self.inner.accepts(&t))
    }

    /// Number of successful runs labelled by the triple.
    fn count_runs(&self, left: &str, right: &str, shuffled: &str) -> PyResult<u128> {
        let t = UTriple::new(word(left)?, word(right)?, word(shuffled)?).map_err(value_error)?;
        Ok(self.inner.count_runs(&t))
    }

    /// All output pairs for an input word, in lexicographic order.
    fn split(&self, input: &str) -> PyResult<Vec<(String, String)>> {
        Ok(self.inner.split(&word(input)?).into_iter().map(pair).collect())
    }

    /// The behavior up to the length bound, as `(left, right, shuffled)` triples.
    #[pyo3(signature = (max_len = 8))]
    fn enumerate(&self, max_len: usize) -> Vec<(String, String, String)> {
        self.inner
            .enumerate_behavior(max_len)
            .into_iter()
            .map(|t| {
                let (l, r, s) = t.into_parts();
                (l.to_string(), r.to_string(), s.to_string())
            })
            .collect()
    }

    /// `None` for a deterministic splitter, otherwise the reason it is not.
    fn determinism_violation(&self) -> Option<String> {
        self.inner.is_deterministic().err().map(|v| v.to_string())
    }

    fn is_deterministic(&self) -> bool {
        self.inner.is_deterministic().is_ok()
    }

    fn is_functional(&self) -> bool {
        decision::is_functional(&self.inner).is_functional()
    }

    /// `None` if functional, otherwise `(input, first_output, second_output)`.
    fn functionality_witness(&self) -> Option<Witness> {
        match decision::is_functional(&self.inner) {
            FunctionalityVerdict::Functional => None,
            FunctionalityVerdict::NotFunctional { input, first, second } => {
                Some((input.to_string(), pair(first), pair(second)))
            }
        }
    }

    #[pyo3(signature = (max_len = 8))]
    fn is_functional_bruteforce(&self, max_len: usize) -> bool {
        self.inner.is_functional_bruteforce(max_len)
    }

    #[pyo3(signature = (max_len = 8))]
    fn is_injective_bruteforce(&self, max_len: usize) -> bool {
        self.inner.is_injective_bruteforce(max_len)
    }

    /// The underlying input automaton in the text format.
    fn input_projection(&self) -> String {
        format::serialize_nfa(&self.inner.input_projection())
    }

    fn __str__(&self) -> String {
        self.serialize()
    }

    fn __repr__(&self) -> String {
        format!("<Spliffer: {} states, {} transitions>", self.inner.state_count(), self.inner.transitions().len())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Outcome of an equivalence query.
#[pyclass(module = "spliffer", frozen, get_all)]
struct Equivalence {
    /// One of `EQUIVALENT`, `DIFFERENT DOMAIN`, `DIFFERENT OUTPUTS`, `INPUT NOT FUNCTIONAL`.
    verdict: String,
    /// Input word separating the machines, if any.
    witness: Option<String>,
    /// `first` or `second`: the machine accepting the domain witness, or the
    /// one that is not functional.
    machine: Option<String>,
    first: Option<(String, String)>,
    second: Option<(String, String)>,
    /// The full text report.
    report: String,
}

#[pymethods]
impl Equivalence {
    fn __bool__(&self) -> bool {
        self.verdict == "EQUIVALENT"
    }

    fn __repr__(&self) -> String {
        format!("<Equivalence: {}>", self.verdict)
    }
}

impl From<EquivalenceVerdict> for Equivalence {
    fn from(v: EquivalenceVerdict) -> Self {
        let report = v.to_string();
        let verdict = report.lines().next().unwrap_or_default().to_string();
        let (witness, machine, first, second) = match v {
            EquivalenceVerdict::Equivalent => (None, None, None, None),
            EquivalenceVerdict::DifferentDomain { word, accepted_by } => {
                (Some(word.to_string()), Some(accepted_by.to_string()), None, None)
            }
            EquivalenceVerdict::DifferentOutputs { input, first, second } => {
                (Some(input.to_string()), None, Some(pair(first)), Some(pair(second)))
            }
            EquivalenceVerdict::InputNotFunctional(which) => (None, Some(which.to_string()), None, None),
        };
        Equivalence { verdict, witness, machine, first, second, report }
    }
}

/// Equivalence of two functional splitters, or, with `deterministic=True`,
/// of two deterministic splitters (raises `ValueError` otherwise).
#[pyfunction]
#[pyo3(signature = (first, second, deterministic = false))]
fn equivalent(first: &Spliffer, second: &Spliffer, deterministic: bool) -> PyResult<Equivalence> {
    let verdict = if deterministic {
        decision::equivalent_deterministic(&first.inner, &second.inner).map_err(value_error)?
    } else {
        decision::equivalent_functional(&first.inner, &second.inner)
    };
    Ok(verdict.into())
}

#[pyfunction]
fn union(first: &Spliffer, second: &Spliffer) -> Spliffer {
    Spliffer { inner: rational::union(&first.inner, &second.inner) }
}

#[pyfunction]
fn product(first: &Spliffer, second: &Spliffer) -> Spliffer {
    Spliffer { inner: rational::product(&first.inner, &second.inner) }
}

#[pyfunction]
fn star(m: &Spliffer) -> Spliffer {
    Spliffer { inner: rational::star(&m.inner) }
}

#[pyfunction]
fn trim(m: &Spliffer) -> Spliffer {
    Spliffer { inner: rational::trim(&m.inner) }
}

/// The lead-or-delay action: `delta(h, f, g)` where `h` is `("lead", w)`,
/// `("delay", w)` or `("zero", "")`. Returns a value of the same shape, in
/// canonical form.
#[pyfunction]
fn delta(h: (String, String), f: &str, g: &str) -> PyResult<(String, String)> {
    use spliffer_core::LeadOrDelay;
    let value = match h.0.as_str() {
        "lead" => LeadOrDelay::lead(word(&h.1)?),
        "delay" => LeadOrDelay::delay(word(&h.1)?),
        "zero" => LeadOrDelay::Zero,
        other => return Err(PyValueError::new_err(format!("unknown lead-or-delay tag `{other}`"))),
    };
    Ok(match value.act(&word(f)?, &word(g)?) {
        LeadOrDelay::Lead(w) => ("lead".into(), w.to_string()),
        LeadOrDelay::Delay(w) => ("delay".into(), w.to_string()),
        LeadOrDelay::Zero => ("zero".into(), String::new()),
    })
}

#[pymodule]
fn spliffer(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Spliffer>()?;
    m.add_class::<Equivalence>()?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(union, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(trim, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    Ok(())
}
